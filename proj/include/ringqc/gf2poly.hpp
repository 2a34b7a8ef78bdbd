// Copyright 2026 The ringqc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Binary polynomials: exact arithmetic, factorization of x^n + 1, divisor
// enumeration and the text/hex grammar used for polynomial I/O.

#ifndef RINGQC_GF2POLY_HPP_
#define RINGQC_GF2POLY_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ringqc/bitvec.hpp"
#include "ringqc/error.hpp"

namespace ringqc {

// Polynomial over F2. Bit i of the packed words is the coefficient of x^i.
// The word vector is trimmed so the top word is nonzero; the zero
// polynomial stores no words.
class BinPoly {
 public:
  // Degree of the zero polynomial. Ordered below every real degree.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  BinPoly() = default;

  // Low 64 coefficients given as a bitmask (x^3 + x + 1 is 0xB).
  static BinPoly from_mask(std::uint64_t mask);
  static BinPoly from_exponents(std::initializer_list<unsigned> exps);
  static BinPoly monomial(unsigned k);
  static BinPoly one() { return from_mask(1); }
  // x^n + 1 (which equals x^n - 1 over F2).
  static BinPoly xn_plus_1(unsigned n);

  bool is_zero() const noexcept { return words_.empty(); }
  int degree() const noexcept;
  bool coeff(std::size_t i) const noexcept;
  void toggle(std::size_t i);
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  // Exponents with coefficient 1, ascending.
  std::vector<unsigned> exponents() const;

  // Coefficient vector of length n after folding by x^n = 1.
  BitVec fold(std::size_t n) const;
  static BinPoly from_coefficients(const BitVec& bits);

  BinPoly& operator+=(const BinPoly& other);
  friend BinPoly operator+(BinPoly a, const BinPoly& b) { return a += b; }
  friend BinPoly operator*(const BinPoly& a, const BinPoly& b);
  BinPoly shifted(unsigned k) const;

  friend bool operator==(const BinPoly&, const BinPoly&) = default;
  // Canonical order: degree, then coefficient bits read as an integer.
  friend std::strong_ordering operator<=>(const BinPoly& a, const BinPoly& b);

 private:
  void trim() noexcept;
  std::vector<std::uint64_t> words_;
};

struct DivMod {
  BinPoly quotient;
  BinPoly remainder;
};

// p = q*d + r with deg r < deg d. Throws on d == 0.
DivMod divmod(const BinPoly& p, const BinPoly& d);
inline BinPoly operator%(const BinPoly& p, const BinPoly& d) {
  return divmod(p, d).remainder;
}
inline BinPoly operator/(const BinPoly& p, const BinPoly& d) {
  return divmod(p, d).quotient;
}
inline bool divides(const BinPoly& d, const BinPoly& p) {
  return (p % d).is_zero();
}

// Monic gcd; gcd(0, 0) is an error.
BinPoly gcd(BinPoly p, BinPoly q);
// Coefficient reversal x^deg f * f(1/x). Requires f(0) = 1.
BinPoly reciprocal(const BinPoly& f);
BinPoly derivative(const BinPoly& f);
BinPoly mulmod(const BinPoly& a, const BinPoly& b, const BinPoly& m);

struct Factor {
  BinPoly poly;
  unsigned multiplicity = 0;
};

struct Factorization {
  unsigned n = 0;
  std::vector<Factor> factors;  // canonical order, pairwise distinct

  BinPoly product() const;
  std::uint64_t divisor_count() const;
};

// Complete factorization of x^n + 1 over F2, 1 <= n <= bound.
Factorization factor_xn1(unsigned n, unsigned bound = 128);

// All monic divisors of x^n + 1 in canonical order.
std::vector<BinPoly> enumerate_divisors(unsigned n, const Limits& limits = {});

// Grammar: poly := term ('+' term)*, term := '1' | 'x' | 'x^' uint, with
// XOR semantics for repeated terms; "0" is the zero polynomial; a "0x"
// prefix selects the hexadecimal bitmask form instead.
BinPoly parse_poly(std::string_view text);
// Descending degree, e.g. "x^3+x+1"; zero formats as "0".
std::string format_poly(const BinPoly& p);
// Coefficient bitmask in hex, e.g. "0xF" for x^3+x^2+x+1.
std::string format_hex(const BinPoly& p);

}  // namespace ringqc

#endif  // RINGQC_GF2POLY_HPP_
