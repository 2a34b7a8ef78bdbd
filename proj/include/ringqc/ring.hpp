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

// The eight-element ring R = F2 + vF2 + v^2 F2 with v^3 = v, its Gray map
// to F2^3 and Lee weights.

#ifndef RINGQC_RING_HPP_
#define RINGQC_RING_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ringqc/bitvec.hpp"

namespace ringqc {

class BinPoly;

// a + v*b + v^2*c, stored as the bit triple (a, b, c) in bits 0..2.
class RingElem {
 public:
  constexpr RingElem() = default;
  constexpr RingElem(bool a, bool b, bool c)
      : bits_(static_cast<std::uint8_t>(a | (b << 1) | (c << 2))) {}

  static constexpr RingElem from_code(unsigned code) {
    return RingElem(code & 1u, (code >> 1) & 1u, (code >> 2) & 1u);
  }
  static constexpr RingElem zero() { return {}; }
  static constexpr RingElem one() { return {true, false, false}; }
  static constexpr RingElem v() { return {false, true, false}; }
  static constexpr RingElem v2() { return {false, false, true}; }

  static constexpr std::array<RingElem, 8> all() {
    std::array<RingElem, 8> out{};
    for (unsigned i = 0; i < 8; ++i) out[i] = from_code(i);
    return out;
  }

  constexpr bool a() const { return bits_ & 1u; }
  constexpr bool b() const { return (bits_ >> 1) & 1u; }
  constexpr bool c() const { return (bits_ >> 2) & 1u; }
  constexpr unsigned code() const { return bits_; }
  constexpr bool is_zero() const { return bits_ == 0; }

  friend constexpr RingElem operator+(RingElem x, RingElem y) {
    return from_code(x.bits_ ^ y.bits_);
  }
  // Expansion with v^3 = v and v^4 = v^2:
  //   a1a2 + v(a1b2 + b1a2 + b1c2 + c1b2) + v^2(a1c2 + b1b2 + c1a2 + c1c2)
  friend constexpr RingElem operator*(RingElem x, RingElem y) {
    const bool a1 = x.a(), b1 = x.b(), c1 = x.c();
    const bool a2 = y.a(), b2 = y.b(), c2 = y.c();
    return RingElem(a1 && a2,
                    (a1 && b2) ^ (b1 && a2) ^ (b1 && c2) ^ (c1 && b2),
                    (a1 && c2) ^ (b1 && b2) ^ (c1 && a2) ^ (c1 && c2));
  }
  friend constexpr bool operator==(RingElem, RingElem) = default;
  friend constexpr auto operator<=>(RingElem, RingElem) = default;

 private:
  std::uint8_t bits_ = 0;
};

enum class ElementClass { kZero, kUnit, kZeroDivisor };

ElementClass classify(RingElem x);
// {r * x : r in R}, sorted by code.
std::vector<RingElem> principal_ideal(RingElem x);
int lee_weight(RingElem x);

using BitTriple = std::array<bool, 3>;
// (a, b, a + c).
constexpr BitTriple gray(RingElem x) { return {x.a(), x.b(), x.a() != x.c()}; }
constexpr RingElem gray_inverse(BitTriple t) { return RingElem(t[0], t[1], t[0] != t[2]); }

// Text form: subset of {"1", "v", "v^2"} joined by '+', or "0".
std::string to_string(RingElem x);
RingElem parse_ring_elem(std::string_view text);

// The 8x8 product table, regenerated from the closed form.
std::array<std::array<RingElem, 8>, 8> multiplication_table();

// Length-n vector over R, stored as three coefficient planes a, b, c.
class RingVector {
 public:
  RingVector() = default;
  explicit RingVector(std::size_t n) : a_(n), b_(n), c_(n) {}
  RingVector(BitVec a, BitVec b, BitVec c);

  static RingVector from_elements(std::span<const RingElem> elems);
  // scalar * f(x) reduced mod x^n - 1, as a coefficient vector.
  static RingVector from_poly(std::size_t n, const BinPoly& f, RingElem scalar);
  // Inverse of planes(): a | b | c, each n bits.
  static RingVector from_planes(const BitVec& planes, std::size_t n);

  std::size_t size() const noexcept { return a_.size(); }
  RingElem at(std::size_t i) const { return {a_.get(i), b_.get(i), c_.get(i)}; }
  void set(std::size_t i, RingElem x);
  bool is_zero() const noexcept { return a_.none() && b_.none() && c_.none(); }

  const BitVec& a() const noexcept { return a_; }
  const BitVec& b() const noexcept { return b_; }
  const BitVec& c() const noexcept { return c_; }
  BitVec planes() const { return BitVec::concat(a_, b_, c_); }

  RingVector& operator+=(const RingVector& other);
  friend RingVector operator+(RingVector x, const RingVector& y) { return x += y; }
  friend RingVector operator*(RingElem r, const RingVector& x);

  friend bool operator==(const RingVector&, const RingVector&) = default;
  friend auto operator<=>(const RingVector&, const RingVector&) = default;

 private:
  BitVec a_, b_, c_;
};

// Blockwise Gray image: all a's, then all b's, then all (a + c)'s.
BitVec gray_vec(const RingVector& x);
RingVector gray_vec_inverse(const BitVec& bits);
// sum_i x_i y_i; lengths must match.
RingElem inner_product(const RingVector& x, const RingVector& y);
int lee_weight(const RingVector& x);
// "(v, 1+v, 0)".
std::string to_string(const RingVector& x);

}  // namespace ringqc

#endif  // RINGQC_RING_HPP_
