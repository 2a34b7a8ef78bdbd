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

#include "ringqc/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <iomanip>
#include <random>
#include <sstream>

namespace ringqc {

namespace {

using Words = std::vector<std::uint64_t>;

// acc ^= src * x^shift, growing acc as needed.
void xor_shifted(Words& acc, std::span<const std::uint64_t> src, unsigned shift) {
  if (src.empty()) return;
  const std::size_t word_shift = shift / 64;
  const unsigned bit_shift = shift % 64;
  const std::size_t need = src.size() + word_shift + 1;
  if (acc.size() < need) acc.resize(need, 0);
  for (std::size_t i = 0; i < src.size(); ++i) {
    acc[i + word_shift] ^= src[i] << bit_shift;
    if (bit_shift != 0) acc[i + word_shift + 1] ^= src[i] >> (64 - bit_shift);
  }
}

int words_degree(const Words& w) {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] != 0) {
      return static_cast<int>(i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(w[i])));
    }
  }
  return BinPoly::kZeroDegree;
}

}  // namespace

void BinPoly::trim() noexcept {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BinPoly BinPoly::from_mask(std::uint64_t mask) {
  BinPoly p;
  if (mask != 0) p.words_.push_back(mask);
  return p;
}

BinPoly BinPoly::from_exponents(std::initializer_list<unsigned> exps) {
  BinPoly p;
  for (unsigned e : exps) p.toggle(e);
  return p;
}

BinPoly BinPoly::monomial(unsigned k) {
  BinPoly p;
  p.toggle(k);
  return p;
}

BinPoly BinPoly::xn_plus_1(unsigned n) {
  BinPoly p = monomial(n);
  p.toggle(0);
  return p;
}

int BinPoly::degree() const noexcept {
  if (words_.empty()) return kZeroDegree;
  return static_cast<int>((words_.size() - 1) * 64 + 63 -
                          static_cast<std::size_t>(std::countl_zero(words_.back())));
}

bool BinPoly::coeff(std::size_t i) const noexcept {
  const std::size_t w = i / 64;
  return w < words_.size() && ((words_[w] >> (i % 64)) & 1u);
}

void BinPoly::toggle(std::size_t i) {
  const std::size_t w = i / 64;
  if (words_.size() <= w) words_.resize(w + 1, 0);
  words_[w] ^= std::uint64_t{1} << (i % 64);
  trim();
}

std::vector<unsigned> BinPoly::exponents() const {
  std::vector<unsigned> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(static_cast<unsigned>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

BitVec BinPoly::fold(std::size_t n) const {
  BitVec out(n);
  for (unsigned e : exponents()) out.flip(e % n);
  return out;
}

BinPoly BinPoly::from_coefficients(const BitVec& bits) {
  BinPoly p;
  p.words_.assign(bits.words().begin(), bits.words().end());
  p.trim();
  return p;
}

BinPoly& BinPoly::operator+=(const BinPoly& other) {
  if (words_.size() < other.words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  trim();
  return *this;
}

BinPoly operator*(const BinPoly& a, const BinPoly& b) {
  BinPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  for (unsigned e : b.exponents()) xor_shifted(out.words_, a.words_, e);
  out.trim();
  return out;
}

BinPoly BinPoly::shifted(unsigned k) const {
  BinPoly out;
  xor_shifted(out.words_, words_, k);
  out.trim();
  return out;
}

std::strong_ordering operator<=>(const BinPoly& a, const BinPoly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

DivMod divmod(const BinPoly& p, const BinPoly& d) {
  if (d.is_zero()) throw_precondition("polynomial division by zero");
  const int dd = d.degree();
  Words rem(p.words().begin(), p.words().end());
  BinPoly q;
  for (int dr = words_degree(rem); dr >= dd; dr = words_degree(rem)) {
    const auto shift = static_cast<unsigned>(dr - dd);
    xor_shifted(rem, d.words(), shift);
    q.toggle(shift);
  }
  DivMod out;
  out.quotient = std::move(q);
  for (std::size_t i = 0; i < rem.size(); ++i) {
    std::uint64_t bits = rem[i];
    while (bits != 0) {
      out.remainder.toggle(i * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

BinPoly gcd(BinPoly p, BinPoly q) {
  if (p.is_zero() && q.is_zero()) throw_precondition("gcd(0, 0) is undefined");
  while (!q.is_zero()) {
    BinPoly r = p % q;
    p = std::move(q);
    q = std::move(r);
  }
  return p;
}

BinPoly reciprocal(const BinPoly& f) {
  if (f.is_zero() || !f.coeff(0)) {
    throw_precondition("reciprocal needs f(0) = 1, got " + format_poly(f));
  }
  const auto deg = static_cast<unsigned>(f.degree());
  BinPoly out;
  for (unsigned e : f.exponents()) out.toggle(deg - e);
  return out;
}

BinPoly derivative(const BinPoly& f) {
  BinPoly out;
  for (unsigned e : f.exponents()) {
    if (e % 2 == 1) out.toggle(e - 1);
  }
  return out;
}

BinPoly mulmod(const BinPoly& a, const BinPoly& b, const BinPoly& m) {
  return (a * b) % m;
}

BinPoly Factorization::product() const {
  BinPoly out = BinPoly::one();
  for (const Factor& f : factors) {
    for (unsigned i = 0; i < f.multiplicity; ++i) out = out * f.poly;
  }
  return out;
}

std::uint64_t Factorization::divisor_count() const {
  std::uint64_t count = 1;
  for (const Factor& f : factors) count *= f.multiplicity + 1u;
  return count;
}

namespace {

// Splits g, a product of distinct irreducibles all of degree d, with the
// trace map a -> a + a^2 + ... + a^(2^(d-1)) mod g: its CRT components are
// in F2, so gcd(g, trace(a)) collects the factors where the trace is zero.
void split_equal_degree(const BinPoly& g, int d, std::mt19937_64& rng,
                        std::vector<BinPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const int dg = g.degree();
  for (;;) {
    BinPoly a;
    for (int i = 0; i < dg; ++i) {
      if (rng() & 1u) a.toggle(static_cast<std::size_t>(i));
    }
    if (a.degree() < 1) continue;
    BinPoly power = a;
    BinPoly trace = a;
    for (int i = 1; i < d; ++i) {
      power = mulmod(power, power, g);
      trace += power;
    }
    if (trace.is_zero()) continue;
    BinPoly h = gcd(g, trace);
    if (h.degree() > 0 && h.degree() < dg) {
      split_equal_degree(h, d, rng, out);
      split_equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

// Irreducible factors of a squarefree polynomial by distinct-degree then
// equal-degree splitting.
std::vector<BinPoly> factor_squarefree(BinPoly f) {
  std::vector<BinPoly> out;
  std::mt19937_64 rng(0x5eed);
  const BinPoly x = BinPoly::monomial(1);
  BinPoly power = x % f;  // x^(2^d) mod f
  for (int d = 1; f.degree() >= 2 * d; ++d) {
    power = mulmod(power, power, f);
    BinPoly g = gcd(f, power + x);
    if (g.degree() > 0) {
      split_equal_degree(g, d, rng, out);
      f = f / g;
      power = power % f;
    }
  }
  if (f.degree() > 0) out.push_back(f);
  return out;
}

}  // namespace

Factorization factor_xn1(unsigned n, unsigned bound) {
  if (n == 0) throw_precondition("x^n + 1 needs n >= 1");
  if (n > bound) {
    throw_cap("n = " + std::to_string(n) + " exceeds the factorization bound " +
              std::to_string(bound));
  }
  // x^n + 1 = (x^m + 1)^(2^a) with m odd; x^m + 1 is squarefree.
  const unsigned a = static_cast<unsigned>(std::countr_zero(n));
  const unsigned m = n >> a;
  std::vector<BinPoly> irreducibles = factor_squarefree(BinPoly::xn_plus_1(m));
  std::sort(irreducibles.begin(), irreducibles.end());

  Factorization out;
  out.n = n;
  for (BinPoly& p : irreducibles) out.factors.push_back({std::move(p), 1u << a});
  return out;
}

std::vector<BinPoly> enumerate_divisors(unsigned n, const Limits& limits) {
  const Factorization fac = factor_xn1(n, limits.factor_bound);
  const std::uint64_t count = fac.divisor_count();
  if (count > limits.divisor_cap) {
    throw_cap("x^" + std::to_string(n) + "+1 has " + std::to_string(count) +
              " divisors, above the divisor cap " + std::to_string(limits.divisor_cap));
  }
  std::vector<BinPoly> out{BinPoly::one()};
  for (const Factor& f : fac.factors) {
    std::vector<BinPoly> next;
    next.reserve(out.size() * (f.multiplicity + 1));
    for (const BinPoly& d : out) {
      BinPoly acc = d;
      next.push_back(acc);
      for (unsigned k = 0; k < f.multiplicity; ++k) {
        acc = acc * f.poly;
        next.push_back(acc);
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  BinPoly parse() {
    skip_space();
    if (text_.substr(pos_, 2) == "0x" || text_.substr(pos_, 2) == "0X") {
      return parse_hex();
    }
    if (peek() == '0') {
      ++pos_;
      skip_space();
      expect_end();
      return {};
    }
    BinPoly out;
    parse_term(out);
    skip_space();
    while (peek() == '+') {
      ++pos_;
      skip_space();
      parse_term(out);
      skip_space();
    }
    expect_end();
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect_end() {
    if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
  }

  void parse_term(BinPoly& acc) {
    const char c = peek();
    if (c == '1') {
      ++pos_;
      acc.toggle(0);
      return;
    }
    if (c != 'x' && c != 'X') {
      throw ParseError(pos_ >= text_.size() ? "expected a term, found end of input"
                                            : "expected '1' or 'x'",
                       pos_);
    }
    ++pos_;
    if (peek() != '^') {
      acc.toggle(1);
      return;
    }
    ++pos_;
    const std::size_t start = pos_;
    unsigned long long exp = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      exp = exp * 10 + static_cast<unsigned>(peek() - '0');
      if (exp > (1u << 20)) throw ParseError("exponent too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected exponent after '^'", pos_);
    acc.toggle(static_cast<std::size_t>(exp));
  }

  BinPoly parse_hex() {
    pos_ += 2;
    const std::size_t start = pos_;
    std::vector<unsigned> nibbles;
    while (std::isxdigit(static_cast<unsigned char>(peek()))) {
      const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(peek())));
      nibbles.push_back(c <= '9' ? static_cast<unsigned>(c - '0')
                                 : static_cast<unsigned>(c - 'a' + 10));
      ++pos_;
    }
    if (nibbles.empty()) throw ParseError("expected hex digits after '0x'", start);
    skip_space();
    expect_end();
    BinPoly out;
    const std::size_t count = nibbles.size();
    for (std::size_t i = 0; i < count; ++i) {
      const unsigned nib = nibbles[count - 1 - i];
      for (unsigned b = 0; b < 4; ++b) {
        if ((nib >> b) & 1u) out.toggle(i * 4 + b);
      }
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BinPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string format_poly(const BinPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<unsigned> exps = p.exponents();
  std::string out;
  for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
    if (!out.empty()) out += '+';
    if (*it == 0) {
      out += '1';
    } else if (*it == 1) {
      out += 'x';
    } else {
      out += "x^" + std::to_string(*it);
    }
  }
  return out;
}

std::string format_hex(const BinPoly& p) {
  if (p.is_zero()) return "0x0";
  std::ostringstream os;
  os << "0x" << std::uppercase << std::hex;
  const auto words = p.words();
  os << words.back();
  os << std::setfill('0');
  for (std::size_t i = words.size() - 1; i-- > 0;) {
    os.width(16);
    os << words[i];
  }
  return os.str();
}

}  // namespace ringqc
