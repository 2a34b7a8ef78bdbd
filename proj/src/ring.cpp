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

#include "ringqc/ring.hpp"

#include <algorithm>

#include "ringqc/error.hpp"
#include "ringqc/gf2poly.hpp"

namespace ringqc {

ElementClass classify(RingElem x) {
  if (x.is_zero()) return ElementClass::kZero;
  for (RingElem y : RingElem::all()) {
    if (x * y == RingElem::one()) return ElementClass::kUnit;
  }
  return ElementClass::kZeroDivisor;
}

std::vector<RingElem> principal_ideal(RingElem x) {
  std::vector<RingElem> out;
  for (RingElem r : RingElem::all()) out.push_back(r * x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int lee_weight(RingElem x) {
  // Indexed by code a | b<<1 | c<<2:
  // 0, 1, v, 1+v, v^2, 1+v^2, v+v^2, 1+v+v^2.
  static constexpr std::array<int, 8> kTable = {0, 2, 1, 3, 1, 1, 2, 2};
  return kTable[x.code()];
}

std::string to_string(RingElem x) {
  if (x.is_zero()) return "0";
  std::string out;
  auto append = [&out](const char* term) {
    if (!out.empty()) out += '+';
    out += term;
  };
  if (x.a()) append("1");
  if (x.b()) append("v");
  if (x.c()) append("v^2");
  return out;
}

RingElem parse_ring_elem(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  skip();
  if (pos < text.size() && text[pos] == '0') {
    ++pos;
    skip();
    if (pos != text.size()) throw ParseError("unexpected character", pos);
    return RingElem::zero();
  }
  RingElem acc;
  for (;;) {
    skip();
    if (pos >= text.size()) throw ParseError("expected a ring term", pos);
    if (text[pos] == '1') {
      acc = acc + RingElem::one();
      ++pos;
    } else if (text.substr(pos, 3) == "v^2") {
      acc = acc + RingElem::v2();
      pos += 3;
    } else if (text[pos] == 'v') {
      acc = acc + RingElem::v();
      ++pos;
    } else {
      throw ParseError("expected '1', 'v' or 'v^2'", pos);
    }
    skip();
    if (pos == text.size()) return acc;
    if (text[pos] != '+') throw ParseError("expected '+'", pos);
    ++pos;
  }
}

std::array<std::array<RingElem, 8>, 8> multiplication_table() {
  std::array<std::array<RingElem, 8>, 8> table{};
  for (unsigned i = 0; i < 8; ++i) {
    for (unsigned j = 0; j < 8; ++j) {
      table[i][j] = RingElem::from_code(i) * RingElem::from_code(j);
    }
  }
  return table;
}

RingVector::RingVector(BitVec a, BitVec b, BitVec c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.size() != b_.size() || a_.size() != c_.size()) {
    throw_precondition("ring vector planes must have equal length");
  }
}

RingVector RingVector::from_elements(std::span<const RingElem> elems) {
  RingVector out(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) out.set(i, elems[i]);
  return out;
}

RingVector RingVector::from_poly(std::size_t n, const BinPoly& f, RingElem scalar) {
  const BitVec bits = f.fold(n);
  const BitVec zero(n);
  return RingVector(scalar.a() ? bits : zero, scalar.b() ? bits : zero,
                    scalar.c() ? bits : zero);
}

RingVector RingVector::from_planes(const BitVec& planes, std::size_t n) {
  if (planes.size() != 3 * n) throw_precondition("plane layout must have 3n bits");
  return RingVector(planes.slice(0, n), planes.slice(n, n), planes.slice(2 * n, n));
}

void RingVector::set(std::size_t i, RingElem x) {
  a_.set(i, x.a());
  b_.set(i, x.b());
  c_.set(i, x.c());
}

RingVector& RingVector::operator+=(const RingVector& other) {
  if (other.size() != size()) throw_precondition("ring vector length mismatch");
  a_ ^= other.a_;
  b_ ^= other.b_;
  c_ ^= other.c_;
  return *this;
}

RingVector operator*(RingElem r, const RingVector& x) {
  // Plane-wise form of the element product with r fixed.
  const std::size_t n = x.size();
  BitVec a(n), b(n), c(n);
  if (r.a()) {
    a ^= x.a_;
    b ^= x.b_;
    c ^= x.c_;
  }
  if (r.b()) {
    b ^= x.a_;
    b ^= x.c_;
    c ^= x.b_;
  }
  if (r.c()) {
    b ^= x.b_;
    c ^= x.a_;
    c ^= x.c_;
  }
  return RingVector(std::move(a), std::move(b), std::move(c));
}

BitVec gray_vec(const RingVector& x) {
  return BitVec::concat(x.a(), x.b(), x.a() ^ x.c());
}

RingVector gray_vec_inverse(const BitVec& bits) {
  if (bits.size() % 3 != 0) throw_precondition("Gray image length must be a multiple of 3");
  const std::size_t n = bits.size() / 3;
  BitVec a = bits.slice(0, n);
  BitVec c = bits.slice(2 * n, n) ^ a;
  return RingVector(std::move(a), bits.slice(n, n), std::move(c));
}

RingElem inner_product(const RingVector& x, const RingVector& y) {
  if (x.size() != y.size()) {
    throw_precondition("inner product of vectors of lengths " + std::to_string(x.size()) +
                       " and " + std::to_string(y.size()));
  }
  const bool one = x.a().dot(y.a());
  const bool v = x.a().dot(y.b()) ^ x.b().dot(y.a()) ^ x.b().dot(y.c()) ^ x.c().dot(y.b());
  const bool v2 = x.a().dot(y.c()) ^ x.b().dot(y.b()) ^ x.c().dot(y.a()) ^ x.c().dot(y.c());
  return RingElem(one, v, v2);
}

int lee_weight(const RingVector& x) {
  int total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) total += lee_weight(x.at(i));
  return total;
}

std::string to_string(const RingVector& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i != 0) out += ", ";
    out += to_string(x.at(i));
  }
  return out + ")";
}

}  // namespace ringqc
