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

#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "ringqc/error.hpp"
#include "ringqc/ring.hpp"

using ringqc::ElementClass;
using ringqc::RingElem;
using ringqc::RingVector;

namespace {

RingElem E(const char* text) { return ringqc::parse_ring_elem(text); }

RingVector V(std::initializer_list<const char*> xs) {
  std::vector<RingElem> elems;
  for (const char* x : xs) elems.push_back(E(x));
  return RingVector::from_elements(elems);
}

int hamming(const ringqc::BitTriple& t) { return t[0] + t[1] + t[2]; }

RingVector random_vector(std::mt19937_64& rng, std::size_t n) {
  RingVector x(n);
  for (std::size_t i = 0; i < n; ++i) x.set(i, RingElem::from_code(rng() & 7));
  return x;
}

}  // namespace

TEST_CASE("addition") {
  CHECK((E("v") + E("v")).is_zero());
  CHECK(E("1") + E("v^2") == E("1+v^2"));
  CHECK(E("1+v") + E("v+v^2") == E("1+v^2"));
}

TEST_CASE("multiplication") {
  CHECK(E("v") * E("v^2") == E("v"));
  CHECK(E("1+v") * E("1+v^2") == E("1+v^2"));
  CHECK(E("1+v+v^2") * E("1+v+v^2") == E("1"));
}

TEST_CASE("multiplication agrees with a hand-written table on all 64 pairs") {
  const auto table = ringqc::multiplication_table();
  for (unsigned i = 0; i < 8; ++i) {
    for (unsigned j = 0; j < 8; ++j) {
      const RingElem x = RingElem::from_code(i), y = RingElem::from_code(j);
      CHECK((x * y).code() == oracle::kMul[i][j]);
      CHECK(table[i][j] == x * y);
      // The expansion with v^3 = v, v^4 = v^2 written out coefficientwise.
      const bool a = x.a() && y.a();
      const bool b = (x.a() && y.b()) ^ (x.b() && y.a()) ^ (x.b() && y.c()) ^ (x.c() && y.b());
      const bool c = (x.a() && y.c()) ^ (x.b() && y.b()) ^ (x.c() && y.a()) ^ (x.c() && y.c());
      CHECK(x * y == RingElem(a, b, c));
    }
  }
}

TEST_CASE("classification") {
  CHECK(ringqc::classify(E("1+v+v^2")) == ElementClass::kUnit);
  CHECK(ringqc::classify(E("1")) == ElementClass::kUnit);
  CHECK(ringqc::classify(E("v")) == ElementClass::kZeroDivisor);
  CHECK(ringqc::classify(E("0")) == ElementClass::kZero);
  int units = 0;
  for (RingElem x : RingElem::all()) {
    const bool unit = ringqc::classify(x) == ElementClass::kUnit;
    units += unit;
    CHECK(unit == (ringqc::principal_ideal(x).size() == 8));
  }
  CHECK(units == 2);
}

TEST_CASE("principal ideals") {
  CHECK(ringqc::principal_ideal(E("v")) ==
        std::vector<RingElem>{E("0"), E("v"), E("v^2"), E("v+v^2")});
  CHECK(ringqc::principal_ideal(E("v^2")) == ringqc::principal_ideal(E("v")));
  CHECK(ringqc::principal_ideal(E("1+v")) ==
        std::vector<RingElem>{E("0"), E("1+v"), E("1+v^2"), E("v+v^2")});
  CHECK(ringqc::principal_ideal(E("1+v^2")) == std::vector<RingElem>{E("0"), E("1+v^2")});
}

TEST_CASE("Lee weight table") {
  CHECK(ringqc::lee_weight(E("1+v")) == 3);
  CHECK(ringqc::lee_weight(E("1+v^2")) == 1);
  CHECK(ringqc::lee_weight(E("0")) == 0);
  CHECK(ringqc::lee_weight(E("1")) == 2);
  CHECK(ringqc::lee_weight(E("v")) == 1);
  CHECK(ringqc::lee_weight(E("v^2")) == 1);
  CHECK(ringqc::lee_weight(E("v+v^2")) == 2);
  CHECK(ringqc::lee_weight(E("1+v+v^2")) == 2);
}

TEST_CASE("Gray map on elements") {
  CHECK(ringqc::gray(E("v")) == ringqc::BitTriple{false, true, false});
  CHECK(ringqc::gray(E("1+v^2")) == ringqc::BitTriple{true, false, false});
  CHECK(ringqc::gray(E("0")) == ringqc::BitTriple{false, false, false});
  CHECK(ringqc::gray_inverse({true, true, true}) == E("1+v"));
  CHECK(ringqc::gray_inverse({false, false, true}) == E("v^2"));
  CHECK(ringqc::gray_inverse({false, false, false}) == E("0"));
}

TEST_CASE("Gray map is a linear isometry on R") {
  for (RingElem x : RingElem::all()) {
    CHECK(ringqc::lee_weight(x) == hamming(ringqc::gray(x)));
    CHECK(ringqc::gray_inverse(ringqc::gray(x)) == x);
    for (RingElem y : RingElem::all()) {
      const auto gx = ringqc::gray(x), gy = ringqc::gray(y), gs = ringqc::gray(x + y);
      for (int i = 0; i < 3; ++i) CHECK(gs[i] == (gx[i] != gy[i]));
      // x - y = x + y in characteristic 2.
      CHECK(ringqc::lee_weight(x + y) == hamming(gs));
    }
  }
  for (unsigned t = 0; t < 8; ++t) {
    const ringqc::BitTriple bits{(t & 1) != 0, (t & 2) != 0, (t & 4) != 0};
    CHECK(ringqc::gray(ringqc::gray_inverse(bits)) == bits);
  }
}

TEST_CASE("Gray map on vectors") {
  CHECK(ringqc::gray_vec(V({"v", "1"})).to_string() == "011001");
  CHECK(ringqc::gray_vec(RingVector(5)).size() == 15);
  CHECK(ringqc::gray_vec(RingVector(5)).none());
  CHECK(ringqc::gray_vec(V({"1+v"})).to_string() == "111");
  const RingVector x = V({"1+v", "v^2", "0", "1+v+v^2"});
  CHECK(ringqc::gray_vec_inverse(ringqc::gray_vec(x)) == x);
}

TEST_CASE("inner product") {
  CHECK(ringqc::inner_product(V({"v"}), V({"v"})) == E("v^2"));
  CHECK(ringqc::inner_product(V({"1+v"}), V({"v+v^2"})).is_zero());
  CHECK(ringqc::inner_product(RingVector(3), V({"1", "v", "v^2"})).is_zero());
  CHECK_THROWS_AS(ringqc::inner_product(RingVector(2), RingVector(3)), ringqc::Error);
}

TEST_CASE("inner-product bridge on random vectors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const RingVector x = random_vector(rng, n), y = random_vector(rng, n);
    const RingElem ip = ringqc::inner_product(x, y);
    CHECK(ringqc::gray_vec(x).dot(ringqc::gray_vec(y)) == ip.c());
    oracle::Word wx(n), wy(n);
    for (std::size_t i = 0; i < n; ++i) {
      wx[i] = static_cast<std::uint8_t>(x.at(i).code());
      wy[i] = static_cast<std::uint8_t>(y.at(i).code());
    }
    CHECK(ip.code() == oracle::dot(wx, wy));
    CHECK(ringqc::lee_weight(x + y) == static_cast<int>(
                                           (ringqc::gray_vec(x) ^ ringqc::gray_vec(y)).popcount()));
  }
}

TEST_CASE("scalar multiplication on vectors matches elementwise products") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const RingVector x = random_vector(rng, 1 + rng() % 70);
    for (RingElem r : RingElem::all()) {
      const RingVector y = r * x;
      for (std::size_t i = 0; i < x.size(); ++i) CHECK(y.at(i) == r * x.at(i));
    }
  }
}

TEST_CASE("element text form") {
  for (RingElem x : RingElem::all()) CHECK(ringqc::parse_ring_elem(ringqc::to_string(x)) == x);
  CHECK(ringqc::to_string(E("v^2+1")) == "1+v^2");
  CHECK(ringqc::to_string(V({"v", "0"})) == "(v, 0)");
  CHECK_THROWS_AS(E("v^3"), ringqc::ParseError);
  CHECK_THROWS_AS(E("w"), ringqc::ParseError);
  CHECK_THROWS_AS(E(""), ringqc::ParseError);
}
