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
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "ringqc/codes.hpp"

using namespace ringqc;

namespace {

BinPoly P(const char* text) { return parse_poly(text); }
RingElem E(const char* text) { return parse_ring_elem(text); }

RingVector V(std::initializer_list<const char*> xs) {
  std::vector<RingElem> elems;
  for (const char* x : xs) elems.push_back(E(x));
  return RingVector::from_elements(elems);
}

oracle::Word word_of(const RingVector& x) {
  oracle::Word w(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) w[i] = static_cast<std::uint8_t>(x.at(i).code());
  return w;
}

RingVector vector_of(const oracle::Word& w) {
  RingVector x(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) x.set(i, RingElem::from_code(w[i]));
  return x;
}

std::set<oracle::Word> words(const RingCodewordSet& s) {
  std::set<oracle::Word> out;
  for (std::size_t i = 0; i < s.size(); ++i) out.insert(word_of(s.at(i)));
  return out;
}

std::set<oracle::Word> oracle_span(const RingCode& code) {
  std::vector<oracle::Word> gens;
  for (const RingVector& g : code.generators()) gens.push_back(word_of(g));
  return oracle::closure(code.length(), gens, code.cyclic());
}

// Every x in R^n with x . s = 0 for all s, by direct enumeration.
std::set<oracle::Word> oracle_dual(std::size_t n, const std::set<oracle::Word>& s) {
  std::set<oracle::Word> out;
  oracle::Word x(n, 0);
  for (std::uint64_t idx = 0; idx < (1ull << (3 * n)); ++idx) {
    for (std::size_t i = 0; i < n; ++i) x[i] = (idx >> (3 * i)) & 7;
    bool ok = true;
    for (const auto& y : s) {
      if (oracle::dot(x, y) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(x);
  }
  return out;
}

BitVec bits(const char* s) { return BitVec::from_string(s); }

std::size_t log2_exact(std::size_t size) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < size) ++k;
  REQUIRE((std::size_t{1} << k) == size);
  return k;
}

unsigned brute_min_weight(const std::set<oracle::Word>& s) {
  unsigned best = ~0u;
  for (const auto& w : s) {
    unsigned wt = 0;
    for (auto e : w) wt += lee_weight(RingElem::from_code(e));
    if (wt > 0 && wt < best) best = wt;
  }
  return best;
}

BinPoly random_divisor(std::mt19937_64& rng, std::size_t n) {
  const auto divs = enumerate_divisors(n);
  return divs[rng() % divs.size()];
}

}  // namespace

TEST_CASE("span enumeration") {
  SUBCASE("<1+v>") {
    const RingCode c(1, {V({"1+v"})});
    CHECK(words(span_enumerate(c)) ==
          std::set<oracle::Word>{{0}, {E("1+v").code()}, {E("1+v^2").code()},
                                 {E("v+v^2").code()}});
  }
  SUBCASE("<v> = <v^2>") {
    const auto a = span_enumerate(RingCode(1, {V({"v"})}));
    const auto b = span_enumerate(RingCode(1, {V({"v^2"})}));
    CHECK(a == b);
    CHECK(words(a) == std::set<oracle::Word>{{0}, {2}, {4}, {6}});
  }
  SUBCASE("no generators") {
    const auto s = span_enumerate(RingCode(4, {}));
    CHECK(s.size() == 1);
    CHECK(s.at(0).is_zero());
  }
  SUBCASE("cap") {
    const RingCode full(9, {V({"1", "0", "0", "0", "0", "0", "0", "0", "0"})}, true);
    CHECK(full.log2_size() == 27);
    CHECK_THROWS_AS(span_enumerate(full), Error);
  }
  CHECK_THROWS_AS(RingCode(0, {}), Error);
  CHECK_THROWS_AS(RingCode(2, {V({"1"})}), Error);
}

TEST_CASE("span agrees with closure on random generator sets") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const bool cyclic = rng() & 1;
    std::vector<RingVector> gens(rng() % 3);
    for (auto& g : gens) {
      oracle::Word w(n);
      for (auto& e : w) e = rng() & 7;
      g = vector_of(w);
    }
    const RingCode code(n, gens, cyclic);
    const auto span = span_enumerate(code);
    const auto expect = oracle_span(code);
    CHECK(words(span) == expect);
    CHECK(span.size() == (std::size_t{1} << code.log2_size()));
    CHECK(gray_image_basis(code).dimension() == code.log2_size());
    if (cyclic) CHECK(is_cyclic(span));
  }
}

TEST_CASE("cyclic codes from divisor triples") {
  const BinPoly g = P("x^3+x^2+x+1");
  CHECK(build_ring_cyclic(8, g, g, g).log2_size() == 15);

  const BinPoly x1 = P("x+1");
  const auto two = span_enumerate(build_ring_cyclic(2, x1, x1, x1));
  std::set<oracle::Word> diag;
  for (std::uint8_t s = 0; s < 8; ++s) diag.insert({s, s});
  CHECK(words(two) == diag);

  const RingCode zero = build_ring_cyclic(1, x1, x1, x1);
  CHECK(zero.log2_size() == 0);

  CHECK_THROWS_AS(build_ring_cyclic(8, P("x^2+x+1"), g, g), Error);
  try {
    build_ring_cyclic(7, P("x+1"), P("x^2+1"), P("x+1"));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kPrecondition);
    CHECK(std::string(e.what()).find("f2") != std::string::npos);
  }
}

TEST_CASE("constructed codes are closed under the shift") {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      const RingCode c = build_ring_cyclic(n, random_divisor(rng, n), random_divisor(rng, n),
                                           random_divisor(rng, n));
      const auto span = span_enumerate(c);
      CHECK(is_cyclic(span));
      CHECK(gray_image_basis(c).dimension() == log2_exact(span.size()));
      if (n <= 4) CHECK(words(span) == oracle_span(c));
    }
  }
}

TEST_CASE("binary cyclic codes") {
  CHECK(binary_cyclic(7, P("x^3+x+1")).dimension() == 4);
  CHECK(enumerate(binary_cyclic(7, P("x^3+x+1")), 1 << 10).size() == 16);
  CHECK(binary_cyclic(8, P("x^3+x^2+x+1")).dimension() == 5);
  CHECK(binary_cyclic(6, P("1")) == BinaryCode::full(6));
  CHECK_THROWS_AS(binary_cyclic(7, P("x^2+1")), Error);
}

TEST_CASE("projections") {
  const Projections p1 = projections(span_enumerate(RingCode(1, {V({"1+v"})})));
  CHECK(p1.c1 == BinaryCode::full(1));
  CHECK(p1.c2 == BinaryCode::full(1));
  CHECK(p1.c3 == BinaryCode::full(1));

  const BinPoly x1 = P("x+1");
  const RingCode diag = build_ring_cyclic(2, x1, x1, x1);
  const BitVec ones = bits("11");
  const BinaryCode rep(2, std::span<const BitVec>(&ones, 1));
  const Projections p2 = projections(span_enumerate(diag));
  CHECK(p2.c1 == rep);
  CHECK(p2.c2 == rep);
  CHECK(p2.c3 == rep);
  const Projections p2b = projections(diag);
  CHECK(p2b.c1 == rep);
  CHECK(p2b.c3 == rep);

  const Projections p0 = projections(span_enumerate(RingCode(3, {})));
  CHECK(p0.c1.dimension() == 0);
  CHECK(p0.c2.dimension() == 0);
  CHECK(p0.c3.dimension() == 0);
}

TEST_CASE("binary duals") {
  CHECK(dual_binary(BinaryCode::full(5)).dimension() == 0);
  CHECK(dual_binary(binary_cyclic(8, P("x^3+x^2+x+1"))) == binary_cyclic(8, P("x^5+x^4+x+1")));
  for (std::size_t n : {2u, 5u, 9u, 70u}) {
    BitVec ones(n);
    for (std::size_t i = 0; i < n; ++i) ones.set(i);
    const BinaryCode rep(n, std::span<const BitVec>(&ones, 1));
    const BinaryCode even = dual_binary(rep);
    CHECK(even.dimension() == n - 1);
    for (const BitVec& row : even.basis()) CHECK(row.popcount() % 2 == 0);
    CHECK(dual_binary(even) == rep);
  }
}

TEST_CASE("ring dual by brute force") {
  const auto v = dual_ring_bruteforce(span_enumerate(RingCode(1, {V({"v"})})));
  CHECK(words(v.dual) == std::set<oracle::Word>{{0}, {E("1+v^2").code()}});
  CHECK(v.size_identity_holds);
  CHECK(dual_ring_bruteforce(span_enumerate(RingCode(1, {}))).dual.size() == 8);
  CHECK(dual_ring_bruteforce(span_enumerate(RingCode(1, {V({"1"})}))).dual.size() == 1);
  CHECK_THROWS_AS(dual_ring_bruteforce(span_enumerate(RingCode(5, {})), 1 << 12), Error);
}

TEST_CASE("dual size identity, double dual and linear dual on random codes") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    std::vector<RingVector> gens(rng() % 3);
    for (auto& g : gens) {
      oracle::Word w(n);
      for (auto& e : w) e = rng() & 7;
      g = vector_of(w);
    }
    const RingCode code(n, gens, rng() & 1);
    const auto span = span_enumerate(code);
    const auto bd = dual_ring_bruteforce(span);
    CHECK(bd.size_identity_holds);
    CHECK(span.size() * bd.dual.size() == (std::size_t{1} << (3 * n)));
    CHECK(words(bd.dual) == oracle_dual(n, words(span)));
    CHECK(dual_ring_bruteforce(bd.dual).dual == span);
    CHECK(span_enumerate(dual_ring_linear(code)) == bd.dual);
  }
}

TEST_CASE("dual generator formula") {
  SUBCASE("length 8") {
    const BinPoly g = P("x^3+x^2+x+1");
    const RingCode f = dual_ring_formula(8, g, g, g);
    REQUIRE(f.generators().size() == 1);
    // v h* + (1+v) h* + (1+v^2) h* = v^2 h*, h* = x^5+x^4+x+1.
    CHECK(f.generators()[0] == RingVector::from_poly(8, P("x^5+x^4+x+1"), E("v^2")));
    const std::set<oracle::Word> formula = oracle_span(f);
    CHECK(words(span_enumerate(f)) == formula);
    const RingCode code = build_ring_cyclic(8, g, g, g);
    const RingCode exact = dual_ring_linear(code);
    CHECK(exact.log2_size() == 9);
    // The formula generator spans a proper subcode of the true dual.
    CHECK(log2_exact(formula.size()) == 6);
    for (const auto& w : formula) CHECK(exact.contains(vector_of(w)));
  }
  SUBCASE("length 1") {
    const BinPoly x1 = P("x+1");
    const RingCode f = dual_ring_formula(1, x1, x1, x1);
    CHECK(f.generators()[0] == V({"v^2"}));
    CHECK(words(span_enumerate(f)) == std::set<oracle::Word>{{0}, {2}, {4}, {6}});
    // The code itself is {0}, whose dual is all of R.
    CHECK(dual_ring_bruteforce(span_enumerate(build_ring_cyclic(1, x1, x1, x1))).dual.size() ==
          8);
  }
  SUBCASE("length 2") {
    const BinPoly x1 = P("x+1");
    const auto span = span_enumerate(build_ring_cyclic(2, x1, x1, x1));
    const auto brute = dual_ring_bruteforce(span).dual;
    const auto formula = span_enumerate(dual_ring_formula(2, x1, x1, x1));
    CHECK(brute.size() == 8);
    CHECK(formula.size() == 4);
    for (std::size_t i = 0; i < formula.size(); ++i) CHECK(brute.contains(formula.at(i)));
  }
  CHECK_THROWS_AS(dual_ring_formula(8, P("x^2+x+1"), P("1"), P("1")), Error);
}

TEST_CASE("minimum Hamming distance") {
  CHECK(min_hamming(binary_cyclic(7, P("x^3+x+1"))) == 3);
  CHECK(min_hamming(binary_cyclic(8, P("x^3+x^2+x+1"))) == 2);
  CHECK(min_hamming(BinaryCode::full(9)) == 1);
  try {
    min_hamming(BinaryCode::zero(4));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kPrecondition);
    CHECK(std::string(e.what()).find("no nonzero codeword") != std::string::npos);
  }
  try {
    min_hamming(BinaryCode::full(30), 1 << 10);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kCapExceeded);
  }
}

TEST_CASE("syndrome search agrees with enumeration") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 2 + rng() % 29;
    const BinPoly g = random_divisor(rng, n);
    if (g.degree() == static_cast<int>(n)) continue;
    const BinaryCode c = binary_cyclic(n, g);
    if (c.dimension() > 20) continue;
    CHECK_MESSAGE(min_distance(c) == min_hamming(c), "n=", n, " g=", format_poly(g));
  }
  CHECK(min_distance(binary_cyclic(127, P("x^7+x+1"))) == 3);
}

TEST_CASE("minimum Lee distance") {
  const BinPoly x1 = P("x+1");
  CHECK(min_lee_enum(span_enumerate(build_ring_cyclic(2, x1, x1, x1))) == 2);
  CHECK(min_lee_enum(span_enumerate(RingCode(1, {V({"1+v^2"})}))) == 1);
  CHECK(min_lee_enum(span_enumerate(RingCode(1, {V({"1+v"})}))) == 1);
  CHECK_THROWS_AS(min_lee_enum(span_enumerate(RingCode(3, {}))), Error);

  const auto component = [](std::size_t n, const char* g) {
    const BinaryCode c = binary_cyclic(n, P(g));
    return min_lee_formula(c, c, c);
  };
  CHECK(component(8, "x^3+x^2+x+1") == 2);
  CHECK(component(7, "x^3+x+1") == 3);
  CHECK(component(15, "x^4+x+1") == 3);
  CHECK_THROWS_AS(min_lee_formula(BinaryCode::full(3), BinaryCode::zero(3), BinaryCode::full(3)),
                  Error);
}

TEST_CASE("Lee distance equals Hamming distance of the Gray image") {
  std::mt19937_64 rng(44);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      const RingCode c = build_ring_cyclic(n, random_divisor(rng, n), random_divisor(rng, n),
                                           random_divisor(rng, n));
      if (c.log2_size() == 0) continue;
      const auto span = span_enumerate(c);
      const unsigned lee = min_lee_enum(span);
      CHECK(lee == min_hamming(gray_image_basis(c)));
      CHECK(lee == brute_min_weight(words(span)));
      const LeeDistance d = lee_distance(c, Limits{});
      CHECK(d.value == lee);
      CHECK(d.method == DistanceMethod::kEnumerated);
    }
  }
}

TEST_CASE("Lee distance falls back to components above the cap") {
  const BinPoly g = P("x^4+x+1");
  Limits small;
  small.enum_cap = 1 << 10;
  const LeeDistance d = lee_distance(build_ring_cyclic(15, g, g, g), small);
  CHECK(d.value == 3);
  CHECK(d.method == DistanceMethod::kComponentFormula);
  CHECK(to_string(d.method) == "component_formula");
  CHECK(to_string(DistanceMethod::kEnumerated) == "enumerated");
}

TEST_CASE("shift operators") {
  CHECK(sigma(V({"1", "v", "v^2"})) == V({"v^2", "1", "v"}));
  const RingVector one = V({"1+v"});
  CHECK(sigma(one) == one);
  CHECK(phi(bits("100111")) == bits("011011"));
  CHECK_THROWS_AS(phi(bits("1010")), Error);

  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 10000; ++trial) {
    oracle::Word w(1 + rng() % 16);
    for (auto& e : w) e = rng() & 7;
    const RingVector x = vector_of(w);
    CHECK(gray_vec(sigma(x)) == phi(gray_vec(x)));
    CHECK(word_of(sigma(x)) == oracle::shift(w));
  }
}

TEST_CASE("cyclic and quasi-cyclic membership") {
  const BinPoly x1 = P("x+1");
  const auto diag = span_enumerate(build_ring_cyclic(2, x1, x1, x1));
  CHECK(is_cyclic(diag));
  CHECK(is_quasicyclic3(gray_image(diag)));
  CHECK_FALSE(is_cyclic(span_enumerate(RingCode(2, {V({"v", "0"})}))));
  std::mt19937_64 rng(66);
  for (std::size_t n = 1; n <= 5; ++n) {
    const RingCode c = build_ring_cyclic(n, random_divisor(rng, n), random_divisor(rng, n),
                                         random_divisor(rng, n));
    CHECK(is_quasicyclic3(gray_image(span_enumerate(c))));
  }
}

TEST_CASE("Gray image basis") {
  const BinPoly g8 = P("x^3+x^2+x+1");
  const BinaryCode b8 = gray_image_basis(build_ring_cyclic(8, g8, g8, g8));
  CHECK(b8.length() == 24);
  CHECK(b8.dimension() == 15);
  CHECK(gray_image_basis(RingCode(4, {})).dimension() == 0);
  const BinPoly g7 = P("x^3+x+1");
  const RingCode c7 = build_ring_cyclic(7, g7, g7, g7);
  const BinaryCode b7 = gray_image_basis(c7);
  CHECK(b7.length() == 21);
  CHECK(b7.dimension() == 12);
  const auto img = gray_image(span_enumerate(c7));
  CHECK(img.size() == 4096);
  for (std::size_t i = 0; i < img.size(); ++i) CHECK(b7.contains(img.at(i)));
}

TEST_CASE("self-orthogonal ring codes have self-orthogonal Gray images") {
  std::mt19937_64 rng(77);
  int seen = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const BinPoly& f : enumerate_divisors(n)) {
      const RingCode c = build_ring_cyclic(n, f, f, f);
      if (!is_self_orthogonal(c)) continue;
      ++seen;
      CHECK(is_self_orthogonal(gray_image_basis(c)));
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    oracle::Word w(n);
    for (auto& e : w) e = rng() & 7;
    const RingCode c(n, {vector_of(w)}, rng() & 1);
    if (!is_self_orthogonal(c)) continue;
    ++seen;
    CHECK(is_self_orthogonal(gray_image_basis(c)));
  }
  CHECK(seen > 10);
}

TEST_CASE("decomposition audit") {
  SUBCASE("<1+v> fails") {
    const auto span = span_enumerate(RingCode(1, {V({"1+v"})}));
    const DecompositionAudit a = audit_decomposition(span);
    CHECK(a.code_log2 == 2);
    CHECK(a.product_log2 == 3);
    CHECK(a.image_in_product);
    CHECK_FALSE(a.product_matches);
    REQUIRE(a.product_witness.has_value());
    const BitVec w = *a.product_witness;
    CHECK(w.popcount() == 1);
    CHECK_FALSE(span.contains(gray_vec_inverse(w)));
    CHECK_FALSE(a.reconstruction_matches);
    CHECK(a.exhaustive);
    const DecompositionAudit r = audit_decomposition(RingCode(1, {V({"1+v"})}));
    CHECK_FALSE(r.product_matches);
    CHECK_FALSE(r.reconstruction_matches);
  }
  SUBCASE("<v> has a product image but no reconstruction") {
    const DecompositionAudit a = audit_decomposition(span_enumerate(RingCode(1, {V({"v"})})));
    CHECK(a.product_matches);
    // C1 = {0}, C2 = C3 = F2, so the sum is <1+v, 1+v^2>, not <v>.
    CHECK_FALSE(a.reconstruction_matches);
    REQUIRE(a.reconstruction_witness.has_value());
    CHECK(RingCode(1, {V({"1+v"})}).contains(
              RingVector::from_planes(a.reconstruction_witness->word, 1)) !=
          RingCode(1, {V({"v"})}).contains(
              RingVector::from_planes(a.reconstruction_witness->word, 1)));
    CHECK(a.code_log2 == 2);
    CHECK(a.product_log2 == 2);
  }
  SUBCASE("zero code matches") {
    const DecompositionAudit a = audit_decomposition(span_enumerate(RingCode(3, {})));
    CHECK(a.product_matches);
    CHECK(a.reconstruction_matches);
  }
  SUBCASE("equal-triple cyclic codes match") {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (const BinPoly& f : enumerate_divisors(n)) {
        const RingCode c = build_ring_cyclic(n, f, f, f);
        const DecompositionAudit a = audit_decomposition(span_enumerate(c));
        CHECK(a.product_matches);
        CHECK(a.reconstruction_matches);
        const DecompositionAudit b = audit_decomposition(c);
        CHECK(b.product_matches == a.product_matches);
        CHECK(b.reconstruction_matches == a.reconstruction_matches);
      }
    }
  }
}

TEST_CASE("first difference between word sets") {
  WordSet a(3), b(3);
  for (const char* s : {"000", "110"}) a.append(bits(s));
  for (const char* s : {"000", "110", "011"}) b.append(bits(s));
  a.finalize();
  b.finalize();
  const auto d = first_difference(a, b);
  REQUIRE(d.has_value());
  CHECK(d->word == bits("011"));
  CHECK_FALSE(d->in_first);
  CHECK_FALSE(first_difference(a, a).has_value());
}
