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

#include "ringqc/codes.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

namespace ringqc {

namespace {

bool raw_less(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::uint64_t pow2_saturating(std::size_t k) {
  return k >= 63 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << k;
}

std::string pow2_text(std::size_t k) { return "2^" + std::to_string(k); }

// Plane layout a | b | c to Gray layout a | b | a + c; an involution.
BitVec plane_to_gray(const BitVec& planes, std::size_t n) {
  BitVec out = planes;
  for (std::size_t i = 0; i < n; ++i) {
    if (planes.get(i)) out.flip(2 * n + i);
  }
  return out;
}

void require_divisor(std::size_t n, const BinPoly& f, const char* name) {
  if (f.is_zero() || !divides(f, BinPoly::xn_plus_1(static_cast<unsigned>(n)))) {
    throw_precondition(std::string(name) + " = " + format_poly(f) + " does not divide x^" +
                       std::to_string(n) + "-1");
  }
}

}  // namespace

WordSet::WordSet(std::size_t width)
    : width_(width), stride_(std::max<std::size_t>(1, (width + 63) / 64)) {}

BitVec WordSet::at(std::size_t i) const {
  BitVec out(width_);
  auto dst = out.mutable_words();
  const auto src = raw(i);
  std::copy(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(dst.size()), dst.begin());
  return out;
}

bool WordSet::contains(const BitVec& word) const {
  if (word.size() != width_) return false;
  std::vector<std::uint64_t> key(stride_, 0);
  std::copy(word.words().begin(), word.words().end(), key.begin());
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (raw_less(raw(mid), key)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo < size() && std::equal(key.begin(), key.end(), raw(lo).begin());
}

void WordSet::append(const BitVec& word) {
  if (word.size() != width_) throw_precondition("word width mismatch in codeword set");
  const std::size_t start = data_.size();
  data_.resize(start + stride_, 0);
  std::copy(word.words().begin(), word.words().end(),
            data_.begin() + static_cast<std::ptrdiff_t>(start));
}

void WordSet::finalize() {
  if (stride_ == 1) {
    std::sort(data_.begin(), data_.end());
    data_.erase(std::unique(data_.begin(), data_.end()), data_.end());
    return;
  }
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [this](std::size_t x, std::size_t y) { return raw_less(raw(x), raw(y)); });
  std::vector<std::uint64_t> sorted;
  sorted.reserve(data_.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto word = raw(order[i]);
    if (i > 0 && std::equal(word.begin(), word.end(), raw(order[i - 1]).begin())) continue;
    sorted.insert(sorted.end(), word.begin(), word.end());
  }
  data_ = std::move(sorted);
}

RingCodewordSet::RingCodewordSet(std::size_t n, WordSet words)
    : n_(n), words_(std::move(words)) {
  if (words_.width() != 3 * n_) throw_precondition("ring codeword set needs 3n-bit words");
}

BinaryCodewordSet::BinaryCodewordSet(std::size_t n, WordSet words)
    : n_(n), words_(std::move(words)) {
  if (words_.width() != n_) throw_precondition("binary codeword set needs n-bit words");
}

BinaryCode::BinaryCode(std::size_t n, std::span<const BitVec> generators)
    : echelon_(n) {
  for (const BitVec& g : generators) {
    if (g.size() != n) throw_precondition("generator length differs from code length");
    echelon_.insert(g);
  }
}

BinaryCode BinaryCode::full(std::size_t n) {
  std::vector<BitVec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    BitVec e(n);
    e.set(i);
    rows.push_back(std::move(e));
  }
  return BinaryCode(n, rows);
}

bool BinaryCode::contains(const BinaryCode& sub) const {
  if (sub.length() != length()) return false;
  return std::all_of(sub.basis().begin(), sub.basis().end(),
                     [this](const BitVec& row) { return contains(row); });
}

RingCode::RingCode(std::size_t n, std::vector<RingVector> generators, bool cyclic)
    : n_(n), generators_(std::move(generators)), cyclic_(cyclic), basis_(3 * n) {
  if (n_ == 0) throw_precondition("code length must be at least 1");
  for (const RingVector& g : generators_) {
    if (g.size() != n_) {
      throw_precondition("generator of length " + std::to_string(g.size()) +
                         " in a code of length " + std::to_string(n_));
    }
    RingVector shift = g;
    const std::size_t shifts = cyclic_ ? n_ : 1;
    for (std::size_t s = 0; s < shifts; ++s) {
      for (RingElem r : {RingElem::one(), RingElem::v(), RingElem::v2()}) {
        basis_.insert((r * shift).planes());
      }
      shift = sigma(shift);
    }
  }
}

bool same_code(const RingCode& a, const RingCode& b) {
  return a.plane_basis() == b.plane_basis();
}

RingCodewordSet span_enumerate(const RingCode& code, std::uint64_t cap) {
  const std::size_t k = code.log2_size();
  if (pow2_saturating(k) > cap) {
    throw_cap("span has " + pow2_text(k) + " codewords, above the enumeration cap " +
              std::to_string(cap));
  }
  const std::size_t width = 3 * code.length();
  WordSet words(width);
  walk_span(code.plane_basis().rows(), width, [&words](const BitVec& w) {
    words.append(w);
    return true;
  });
  words.finalize();
  return RingCodewordSet(code.length(), std::move(words));
}

RingCode build_ring_cyclic(std::size_t n, const BinPoly& f1, const BinPoly& f2,
                           const BinPoly& f3) {
  require_divisor(n, f1, "f1");
  require_divisor(n, f2, "f2");
  require_divisor(n, f3, "f3");
  const RingElem one_plus_v = RingElem::one() + RingElem::v();
  const RingElem one_plus_v2 = RingElem::one() + RingElem::v2();
  std::vector<RingVector> gens = {
      RingVector::from_poly(n, f1, RingElem::v()),
      RingVector::from_poly(n, f2, one_plus_v),
      RingVector::from_poly(n, f3, one_plus_v2),
  };
  return RingCode(n, std::move(gens), /*cyclic=*/true);
}

BinaryCode binary_cyclic(std::size_t n, const BinPoly& g) {
  require_divisor(n, g, "g");
  std::vector<BitVec> rows;
  const auto deg = static_cast<std::size_t>(g.degree());
  for (std::size_t i = 0; i + deg < n; ++i) {
    rows.push_back(g.shifted(static_cast<unsigned>(i)).fold(n));
  }
  return BinaryCode(n, rows);
}

BinaryCode dual_binary(const BinaryCode& code) {
  return BinaryCode(code.length(), code.echelon().null_space());
}

BinaryCodewordSet enumerate(const BinaryCode& code, std::uint64_t cap) {
  if (pow2_saturating(code.dimension()) > cap) {
    throw_cap("code has " + pow2_text(code.dimension()) +
              " codewords, above the enumeration cap " + std::to_string(cap));
  }
  WordSet words(code.length());
  walk_span(code.basis(), code.length(), [&words](const BitVec& w) {
    words.append(w);
    return true;
  });
  words.finalize();
  return BinaryCodewordSet(code.length(), std::move(words));
}

bool is_self_orthogonal(const BinaryCode& code) {
  const auto& rows = code.basis();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i; j < rows.size(); ++j) {
      if (rows[i].dot(rows[j])) return false;
    }
  }
  return true;
}

unsigned min_hamming(const BinaryCode& code, std::uint64_t cap) {
  if (code.dimension() == 0) throw_precondition("no nonzero codeword");
  if (pow2_saturating(code.dimension()) > cap) {
    throw_cap("minimum distance needs " + pow2_text(code.dimension()) +
              " codewords, above the cap " + std::to_string(cap));
  }
  std::size_t best = code.length();
  bool first = true;
  walk_span(code.basis(), code.length(), [&](const BitVec& w) {
    if (first) {
      first = false;  // skip the zero word
      return true;
    }
    best = std::min(best, w.popcount());
    return best > 1;
  });
  return static_cast<unsigned>(best);
}

namespace {

std::uint64_t binomial_saturating(std::size_t n, std::size_t k) {
  long double acc = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  }
  if (acc > 1.8e19L) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(acc + 0.5L);
}

// Is there a set of `weight` columns whose syndromes XOR to zero?
bool zero_syndrome_combination(const std::vector<BitVec>& columns, std::size_t weight) {
  const std::size_t n = columns.size();
  std::vector<std::size_t> idx(weight);
  std::vector<BitVec> partial(weight + 1, BitVec(columns.empty() ? 0 : columns[0].size()));
  std::size_t depth = 0;
  idx[0] = 0;
  for (;;) {
    if (idx[depth] > n - (weight - depth)) {
      if (depth == 0) return false;
      --depth;
      ++idx[depth];
      continue;
    }
    partial[depth + 1] = partial[depth] ^ columns[idx[depth]];
    if (depth + 1 == weight) {
      if (partial[weight].none()) return true;
      ++idx[depth];
    } else {
      idx[depth + 1] = idx[depth] + 1;
      ++depth;
    }
  }
}

}  // namespace

unsigned min_distance(const BinaryCode& code, std::uint64_t work_cap) {
  const std::size_t n = code.length();
  const std::size_t k = code.dimension();
  if (k == 0) throw_precondition("no nonzero codeword");
  const std::uint64_t enum_cost = pow2_saturating(k);
  const std::uint64_t budget = std::min(enum_cost, work_cap);

  const std::vector<BitVec> checks = code.echelon().null_space();
  std::vector<BitVec> columns(n, BitVec(checks.size()));
  for (std::size_t r = 0; r < checks.size(); ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      if (checks[r].get(i)) columns[i].set(r);
    }
  }
  std::uint64_t spent = 0;
  for (std::size_t w = 1; w <= n; ++w) {
    const std::uint64_t cost = binomial_saturating(n, w);
    if (cost > budget || spent + cost > budget) break;
    if (zero_syndrome_combination(columns, w)) return static_cast<unsigned>(w);
    spent += cost;
  }
  if (enum_cost <= work_cap) return min_hamming(code, work_cap);
  throw_cap("minimum distance of a [" + std::to_string(n) + "," + std::to_string(k) +
            "] code exceeds the work cap " + std::to_string(work_cap));
}

Projections projections(const RingCodewordSet& set) {
  const std::size_t n = set.length();
  Echelon e1(n), e2(n), e3(n);
  for (std::size_t i = 0; i < set.size(); ++i) {
    const BitVec w = set.words().at(i);
    const BitVec a = w.slice(0, n);
    e1.insert(a);
    e2.insert(w.slice(n, n));
    e3.insert(a ^ w.slice(2 * n, n));
  }
  return {BinaryCode(n, e1.rows()), BinaryCode(n, e2.rows()), BinaryCode(n, e3.rows())};
}

Projections projections(const RingCode& code) {
  const std::size_t n = code.length();
  std::vector<BitVec> g1, g2, g3;
  for (const BitVec& w : code.plane_basis().rows()) {
    const BitVec a = w.slice(0, n);
    g1.push_back(a);
    g2.push_back(w.slice(n, n));
    g3.push_back(a ^ w.slice(2 * n, n));
  }
  return {BinaryCode(n, g1), BinaryCode(n, g2), BinaryCode(n, g3)};
}

BruteForceDual dual_ring_bruteforce(const RingCodewordSet& set, std::uint64_t cap) {
  const std::size_t n = set.length();
  if (3 * n >= 63 || pow2_saturating(3 * n) > cap) {
    throw_cap("brute-force dual needs 8^" + std::to_string(n) +
              " candidates, above the cap " + std::to_string(cap));
  }
  // An additive generating set of S suffices since the product is biadditive.
  Echelon gens(3 * n);
  for (std::size_t i = 0; i < set.size(); ++i) gens.insert(set.words().at(i));

  struct Planes {
    std::uint64_t a, b, c;
  };
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  auto split = [&](std::uint64_t w) { return Planes{w & mask, (w >> n) & mask, (w >> (2 * n)) & mask}; };
  std::vector<Planes> g;
  for (const BitVec& row : gens.rows()) g.push_back(split(row.words()[0]));

  auto parity = [](std::uint64_t w) { return (std::popcount(w) & 1) != 0; };
  WordSet words(3 * n);
  const std::uint64_t total = std::uint64_t{1} << (3 * n);
  for (std::uint64_t w = 0; w < total; ++w) {
    const Planes x = split(w);
    bool orthogonal = true;
    for (const Planes& y : g) {
      // sum_i x_i y_i, one coefficient at a time.
      const bool one = parity(x.a & y.a);
      const bool v = parity((x.a & y.b) ^ (x.b & y.a) ^ (x.b & y.c) ^ (x.c & y.b));
      const bool v2 = parity((x.a & y.c) ^ (x.b & y.b) ^ (x.c & y.a) ^ (x.c & y.c));
      if (one || v || v2) {
        orthogonal = false;
        break;
      }
    }
    if (orthogonal) words.append(BitVec(3 * n, w));
  }
  words.finalize();
  const bool identity =
      static_cast<unsigned __int128>(set.size()) * words.size() == (static_cast<unsigned __int128>(1) << (3 * n));
  return {RingCodewordSet(n, std::move(words)), identity};
}

RingCode dual_ring_linear(const RingCode& code) {
  const std::size_t n = code.length();
  Echelon constraints(3 * n);
  for (const BitVec& row : code.plane_basis().rows()) {
    const BitVec ga = row.slice(0, n), gb = row.slice(n, n), gc = row.slice(2 * n, n);
    const BitVec zero(n);
    const BitVec ac = ga ^ gc;
    constraints.insert(BitVec::concat(ga, zero, zero));  // coefficient of 1
    constraints.insert(BitVec::concat(gb, ac, gb));      // coefficient of v
    constraints.insert(BitVec::concat(gc, gb, ac));      // coefficient of v^2
  }
  std::vector<RingVector> gens;
  for (const BitVec& w : constraints.null_space()) gens.push_back(RingVector::from_planes(w, n));
  return RingCode(n, std::move(gens));
}

RingCode dual_ring_formula(std::size_t n, const BinPoly& f1, const BinPoly& f2,
                           const BinPoly& f3) {
  require_divisor(n, f1, "f1");
  require_divisor(n, f2, "f2");
  require_divisor(n, f3, "f3");
  const BinPoly xn1 = BinPoly::xn_plus_1(static_cast<unsigned>(n));
  const BinPoly h1 = reciprocal(xn1 / f1);
  const BinPoly h2 = reciprocal(xn1 / f2);
  const BinPoly h3 = reciprocal(xn1 / f3);
  RingVector g = RingVector::from_poly(n, h1, RingElem::v()) +
                 RingVector::from_poly(n, h2, RingElem::one() + RingElem::v()) +
                 RingVector::from_poly(n, h3, RingElem::one() + RingElem::v2());
  return RingCode(n, {std::move(g)}, /*cyclic=*/true);
}

bool is_self_orthogonal(const RingCode& code) {
  const std::size_t n = code.length();
  const auto& rows = code.plane_basis().rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const RingVector x = RingVector::from_planes(rows[i], n);
    for (std::size_t j = i; j < rows.size(); ++j) {
      if (!inner_product(x, RingVector::from_planes(rows[j], n)).is_zero()) return false;
    }
  }
  return true;
}

unsigned min_lee_enum(const RingCodewordSet& set) {
  int best = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < set.size(); ++i) {
    const RingVector x = set.at(i);
    if (x.is_zero()) continue;
    best = std::min(best, lee_weight(x));
  }
  if (best == std::numeric_limits<int>::max()) throw_precondition("zero code has no nonzero codeword");
  return static_cast<unsigned>(best);
}

unsigned min_lee_formula(const BinaryCode& c1, const BinaryCode& c2, const BinaryCode& c3,
                         std::uint64_t cap) {
  return std::min({min_distance(c1, cap), min_distance(c2, cap), min_distance(c3, cap)});
}

std::string to_string(DistanceMethod m) {
  return m == DistanceMethod::kEnumerated ? "enumerated" : "component_formula";
}

LeeDistance lee_distance(const RingCode& code, const Limits& limits) {
  const std::size_t k = code.log2_size();
  if (k == 0) throw_precondition("zero code has no nonzero codeword");
  if (pow2_saturating(k) <= limits.enum_cap) {
    // Lee weight of a word equals the Hamming weight of its Gray image.
    const BinaryCode image = gray_image_basis(code);
    std::size_t best = 3 * code.length();
    bool first = true;
    walk_span(image.basis(), image.length(), [&](const BitVec& w) {
      if (first) {
        first = false;
        return true;
      }
      best = std::min(best, w.popcount());
      return best > 1;
    });
    return {static_cast<unsigned>(best), DistanceMethod::kEnumerated};
  }
  const Projections p = projections(code);
  return {min_lee_formula(p.c1, p.c2, p.c3, limits.distance_cap),
          DistanceMethod::kComponentFormula};
}

RingVector sigma(const RingVector& x) {
  return RingVector(x.a().rotated(), x.b().rotated(), x.c().rotated());
}

BitVec phi(const BitVec& word) {
  if (word.size() % 3 != 0) {
    throw_precondition("phi needs a length divisible by 3, got " + std::to_string(word.size()));
  }
  const std::size_t n = word.size() / 3;
  return BitVec::concat(word.slice(0, n).rotated(), word.slice(n, n).rotated(),
                        word.slice(2 * n, n).rotated());
}

bool is_cyclic(const RingCodewordSet& set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!set.contains(sigma(set.at(i)))) return false;
  }
  return true;
}

bool is_quasicyclic3(const BinaryCodewordSet& set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!set.contains(phi(set.at(i)))) return false;
  }
  return true;
}

BinaryCode gray_image_basis(const RingCode& code) {
  std::vector<BitVec> rows;
  for (const BitVec& w : code.plane_basis().rows()) {
    rows.push_back(plane_to_gray(w, code.length()));
  }
  return BinaryCode(3 * code.length(), rows);
}

BinaryCodewordSet gray_image(const RingCodewordSet& set) {
  const std::size_t n = set.length();
  WordSet words(3 * n);
  for (std::size_t i = 0; i < set.size(); ++i) {
    words.append(plane_to_gray(set.words().at(i), n));
  }
  words.finalize();
  return BinaryCodewordSet(3 * n, std::move(words));
}

std::optional<SetWitness> first_difference(const WordSet& a, const WordSet& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    BitVec w = a.at(i);
    if (!b.contains(w)) return SetWitness{std::move(w), true};
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    BitVec w = b.at(i);
    if (!a.contains(w)) return SetWitness{std::move(w), false};
  }
  return std::nullopt;
}

std::optional<SetWitness> first_difference(const Echelon& a, const Echelon& b) {
  for (const BitVec& row : a.rows()) {
    if (!b.contains(row)) return SetWitness{row, true};
  }
  for (const BitVec& row : b.rows()) {
    if (!a.contains(row)) return SetWitness{row, false};
  }
  return std::nullopt;
}

namespace {

// Additive generators of vC1 + (1+v)C2 + (1+v^2)C3 in plane layout.
Echelon reconstruction(const Projections& p, std::size_t n) {
  Echelon out(3 * n);
  const BitVec zero(n);
  for (const BitVec& e : p.c1.basis()) out.insert(BitVec::concat(zero, e, zero));
  for (const BitVec& e : p.c2.basis()) out.insert(BitVec::concat(e, e, zero));
  for (const BitVec& e : p.c3.basis()) out.insert(BitVec::concat(e, zero, e));
  return out;
}

// Block-diagonal basis of C1 x C2 x C3 in Gray layout.
std::vector<BitVec> product_basis(const Projections& p, std::size_t n) {
  std::vector<BitVec> rows;
  const BitVec zero(n);
  for (const BitVec& e : p.c1.basis()) rows.push_back(BitVec::concat(e, zero, zero));
  for (const BitVec& e : p.c2.basis()) rows.push_back(BitVec::concat(zero, e, zero));
  for (const BitVec& e : p.c3.basis()) rows.push_back(BitVec::concat(zero, zero, e));
  return rows;
}

}  // namespace

DecompositionAudit audit_decomposition(const RingCodewordSet& set, std::uint64_t cap) {
  const std::size_t n = set.length();
  const Projections p = projections(set);
  DecompositionAudit out;
  out.exhaustive = true;
  out.code_log2 = static_cast<std::uint64_t>(std::bit_width(set.size()) - 1);
  out.product_log2 = p.c1.dimension() + p.c2.dimension() + p.c3.dimension();

  const BinaryCodewordSet image = gray_image(set);
  for (std::size_t i = 0; i < image.size(); ++i) {
    const BitVec w = image.at(i);
    if (!p.c1.contains(w.slice(0, n)) || !p.c2.contains(w.slice(n, n)) ||
        !p.c3.contains(w.slice(2 * n, n))) {
      out.image_in_product = false;
      break;
    }
  }
  out.product_matches =
      out.image_in_product && pow2_saturating(out.product_log2) == set.size();
  if (!out.product_matches) {
    if (pow2_saturating(out.product_log2) <= cap) {
      // Lightest product element missing from the image, ties by word order.
      std::vector<BitVec> missing;
      walk_span(product_basis(p, n), 3 * n, [&](const BitVec& w) {
        if (!image.contains(w)) missing.push_back(w);
        return true;
      });
      auto lighter = [](const BitVec& x, const BitVec& y) {
        const auto px = x.popcount(), py = y.popcount();
        return px != py ? px < py : x < y;
      };
      if (!missing.empty()) out.product_witness = *std::min_element(missing.begin(), missing.end(), lighter);
    } else {
      for (const BitVec& row : product_basis(p, n)) {
        if (!image.contains(row)) {
          out.product_witness = row;
          break;
        }
      }
    }
  }

  const Echelon recon = reconstruction(p, n);
  if (pow2_saturating(recon.rank()) <= cap) {
    WordSet recon_words(3 * n);
    walk_span(recon.rows(), 3 * n, [&recon_words](const BitVec& w) {
      recon_words.append(w);
      return true;
    });
    recon_words.finalize();
    out.reconstruction_witness = first_difference(set.words(), recon_words);
  } else {
    const Echelon code_basis(3 * n, [&] {
      std::vector<BitVec> rows;
      for (std::size_t i = 0; i < set.size(); ++i) rows.push_back(set.words().at(i));
      return rows;
    }());
    out.reconstruction_witness = first_difference(code_basis, recon);
  }
  out.reconstruction_matches = !out.reconstruction_witness.has_value();
  return out;
}

DecompositionAudit audit_decomposition(const RingCode& code) {
  const std::size_t n = code.length();
  const Projections p = projections(code);
  const BinaryCode image = gray_image_basis(code);
  DecompositionAudit out;
  out.code_log2 = code.log2_size();
  out.product_log2 = p.c1.dimension() + p.c2.dimension() + p.c3.dimension();
  // Each basis word projects into the Ci by construction, so the image
  // lies in the product; equality is a rank comparison.
  out.product_matches = out.code_log2 == out.product_log2;
  if (!out.product_matches) {
    for (const BitVec& row : product_basis(p, n)) {
      if (!image.contains(row)) {
        out.product_witness = row;
        break;
      }
    }
  }
  out.reconstruction_witness = first_difference(code.plane_basis(), reconstruction(p, n));
  out.reconstruction_matches = !out.reconstruction_witness.has_value();
  return out;
}

}  // namespace ringqc
