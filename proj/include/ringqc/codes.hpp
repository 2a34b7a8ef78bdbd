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

// Linear and cyclic codes over R and over F2.
//
// A code over R is handled through its additive structure: the R-span of a
// generator set equals the F2-span of {g, v*g, v^2*g}, so every code over R
// has an F2 basis in the "plane layout" a | b | c (3n bits). Enumeration,
// duals and projections all work from that basis. The Gray layout
// a | b | a+c is the image of the plane layout under an invertible linear
// map, so ranks agree between the two.

#ifndef RINGQC_CODES_HPP_
#define RINGQC_CODES_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringqc/bitvec.hpp"
#include "ringqc/error.hpp"
#include "ringqc/gf2poly.hpp"
#include "ringqc/ring.hpp"

namespace ringqc {

// Sorted, deduplicated set of equal-width bit words, packed contiguously.
class WordSet {
 public:
  explicit WordSet(std::size_t width);

  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return data_.size() / stride_; }
  BitVec at(std::size_t i) const;
  bool contains(const BitVec& word) const;

  // Builder interface: append in any order, then finalize() once.
  void append(const BitVec& word);
  void finalize();

  friend bool operator==(const WordSet&, const WordSet&) = default;

 private:
  std::span<const std::uint64_t> raw(std::size_t i) const {
    return {data_.data() + i * stride_, stride_};
  }

  std::size_t width_;
  std::size_t stride_;
  std::vector<std::uint64_t> data_;
};

// Explicit set of codewords over R, stored in plane layout.
class RingCodewordSet {
 public:
  RingCodewordSet(std::size_t n, WordSet words);

  std::size_t length() const noexcept { return n_; }
  std::size_t size() const noexcept { return words_.size(); }
  RingVector at(std::size_t i) const { return RingVector::from_planes(words_.at(i), n_); }
  bool contains(const RingVector& x) const { return words_.contains(x.planes()); }
  const WordSet& words() const noexcept { return words_; }

  friend bool operator==(const RingCodewordSet&, const RingCodewordSet&) = default;

 private:
  std::size_t n_;
  WordSet words_;
};

// Explicit set of binary codewords.
class BinaryCodewordSet {
 public:
  BinaryCodewordSet(std::size_t n, WordSet words);

  std::size_t length() const noexcept { return n_; }
  std::size_t size() const noexcept { return words_.size(); }
  BitVec at(std::size_t i) const { return words_.at(i); }
  bool contains(const BitVec& x) const { return words_.contains(x); }

  friend bool operator==(const BinaryCodewordSet&, const BinaryCodewordSet&) = default;

 private:
  std::size_t n_;
  WordSet words_;
};

// Binary linear code kept as its canonical reduced basis.
class BinaryCode {
 public:
  BinaryCode(std::size_t n, std::span<const BitVec> generators);
  static BinaryCode zero(std::size_t n) { return BinaryCode(n, {}); }
  static BinaryCode full(std::size_t n);

  std::size_t length() const noexcept { return echelon_.ncols(); }
  std::size_t dimension() const noexcept { return echelon_.rank(); }
  const std::vector<BitVec>& basis() const noexcept { return echelon_.rows(); }
  const Echelon& echelon() const noexcept { return echelon_; }

  bool contains(const BitVec& word) const { return echelon_.contains(word); }
  bool contains(const BinaryCode& sub) const;

  friend bool operator==(const BinaryCode&, const BinaryCode&) = default;

 private:
  Echelon echelon_;
};

// Code over R given by generator vectors. When cyclic, the code is the
// R[x]/(x^n - 1)-module they generate, realized by including all n cyclic
// shifts of every generator.
class RingCode {
 public:
  RingCode(std::size_t n, std::vector<RingVector> generators, bool cyclic = false);

  std::size_t length() const noexcept { return n_; }
  const std::vector<RingVector>& generators() const noexcept { return generators_; }
  bool cyclic() const noexcept { return cyclic_; }

  // F2 basis of the code in plane layout; |C| = 2^rank.
  const Echelon& plane_basis() const noexcept { return basis_; }
  std::size_t log2_size() const noexcept { return basis_.rank(); }
  bool contains(const RingVector& x) const { return basis_.contains(x.planes()); }

 private:
  std::size_t n_;
  std::vector<RingVector> generators_;
  bool cyclic_;
  Echelon basis_;
};

bool same_code(const RingCode& a, const RingCode& b);

// Every R-linear combination of the generators (with shifts when cyclic).
// Throws kCapExceeded when 2^rank exceeds cap.
RingCodewordSet span_enumerate(const RingCode& code, std::uint64_t cap = 1ull << 24);

// <v f1, (1+v) f2, (1+v^2) f3> in R[x]/(x^n - 1). Each fi must divide x^n - 1.
RingCode build_ring_cyclic(std::size_t n, const BinPoly& f1, const BinPoly& f2,
                           const BinPoly& f3);

// Basis {x^i g : 0 <= i < n - deg g}; g must divide x^n - 1.
BinaryCode binary_cyclic(std::size_t n, const BinPoly& g);
BinaryCode dual_binary(const BinaryCode& code);
BinaryCodewordSet enumerate(const BinaryCode& code, std::uint64_t cap);
bool is_self_orthogonal(const BinaryCode& code);

// Minimum weight by enumerating all 2^k codewords; needs 2^k <= cap.
unsigned min_hamming(const BinaryCode& code, std::uint64_t cap = 1ull << 20);
// Exact minimum weight by whichever is cheaper within the work cap:
// codeword enumeration, or a weight-ordered search for low-weight vectors
// with zero syndrome.
unsigned min_distance(const BinaryCode& code, std::uint64_t work_cap = 1ull << 20);

struct Projections {
  BinaryCode c1;  // a-parts
  BinaryCode c2;  // b-parts
  BinaryCode c3;  // (a + c)-parts
};
Projections projections(const RingCodewordSet& set);
Projections projections(const RingCode& code);

struct BruteForceDual {
  RingCodewordSet dual;
  bool size_identity_holds;  // |S| * |S^perp| == 8^n
};
// Annihilator of the set under the ring inner product, by testing all 8^n
// vectors. Throws kCapExceeded when 8^n > cap.
BruteForceDual dual_ring_bruteforce(const RingCodewordSet& set,
                                    std::uint64_t cap = 1ull << 24);
// Exact dual of a code over R as the null space of the three F2-linear
// conditions that make each coefficient of x.g vanish.
RingCode dual_ring_linear(const RingCode& code);
// Single generator v h1* + (1+v) h2* + (1+v^2) h3*, hi = (x^n - 1) / fi.
RingCode dual_ring_formula(std::size_t n, const BinPoly& f1, const BinPoly& f2,
                           const BinPoly& f3);
bool is_self_orthogonal(const RingCode& code);

unsigned min_lee_enum(const RingCodewordSet& set);
unsigned min_lee_formula(const BinaryCode& c1, const BinaryCode& c2, const BinaryCode& c3,
                         std::uint64_t cap = 1ull << 20);

enum class DistanceMethod { kEnumerated, kComponentFormula };
std::string to_string(DistanceMethod m);

struct LeeDistance {
  unsigned value = 0;
  DistanceMethod method = DistanceMethod::kEnumerated;
};
// Enumerates the code when 2^rank <= limits.enum_cap (Lee weight read off
// the Gray image), otherwise takes the minimum over the three projections.
LeeDistance lee_distance(const RingCode& code, const Limits& limits);

RingVector sigma(const RingVector& x);
// Shifts each third of a length-3n word independently.
BitVec phi(const BitVec& word);
bool is_cyclic(const RingCodewordSet& set);
bool is_quasicyclic3(const BinaryCodewordSet& set);

BinaryCode gray_image_basis(const RingCode& code);
BinaryCodewordSet gray_image(const RingCodewordSet& set);

// Element of exactly one of two sets, with the side it belongs to.
struct SetWitness {
  BitVec word;          // layout of the compared sets
  bool in_first = true;
};
std::optional<SetWitness> first_difference(const WordSet& a, const WordSet& b);
std::optional<SetWitness> first_difference(const Echelon& a, const Echelon& b);

// Checks the product decomposition psi(C) = C1 x C2 x C3 and the
// reconstruction C = vC1 + (1+v)C2 + (1+v^2)C3 on a concrete code.
struct DecompositionAudit {
  std::uint64_t code_log2 = 0;
  std::uint64_t product_log2 = 0;  // log2 |C1||C2||C3|
  bool image_in_product = true;
  bool product_matches = true;
  std::optional<BitVec> product_witness;  // Gray word in C1xC2xC3, not in psi(C)
  bool reconstruction_matches = true;
  std::optional<SetWitness> reconstruction_witness;  // plane layout; first = code
  bool exhaustive = false;
};
DecompositionAudit audit_decomposition(const RingCodewordSet& set,
                                       std::uint64_t cap = 1ull << 24);
DecompositionAudit audit_decomposition(const RingCode& code);

}  // namespace ringqc

#endif  // RINGQC_CODES_HPP_
