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

// CSS parameters [[3n, K, D]] for cyclic codes <v f1, (1+v) f2, (1+v^2) f3>.

#ifndef RINGQC_QUANTUM_HPP_
#define RINGQC_QUANTUM_HPP_

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "ringqc/codes.hpp"
#include "ringqc/error.hpp"
#include "ringqc/gf2poly.hpp"

namespace ringqc {

// f * f^* divides x^n - 1. f must itself divide x^n - 1.
bool dual_containing_poly(std::size_t n, const BinPoly& f);

// Rank-level check of the CSS hypothesis on the Gray image B.
struct CssValidation {
  bool ran = false;  // false when 3n exceeds the rank cap
  std::size_t dim_image = 0;
  std::size_t dim_dual = 0;
  bool dimension_matches = false;  // dim B == 3n - sum deg fi
  bool dual_contained = false;     // B^perp within B
  bool degenerate = false;         // B == {0}
};
CssValidation validate_css_binary(std::size_t n, const BinPoly& f1, const BinPoly& f2,
                                  const BinPoly& f3, const Limits& limits = {});

struct QuantumCodeRecord {
  std::size_t n = 0;
  BinPoly f1, f2, f3;
  std::size_t N = 0;
  long K = 0;
  unsigned D = 0;
  DistanceMethod d_method = DistanceMethod::kEnumerated;
  bool validated = false;
  std::vector<std::string> notes;

  std::size_t code_log2 = 0;  // log2 |C| from the Gray-image rank
  long K_formula = 0;         // 2(3n - sum deg fi) - 3n
  CssValidation validation;
};

struct CssOptions {
  bool validate = true;
  // Reject triples failing the per-component polynomial criterion. When
  // false the caller has admitted the triple some other way.
  bool require_poly_criterion = true;
};

// Throws kPrecondition naming the first failing fi, or for the zero code.
QuantumCodeRecord css_from_triple(std::size_t n, const BinPoly& f1, const BinPoly& f2,
                                  const BinPoly& f3, const Limits& limits = {},
                                  const CssOptions& options = {});

struct SearchOptions {
  // When false, triples are admitted by the binary check B^perp within B.
  bool require_dual_containing = true;
  bool equal_only = false;
  long min_K = std::numeric_limits<long>::min();
  std::size_t max_results = 0;  // 0 = unlimited
  bool validate = true;
};

struct SearchResult {
  std::vector<QuantumCodeRecord> records;  // descending K, then (f1, f2, f3)
  std::uint64_t scanned = 0;
  std::uint64_t admissible = 0;
  std::uint64_t emitted = 0;
};

SearchResult search_triples(std::size_t n, const SearchOptions& options,
                            const Limits& limits = {});

}  // namespace ringqc

#endif  // RINGQC_QUANTUM_HPP_
