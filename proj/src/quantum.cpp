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

#include "ringqc/quantum.hpp"

#include <algorithm>
#include <array>
#include <tuple>

namespace ringqc {

namespace {

void require_divisor(std::size_t n, const BinPoly& f, const char* name) {
  if (f.is_zero() || !divides(f, BinPoly::xn_plus_1(static_cast<unsigned>(n)))) {
    throw_precondition(std::string(name) + " = " + format_poly(f) + " does not divide x^" +
                       std::to_string(n) + "-1");
  }
}

long degree_sum(const BinPoly& f1, const BinPoly& f2, const BinPoly& f3) {
  return static_cast<long>(f1.degree()) + f2.degree() + f3.degree();
}

CssValidation validate_image(const BinaryCode& image, std::size_t n, long deg_sum) {
  CssValidation out;
  out.ran = true;
  out.dim_image = image.dimension();
  out.dim_dual = 3 * n - out.dim_image;
  out.dimension_matches = static_cast<long>(out.dim_image) == static_cast<long>(3 * n) - deg_sum;
  out.degenerate = out.dim_image == 0;
  out.dual_contained = image.contains(dual_binary(image));
  return out;
}

}  // namespace

bool dual_containing_poly(std::size_t n, const BinPoly& f) {
  require_divisor(n, f, "f");
  return divides(f * reciprocal(f), BinPoly::xn_plus_1(static_cast<unsigned>(n)));
}

CssValidation validate_css_binary(std::size_t n, const BinPoly& f1, const BinPoly& f2,
                                  const BinPoly& f3, const Limits& limits) {
  const RingCode code = build_ring_cyclic(n, f1, f2, f3);
  if (3 * n > limits.rank_cap) return {};
  return validate_image(gray_image_basis(code), n, degree_sum(f1, f2, f3));
}

QuantumCodeRecord css_from_triple(std::size_t n, const BinPoly& f1, const BinPoly& f2,
                                  const BinPoly& f3, const Limits& limits,
                                  const CssOptions& options) {
  const std::array<std::pair<const BinPoly*, const char*>, 3> fs = {
      {{&f1, "f1"}, {&f2, "f2"}, {&f3, "f3"}}};
  for (const auto& [f, name] : fs) require_divisor(n, *f, name);
  if (options.require_poly_criterion) {
    for (const auto& [f, name] : fs) {
      if (!dual_containing_poly(n, *f)) {
        throw_precondition(std::string(name) + " = " + format_poly(*f) + ": " + name + " * " +
                           name + "^* does not divide x^" + std::to_string(n) + "-1");
      }
    }
  }

  const RingCode code = build_ring_cyclic(n, f1, f2, f3);
  if (code.log2_size() == 0) throw_precondition("zero code has no minimum distance");

  QuantumCodeRecord rec;
  rec.n = n;
  rec.f1 = f1;
  rec.f2 = f2;
  rec.f3 = f3;
  rec.N = 3 * n;
  rec.code_log2 = code.log2_size();
  const long N = static_cast<long>(rec.N);
  rec.K_formula = 2 * (N - degree_sum(f1, f2, f3)) - N;
  // K comes from the actual rank of the Gray image, which the size formula
  // only predicts for some triples.
  rec.K = 2 * static_cast<long>(rec.code_log2) - N;
  if (rec.K != rec.K_formula) {
    rec.notes.push_back("size formula gives 2^" + std::to_string(N - degree_sum(f1, f2, f3)) +
                        ", rank gives 2^" + std::to_string(rec.code_log2));
  }
  if (rec.K <= 0) rec.notes.push_back("degenerate parameters: K <= 0");
  if (rec.code_log2 == rec.N) rec.notes.push_back("full space: D = 1");

  const LeeDistance d = lee_distance(code, limits);
  rec.D = d.value;
  rec.d_method = d.method;

  if (options.validate) {
    if (rec.N <= limits.rank_cap) {
      rec.validation = validate_image(gray_image_basis(code), n, degree_sum(f1, f2, f3));
      rec.validated = rec.validation.dual_contained;
      if (!rec.validated) rec.notes.push_back("Gray image is not dual-containing");
    } else {
      rec.notes.push_back("not validated: 3n exceeds the rank cap");
    }
  }
  return rec;
}

SearchResult search_triples(std::size_t n, const SearchOptions& options, const Limits& limits) {
  const std::vector<BinPoly> divisors = enumerate_divisors(static_cast<unsigned>(n), limits);
  std::vector<BinPoly> pool;
  if (options.require_dual_containing) {
    for (const BinPoly& f : divisors) {
      if (dual_containing_poly(n, f)) pool.push_back(f);
    }
  } else {
    pool = divisors;
    if (3 * n > limits.rank_cap) {
      throw_cap("binary admission needs 3n <= rank cap " + std::to_string(limits.rank_cap));
    }
  }

  const std::uint64_t d = divisors.size();
  const std::uint64_t scan = options.equal_only ? d : d * d * d;
  if (scan > limits.triple_cap) {
    throw_cap(std::to_string(scan) + " divisor triples exceed the triple cap " +
              std::to_string(limits.triple_cap));
  }

  SearchResult out;
  out.scanned = scan;
  CssOptions css;
  css.validate = options.validate;
  css.require_poly_criterion = options.require_dual_containing;

  auto consider = [&](const BinPoly& f1, const BinPoly& f2, const BinPoly& f3) {
    if (!options.require_dual_containing) {
      const RingCode code = build_ring_cyclic(n, f1, f2, f3);
      if (code.log2_size() == 0) return;
      const BinaryCode image = gray_image_basis(code);
      if (!image.contains(dual_binary(image))) return;
    } else if (build_ring_cyclic(n, f1, f2, f3).log2_size() == 0) {
      return;
    }
    ++out.admissible;
    QuantumCodeRecord rec = css_from_triple(n, f1, f2, f3, limits, css);
    if (rec.K >= options.min_K) out.records.push_back(std::move(rec));
  };

  if (options.equal_only) {
    for (const BinPoly& f : pool) consider(f, f, f);
  } else {
    for (const BinPoly& f1 : pool) {
      for (const BinPoly& f2 : pool) {
        for (const BinPoly& f3 : pool) consider(f1, f2, f3);
      }
    }
  }

  std::sort(out.records.begin(), out.records.end(),
            [](const QuantumCodeRecord& x, const QuantumCodeRecord& y) {
              if (x.K != y.K) return x.K > y.K;
              return std::tie(x.f1, x.f2, x.f3) < std::tie(y.f1, y.f2, y.f3);
            });
  if (options.max_results != 0 && out.records.size() > options.max_results) {
    out.records.resize(options.max_results);
  }
  out.emitted = out.records.size();
  return out;
}

}  // namespace ringqc
