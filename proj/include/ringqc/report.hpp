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

// Command bodies behind the CLI. Each returns the rendered output and the
// process exit code; errors propagate as ringqc::Error.
//
// Output is deterministic: identical arguments give byte-identical text.
// The records format is one JSON object per line with fixed key order.

#ifndef RINGQC_REPORT_HPP_
#define RINGQC_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringqc/codes.hpp"
#include "ringqc/error.hpp"
#include "ringqc/gf2poly.hpp"
#include "ringqc/quantum.hpp"

namespace ringqc {

enum class OutputFormat { kTable, kRecords };

struct CommandOutput {
  std::string text;
  int exit_code = 0;
};

// Exit codes shared by the CLI and the C API.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCap = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitMismatch = 4;

// --- Reproduction of the published parameter table -----------------------

struct PublishedRow {
  std::size_t n;
  BinPoly f;  // f1 = f2 = f3 = f
  std::size_t N;
  long K;
  unsigned D;
  // Displayed single-generator polynomial g in <v^2 g>, and displayed dual
  // generator polynomial; empty when none is displayed.
  std::optional<BinPoly> shown_generator;
  std::optional<BinPoly> shown_dual;
};
const std::vector<PublishedRow>& published_rows();

struct ReproductionRow {
  PublishedRow published;
  QuantumCodeRecord record;
  unsigned D_components = 0;  // min over C1, C2, C3 by enumeration
  bool matches = false;       // [[N, K, D]] exact
  std::vector<std::string> notes;
};
std::vector<ReproductionRow> reproduce_rows(const Limits& limits = {});

// --- Claim audits -----------------------------------------------------------

// One audited claim on one code. `fields` are extra key/values, already
// rendered; witnesses are machine-checkable words in a named layout.
struct AuditRecord {
  std::string code;   // description, e.g. "<1+v>" or "cyclic(x+1, x+1, 1)"
  std::size_t n = 0;
  std::string claim;  // product_decomposition, reconstruction, ...
  bool pass = false;
  bool exhaustive = false;
  std::vector<std::pair<std::string, std::string>> fields;
};

struct CatalogCode {
  std::string name;
  RingCode code;
};
// Fixed non-cyclic linear codes, including <1+v> at length 1.
std::vector<CatalogCode> audit_catalog();

// Every audited claim for the catalog and for all divisor triples with
// n <= n_max.
std::vector<AuditRecord> run_audit(std::size_t n_max, const Limits& limits = {});

// --- Commands ---------------------------------------------------------------

CommandOutput cmd_factor(unsigned n, OutputFormat format, const Limits& limits = {});

struct InspectOptions {
  bool validate = true;
};
CommandOutput cmd_inspect(std::size_t n, const BinPoly& f1, const BinPoly& f2,
                          const BinPoly& f3, const InspectOptions& options,
                          OutputFormat format, const Limits& limits = {});

CommandOutput cmd_search(std::size_t n, const SearchOptions& options, OutputFormat format,
                         const Limits& limits = {});

// Exit code kExitMismatch unless every published row matches.
CommandOutput cmd_reproduce(OutputFormat format, const Limits& limits = {});

CommandOutput cmd_audit(std::size_t n_max, OutputFormat format, const Limits& limits = {});

int exit_code_for(ErrorKind kind);

}  // namespace ringqc

#endif  // RINGQC_REPORT_HPP_
