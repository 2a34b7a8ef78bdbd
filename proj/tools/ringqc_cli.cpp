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

// ringqc: command-line front end over the C API.
//
// Exit codes: 0 ok, 1 usage or parse error, 2 resource cap, 3 mathematical
// precondition, 4 reproduce-paper found a mismatching row.

#include <climits>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ringqc/ringqc.h"

namespace {

int exit_code_for(rqc_status status) {
  switch (status) {
    case RQC_OK:
      return 0;
    case RQC_ERR_CAP:
      return 2;
    case RQC_ERR_PRECONDITION:
      return 3;
    default:
      return 1;
  }
}

int finish(rqc_status status, rqc_text* text) {
  if (status != RQC_OK) {
    std::fprintf(stderr, "error: %s\n", rqc_last_error());
    return exit_code_for(status);
  }
  std::fputs(rqc_text_data(text), stdout);
  const int code = rqc_text_exit_code(text);
  rqc_text_free(text);
  return code;
}

struct Common {
  std::string format = "table";
  std::optional<std::uint64_t> enum_cap, divisor_cap, rank_cap;
  bool no_validate = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"table", "records"}));
  cmd->add_option("--enum-cap", c.enum_cap, "Largest codeword set to enumerate");
  cmd->add_option("--divisor-cap", c.divisor_cap, "Largest divisor count of x^n-1");
  cmd->add_option("--rank-cap", c.rank_cap, "Largest Gray length 3n to validate by rank");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic codes over F2+vF2+v^2F2 and their CSS quantum codes"};
  app.require_subcommand(1);

  Common common;
  unsigned n = 0;
  std::size_t n_max = 4;
  std::string f, f1, f2, f3;
  long min_K = LONG_MIN;
  std::size_t max_results = 0;
  bool equal_only = false;

  CLI::App* factor = app.add_subcommand("factor", "Factor x^n-1 over F2");
  factor->add_option("--n", n, "Length")->required();
  add_common(factor, common);

  CLI::App* inspect = app.add_subcommand("inspect", "Inspect <v f1, (1+v) f2, (1+v^2) f3>");
  inspect->add_option("--n", n, "Length")->required();
  auto* opt_f = inspect->add_option("--f", f, "Use one polynomial for f1, f2 and f3");
  inspect->add_option("--f1", f1, "Polynomial text or hex mask")->excludes(opt_f);
  inspect->add_option("--f2", f2)->excludes(opt_f);
  inspect->add_option("--f3", f3)->excludes(opt_f);
  inspect->add_flag("--no-validate", common.no_validate, "Skip the Gray-image rank check");
  add_common(inspect, common);

  CLI::App* search = app.add_subcommand("search", "Search dual-containing divisor triples");
  search->add_option("--n", n, "Length")->required();
  search->add_option("--min-K", min_K, "Drop records with smaller K");
  search->add_flag("--equal-triples-only", equal_only, "Only f1 = f2 = f3");
  search->add_option("--max-results", max_results, "Keep the first N records (0 = all)");
  search->add_flag("--no-validate", common.no_validate, "Skip the Gray-image rank check");
  add_common(search, common);

  CLI::App* reproduce =
      app.add_subcommand("reproduce-paper", "Recompute the published parameter table");
  add_common(reproduce, common);

  CLI::App* audit = app.add_subcommand("audit", "Audit structural claims on small codes");
  audit->add_option("--n-max", n_max, "Largest cyclic length audited");
  add_common(audit, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  rqc_config* cfg = nullptr;
  if (rqc_config_create(&cfg) != RQC_OK) return finish(RQC_ERR_INTERNAL, nullptr);
  rqc_config_set_format(cfg, common.format == "records" ? RQC_FORMAT_RECORDS : RQC_FORMAT_TABLE);
  if (common.enum_cap) rqc_config_set_enum_cap(cfg, *common.enum_cap);
  if (common.divisor_cap) rqc_config_set_divisor_cap(cfg, *common.divisor_cap);
  if (common.rank_cap) rqc_config_set_rank_cap(cfg, *common.rank_cap);
  rqc_config_set_validate(cfg, common.no_validate ? 0 : 1);

  rqc_text* text = nullptr;
  rqc_status status = RQC_OK;
  if (*factor) {
    status = rqc_run_factor(cfg, n, &text);
  } else if (*inspect) {
    if (!f.empty()) f1 = f2 = f3 = f;
    if (f1.empty() || f2.empty() || f3.empty()) {
      std::fprintf(stderr, "error: inspect needs --f or all of --f1, --f2, --f3\n");
      rqc_config_free(cfg);
      return 1;
    }
    status = rqc_run_inspect(cfg, n, f1.c_str(), f2.c_str(), f3.c_str(), &text);
  } else if (*search) {
    status = rqc_run_search(cfg, n, equal_only ? 1 : 0, min_K, max_results, &text);
  } else if (*reproduce) {
    status = rqc_run_reproduce(cfg, &text);
  } else {
    status = rqc_run_audit(cfg, n_max, &text);
  }
  rqc_config_free(cfg);
  return finish(status, text);
}
