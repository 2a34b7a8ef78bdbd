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

#include "ringqc/ringqc.h"

#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "ringqc/error.hpp"
#include "ringqc/gf2poly.hpp"
#include "ringqc/quantum.hpp"
#include "ringqc/report.hpp"

struct rqc_config {
  ringqc::Limits limits;
  ringqc::OutputFormat format = ringqc::OutputFormat::kTable;
  bool validate = true;
};

struct rqc_poly {
  ringqc::BinPoly poly;
  std::string text;
  std::string hex;

  explicit rqc_poly(ringqc::BinPoly p)
      : poly(std::move(p)), text(ringqc::format_poly(poly)), hex(ringqc::format_hex(poly)) {}
};

struct rqc_factorization {
  std::vector<rqc_poly> factors;
  std::vector<unsigned> multiplicities;
};

struct rqc_record {
  ringqc::QuantumCodeRecord rec;
  std::string d_method;
};

struct rqc_record_list {
  std::vector<rqc_record> records;
};

struct rqc_text {
  std::string data;
  int exit_code = 0;
};

namespace {

thread_local std::string g_last_error;

rqc_status fail(rqc_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body and maps exceptions onto status codes.
template <class Body>
rqc_status guarded(Body&& body) {
  g_last_error.clear();
  try {
    body();
    return RQC_OK;
  } catch (const ringqc::Error& e) {
    switch (e.kind()) {
      case ringqc::ErrorKind::kParse:
        return fail(RQC_ERR_PARSE, e.what());
      case ringqc::ErrorKind::kCapExceeded:
        return fail(RQC_ERR_CAP, e.what());
      case ringqc::ErrorKind::kPrecondition:
        return fail(RQC_ERR_PRECONDITION, e.what());
    }
    return fail(RQC_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RQC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RQC_ERR_INTERNAL, e.what());
  }
}

const rqc_config& config_or_default(const rqc_config* cfg) {
  static const rqc_config kDefault;
  return cfg ? *cfg : kDefault;
}

rqc_record make_record(ringqc::QuantumCodeRecord rec) {
  std::string method = ringqc::to_string(rec.d_method);
  return rqc_record{std::move(rec), std::move(method)};
}

void emit_text(ringqc::CommandOutput out, rqc_text** dest) {
  *dest = new rqc_text{std::move(out.text), out.exit_code};
}

}  // namespace

extern "C" {

const char* rqc_last_error(void) { return g_last_error.c_str(); }

const char* rqc_version(void) { return "0.1.0"; }

rqc_status rqc_config_create(rqc_config** out) {
  if (!out) return fail(RQC_ERR_ARGUMENT, "out is NULL");
  return guarded([&] { *out = new rqc_config(); });
}

void rqc_config_free(rqc_config* cfg) { delete cfg; }

rqc_status rqc_config_set_format(rqc_config* cfg, rqc_format format) {
  if (!cfg) return fail(RQC_ERR_ARGUMENT, "config is NULL");
  if (format != RQC_FORMAT_TABLE && format != RQC_FORMAT_RECORDS) {
    return fail(RQC_ERR_ARGUMENT, "unknown format");
  }
  cfg->format =
      format == RQC_FORMAT_RECORDS ? ringqc::OutputFormat::kRecords : ringqc::OutputFormat::kTable;
  return RQC_OK;
}

rqc_status rqc_config_set_enum_cap(rqc_config* cfg, uint64_t cap) {
  if (!cfg) return fail(RQC_ERR_ARGUMENT, "config is NULL");
  cfg->limits.enum_cap = cap;
  return RQC_OK;
}

rqc_status rqc_config_set_divisor_cap(rqc_config* cfg, uint64_t cap) {
  if (!cfg) return fail(RQC_ERR_ARGUMENT, "config is NULL");
  cfg->limits.divisor_cap = cap;
  return RQC_OK;
}

rqc_status rqc_config_set_rank_cap(rqc_config* cfg, uint64_t cap) {
  if (!cfg) return fail(RQC_ERR_ARGUMENT, "config is NULL");
  cfg->limits.rank_cap = static_cast<std::size_t>(cap);
  return RQC_OK;
}

rqc_status rqc_config_set_validate(rqc_config* cfg, int validate) {
  if (!cfg) return fail(RQC_ERR_ARGUMENT, "config is NULL");
  cfg->validate = validate != 0;
  return RQC_OK;
}

rqc_status rqc_poly_parse(const char* text, rqc_poly** out) {
  if (!text || !out) return fail(RQC_ERR_ARGUMENT, "NULL argument");
  return guarded([&] { *out = new rqc_poly(ringqc::parse_poly(text)); });
}

void rqc_poly_free(rqc_poly* p) { delete p; }

rqc_status rqc_poly_degree(const rqc_poly* p, int* out) {
  if (!p || !out) return fail(RQC_ERR_ARGUMENT, "NULL argument");
  *out = p->poly.is_zero() ? -1 : p->poly.degree();
  return RQC_OK;
}

const char* rqc_poly_text(const rqc_poly* p) { return p ? p->text.c_str() : nullptr; }

const char* rqc_poly_hex(const rqc_poly* p) { return p ? p->hex.c_str() : nullptr; }

rqc_status rqc_factor(const rqc_config* cfg, unsigned n, rqc_factorization** out) {
  if (!out) return fail(RQC_ERR_ARGUMENT, "out is NULL");
  return guarded([&] {
    const auto fac = ringqc::factor_xn1(n, config_or_default(cfg).limits.factor_bound);
    auto result = std::make_unique<rqc_factorization>();
    for (const auto& f : fac.factors) {
      result->factors.emplace_back(f.poly);
      result->multiplicities.push_back(f.multiplicity);
    }
    *out = result.release();
  });
}

void rqc_factorization_free(rqc_factorization* f) { delete f; }

size_t rqc_factorization_count(const rqc_factorization* f) { return f ? f->factors.size() : 0; }

rqc_status rqc_factorization_at(const rqc_factorization* f, size_t i, const rqc_poly** factor,
                                unsigned* multiplicity) {
  if (!f || !factor || !multiplicity) return fail(RQC_ERR_ARGUMENT, "NULL argument");
  if (i >= f->factors.size()) return fail(RQC_ERR_ARGUMENT, "factor index out of range");
  *factor = &f->factors[i];
  *multiplicity = f->multiplicities[i];
  return RQC_OK;
}

rqc_status rqc_css_from_triple(const rqc_config* cfg, size_t n, const rqc_poly* f1,
                               const rqc_poly* f2, const rqc_poly* f3, rqc_record** out) {
  if (!f1 || !f2 || !f3 || !out) return fail(RQC_ERR_ARGUMENT, "NULL argument");
  return guarded([&] {
    const rqc_config& c = config_or_default(cfg);
    ringqc::CssOptions options;
    options.validate = c.validate;
    *out = new rqc_record(
        make_record(ringqc::css_from_triple(n, f1->poly, f2->poly, f3->poly, c.limits, options)));
  });
}

void rqc_record_free(rqc_record* r) { delete r; }

rqc_status rqc_record_params(const rqc_record* r, size_t* N, long* K, unsigned* D) {
  if (!r || !N || !K || !D) return fail(RQC_ERR_ARGUMENT, "NULL argument");
  *N = r->rec.N;
  *K = r->rec.K;
  *D = r->rec.D;
  return RQC_OK;
}

int rqc_record_validated(const rqc_record* r) { return r && r->rec.validated ? 1 : 0; }

const char* rqc_record_d_method(const rqc_record* r) { return r ? r->d_method.c_str() : nullptr; }

size_t rqc_record_note_count(const rqc_record* r) { return r ? r->rec.notes.size() : 0; }

const char* rqc_record_note(const rqc_record* r, size_t i) {
  if (!r || i >= r->rec.notes.size()) return nullptr;
  return r->rec.notes[i].c_str();
}

rqc_status rqc_search(const rqc_config* cfg, size_t n, int equal_only, long min_K,
                      size_t max_results, rqc_record_list** out) {
  if (!out) return fail(RQC_ERR_ARGUMENT, "out is NULL");
  return guarded([&] {
    const rqc_config& c = config_or_default(cfg);
    ringqc::SearchOptions options;
    options.equal_only = equal_only != 0;
    options.min_K = min_K;
    options.max_results = max_results;
    options.validate = c.validate;
    auto result = ringqc::search_triples(n, options, c.limits);
    auto list = std::make_unique<rqc_record_list>();
    for (auto& rec : result.records) list->records.push_back(make_record(std::move(rec)));
    *out = list.release();
  });
}

void rqc_record_list_free(rqc_record_list* list) { delete list; }

size_t rqc_record_list_count(const rqc_record_list* list) {
  return list ? list->records.size() : 0;
}

const rqc_record* rqc_record_list_at(const rqc_record_list* list, size_t i) {
  if (!list || i >= list->records.size()) return nullptr;
  return &list->records[i];
}

void rqc_text_free(rqc_text* t) { delete t; }

const char* rqc_text_data(const rqc_text* t) { return t ? t->data.c_str() : nullptr; }

int rqc_text_exit_code(const rqc_text* t) { return t ? t->exit_code : -1; }

rqc_status rqc_run_factor(const rqc_config* cfg, unsigned n, rqc_text** out) {
  if (!out) return fail(RQC_ERR_ARGUMENT, "out is NULL");
  return guarded([&] {
    const rqc_config& c = config_or_default(cfg);
    emit_text(ringqc::cmd_factor(n, c.format, c.limits), out);
  });
}

rqc_status rqc_run_inspect(const rqc_config* cfg, size_t n, const char* f1, const char* f2,
                           const char* f3, rqc_text** out) {
  if (!f1 || !f2 || !f3 || !out) return fail(RQC_ERR_ARGUMENT, "NULL argument");
  return guarded([&] {
    const rqc_config& c = config_or_default(cfg);
    ringqc::InspectOptions options;
    options.validate = c.validate;
    emit_text(ringqc::cmd_inspect(n, ringqc::parse_poly(f1), ringqc::parse_poly(f2),
                                  ringqc::parse_poly(f3), options, c.format, c.limits),
              out);
  });
}

rqc_status rqc_run_search(const rqc_config* cfg, size_t n, int equal_only, long min_K,
                          size_t max_results, rqc_text** out) {
  if (!out) return fail(RQC_ERR_ARGUMENT, "out is NULL");
  return guarded([&] {
    const rqc_config& c = config_or_default(cfg);
    ringqc::SearchOptions options;
    options.equal_only = equal_only != 0;
    options.min_K = min_K;
    options.max_results = max_results;
    options.validate = c.validate;
    emit_text(ringqc::cmd_search(n, options, c.format, c.limits), out);
  });
}

rqc_status rqc_run_reproduce(const rqc_config* cfg, rqc_text** out) {
  if (!out) return fail(RQC_ERR_ARGUMENT, "out is NULL");
  return guarded([&] {
    const rqc_config& c = config_or_default(cfg);
    emit_text(ringqc::cmd_reproduce(c.format, c.limits), out);
  });
}

rqc_status rqc_run_audit(const rqc_config* cfg, size_t n_max, rqc_text** out) {
  if (!out) return fail(RQC_ERR_ARGUMENT, "out is NULL");
  return guarded([&] {
    const rqc_config& c = config_or_default(cfg);
    emit_text(ringqc::cmd_audit(n_max, c.format, c.limits), out);
  });
}

}  // extern "C"
