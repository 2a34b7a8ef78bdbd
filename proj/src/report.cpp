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

#include "ringqc/report.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

#include "json.hpp"

namespace ringqc {

namespace {

using Json = nlohmann::ordered_json;

Json poly_json(const BinPoly& p) { return Json{{"text", format_poly(p)}, {"hex", format_hex(p)}}; }

std::string params_text(std::size_t N, long K, unsigned D) {
  return "[[" + std::to_string(N) + "," + std::to_string(K) + "," + std::to_string(D) + "]]";
}

std::string bits_text(const BitVec& w) { return w.to_string(); }

// Left-aligned columns separated by two spaces.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string render() const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      if (width.size() < row.size()) width.resize(row.size(), 0);
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream out;
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
      }
      line.erase(line.find_last_not_of(' ') + 1);
      out << line << '\n';
    }
    return out.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string render_records(const std::vector<Json>& records) {
  std::string out;
  for (const Json& r : records) out += r.dump() + '\n';
  return out;
}

// Lightest nonzero word, ties broken by word order.
std::optional<BitVec> min_weight_word(const BinaryCode& code, std::uint64_t cap) {
  if (code.dimension() == 0 || code.dimension() >= 63 ||
      (std::uint64_t{1} << code.dimension()) > cap) {
    return std::nullopt;
  }
  std::optional<BitVec> best;
  walk_span(code.basis(), code.length(), [&best](const BitVec& w) {
    if (w.none()) return true;
    if (!best || w.popcount() < best->popcount() ||
        (w.popcount() == best->popcount() && w < *best)) {
      best = w;
    }
    return true;
  });
  return best;
}

std::string code_name(const BinPoly& f1, const BinPoly& f2, const BinPoly& f3) {
  return "<v(" + format_poly(f1) + "), (1+v)(" + format_poly(f2) + "), (1+v^2)(" +
         format_poly(f3) + ")>";
}

std::string ring_word_text(const BitVec& planes, std::size_t n) {
  return to_string(RingVector::from_planes(planes, n));
}

Json record_json(const QuantumCodeRecord& rec, const char* kind) {
  Json j;
  j["kind"] = kind;
  j["n"] = rec.n;
  j["f1"] = poly_json(rec.f1);
  j["f2"] = poly_json(rec.f2);
  j["f3"] = poly_json(rec.f3);
  j["N"] = rec.N;
  j["K"] = rec.K;
  j["D"] = rec.D;
  j["d_method"] = to_string(rec.d_method);
  j["code_size_log2"] = rec.code_log2;
  j["size_method"] = "rank";
  j["K_formula"] = rec.K_formula;
  j["validated"] = rec.validated;
  if (rec.validation.ran) {
    j["dim_image"] = rec.validation.dim_image;
    j["dim_image_dual"] = rec.validation.dim_dual;
  }
  j["notes"] = rec.notes;
  return j;
}

std::string join_notes(const std::vector<std::string>& notes) {
  std::string out;
  for (const auto& s : notes) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
      return kExitUsage;
    case ErrorKind::kCapExceeded:
      return kExitCap;
    case ErrorKind::kPrecondition:
      return kExitPrecondition;
  }
  return kExitUsage;
}

// --- Reproduction -----------------------------------------------------------

const std::vector<PublishedRow>& published_rows() {
  static const std::vector<PublishedRow> rows = [] {
    auto p = [](const char* text) { return parse_poly(text); };
    return std::vector<PublishedRow>{
        {8, p("x^3+x^2+x+1"), 24, 6, 2, p("x^3+x^2+x+1"), p("x^5+x^4+x+1")},
        {8, p("x^2+1"), 24, 12, 2, p("x^2+1"), p("x^6+x^4+x^2+1")},
        {8, p("x+1"), 24, 18, 2, std::nullopt, std::nullopt},
        {7, p("x^3+x+1"), 21, 3, 3, p("x^3+x+1"), p("x^4+x^2+x+1")},
        {15, p("x^4+x+1"), 45, 21, 3, p("x^4+x+1"), std::nullopt},
        {16, p("x^3+x^2+x+1"), 48, 30, 2, p("x^3+x^2+x+1"),
         p("x^13+x^12+x^9+x^8+x^5+x^4+x+1")},
        {16, p("x^4+1"), 48, 24, 2, std::nullopt, std::nullopt},
        {21, p("x^6+x^5+x^4+x^2+1"), 63, 27, 3, p("x^4+x+1"), std::nullopt},
        {21, p("x^3+x^2+1"), 63, 45, 3, std::nullopt, std::nullopt},
    };
  }();
  return rows;
}

std::vector<ReproductionRow> reproduce_rows(const Limits& limits) {
  std::vector<ReproductionRow> out;
  for (const PublishedRow& pub : published_rows()) {
    ReproductionRow row{pub, css_from_triple(pub.n, pub.f, pub.f, pub.f, limits), 0, false, {}};
    const std::size_t n = pub.n;
    const RingCode code = build_ring_cyclic(n, pub.f, pub.f, pub.f);
    const Projections proj = projections(code);
    // Components are small enough to enumerate outright at these lengths.
    row.D_components = std::min({min_hamming(proj.c1, limits.distance_cap), min_hamming(proj.c2, limits.distance_cap),
                                 min_hamming(proj.c3, limits.distance_cap)});
    if (row.D_components != row.record.D) {
      row.notes.push_back("component enumeration gives D = " + std::to_string(row.D_components));
    }
    row.matches = row.record.N == pub.N && row.record.K == pub.K && row.record.D == pub.D;

    if (row.record.D != pub.D) {
      for (const BinaryCode* c : {&proj.c1, &proj.c2, &proj.c3}) {
        if (min_hamming(*c, limits.distance_cap) != row.record.D) continue;
        if (auto w = min_weight_word(*c, limits.distance_cap)) {
          row.notes.push_back("published D = " + std::to_string(pub.D) + ", but <" +
                              format_poly(pub.f) + "> contains " +
                              format_poly(BinPoly::from_coefficients(*w)) + " of weight " +
                              std::to_string(w->popcount()));
        }
        break;
      }
    }
    if (pub.shown_generator) {
      const BinPoly& g = *pub.shown_generator;
      if (g != pub.f) {
        row.notes.push_back("displayed generator v^2(" + format_poly(g) + ") does not match f = " +
                            format_poly(pub.f));
      }
      if (divides(g, BinPoly::xn_plus_1(static_cast<unsigned>(n)))) {
        const RingCode shown(n, {RingVector::from_poly(n, g, RingElem::v2())}, true);
        if (!same_code(shown, code)) {
          row.notes.push_back("<v^2(" + format_poly(g) + ")> has 2^" +
                              std::to_string(shown.log2_size()) + " words, C has 2^" +
                              std::to_string(code.log2_size()));
        }
      }
    }
    if (pub.shown_dual) {
      const BinPoly h = BinPoly::xn_plus_1(static_cast<unsigned>(n)) / pub.f;
      const BinPoly h_star = reciprocal(h);
      if (*pub.shown_dual != h_star) {
        row.notes.push_back("displayed dual polynomial " + format_poly(*pub.shown_dual) +
                            (*pub.shown_dual == h ? " is h" : " is neither h nor h*") +
                            "; h* = " + format_poly(h_star));
      }
      const RingCode shown(n, {RingVector::from_poly(n, *pub.shown_dual, RingElem::v2())}, true);
      const RingCode dual = dual_ring_linear(code);
      if (!same_code(shown, dual)) {
        row.notes.push_back("<v^2(" + format_poly(*pub.shown_dual) + ")> has 2^" +
                            std::to_string(shown.log2_size()) + " words, the dual has 2^" +
                            std::to_string(dual.log2_size()));
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

CommandOutput cmd_reproduce(OutputFormat format, const Limits& limits) {
  const std::vector<ReproductionRow> rows = reproduce_rows(limits);
  std::size_t matched = 0;
  for (const auto& r : rows) matched += r.matches ? 1 : 0;

  CommandOutput out;
  out.exit_code = matched == rows.size() ? kExitOk : kExitMismatch;
  if (format == OutputFormat::kRecords) {
    std::vector<Json> records;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const ReproductionRow& r = rows[i];
      Json j;
      j["kind"] = "reproduction";
      j["row"] = i + 1;
      j["n"] = r.published.n;
      j["f"] = poly_json(r.published.f);
      j["expected"] = params_text(r.published.N, r.published.K, r.published.D);
      j["computed"] = params_text(r.record.N, r.record.K, r.record.D);
      j["d_method"] = to_string(r.record.d_method);
      j["D_components"] = r.D_components;
      j["validated"] = r.record.validated;
      j["verdict"] = r.matches ? "PASS" : "FAIL";
      std::vector<std::string> notes = r.record.notes;
      notes.insert(notes.end(), r.notes.begin(), r.notes.end());
      j["notes"] = notes;
      records.push_back(std::move(j));
    }
    records.push_back(Json{{"kind", "summary"}, {"rows", rows.size()}, {"matched", matched}});
    out.text = render_records(records);
    return out;
  }
  Table table({"row", "n", "f", "expected", "computed", "d_method", "verdict"});
  std::string notes;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ReproductionRow& r = rows[i];
    table.add({std::to_string(i + 1), std::to_string(r.published.n), format_poly(r.published.f),
               params_text(r.published.N, r.published.K, r.published.D),
               params_text(r.record.N, r.record.K, r.record.D), to_string(r.record.d_method),
               r.matches ? "PASS" : "FAIL"});
    for (const auto& note : r.notes) notes += "  row " + std::to_string(i + 1) + ": " + note + '\n';
  }
  out.text = table.render();
  if (!notes.empty()) out.text += "notes:\n" + notes;
  out.text += std::to_string(matched) + "/" + std::to_string(rows.size()) + " rows match\n";
  return out;
}

// --- Audits -----------------------------------------------------------------

std::vector<CatalogCode> audit_catalog() {
  const RingElem one = RingElem::one(), v = RingElem::v(), v2 = RingElem::v2();
  auto vec = [](std::initializer_list<RingElem> xs) {
    return RingVector::from_elements(std::vector<RingElem>(xs));
  };
  std::vector<CatalogCode> out;
  auto add = [&out](std::string name, std::size_t n, std::vector<RingVector> gens) {
    out.push_back({std::move(name), RingCode(n, std::move(gens))});
  };
  add("{0}", 1, {});
  add("<1>", 1, {vec({one})});
  add("<v>", 1, {vec({v})});
  add("<1+v>", 1, {vec({one + v})});
  add("<1+v^2>", 1, {vec({one + v2})});
  add("<v+v^2>", 1, {vec({v + v2})});
  add("<(v, 0)>", 2, {vec({v, RingElem::zero()})});
  add("<(1, 1)>", 2, {vec({one, one})});
  add("<(1+v, v^2)>", 2, {vec({one + v, v2})});
  add("<(v, v+v^2)>", 2, {vec({v, v + v2})});
  add("<(1+v^2, 1+v^2, 0), (0, v, v)>", 3,
      {vec({one + v2, one + v2, RingElem::zero()}), vec({RingElem::zero(), v, v})});
  return out;
}

namespace {

void add_field(AuditRecord& r, std::string key, std::string value) {
  r.fields.emplace_back(std::move(key), std::move(value));
}

void audit_decomposition_claims(const std::string& name, const RingCodewordSet& set,
                                const Limits& limits, std::vector<AuditRecord>& out) {
  const std::size_t n = set.length();
  const DecompositionAudit a = audit_decomposition(set, limits.enum_cap);

  AuditRecord prod{name, n, "product_decomposition", a.product_matches, a.exhaustive, {}};
  add_field(prod, "code_size_log2", std::to_string(a.code_log2));
  add_field(prod, "product_size_log2", std::to_string(a.product_log2));
  add_field(prod, "image_in_product", a.image_in_product ? "true" : "false");
  if (a.product_witness) {
    add_field(prod, "witness_gray", bits_text(*a.product_witness));
    add_field(prod, "witness_preimage", to_string(gray_vec_inverse(*a.product_witness)));
    add_field(prod, "witness_in_code", "false");
  }
  out.push_back(std::move(prod));

  AuditRecord rec{name, n, "reconstruction", a.reconstruction_matches, a.exhaustive, {}};
  if (a.reconstruction_witness) {
    add_field(rec, "witness", ring_word_text(a.reconstruction_witness->word, n));
    add_field(rec, "witness_side",
              a.reconstruction_witness->in_first ? "code_only" : "reconstruction_only");
  }
  out.push_back(std::move(rec));
}

void audit_dual_claims(const std::string& name, const RingCodewordSet& set,
                       const std::optional<BruteForceDual>& brute, std::vector<AuditRecord>& out) {
  const std::size_t n = set.length();
  if (brute) {
    AuditRecord size{name, n, "dual_size_identity", brute->size_identity_holds, true, {}};
    add_field(size, "code_size", std::to_string(set.size()));
    add_field(size, "dual_size", std::to_string(brute->dual.size()));
    out.push_back(std::move(size));
  }
  // Self-orthogonal codes must have self-orthogonal Gray images.
  bool self_orth = true;
  for (std::size_t i = 0; i < set.size() && self_orth; ++i) {
    for (std::size_t j = i; j < set.size(); ++j) {
      if (!inner_product(set.at(i), set.at(j)).is_zero()) {
        self_orth = false;
        break;
      }
    }
  }
  if (self_orth) {
    const BinaryCodewordSet image = gray_image(set);
    bool ok = true;
    for (std::size_t i = 0; i < image.size() && ok; ++i) {
      for (std::size_t j = i; j < image.size(); ++j) {
        if (image.at(i).dot(image.at(j))) {
          ok = false;
          break;
        }
      }
    }
    out.push_back({name, n, "self_orthogonal_image", ok, true, {}});
  }
}

}  // namespace

std::vector<AuditRecord> run_audit(std::size_t n_max, const Limits& limits) {
  std::vector<AuditRecord> out;

  for (const CatalogCode& c : audit_catalog()) {
    const RingCodewordSet set = span_enumerate(c.code, limits.enum_cap);
    audit_decomposition_claims(c.name, set, limits, out);
    std::optional<BruteForceDual> brute;
    if (3 * c.code.length() < 63 &&
        (std::uint64_t{1} << (3 * c.code.length())) <= limits.brute_dual_cap) {
      brute = dual_ring_bruteforce(set, limits.brute_dual_cap);
    }
    audit_dual_claims(c.name, set, brute, out);
  }

  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::vector<BinPoly> divisors = enumerate_divisors(static_cast<unsigned>(n), limits);
    const std::uint64_t triples = divisors.size() * divisors.size() * divisors.size();
    if (3 * n >= 63 || (std::uint64_t{1} << (3 * n)) > limits.enum_cap) {
      throw_cap("audit at n = " + std::to_string(n) + " needs 2^" + std::to_string(3 * n) +
                " words, above the enumeration cap");
    }
    // Brute-force duals cost 8^n per triple; past the budget the exact
    // linear-algebra dual stands in and records say so.
    const bool brute_ok = (std::uint64_t{1} << (3 * n)) * triples <= limits.brute_dual_cap;
    const BinPoly xn1 = BinPoly::xn_plus_1(static_cast<unsigned>(n));

    for (const BinPoly& f1 : divisors) {
      for (const BinPoly& f2 : divisors) {
        for (const BinPoly& f3 : divisors) {
          const std::string name = code_name(f1, f2, f3);
          const RingCode code = build_ring_cyclic(n, f1, f2, f3);
          const RingCodewordSet set = span_enumerate(code, limits.enum_cap);
          audit_decomposition_claims(name, set, limits, out);

          const long formula_log2 =
              3 * static_cast<long>(n) - (f1.degree() + f2.degree() + f3.degree());
          AuditRecord size{name, n, "size_formula", false, true, {}};
          const std::uint64_t code_log2 = static_cast<std::uint64_t>(std::bit_width(set.size()) - 1);
          size.pass = static_cast<long>(code_log2) == formula_log2;
          add_field(size, "code_size_log2", std::to_string(code_log2));
          add_field(size, "formula_size_log2", std::to_string(formula_log2));
          out.push_back(std::move(size));

          AuditRecord cyc{name, n, "cyclic_closure", is_cyclic(set), true, {}};
          out.push_back(std::move(cyc));
          AuditRecord qc{name, n, "quasi_cyclic_image", is_quasicyclic3(gray_image(set)), true, {}};
          out.push_back(std::move(qc));

          // Dual: brute force when affordable, linear algebra otherwise.
          std::optional<BruteForceDual> brute;
          WordSet dual_words(3 * n);
          if (brute_ok) {
            brute = dual_ring_bruteforce(set, limits.brute_dual_cap);
            dual_words = brute->dual.words();
          } else {
            dual_words = span_enumerate(dual_ring_linear(code), limits.enum_cap).words();
          }
          const char* dual_method = brute_ok ? "bruteforce" : "linear";
          audit_dual_claims(name, set, brute, out);

          const RingCode formula = dual_ring_formula(n, f1, f2, f3);
          const RingCodewordSet formula_set = span_enumerate(formula, limits.enum_cap);
          const auto diff = first_difference(formula_set.words(), dual_words);
          AuditRecord dual{name, n, "dual_formula", !diff.has_value(), brute_ok, {}};
          add_field(dual, "dual_method", dual_method);
          add_field(dual, "formula_size", std::to_string(formula_set.size()));
          add_field(dual, "dual_size", std::to_string(dual_words.size()));
          if (diff) {
            add_field(dual, "witness", ring_word_text(diff->word, n));
            add_field(dual, "witness_side", diff->in_first ? "formula_only" : "dual_only");
          }
          out.push_back(std::move(dual));

          // Per-component polynomial criterion against actual containment.
          bool criterion = true;
          std::string failing;
          const std::array<std::pair<const BinPoly*, const char*>, 3> fs = {
              {{&f1, "f1"}, {&f2, "f2"}, {&f3, "f3"}}};
          for (const auto& [f, label] : fs) {
            if (!divides(*f * reciprocal(*f), xn1)) {
              criterion = false;
              if (failing.empty()) failing = label;
            }
          }
          std::optional<BitVec> outside;
          for (std::size_t i = 0; i < dual_words.size(); ++i) {
            BitVec w = dual_words.at(i);
            if (!set.words().contains(w)) {
              outside = std::move(w);
              break;
            }
          }
          const bool contained = !outside.has_value();
          AuditRecord crit{name, n, "dual_criterion", criterion == contained, brute_ok, {}};
          add_field(crit, "dual_method", dual_method);
          add_field(crit, "criterion", criterion ? "true" : "false");
          add_field(crit, "dual_contained", contained ? "true" : "false");
          if (!criterion) add_field(crit, "criterion_fails_at", failing);
          if (outside) add_field(crit, "dual_word_outside_code", ring_word_text(*outside, n));
          out.push_back(std::move(crit));

          if (f1 == f2 && f2 == f3 && !f1.is_zero()) {
            const RingCode single(n, {RingVector::from_poly(n, f1, RingElem::v2())}, true);
            const auto d = first_difference(single.plane_basis(), code.plane_basis());
            AuditRecord sg{name, n, "v2_generator", !d.has_value(), false, {}};
            add_field(sg, "generator_size_log2", std::to_string(single.log2_size()));
            add_field(sg, "code_size_log2", std::to_string(code.log2_size()));
            if (d) {
              add_field(sg, "witness", ring_word_text(d->word, n));
              add_field(sg, "witness_side", d->in_first ? "generator_only" : "code_only");
            }
            out.push_back(std::move(sg));
          }
        }
      }
    }
  }
  return out;
}

CommandOutput cmd_audit(std::size_t n_max, OutputFormat format, const Limits& limits) {
  const std::vector<AuditRecord> records = run_audit(n_max, limits);
  std::size_t failed = 0;
  for (const auto& r : records) failed += r.pass ? 0 : 1;

  CommandOutput out;
  if (format == OutputFormat::kRecords) {
    std::vector<Json> lines;
    for (const AuditRecord& r : records) {
      Json j;
      j["kind"] = "audit";
      j["code"] = r.code;
      j["n"] = r.n;
      j["claim"] = r.claim;
      j["verdict"] = r.pass ? "PASS" : "FAIL";
      j["exhaustive"] = r.exhaustive;
      for (const auto& [k, v] : r.fields) j[k] = v;
      lines.push_back(std::move(j));
    }
    lines.push_back(Json{{"kind", "summary"},
                         {"records", records.size()},
                         {"pass", records.size() - failed},
                         {"fail", failed}});
    out.text = render_records(lines);
    return out;
  }
  Table table({"code", "n", "claim", "verdict", "detail"});
  for (const AuditRecord& r : records) {
    std::string detail;
    for (const auto& [k, v] : r.fields) {
      if (!detail.empty()) detail += ' ';
      detail += k + "=" + v;
    }
    table.add({r.code, std::to_string(r.n), r.claim, r.pass ? "PASS" : "FAIL", detail});
  }
  out.text = table.render() + std::to_string(records.size() - failed) + " pass, " +
             std::to_string(failed) + " fail\n";
  return out;
}

// --- factor / inspect / search -------------------------------------------------

CommandOutput cmd_factor(unsigned n, OutputFormat format, const Limits& limits) {
  const Factorization fac = factor_xn1(n, limits.factor_bound);
  CommandOutput out;
  if (format == OutputFormat::kRecords) {
    Json factors = Json::array();
    for (const Factor& f : fac.factors) {
      factors.push_back(Json{{"poly", poly_json(f.poly)}, {"multiplicity", f.multiplicity}});
    }
    Json j{{"kind", "factorization"},
           {"n", n},
           {"factors", factors},
           {"divisor_count", fac.divisor_count()}};
    out.text = j.dump() + '\n';
    return out;
  }
  std::string line = "x^" + std::to_string(n) + "+1 =";
  for (const Factor& f : fac.factors) {
    line += " (" + format_poly(f.poly) + ")";
    if (f.multiplicity > 1) line += "^" + std::to_string(f.multiplicity);
  }
  Table table({"factor", "hex", "multiplicity"});
  for (const Factor& f : fac.factors) {
    table.add({format_poly(f.poly), format_hex(f.poly), std::to_string(f.multiplicity)});
  }
  out.text = line + '\n' + table.render() + "divisors: " + std::to_string(fac.divisor_count()) + '\n';
  return out;
}

CommandOutput cmd_inspect(std::size_t n, const BinPoly& f1, const BinPoly& f2,
                          const BinPoly& f3, const InspectOptions& options,
                          OutputFormat format, const Limits& limits) {
  const RingCode code = build_ring_cyclic(n, f1, f2, f3);
  const long formula_log2 = 3 * static_cast<long>(n) - (f1.degree() + f2.degree() + f3.degree());

  Json j;
  j["kind"] = "inspection";
  j["n"] = n;
  j["f1"] = poly_json(f1);
  j["f2"] = poly_json(f2);
  j["f3"] = poly_json(f3);
  j["code_size_log2"] = code.log2_size();
  j["size_method"] = "rank";
  j["size_formula_log2"] = formula_log2;

  std::vector<std::string> notes;
  if (code.log2_size() == 0) {
    j["zero_code"] = true;
    notes.push_back("zero code: no minimum distance and no quantum code");
  } else {
    const Projections proj = projections(code);
    Json comps = Json::array();
    const char* names[] = {"C1", "C2", "C3"};
    const BinaryCode* cs[] = {&proj.c1, &proj.c2, &proj.c3};
    for (int i = 0; i < 3; ++i) {
      Json c{{"name", names[i]}, {"n", n}, {"k", cs[i]->dimension()}};
      if (cs[i]->dimension() == 0) {
        c["d"] = nullptr;
      } else {
        c["d"] = min_distance(*cs[i], limits.distance_cap);
      }
      c["dual_contained"] = cs[i]->contains(dual_binary(*cs[i]));
      comps.push_back(std::move(c));
    }
    j["components"] = comps;
    const LeeDistance d = lee_distance(code, limits);
    j["d_L"] = d.value;
    j["d_method"] = to_string(d.method);
  }

  Json crit = Json::array();
  bool all_criteria = true;
  const std::array<std::pair<const BinPoly*, const char*>, 3> fs = {
      {{&f1, "f1"}, {&f2, "f2"}, {&f3, "f3"}}};
  for (const auto& [f, name] : fs) {
    const bool ok = dual_containing_poly(n, *f);
    all_criteria = all_criteria && ok;
    crit.push_back(Json{{"poly", name}, {"dual_containing", ok}});
  }
  j["poly_criterion"] = crit;
  const RingCode dual = dual_ring_linear(code);
  const bool ring_contained = std::all_of(
      dual.plane_basis().rows().begin(), dual.plane_basis().rows().end(),
      [&code](const BitVec& w) { return code.plane_basis().contains(w); });
  j["dual_contained"] = ring_contained;
  j["dual_method"] = "linear";

  const DecompositionAudit a = audit_decomposition(code);
  j["product_decomposition"] = a.product_matches ? "PASS" : "FAIL";
  j["reconstruction"] = a.reconstruction_matches ? "PASS" : "FAIL";
  j["dual_formula"] = same_code(dual_ring_formula(n, f1, f2, f3), dual) ? "PASS" : "FAIL";

  std::optional<QuantumCodeRecord> rec;
  if (code.log2_size() != 0 && all_criteria) {
    CssOptions css;
    css.validate = options.validate;
    rec = css_from_triple(n, f1, f2, f3, limits, css);
    j["quantum"] = params_text(rec->N, rec->K, rec->D);
    j["validated"] = rec->validated;
    if (rec->validation.ran) {
      j["dim_image"] = rec->validation.dim_image;
      j["dim_image_dual"] = rec->validation.dim_dual;
    }
    notes.insert(notes.end(), rec->notes.begin(), rec->notes.end());
  } else {
    j["quantum"] = nullptr;
    if (code.log2_size() != 0) notes.push_back("polynomial criterion fails: no quantum record");
  }
  j["notes"] = notes;

  CommandOutput out;
  if (format == OutputFormat::kRecords) {
    out.text = j.dump() + '\n';
    return out;
  }
  Table table({"field", "value"});
  for (const auto& [key, value] : j.items()) {
    if (key == "kind") continue;
    std::string text;
    if (value.is_string()) {
      text = value.get<std::string>();
    } else if (value.is_object() && value.contains("text")) {
      text = value["text"].get<std::string>() + " (" + value["hex"].get<std::string>() + ")";
    } else if (key == "notes") {
      text = join_notes(value.get<std::vector<std::string>>());
    } else {
      text = value.dump();
    }
    table.add({key, text});
  }
  out.text = table.render();
  return out;
}

CommandOutput cmd_search(std::size_t n, const SearchOptions& options, OutputFormat format,
                         const Limits& limits) {
  const SearchResult result = search_triples(n, options, limits);
  CommandOutput out;
  if (format == OutputFormat::kRecords) {
    std::vector<Json> lines;
    for (const auto& rec : result.records) lines.push_back(record_json(rec, "search_result"));
    lines.push_back(Json{{"kind", "summary"},
                         {"scanned", result.scanned},
                         {"admissible", result.admissible},
                         {"emitted", result.emitted}});
    out.text = render_records(lines);
    return out;
  }
  Table table({"f1", "f2", "f3", "params", "d_method", "validated", "notes"});
  for (const auto& rec : result.records) {
    table.add({format_poly(rec.f1), format_poly(rec.f2), format_poly(rec.f3),
               params_text(rec.N, rec.K, rec.D), to_string(rec.d_method),
               rec.validated ? "yes" : "no", join_notes(rec.notes)});
  }
  out.text = table.render() + "scanned " + std::to_string(result.scanned) + ", admissible " +
             std::to_string(result.admissible) + ", emitted " + std::to_string(result.emitted) +
             '\n';
  return out;
}

}  // namespace ringqc
