// Copyright 2026 The hexavoid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hexavoid/cli/commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hexavoid/cli/report.hpp"
#include "hexavoid/cli/verify.hpp"
#include "hexavoid/errors.hpp"
#include "hexavoid/label_dp.hpp"
#include "hexavoid/oracle.hpp"
#include "hexavoid/recurrences.hpp"
#include "hexavoid/spectral.hpp"
#include "hexavoid/tree_checks.hpp"

namespace hexavoid::cli {

namespace {

constexpr int kClosedFormMax = 40;
constexpr int kOracleDefaultMax = 14;
constexpr double kPublishedTolerance = 1e-5;

struct CommonOptions {
  std::string family = "hex8";
  std::string format = "text";
  std::uint64_t budget_nodes = 0;
  int jobs = 1;
};

// A usage problem found after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FamilyName family_of(const CommonOptions& common) {
  return *parse_family(common.family);
}

OracleOptions oracle_options(const CommonOptions& common) {
  OracleOptions o;
  o.jobs = common.jobs;
  if (common.budget_nodes > 0) {
    o.budget_nodes = common.budget_nodes;
    o.max_n = std::numeric_limits<int>::max();
  } else {
    o.max_n = kOracleDefaultMax;
  }
  return o;
}

BigInt count_by(const std::string& method, FamilyName f, int n,
                const CommonOptions& common) {
  if (method == "oracle") {
    Oracle oracle(f, oracle_options(common));
    return oracle.level(n).members.size();
  }
  if (method == "dp") return distribution_at(n, f).total();
  if (method == "recurrence") return alpha_via_recurrence(n, recurrence_for(f));
  if (n > kClosedFormMax) {
    throw BudgetExceeded("closed form is limited to n <= " +
                             std::to_string(kClosedFormMax),
                         0);
  }
  return eval_rounded(solve_model(f), n);
}

RunReport base_report(std::string command, const CommonOptions& common) {
  RunReport r;
  r.command = std::move(command);
  r.family = common.family;
  return r;
}

int finish(const RunReport& report) {
  return report.all_pass() ? kExitOk : kExitCheckFailed;
}

// count ---------------------------------------------------------------------

int cmd_count(const CommonOptions& common, int n, const std::string& method,
              bool all_methods, std::ostream& out) {
  const FamilyName f = family_of(common);
  RunReport report = base_report("count", common);
  report.parameters = {{"n", std::to_string(n)},
                       {"method", all_methods ? "all" : method}};

  if (!all_methods) {
    const BigInt value = count_by(method, f, n, common);
    report.results["count"] = to_decimal(value);
    if (common.format == "json") {
      out << render_json(report);
    } else {
      out << to_decimal(value) << "\n";
    }
    return kExitOk;
  }

  std::vector<std::pair<std::string, BigInt>> values;
  nlohmann::ordered_json skipped = nlohmann::ordered_json::object();
  for (const char* m : {"oracle", "dp", "recurrence", "closedform"}) {
    try {
      values.emplace_back(m, count_by(m, f, n, common));
    } catch (const BudgetExceeded& e) {
      skipped[m] = e.what();
    } catch (const DegenerateSpectrum& e) {
      skipped[m] = e.what();
    } catch (const PrecisionExhausted& e) {
      skipped[m] = e.what();
    }
  }
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  bool agree = true;
  for (const auto& [m, v] : values) {
    counts[m] = to_decimal(v);
    agree = agree && v == values.front().second;
  }
  report.results["counts"] = counts;
  if (!skipped.empty()) report.results["skipped"] = skipped;
  std::string details = std::to_string(values.size()) + " methods";
  if (!values.empty()) details += ", count " + to_decimal(values.front().second);
  report.add_check("methods-agree", agree && !values.empty(), details);

  if (common.format == "json") {
    out << render_json(report);
  } else {
    for (const auto& [m, v] : values) out << m << ": " << to_decimal(v) << "\n";
    for (const auto& [m, why] : skipped.items()) {
      out << m << ": skipped (" << why.get<std::string>() << ")\n";
    }
    for (const Check& c : report.checks) out << check_line(c) << "\n";
  }
  return finish(report);
}

// table ---------------------------------------------------------------------

std::vector<std::vector<std::string>> table_rows(const SequenceTable& t,
                                                 int n_max) {
  std::vector<std::vector<std::string>> rows;
  for (Sequence s : kAllSequences) {
    std::vector<std::string> row;
    for (int n = 1; n <= n_max; ++n) row.push_back(to_decimal(t.at(s, n)));
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_table(const CommonOptions& common, int n_max, const std::string& method,
              std::ostream& out) {
  if (family_of(common) != FamilyName::kHex8) {
    throw UsageError("the five-sequence table is defined for hex8 only");
  }
  SequenceTable table;
  if (method == "oracle") {
    Oracle oracle(FamilyName::kHex8, oracle_options(common));
    table = table_from_oracle(oracle, n_max);
  } else {
    table = five_sequences(std::max(n_max, 6));
  }
  const auto rows = table_rows(table, n_max);

  std::vector<Check> checks;
  const int published = std::min(n_max, 12);
  std::string first_bad;
  for (Sequence s : kAllSequences) {
    for (int n = 1; n <= published && first_bad.empty(); ++n) {
      if (table.at(s, n) != published_hex8_table()[static_cast<int>(s)][n - 1]) {
        first_bad = std::string(sequence_name(s)) + "_" + std::to_string(n);
      }
    }
  }
  checks.push_back({"published-table", first_bad.empty(),
                    first_bad.empty()
                        ? "n=1.." + std::to_string(published) + " cell-identical"
                        : "cell " + first_bad + " differs"});

  if (common.format == "json") {
    nlohmann::ordered_json j;
    j["family"] = common.family;
    j["n_max"] = n_max;
    j["sequences"] = nlohmann::ordered_json::object();
    for (Sequence s : kAllSequences) {
      j["sequences"][std::string(sequence_name(s))] = rows[static_cast<int>(s)];
    }
    j["checks"] = checks_json(checks);
    out << j.dump(2) << "\n";
  } else if (common.format == "csv") {
    out << "sequence";
    for (int n = 1; n <= n_max; ++n) out << ",n" << n;
    out << "\n";
    for (Sequence s : kAllSequences) {
      out << sequence_name(s);
      for (const std::string& v : rows[static_cast<int>(s)]) out << "," << v;
      out << "\n";
    }
    for (const Check& c : checks) {
      out << "check," << csv_field(c.name) << "," << (c.pass ? "pass" : "fail")
          << "," << csv_field(c.details) << "\n";
    }
  } else {
    std::vector<std::size_t> width(n_max + 1, 0);
    width[0] = std::string("epsilon").size();
    for (int n = 1; n <= n_max; ++n) {
      width[n] = std::to_string(n).size();
      for (const auto& row : rows) width[n] = std::max(width[n], row[n - 1].size());
    }
    const auto cell = [&](const std::string& v, std::size_t w, bool left) {
      const std::string pad(w - v.size(), ' ');
      out << (left ? v + pad : pad + v);
    };
    cell("n", width[0], true);
    for (int n = 1; n <= n_max; ++n) {
      out << " ";
      cell(std::to_string(n), width[n], false);
    }
    out << "\n";
    for (Sequence s : kAllSequences) {
      cell(std::string(sequence_name(s)), width[0], true);
      for (int n = 1; n <= n_max; ++n) {
        out << " ";
        cell(rows[static_cast<int>(s)][n - 1], width[n], false);
      }
      out << "\n";
    }
    for (const Check& c : checks) out << check_line(c) << "\n";
  }
  RunReport report;
  report.checks = checks;
  return finish(report);
}

// verify --------------------------------------------------------------------

int cmd_verify(const CommonOptions& common, const std::string& level,
               std::ostream& out) {
  VerifyOptions options;
  options.level = level == "full" ? VerifyLevel::kFull : VerifyLevel::kFast;
  options.jobs = common.jobs;
  RunReport report = base_report("verify", common);
  report.family = "all";
  report.parameters = {{"level", level}};
  report.checks = run_verification(options);

  std::size_t failed = 0;
  for (const Check& c : report.checks) failed += c.pass ? 0 : 1;
  report.results["checks_run"] = report.checks.size();
  report.results["checks_failed"] = failed;

  if (common.format == "json") {
    out << render_json(report);
  } else {
    for (const Check& c : report.checks) out << check_line(c) << "\n";
    out << report.checks.size() << " checks, " << failed << " failed\n";
  }
  return finish(report);
}

// roots ---------------------------------------------------------------------

std::string fixed5(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5f", v + 0.0);
  if (std::string(buf) == "-0.00000") return "0.00000";
  return buf;
}

std::string fixed5(const std::complex<double>& z, bool complex_form) {
  if (!complex_form) return fixed5(z.real());
  std::string im = fixed5(z.imag());
  if (im[0] != '-') im = "+" + im;
  return fixed5(z.real()) + im + "i";
}

std::complex<double> to_double(const Complex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", v);
  return buf;
}

int cmd_roots(const CommonOptions& common, std::ostream& out) {
  const FamilyName f = family_of(common);
  const SpectralModel model = solve_model(f);
  const PublishedSpectrum printed = published_spectrum(f);

  RunReport report = base_report("roots", common);
  report.results["polynomial"] = polynomial_text(model.char_coeffs);
  nlohmann::ordered_json roots = nlohmann::ordered_json::array();
  double root_delta = 0;
  double coeff_delta = 0;
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < model.roots.size(); ++i) {
    const auto r = to_double(model.roots[i]);
    const auto c = to_double(model.coeffs[i]);
    const bool pair = model.is_pair(i);
    const auto dr = r - printed.roots[i];
    const auto dc = c - printed.coeffs[i];
    root_delta = std::max({root_delta, std::abs(dr.real()), std::abs(dr.imag())});
    coeff_delta = std::max({coeff_delta, std::abs(dc.real()), std::abs(dc.imag())});
    const std::string idx = std::to_string(i + 1);
    lines.push_back("R" + idx + " ≈ " + fixed5(r, pair) + "  c" + idx + " ≈ " +
                    fixed5(c, pair));
    roots.push_back({{"index", i + 1},
                     {"root", fixed5(r, pair)},
                     {"coeff", fixed5(c, pair)},
                     {"printed_root", fixed5(printed.roots[i], pair)},
                     {"printed_coeff", fixed5(printed.coeffs[i], pair)},
                     {"root_delta", std::max(std::abs(dr.real()), std::abs(dr.imag()))},
                     {"coeff_delta", std::max(std::abs(dc.real()), std::abs(dc.imag()))}});
    if (pair) {
      const std::string next = std::to_string(model.roots.size() + 1);
      lines.push_back("R" + next + " = conj(R" + idx + ")  c" + next +
                      " = conj(c" + idx + ")");
    }
  }
  report.results["roots"] = roots;
  report.results["residual_bound"] = sci(model.residual_bound);
  report.results["conjugate_mismatch"] = sci(model.conjugate_mismatch);

  report.add_check("residual", model.residual_bound <= 1e-12,
                   "max |p(R)| = " + sci(model.residual_bound));
  report.add_check("printed-roots", root_delta <= kPublishedTolerance,
                   "max delta " + sci(root_delta));
  report.add_check("printed-coefficients", coeff_delta <= kPublishedTolerance,
                   "max delta " + sci(coeff_delta));

  if (common.format == "json") {
    out << render_json(report);
  } else {
    out << "p(x) = " << polynomial_text(model.char_coeffs) << "\n";
    for (const std::string& l : lines) out << l << "\n";
    out << "max |p(R)| = " << sci(model.residual_bound) << "\n";
    for (std::size_t i = 0; i < model.roots.size(); ++i) {
      const auto dr = to_double(model.roots[i]) - printed.roots[i];
      const auto dc = to_double(model.coeffs[i]) - printed.coeffs[i];
      out << "delta R" << i + 1 << " = " << sci(std::abs(dr)) << "  delta c"
          << i + 1 << " = " << sci(std::abs(dc)) << "\n";
    }
    for (const Check& c : report.checks) out << check_line(c) << "\n";
  }
  return finish(report);
}

void add_common(CLI::App* sub, CommonOptions& common,
                const std::vector<std::string>& formats, bool with_family) {
  if (with_family) {
    sub->add_option("--family", common.family, "Pattern family")
        ->check(CLI::IsMember({"hex8", "hex6", "hex4"}))
        ->capture_default_str();
  }
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  sub->add_option("--budget-nodes", common.budget_nodes,
                  "Cap on stored oracle nodes (0 = levels up to 14)");
  sub->add_option("--jobs", common.jobs, "Worker threads for the oracle")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app("Enumerate 321-hexagon-avoiding permutations and their analogues",
               "hexavoid");
  app.require_subcommand(1);

  CommonOptions common;
  int n = 0;
  int n_max = 12;
  std::string method = "dp";
  std::string table_method = "recurrence";
  std::string level = "fast";
  bool all_methods = false;

  CLI::App* count = app.add_subcommand("count", "Count family members of length n");
  add_common(count, common, {"text", "json"}, true);
  count->add_option("--n", n, "Length")->required()->check(CLI::Range(1, 5000));
  count->add_option("--method", method, "Counting method")
      ->check(CLI::IsMember({"oracle", "dp", "recurrence", "closedform"}))
      ->capture_default_str();
  count->add_flag("--all-methods", all_methods, "Run every feasible method");

  CLI::App* table = app.add_subcommand("table", "Five-sequence table for hex8");
  CommonOptions table_common;
  table_common.format = "csv";
  add_common(table, table_common, {"csv", "json", "text"}, true);
  table->add_option("--n,--n-max", n_max, "Largest n")
      ->check(CLI::Range(1, 5000))
      ->capture_default_str();
  table->add_option("--method", table_method, "Source of the table")
      ->check(CLI::IsMember({"recurrence", "oracle"}))
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "Cross-method verification");
  add_common(verify, common, {"text", "json"}, false);
  verify->add_option("--level", level, "fast (oracle n<=9) or full (n<=12)")
      ->check(CLI::IsMember({"fast", "full"}))
      ->capture_default_str();

  CLI::App* roots = app.add_subcommand("roots", "Characteristic roots and coefficients");
  add_common(roots, common, {"text", "json"}, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) return cmd_count(common, n, method, all_methods, out);
    if (*table) return cmd_table(table_common, n_max, table_method, out);
    if (*verify) return cmd_verify(common, level, out);
    if (*roots) return cmd_roots(common, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegenerateSpectrum& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const PrecisionExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  }
  return kExitUsage;
}

}  // namespace hexavoid::cli
