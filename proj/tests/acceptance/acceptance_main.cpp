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

// End-to-end acceptance run: one PASS/FAIL line per criterion, exit status
// 0 iff every criterion passes.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hexavoid/errors.hpp"
#include "hexavoid/label_dp.hpp"
#include "hexavoid/oracle.hpp"
#include "hexavoid/recurrences.hpp"
#include "hexavoid/spectral.hpp"
#include "hexavoid/tree_checks.hpp"

namespace {

using namespace hexavoid;

constexpr int kTableOracleMax = 10;
constexpr int kTableMax = 12;
constexpr int kFourWayOracleMax = 12;
constexpr int kSpectralMax = 40;
constexpr int kConformanceMax = 9;
constexpr std::uint64_t kConformanceNodes = 6857;
constexpr int kDeletionMax = 10;
constexpr int kEpsilonMax = 10;
constexpr double kPrintedTolerance = 1e-5;
constexpr double kResidualTolerance = 1e-12;
constexpr int kHex6OracleMax = 10;
constexpr int kHex4OracleMax = 10;
constexpr int kHex4RecurrenceMax = 60;
constexpr int kGrowthN = 40;
constexpr double kGrowthTarget = 3.43526;
constexpr double kGrowthTolerance = 1e-3;
constexpr double kCatalanFloor = 3.9;

const std::vector<std::vector<int>> kPrintedTable{
    {1, 2, 5, 14, 42, 132, 429, 1426, 4806, 16329, 55740, 190787},
    {0, 0, 1, 4, 14, 48, 165, 568, 1954, 6717, 23082, 79307},
    {0, 0, 0, 1, 5, 20, 75, 271, 957, 3337, 11559, 39896},
    {0, 0, 0, 0, 1, 6, 25, 93, 333, 1172, 4083, 14137},
    {0, 0, 0, 0, 0, 1, 5, 19, 68, 240, 839, 2911}};

const std::vector<int> kHex6Values{1,    2,     5,     14,    42,   128,
                                   389,  1179,  3572,  10825, 32810, 99446};

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

std::string num(double v, const char* fmt = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::complex<double> d(const Complex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

Oracle& hex8_oracle() {
  static Oracle oracle(FamilyName::kHex8);
  return oracle;
}

Outcome table_reproduction() {
  Outcome o;
  const SequenceTable from_tree = table_from_oracle(hex8_oracle(), kTableOracleMax);
  const SequenceTable from_rec = five_sequences(kTableMax);
  for (Sequence s : kAllSequences) {
    const auto& row = kPrintedTable[static_cast<int>(s)];
    for (int n = 1; n <= kTableMax; ++n) {
      const std::string cell = std::string(sequence_name(s)) + "_" + std::to_string(n);
      o.require(from_rec.at(s, n) == row[n - 1], "recurrence " + cell);
      if (n <= kTableOracleMax) {
        o.require(from_tree.at(s, n) == row[n - 1], "oracle " + cell);
      }
    }
  }
  o.notes.push_back("oracle n<=10, recurrence n<=12");
  return o;
}

Outcome four_way_agreement() {
  Outcome o;
  const auto rec = alpha_sequence(kSpectralMax, recurrence_for(FamilyName::kHex8));
  const auto dp = totals_through(kSpectralMax, FamilyName::kHex8);
  const SpectralModel model = solve_model(FamilyName::kHex8);
  for (int n = 1; n <= kSpectralMax; ++n) {
    const std::string at = " at n=" + std::to_string(n);
    o.require(dp[n - 1] == rec[n - 1], "dp vs recurrence" + at);
    try {
      o.require(eval_rounded(model, n) == rec[n - 1], "closed form" + at);
    } catch (const PrecisionExhausted& e) {
      o.require(false, e.what());
    }
    if (n <= kFourWayOracleMax) {
      o.require(hex8_oracle().level(n).members.size() == rec[n - 1], "oracle" + at);
    }
  }
  o.notes.push_back("alpha_40 = " + to_decimal(rec.back()));
  return o;
}

Outcome succession_conformance() {
  Outcome o;
  const SuccessionRule rule(FamilyName::kHex8);
  std::uint64_t examined = 0, violations = 0;
  for (int n = 1; n <= kConformanceMax; ++n) {
    const PropertyResult r = check_succession_conformance(hex8_oracle().level(n), rule);
    examined += r.examined;
    violations += r.violations;
    if (!r.ok()) o.require(false, r.first_violation);
  }
  o.require(examined == kConformanceNodes,
            "examined " + std::to_string(examined) + " nodes");
  o.notes.push_back(std::to_string(examined) + " nodes, " +
                    std::to_string(violations) + " violations");
  return o;
}

Outcome deletion_lemma() {
  Outcome o;
  Oracle& oracle = hex8_oracle();
  std::uint64_t labels = 0;
  for (int n = 1; n <= kDeletionMax; ++n) {
    for (const auto& [label, count] : oracle.level(n).label_histogram) {
      ++labels;
      const int target_n = n - label.k;
      std::uint64_t target = 0;
      if (label.x > label.k) {
        const auto& hist = oracle.level(target_n).label_histogram;
        const auto it = hist.find(Label{label.x - label.k, 0, 0, 0});
        target = it == hist.end() ? 0 : it->second;
      } else {
        target = target_n == 0 ? 1 : count_ending_in_max(oracle.level(target_n));
      }
      o.require(count == target, "h_" + std::to_string(n) + label.to_string());
    }
    const PropertyResult r = check_deletion_lemma(oracle, n);
    if (!r.ok()) o.require(false, r.first_violation);
  }
  o.notes.push_back(std::to_string(labels) + " labels, d_K injective per class");
  return o;
}

Outcome epsilon_independence() {
  Outcome o;
  const SequenceTable x4 = table_from_oracle(hex8_oracle(), kEpsilonMax, 4);
  const SequenceTable x5 = table_from_oracle(hex8_oracle(), kEpsilonMax, 5);
  for (int n = 1; n <= kEpsilonMax; ++n) {
    o.require(x4.at(Sequence::kEpsilon, n) == x5.at(Sequence::kEpsilon, n),
              "epsilon_" + std::to_string(n));
  }
  o.notes.push_back("xbar=4 vs 5, n<=10");
  return o;
}

// Printed roots and coefficients, residual, rounded form on 1..40.
void check_spectrum(FamilyName f, Outcome& o) {
  const SpectralModel model = solve_model(f);
  const PublishedSpectrum printed = published_spectrum(f);
  double worst_root = 0, worst_coeff = 0;
  for (std::size_t i = 0; i < model.roots.size(); ++i) {
    const auto dr = d(model.roots[i]) - printed.roots[i];
    const auto dc = d(model.coeffs[i]) - printed.coeffs[i];
    const double er = std::max(std::abs(dr.real()), std::abs(dr.imag()));
    const double ec = std::max(std::abs(dc.real()), std::abs(dc.imag()));
    worst_root = std::max(worst_root, er);
    worst_coeff = std::max(worst_coeff, ec);
    const std::string idx = std::to_string(i + 1);
    o.require(er <= kPrintedTolerance, "R" + idx + " off by " + num(er));
    o.require(ec <= kPrintedTolerance, "c" + idx + " off by " + num(ec) +
                                           " (computed " + num(d(model.coeffs[i]).real()) +
                                           (model.is_pair(i) ? num(d(model.coeffs[i]).imag(), "%+.6gi") : "") +
                                           ")");
  }
  o.require(model.residual_bound <= kResidualTolerance,
            "residual " + num(model.residual_bound));
  const auto rec = alpha_sequence(kSpectralMax, recurrence_for(f));
  for (int n = 1; n <= kSpectralMax; ++n) {
    try {
      o.require(eval_rounded(model, n) == rec[n - 1],
                "rounded form wrong at n=" + std::to_string(n));
    } catch (const PrecisionExhausted& e) {
      o.require(false, e.what());
    }
  }
  o.notes.push_back("max root delta " + num(worst_root, "%.1e") +
                    ", max coefficient delta " + num(worst_coeff, "%.1e") +
                    ", residual " + num(model.residual_bound, "%.1e"));
}

Outcome spectral_hex8() {
  Outcome o;
  check_spectrum(FamilyName::kHex8, o);
  return o;
}

Outcome hex6() {
  Outcome o;
  Oracle oracle(FamilyName::kHex6);
  const auto rec = alpha_sequence(kTableMax, recurrence_for(FamilyName::kHex6));
  for (int n = 1; n <= kTableMax; ++n) {
    o.require(rec[n - 1] == kHex6Values[n - 1], "recurrence n=" + std::to_string(n));
    if (n <= kHex6OracleMax) {
      o.require(oracle.level(n).members.size() ==
                    static_cast<std::size_t>(kHex6Values[n - 1]),
                "oracle n=" + std::to_string(n));
    }
  }
  check_spectrum(FamilyName::kHex6, o);
  return o;
}

Outcome hex4() {
  Outcome o;
  Oracle oracle(FamilyName::kHex4);
  for (int n = 1; n <= kHex4OracleMax; ++n) {
    o.require(oracle.level(n).members.size() ==
                  static_cast<std::size_t>((n - 1) * (n - 1) + 1),
              "oracle n=" + std::to_string(n));
  }
  const auto rec = alpha_sequence(kHex4RecurrenceMax, recurrence_for(FamilyName::kHex4));
  for (int n = 1; n <= kHex4RecurrenceMax; ++n) {
    o.require(rec[n - 1] == (n - 1) * (n - 1) + 1, "recurrence n=" + std::to_string(n));
  }
  try {
    solve_model(FamilyName::kHex4);
    o.require(false, "solver accepted the HEX4 polynomial");
  } catch (const DegenerateSpectrum& e) {
    const std::string what = e.what();
    o.require(what.find("(x−1)³") != std::string::npos, "message: " + what);
    o.notes.push_back(what);
  }
  return o;
}

Outcome growth_ratio() {
  Outcome o;
  using boost::multiprecision::cpp_bin_float_50;
  const auto rec = alpha_sequence(kGrowthN, recurrence_for(FamilyName::kHex8));
  const double ratio = static_cast<double>(cpp_bin_float_50(rec[kGrowthN - 1]) /
                                           cpp_bin_float_50(rec[kGrowthN - 2]));
  const double cat = static_cast<double>(cpp_bin_float_50(catalan(kGrowthN)) /
                                         cpp_bin_float_50(catalan(kGrowthN - 1)));
  o.require(std::abs(ratio - kGrowthTarget) <= kGrowthTolerance,
            "hex8 ratio " + num(ratio, "%.6f"));
  o.require(cat > kCatalanFloor,
            "Catalan ratio C_40/C_39 = " + num(cat, "%.6f") + " is not above 3.9");
  o.notes.push_back("alpha_40/alpha_39 = " + num(ratio, "%.6f") +
                    ", C_40/C_39 = " + num(cat, "%.6f"));
  return o;
}

std::string capture(const std::string& args) {
  const std::string cmd = std::string(HEXAVOID_BINARY) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return "<popen failed>";
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  out += "<exit " + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1) + ">";
  return out;
}

Outcome determinism() {
  Outcome o;
  const std::string one = capture("verify --level fast --jobs 1");
  for (int jobs : {2, 8}) {
    o.require(capture("verify --level fast --jobs " + std::to_string(jobs)) == one,
              "output differs with --jobs " + std::to_string(jobs));
  }
  o.notes.push_back(std::to_string(one.size()) + " bytes identical for jobs 1, 2, 8");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"table reproduction", table_reproduction},
      {"four-way agreement (hex8)", four_way_agreement},
      {"succession-rule conformance", succession_conformance},
      {"deletion lemma", deletion_lemma},
      {"epsilon independent of xbar", epsilon_independence},
      {"spectral accuracy (hex8)", spectral_hex8},
      {"hex6 counts and spectrum", hex6},
      {"hex4 counts and degenerate spectrum", hex4},
      {"growth ratio", growth_ratio},
      {"determinism across workers", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << "  "
              << criteria[i].first;
    std::string sep = ": ";
    // Failures list their first few reasons.
    std::size_t shown = 0;
    for (const std::string& note : o.notes) {
      if (shown++ == 6) {
        std::cout << "; ...";
        break;
      }
      std::cout << sep << note;
      sep = "; ";
    }
    std::cout << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
