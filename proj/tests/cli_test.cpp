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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hexavoid/cli/commands.hpp"
#include "hexavoid/cli/report.hpp"
#include "hexavoid/cli/verify.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(HEXAVOID_BINARY) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

bool has_line(const std::string& text, const std::string& line) {
  for (const auto& l : lines(text)) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("count") {
  auto r = run("count --family hex8 --n 12 --method dp");
  CHECK(r.status == 0);
  CHECK(r.out == "190787\n");
  r = run("count --family hex4 --n 7 --method recurrence");
  CHECK(r.out == "37\n");
  r = run("count --family hex6 --n 10 --method oracle --jobs 2");
  CHECK(r.out == "10825\n");
  r = run("count --family hex8 --n 40 --method closedform");
  CHECK(r.out == "192890452763318240452\n");
}

TEST_CASE("count errors map to exit codes") {
  auto r = run("count --family hex8 --n 100 --method oracle", true);
  CHECK(r.status == 3);
  CHECK(r.out.find("budget") != std::string::npos);
  CHECK(run("count --n 41 --method closedform").status == 3);
  CHECK(run("count --family hex4 --n 5 --method closedform").status == 2);
  CHECK(run("count --family hex9 --n 5").status == 2);
  CHECK(run("count --n 5 --method magic").status == 2);
  CHECK(run("count").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("count --n 9 --method oracle --budget-nodes 50").status == 3);
}

TEST_CASE("count with all methods") {
  auto r = run("count --family hex8 --n 11 --all-methods --format json");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "count");
  CHECK(j["results"]["counts"].size() == 4);
  for (const auto& [method, value] : j["results"]["counts"].items()) {
    CHECK(value == "55740");
  }
  CHECK(j["checks"][0]["name"] == "methods-agree");
  CHECK(j["checks"][0]["pass"] == true);

  r = run("count --family hex4 --n 9 --all-methods");
  CHECK(r.status == 0);
  CHECK(r.out.find("closedform: skipped") != std::string::npos);
}

TEST_CASE("table rows") {
  auto r = run("table --n 12 --format csv");
  REQUIRE(r.status == 0);
  const auto rows = lines(r.out);
  CHECK(rows[0] == "sequence,n1,n2,n3,n4,n5,n6,n7,n8,n9,n10,n11,n12");
  CHECK(has_line(r.out, "epsilon,0,0,0,0,0,1,5,19,68,240,839,2911"));
  CHECK(has_line(r.out, "beta,0,0,1,4,14,48,165,568,1954,6717,23082,79307"));
  CHECK(has_line(r.out, "check,published-table,pass,n=1..12 cell-identical"));

  r = run("table --n 6 --format csv");
  CHECK(has_line(r.out, "delta,0,0,0,0,1,6"));
  r = run("table --n-max 3 --format csv");
  CHECK(has_line(r.out, "alpha,1,2,5"));
  r = run("table --n 10 --method oracle --format csv");
  CHECK(has_line(r.out, "gamma,0,0,0,1,5,20,75,271,957,3337"));
  CHECK(run("table --family hex6 --n 5").status == 2);
}

TEST_CASE("table CSV and JSON carry the same information") {
  for (int n_max : {6, 12, 25}) {
    const std::string n = std::to_string(n_max);
    const auto csv = run("table --n " + n + " --format csv").out;
    const auto json = nlohmann::json::parse(run("table --n " + n + " --format json").out);
    CHECK(json["family"] == "hex8");
    CHECK(json["n_max"] == n_max);
    std::size_t checks = 0;
    for (const auto& line : lines(csv)) {
      const auto fields = hexavoid::cli::split_csv_line(line);
      if (fields[0] == "sequence") {
        CHECK(fields.size() == static_cast<std::size_t>(n_max + 1));
      } else if (fields[0] == "check") {
        const auto& c = json["checks"][checks++];
        CHECK(c["name"] == fields[1]);
        CHECK(c["pass"] == (fields[2] == "pass"));
        CHECK(c["details"] == fields[3]);
      } else {
        const auto& row = json["sequences"][fields[0]];
        REQUIRE(row.size() == fields.size() - 1);
        for (std::size_t i = 1; i < fields.size(); ++i) CHECK(row[i - 1] == fields[i]);
      }
    }
    CHECK(checks == json["checks"].size());
    CHECK(json["sequences"].size() == 5);
  }
}

TEST_CASE("roots") {
  auto r = run("roots --family hex8");
  CHECK(r.status == 0);
  CHECK(has_line(r.out, "R1 ≈ -0.49890  c1 ≈ 0.00164"));
  CHECK(has_line(r.out, "R5 ≈ 0.44375-1.07681i  c5 ≈ 0.02378+0.00080i"));

  r = run("roots --family hex6");
  CHECK(r.out.find("R4 ≈ 0.47662-1.03635i") != std::string::npos);
  CHECK(has_line(r.out, "PASS  printed-roots  max delta 4.7e-06"));
  // The printed c1 and Re c4 are off by a factor of 100.
  CHECK(r.out.find("FAIL  printed-coefficients") != std::string::npos);
  CHECK(r.status == 1);

  r = run("roots --family hex4", true);
  CHECK(r.status == 2);
  CHECK(r.out.find("(x−1)³") != std::string::npos);

  const auto j = nlohmann::json::parse(run("roots --family hex8 --format json").out);
  CHECK(j["results"]["roots"].size() == 5);
  CHECK(j["results"]["roots"][3]["root"] == "3.43526");
}

TEST_CASE("verify") {
  auto r = run("verify --level fast");
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(has_line(r.out, "25 checks, 0 failed"));
  const auto j = nlohmann::json::parse(run("verify --format json").out);
  std::set<std::string> names;
  for (const auto& c : j["checks"]) {
    CHECK(names.insert(c["name"].get<std::string>()).second);
  }
  CHECK(names.count("hex6-first-values") == 1);
  CHECK(names.count("succession-conformance-hex8") == 1);
}

TEST_CASE("verify output does not depend on jobs") {
  const auto one = run("verify --jobs 1").out;
  CHECK(run("verify --jobs 3").out == one);
}

TEST_CASE("verify catches a perturbed threshold") {
  hexavoid::cli::VerifyOptions options;
  options.hex8_threshold = [](const hexavoid::Label& p) {
    return std::min(p.k + 2, std::max(p.k + 1, p.l + 1));
  };
  const auto checks = hexavoid::cli::run_verification(options);
  bool conformance_failed = false;
  for (const auto& c : checks) {
    if (c.name == "succession-conformance-hex8") conformance_failed = !c.pass;
  }
  CHECK(conformance_failed);
}

TEST_CASE("run_cli in process") {
  std::ostringstream out, err;
  const char* argv[] = {"hexavoid", "count", "--n", "5", "--method", "recurrence"};
  CHECK(hexavoid::cli::run_cli(6, argv, out, err) == 0);
  CHECK(out.str() == "42\n");
  std::ostringstream out2, err2;
  const char* help[] = {"hexavoid", "--help"};
  CHECK(hexavoid::cli::run_cli(2, help, out2, err2) == 0);
  CHECK(out2.str().find("count") != std::string::npos);
}

TEST_CASE("csv quoting") {
  using hexavoid::cli::csv_field;
  using hexavoid::cli::split_csv_line;
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(split_csv_line("x," + csv_field("say \"hi\", then") + ",3") ==
        std::vector<std::string>{"x", "say \"hi\", then", "3"});
}
