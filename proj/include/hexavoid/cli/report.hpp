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

#ifndef HEXAVOID_CLI_REPORT_HPP_
#define HEXAVOID_CLI_REPORT_HPP_

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace hexavoid::cli {

struct Check {
  std::string name;
  bool pass = false;
  std::string details;
};

struct RunReport {
  std::string command;
  std::string family;
  std::vector<std::pair<std::string, std::string>> parameters;
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::vector<Check> checks;

  bool all_pass() const;
  void add_check(std::string name, bool pass, std::string details = {});
};

nlohmann::ordered_json checks_json(const std::vector<Check>& checks);

// {command, family, parameters, results, checks}
std::string render_json(const RunReport& report);
// One line per parameter/result field, then one line per check.
std::string render_text(const RunReport& report);
std::string check_line(const Check& check);

// Minimal RFC 4180 quoting.
std::string csv_field(const std::string& value);
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace hexavoid::cli

#endif  // HEXAVOID_CLI_REPORT_HPP_
