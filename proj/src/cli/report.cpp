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

#include "hexavoid/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace hexavoid::cli {

bool RunReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

void RunReport::add_check(std::string name, bool pass, std::string details) {
  checks.push_back({std::move(name), pass, std::move(details)});
}

nlohmann::ordered_json checks_json(const std::vector<Check>& checks) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const Check& c : checks) {
    out.push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
  }
  return out;
}

std::string render_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["command"] = report.command;
  j["family"] = report.family;
  j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [flag, value] : report.parameters) j["parameters"][flag] = value;
  j["results"] = report.results;
  j["checks"] = checks_json(report.checks);
  return j.dump(2) + "\n";
}

std::string check_line(const Check& check) {
  std::string line = (check.pass ? "PASS  " : "FAIL  ") + check.name;
  if (!check.details.empty()) line += "  " + check.details;
  return line;
}

std::string render_text(const RunReport& report) {
  std::ostringstream out;
  for (const auto& [key, value] : report.results.items()) {
    out << key << ": "
        << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  for (const Check& c : report.checks) out << check_line(c) << "\n";
  return out.str();
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

}  // namespace hexavoid::cli
