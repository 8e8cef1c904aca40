#pragma once

// Loads tests/golden/cases.json: each case is a command line, the expected
// exit code, an optional stderr substring, and expected stdout in
// expected/<name>.out. Arguments starting with '@' are paths relative to
// the golden directory.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace golden {

struct Case {
  std::string name;
  std::vector<std::string> args;
  int exit_code = 0;
  std::string stderr_contains;
  std::string expected_stdout;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<Case> load(const std::string& dir) {
  const auto j = nlohmann::json::parse(read_file(dir + "/cases.json"));
  std::vector<Case> cases;
  for (const auto& c : j) {
    Case out;
    out.name = c.at("name").get<std::string>();
    for (const auto& a : c.at("args")) {
      auto s = a.get<std::string>();
      out.args.push_back(!s.empty() && s[0] == '@' ? dir + "/" + s.substr(1) : s);
    }
    out.exit_code = c.at("exit").get<int>();
    out.stderr_contains = c.value("stderr", "");
    out.expected_stdout = read_file(dir + "/expected/" + out.name + ".out");
    cases.push_back(std::move(out));
  }
  return cases;
}

}  // namespace golden
