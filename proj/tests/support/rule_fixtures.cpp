#include "rule_fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace crepair::testing {

std::vector<RuleCase> parse_rule_fixture(const std::string& rule, const std::string& text) {
  std::vector<RuleCase> cases;
  std::istringstream in(text);
  std::string line;
  bool in_expect = false;
  auto finish = [&] {
    if (cases.empty()) return;
    auto& c = cases.back();
    if (c.source.ends_with("\\ no newline\n")) {
      c.source.resize(c.source.size() - std::string_view("\\ no newline\n").size());
      if (!c.source.empty() && c.source.back() == '\n') c.source.pop_back();
    }
  };
  while (std::getline(in, line)) {
    if (line.starts_with("=== ")) {
      finish();
      std::istringstream head(line.substr(4));
      std::string kind;
      RuleCase c;
      head >> kind >> c.name;
      if (kind != "bad" && kind != "good") throw std::runtime_error("bad fixture header: " + line);
      c.rule = rule;
      c.violating = kind == "bad";
      cases.push_back(std::move(c));
      in_expect = false;
      continue;
    }
    if (cases.empty()) continue;
    auto& c = cases.back();
    if (line == "--- expect") {
      finish();
      in_expect = true;
      continue;
    }
    if (in_expect) {
      if (!line.empty()) c.expected.push_back(line);
      continue;
    }
    if (c.source.empty() && line.starts_with("% ")) {
      auto eq = line.find('=');
      if (eq == std::string::npos) throw std::runtime_error("bad property line: " + line);
      c.properties[line.substr(2, eq - 2)] = line.substr(eq + 1);
      continue;
    }
    c.source += line;
    c.source += '\n';
  }
  finish();
  return cases;
}

std::vector<RuleCase> load_rule_fixture(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_rule_fixture(path.stem().string(), buf.str());
}

std::filesystem::path fixtures_dir() { return CREPAIR_FIXTURES_DIR; }

}  // namespace crepair::testing
