#pragma once

// Reader for the per-rule checker fixtures in fixtures/rules.
//
//   === bad|good <name>
//   % key=value          rule property, zero or more
//   <java source>
//   \ no newline         optional: drop the final line break
//   --- expect           bad cases only
//   [ERROR] Case.java:<line>[:<col>]: <message> [<Rule>]

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace crepair::testing {

inline constexpr const char* kFixtureFileName = "Case.java";

struct RuleCase {
  std::string rule;
  std::string name;
  bool violating = false;
  std::map<std::string, std::string> properties;
  std::string source;
  std::vector<std::string> expected;
};

std::vector<RuleCase> parse_rule_fixture(const std::string& rule, const std::string& text);
std::vector<RuleCase> load_rule_fixture(const std::filesystem::path& path);

/// Fixture directory baked in at configure time.
std::filesystem::path fixtures_dir();

}  // namespace crepair::testing
