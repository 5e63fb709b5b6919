#pragma once

// Token-level formatting checker reading a Checkstyle-style XML ruleset.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crepair/error.hpp"
#include "crepair/violation.hpp"

namespace crepair {

class ConfigError : public Error {
 public:
  using Error::Error;
};

struct RuleConfig {
  std::string name;
  std::map<std::string, std::string> properties;

  bool operator==(const RuleConfig&) const = default;
};

struct Ruleset {
  std::vector<RuleConfig> rules;
  // Width a tab expands to when measuring indentation levels.
  int tab_width = 8;
  std::vector<std::string> warnings;

  bool contains(std::string_view rule) const;
  std::vector<std::string> rule_names() const;
};

/// Names of all rules the checker implements, in a fixed order.
std::span<const std::string_view> supported_rules();

/// Parses the Checkstyle XML subset: a `Checker` root, an optional
/// `TreeWalker`, and rule modules with `property` children. Non-formatting
/// Checkstyle modules are skipped with a warning; unknown modules, unknown
/// properties, invalid values and unresolved `${...}` variables raise
/// ConfigError.
Ruleset parse_ruleset(std::string_view xml);
Ruleset load_ruleset(const std::string& path);

/// Builds a validated ruleset programmatically.
Ruleset make_ruleset(std::vector<RuleConfig> rules, int tab_width = 8);

struct CheckResult {
  std::vector<Violation> violations;
  // Set when the source cannot be lexed or its delimiters do not balance.
  std::optional<std::string> broken;

  bool is_broken() const { return broken.has_value(); }
  bool clean() const { return !broken && violations.empty(); }
};

/// Checks LF-normalized source. Violations are sorted by
/// (line, column, rule, message).
CheckResult check(std::string_view source, const Ruleset& ruleset, std::string_view file = {});

}  // namespace crepair
