#pragma once

// Generator of small, conventionally formatted Java projects used as clean
// training corpora in tests and benchmarks.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "crepair/checker.hpp"
#include "crepair/injection.hpp"

namespace crepair::testing {

struct SyntheticOptions {
  int files = 40;
  int min_methods = 3;
  int max_methods = 6;
  // Indentation string for one level.
  std::string indent = "    ";
  // Put every `{` on its own line instead of ending the header line.
  bool brace_on_new_line = false;
  // Write `f( a )` instead of `f(a)`.
  bool pad_parentheses = false;
};

/// Deterministic for a given seed. Files are named <Class>.java under a
/// per-file package directory.
std::vector<SourceFile> synthetic_project(std::uint64_t seed, const SyntheticOptions& options = {});

/// Inserts one space inside every non-empty pair of parentheses that has
/// none.
std::string pad_parentheses(std::string_view source);

/// Ruleset XML with the given rule names and default properties.
std::string ruleset_xml(const std::vector<std::string>& rules);

/// Ruleset XML with explicit properties per rule.
std::string ruleset_xml(const std::vector<crepair::RuleConfig>& rules);

}  // namespace crepair::testing
