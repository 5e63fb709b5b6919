#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace crepair {

/// A reported rule breach. `column` is absent for line-located rules
/// (LineLength, FileTabCharacter, NewlineAtEndOfFile, RegexpSingleline).
struct Violation {
  std::string file;
  int line = 1;
  std::optional<int> column;
  std::string rule;
  std::string message;

  bool operator==(const Violation&) const = default;
};

/// `[ERROR] <file>:<line>[:<column>]: <message> [<Rule>]`
std::string format_report(const Violation& v);

/// Inverse of format_report; nullopt when the line does not follow the
/// report grammar.
std::optional<Violation> parse_report(std::string_view line);

}  // namespace crepair
