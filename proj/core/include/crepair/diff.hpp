#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace crepair {

/// Lines including their '\n'; a final line without one is kept as is.
std::vector<std::string_view> split_lines(std::string_view text);

struct DiffOp {
  enum class Kind : std::uint8_t { Equal, Delete, Insert };
  Kind kind;
  std::size_t a = 0;  // line index in the old text (Equal, Delete)
  std::size_t b = 0;  // line index in the new text (Equal, Insert)
};

/// Minimal line edit script (Myers).
std::vector<DiffOp> diff_lines(std::span<const std::string_view> a, std::span<const std::string_view> b);

/// Added plus deleted lines of a minimal line diff.
std::size_t diff_size(std::string_view a, std::string_view b);

/// Unified diff with `context` lines around each change; empty when equal.
std::string unified_diff(std::string_view a, std::string_view b, std::string_view from_label,
                         std::string_view to_label, int context = 3);

}  // namespace crepair
