#pragma once

// Abstract token sequences: Java tokens reduced to their keyword/operator
// text or token class, interleaved with formatting tokens that summarize the
// whitespace between them (n_SP, n_TB, n_NL, n_NL_d_ID, n_NL_d_DD).

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crepair/lexing.hpp"
#include "crepair/violation.hpp"

namespace crepair {

enum class IndentChar : std::uint8_t { Space, Tab };

struct IndentUnit {
  IndentChar ch = IndentChar::Space;
  int width = 4;

  bool operator==(const IndentUnit&) const = default;
};

std::string to_string(IndentUnit unit);

/// Vocabulary caps for formatting tokens.
inline constexpr int kMaxSpaces = 10;
inline constexpr int kMaxTabs = 4;
inline constexpr int kMaxNewlines = 3;
inline constexpr int kMaxDeltaUnits = 2;

struct FormattingToken {
  enum class Kind : std::uint8_t { Space, Tab, Newline };

  Kind kind = Kind::Space;
  int count = 0;
  // Indentation change in indent characters; only meaningful for Newline.
  int delta = 0;

  static FormattingToken spaces(int n) { return {Kind::Space, n, 0}; }
  static FormattingToken tabs(int n) { return {Kind::Tab, n, 0}; }
  static FormattingToken newlines(int n, int delta = 0) { return {Kind::Newline, n, delta}; }

  bool is_newline() const { return kind == Kind::Newline; }

  /// `4_SP`, `2_TB`, `1_NL`, `1_NL_4_ID`, `2_NL_8_DD`.
  std::string text() const;
  static std::optional<FormattingToken> parse(std::string_view text);

  auto operator<=>(const FormattingToken&) const = default;
};

/// Every formatting token representable under the caps, in a fixed order:
/// spaces 0..10, tabs 1..4, then for each newline count 1..3 the deltas
/// 0, +1u, +2u, -1u, -2u (u = indent width).
std::vector<FormattingToken> formatting_vocabulary(IndentUnit unit);

class MixedIndentError : public Error {
 public:
  MixedIndentError(int line, std::string message);
  int line() const { return line_; }

 private:
  int line_;
};

class DecodeError : public Error {
 public:
  using Error::Error;
};

class LocationError : public Error {
 public:
  using Error::Error;
};

class AlignmentError : public Error {
 public:
  using Error::Error;
};

struct EncodeOptions {
  IndentUnit unit;
  // Throw MixedIndentError instead of warning when an indentation prefix
  // mixes spaces and tabs.
  bool strict_mixed_indent = false;
};

/// Abstract token text of a concrete token: keywords, separators and
/// operators map to themselves, everything else to its class name.
std::string abstract_text(const ConcreteToken& token);

struct AbstractSequence {
  ConcreteTokenStream stream;
  IndentUnit unit;
  std::vector<std::string> java;
  // formatting[0] is the leading trivia, formatting[i + 1] the trivia after
  // java[i]; size() == java.size() + 1.
  std::vector<FormattingToken> formatting;
  // Encoding of the stream's own trivia; decode emits the original bytes
  // wherever formatting[p] == source_formatting[p].
  std::vector<FormattingToken> source_formatting;
  // java index → index of the concrete token in `stream`.
  std::vector<std::size_t> alignment;
  std::vector<std::string> warnings;

  std::size_t size() const { return java.size(); }
};

AbstractSequence encode(ConcreteTokenStream stream, const EncodeOptions& options);

/// Re-renders the sequence with `new_formatting` in place of
/// seq.formatting. Positions equal to the source encoding keep their
/// original bytes. Warnings (e.g. negative indentation clamped to zero) are
/// appended to `warnings` when given.
std::string decode(const AbstractSequence& seq, std::span<const FormattingToken> new_formatting,
                   std::vector<std::string>* warnings = nullptr);

inline std::string decode(const AbstractSequence& seq) { return decode(seq, seq.formatting); }

/// Space-separated text form; zero-width leading/trailing formatting is
/// omitted.
std::string to_text(const AbstractSequence& seq);

/// Majority indentation character and modal positive indentation step.
/// Falls back to (Space, 4) without evidence.
IndentUnit detect_indent_unit(std::span<const ConcreteTokenStream> corpus);

struct WindowParams {
  int k = 5;   // context lines before/after the error line
  int n = 10;  // abstract tokens before/after a column-located error
  int i = 2;   // abstract tokens before the line of a line-only error
  int j = 13;  // abstract tokens after the line of a line-only error

  bool operator==(const WindowParams&) const = default;
};

/// Tagged error window, the model input. `tokens` is the textual input
/// sequence; the formatting positions inside the tags are
/// span_begin + 1 .. span_end (inclusive), one after each java token of the
/// span.
struct ModelInput {
  std::string rule;
  std::vector<std::string> tokens;
  std::size_t window_begin = 0;  // java indices, half-open
  std::size_t window_end = 0;
  std::size_t span_begin = 0;
  std::size_t span_end = 0;
  std::size_t sequence_size = 0;
  // java[span_begin .. span_end], including the token after the span when
  // there is one; the n-gram baseline looks up (left, right) pairs in it.
  std::vector<std::string> span_java;
  std::vector<FormattingToken> span_formatting;

  std::size_t formatting_positions() const { return span_end - span_begin; }
  std::string text() const;
};

std::string open_tag(std::string_view rule);
std::string close_tag(std::string_view rule);

/// Java index the violation points at. Column-located: the token whose span
/// contains the column, else the nearest token start on the line, else the
/// token whose trailing whitespace contains the position.
std::size_t locate_token(const AbstractSequence& seq, int line, std::optional<int> column);

ModelInput extract_error_window(const AbstractSequence& seq, const Violation& v,
                                const WindowParams& params);

/// Formatting of the clean file at the span of a window taken on its
/// erroneous counterpart; the supervised target.
std::vector<FormattingToken> align_target_window(const AbstractSequence& orig_seq,
                                                 const ModelInput& err_input);

/// Replaces the span formatting of `seq` with `predicted`: extra predicted
/// tokens are dropped, missing ones keep the input's formatting.
AbstractSequence apply_formatting(const AbstractSequence& seq, const ModelInput& input,
                                  std::span<const FormattingToken> predicted);

std::string join_tokens(std::span<const std::string> tokens);
std::vector<std::string> split_tokens(std::string_view text);
std::string formatting_text(std::span<const FormattingToken> tokens);

}  // namespace crepair
