#pragma once

// Lossless Java lexer. A ConcreteTokenStream keeps every byte of the input:
// tokens carry their exact lexemes and the whitespace between tokens is kept
// as run-length encoded trivia, so render(lex(s)) == s.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crepair/error.hpp"

namespace crepair {

enum class TokenKind : std::uint8_t {
  Keyword,
  Identifier,
  Separator,
  Operator,
  IntLiteral,
  FloatLiteral,
  StringLiteral,
  CharLiteral,
  BoolLiteral,
  NullLiteral,
  LineComment,
  BlockComment,
};

std::string_view to_string(TokenKind kind);

inline bool is_comment(TokenKind kind) {
  return kind == TokenKind::LineComment || kind == TokenKind::BlockComment;
}

inline bool is_literal(TokenKind kind) {
  switch (kind) {
    case TokenKind::IntLiteral:
    case TokenKind::FloatLiteral:
    case TokenKind::StringLiteral:
    case TokenKind::CharLiteral:
    case TokenKind::BoolLiteral:
    case TokenKind::NullLiteral:
      return true;
    default:
      return false;
  }
}

struct ConcreteToken {
  TokenKind kind{};
  std::string lexeme;
  int line = 1;    // 1-based
  int column = 1;  // 1-based, in code points; a tab counts as one column

  bool operator==(const ConcreteToken&) const = default;
};

enum class WhitespaceChar : std::uint8_t { Space, Tab, Newline };

struct TriviaRun {
  WhitespaceChar ch{};
  int count = 0;

  bool operator==(const TriviaRun&) const = default;
};

/// Whitespace between two tokens, run-length encoded. Adjacent runs always
/// hold different characters.
struct Trivia {
  std::vector<TriviaRun> runs;

  static Trivia from_text(std::string_view text);
  std::string text() const;

  bool empty() const { return runs.empty(); }
  int newlines() const;
  int count(WhitespaceChar ch) const;
  int length() const;

  bool operator==(const Trivia&) const = default;
};

struct StreamItem {
  ConcreteToken token;
  Trivia trailing;

  bool operator==(const StreamItem&) const = default;
};

struct ConcreteTokenStream {
  Trivia leading;
  std::vector<StreamItem> items;
  std::string source_path;

  std::size_t size() const { return items.size(); }
  const ConcreteToken& token(std::size_t i) const { return items[i].token; }

  /// Trivia in front of token `i`; gap(size()) is the trailing trivia of the
  /// file.
  const Trivia& gap(std::size_t i) const {
    return i == 0 ? leading : items[i - 1].trailing;
  }

  bool operator==(const ConcreteTokenStream&) const = default;
};

class LexError : public Error {
 public:
  LexError(int line, int column, std::string reason);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  int line_;
  int column_;
  std::string reason_;
};

/// Tokenizes LF-normalized Java source. Throws LexError on unterminated
/// literals/comments, carriage returns and characters outside the lexical
/// grammar.
ConcreteTokenStream lex(std::string_view source, std::string source_path = {});

std::string render(const ConcreteTokenStream& stream);

/// Position just past the last character of a token (line of the last
/// character, column after it).
struct SourcePosition {
  int line = 1;
  int column = 1;
  auto operator<=>(const SourcePosition&) const = default;
};
SourcePosition end_position(const ConcreteToken& token);

/// Recomputes every token position from the lexemes and trivia and compares
/// it with the stored (line, column).
bool positions_consistent(const ConcreteTokenStream& stream);

/// First unmatched or mismatched (, [ or {; nullopt when all delimiters
/// pair up. Stands in for "the file can be parsed".
std::optional<std::size_t> find_unbalanced_delimiter(const ConcreteTokenStream& stream);

enum class LineEnding : std::uint8_t { Lf, Crlf };

struct SourceText {
  std::string text;  // LF only
  LineEnding ending = LineEnding::Lf;
};

/// CRLF → LF. A file counts as CRLF when the majority of its line breaks are.
SourceText normalize_newlines(std::string_view raw);
std::string restore_newlines(std::string_view text, LineEnding ending);

SourceText read_source_file(const std::string& path);
void write_source_file(const std::string& path, std::string_view text, LineEnding ending);

}  // namespace crepair
