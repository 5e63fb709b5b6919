#pragma once

// Token roles the rules need but a lexer cannot see on its own: delimiter
// matching, block owners, generic angle brackets, unary/postfix operators,
// casts and label colons. Everything here is a heuristic over the token
// stream; no syntax tree is built.

#include <optional>
#include <string_view>
#include <vector>

#include "crepair/lexing.hpp"

namespace crepair::detail {

enum class BlockOwner : std::uint8_t {
  None,  // not a block brace (array initializer)
  If,
  Else,
  For,
  While,
  Do,
  Try,
  Catch,
  Finally,
  Switch,
  Synchronized,
  StaticInit,
  Method,
  Class,
  Interface,
  Enum,
  EnumConstant,
  AnonymousClass,
  Lambda,
  Case,
  Bare,
};

/// Checkstyle token-type name for the construct owning a block.
std::string_view owner_type(BlockOwner owner);

class TokenAnalysis {
 public:
  explicit TokenAnalysis(const ConcreteTokenStream& stream);

  std::size_t size() const { return stream_.size(); }
  const ConcreteToken& tok(std::size_t i) const { return stream_.token(i); }
  std::string_view lexeme(std::size_t i) const { return stream_.token(i).lexeme; }
  bool is(std::size_t i, std::string_view lexeme) const;
  bool is_code(std::size_t i) const { return !is_comment(tok(i).kind); }

  const Trivia& gap_before(std::size_t i) const { return stream_.gap(i); }
  const Trivia& gap_after(std::size_t i) const { return stream_.gap(i + 1); }
  bool ws_before(std::size_t i) const { return !gap_before(i).empty(); }
  bool ws_after(std::size_t i) const { return !gap_after(i).empty(); }
  /// Nothing but whitespace between the start of the line and the token.
  bool first_on_line(std::size_t i) const { return i == 0 || gap_before(i).newlines() > 0; }
  /// Nothing but whitespace between the token and the end of the line.
  bool last_on_line(std::size_t i) const { return i + 1 == size() || gap_after(i).newlines() > 0; }

  std::optional<std::size_t> prev_code(std::size_t i) const;
  std::optional<std::size_t> next_code(std::size_t i) const;
  bool prev_is(std::size_t i, std::string_view lexeme) const;
  bool next_is(std::size_t i, std::string_view lexeme) const;

  /// Matching delimiter for ( ) [ ] { }, nullopt when unmatched.
  std::optional<std::size_t> match(std::size_t i) const {
    return match_[i] < 0 ? std::nullopt : std::optional<std::size_t>(static_cast<std::size_t>(match_[i]));
  }

  /// Owner of a `{`, or of the `{` matching a `}`.
  BlockOwner block_owner(std::size_t i) const { return owner_[i]; }
  bool is_block_brace(std::size_t i) const { return owner_[i] != BlockOwner::None; }

  bool is_cast_close(std::size_t i) const { return cast_close_[i]; }
  /// Keyword owning a `(`: if, for, while, switch, catch, synchronized, try.
  std::string_view paren_owner(std::size_t open) const;

  /// Checkstyle token type of token i, e.g. "ASSIGN", "UNARY_MINUS",
  /// "GENERIC_START", "LCURLY", "ARRAY_INIT", "COMMA", "LITERAL_IF".
  std::string_view type(std::size_t i) const { return types_[i]; }

  /// Expanded width of the indentation of the line starting token i.
  int line_indent(std::size_t i, int tab_width) const;

 private:
  void match_delimiters();
  void classify_generics();
  void classify_blocks();
  void classify_casts();
  void assign_types();
  BlockOwner owner_of_open_brace(std::size_t i) const;
  std::optional<std::size_t> skip_type_args_back(std::size_t close) const;

  const ConcreteTokenStream& stream_;
  std::vector<int> match_;
  std::vector<BlockOwner> owner_;
  std::vector<char> generic_;
  std::vector<char> cast_close_;
  std::vector<std::string_view> types_;
  std::vector<std::string_view> lines_;
  std::string text_;
};

}  // namespace crepair::detail
