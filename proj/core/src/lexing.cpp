#include "crepair/lexing.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <fmt/format.h>

namespace crepair {

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Keyword: return "Keyword";
    case TokenKind::Identifier: return "Identifier";
    case TokenKind::Separator: return "Separator";
    case TokenKind::Operator: return "Operator";
    case TokenKind::IntLiteral: return "IntLiteral";
    case TokenKind::FloatLiteral: return "FloatLiteral";
    case TokenKind::StringLiteral: return "StringLiteral";
    case TokenKind::CharLiteral: return "CharLiteral";
    case TokenKind::BoolLiteral: return "BoolLiteral";
    case TokenKind::NullLiteral: return "NullLiteral";
    case TokenKind::LineComment: return "LineComment";
    case TokenKind::BlockComment: return "BlockComment";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Trivia

Trivia Trivia::from_text(std::string_view text) {
  Trivia t;
  for (char c : text) {
    WhitespaceChar ch = c == ' ' ? WhitespaceChar::Space
                        : c == '\t' ? WhitespaceChar::Tab
                                    : WhitespaceChar::Newline;
    if (!t.runs.empty() && t.runs.back().ch == ch) {
      ++t.runs.back().count;
    } else {
      t.runs.push_back({ch, 1});
    }
  }
  return t;
}

std::string Trivia::text() const {
  std::string out;
  for (const auto& run : runs) {
    char c = run.ch == WhitespaceChar::Space ? ' ' : run.ch == WhitespaceChar::Tab ? '\t' : '\n';
    out.append(static_cast<std::size_t>(run.count), c);
  }
  return out;
}

int Trivia::count(WhitespaceChar ch) const {
  int n = 0;
  for (const auto& run : runs) {
    if (run.ch == ch) n += run.count;
  }
  return n;
}

int Trivia::newlines() const { return count(WhitespaceChar::Newline); }

int Trivia::length() const {
  int n = 0;
  for (const auto& run : runs) n += run.count;
  return n;
}

LexError::LexError(int line, int column, std::string reason)
    : Error(fmt::format("{}:{}: {}", line, column, reason)),
      line_(line),
      column_(column),
      reason_(std::move(reason)) {}

// ---------------------------------------------------------------------------
// Lexer

namespace {

const std::unordered_set<std::string_view>& keywords() {
  static const std::unordered_set<std::string_view> set = {
      "abstract", "assert",     "boolean",   "break",      "byte",      "case",
      "catch",    "char",       "class",     "const",      "continue",  "default",
      "do",       "double",     "else",      "enum",       "extends",   "final",
      "finally",  "float",      "for",       "goto",       "if",        "implements",
      "import",   "instanceof", "int",       "interface",  "long",      "native",
      "new",      "package",    "private",   "protected",  "public",    "return",
      "short",    "static",     "strictfp",  "super",      "switch",    "synchronized",
      "this",     "throw",      "throws",    "transient",  "try",       "void",
      "volatile", "while"};
  return set;
}

// Longest match first.
constexpr std::array<std::string_view, 38> kOperators = {
    ">>>=", "<<=", ">>=", ">>>", "->", "++", "--", "&&", "||", "==", "!=",
    "<=",   ">=",  "+=",  "-=",  "*=", "/=", "&=", "|=", "^=", "%=", "<<",
    ">>",   "=",   ">",   "<",   "!",  "~",  "?",  ":",  "+",  "-",  "*",
    "/",    "&",   "|",   "^",   "%"};

bool is_ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_part(unsigned char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_hex_digit(char c) {
  return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

class Lexer {
 public:
  Lexer(std::string_view src, std::string path) : src_(src) { out_.source_path = std::move(path); }

  ConcreteTokenStream run() {
    out_.leading = take_trivia();
    while (pos_ < src_.size()) {
      ConcreteToken tok = next_token();
      out_.items.push_back({std::move(tok), take_trivia()});
    }
    return std::move(out_);
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  // Advances one byte, updating line/column. Continuation bytes of a UTF-8
  // sequence do not count as columns.
  void advance() {
    unsigned char c = static_cast<unsigned char>(src_[pos_++]);
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((c & 0xC0) != 0x80) {
      ++column_;
    }
  }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) advance();
  }

  [[noreturn]] void fail(int line, int column, std::string reason) const {
    throw LexError(line, column, std::move(reason));
  }

  Trivia take_trivia() {
    std::size_t start = pos_;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
    return Trivia::from_text(src_.substr(start, pos_ - start));
  }

  ConcreteToken next_token() {
    const int line = line_;
    const int column = column_;
    const std::size_t start = pos_;
    const char c = peek();
    TokenKind kind{};

    if (c == '\r') fail(line, column, "carriage return in normalized source");
    if (c == '/' && peek(1) == '/') {
      while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      kind = TokenKind::LineComment;
    } else if (c == '/' && peek(1) == '*') {
      advance(2);
      bool closed = false;
      while (pos_ < src_.size()) {
        if (src_[pos_] == '*' && peek(1) == '/') {
          advance(2);
          closed = true;
          break;
        }
        advance();
      }
      if (!closed) fail(line, column, "unterminated block comment");
      kind = TokenKind::BlockComment;
    } else if (c == '"') {
      kind = TokenKind::StringLiteral;
      if (peek(1) == '"' && peek(2) == '"') {
        lex_text_block(line, column);
      } else {
        lex_quoted('"', line, column, "unterminated string literal");
      }
    } else if (c == '\'') {
      kind = TokenKind::CharLiteral;
      lex_quoted('\'', line, column, "unterminated character literal");
    } else if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
      kind = lex_number();
    } else if (is_ident_start(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && is_ident_part(static_cast<unsigned char>(src_[pos_]))) {
        if (static_cast<unsigned char>(src_[pos_]) >= 0x80) {
          check_utf8(line, column);
        } else {
          advance();
        }
      }
      std::string_view word = src_.substr(start, pos_ - start);
      if (word == "true" || word == "false") {
        kind = TokenKind::BoolLiteral;
      } else if (word == "null") {
        kind = TokenKind::NullLiteral;
      } else if (keywords().contains(word)) {
        kind = TokenKind::Keyword;
      } else {
        kind = TokenKind::Identifier;
      }
    } else if (src_.substr(pos_, 3) == "...") {
      advance(3);
      kind = TokenKind::Separator;
    } else if (src_.substr(pos_, 2) == "::") {
      advance(2);
      kind = TokenKind::Separator;
    } else if (std::string_view("(){}[];,.@").find(c) != std::string_view::npos) {
      advance();
      kind = TokenKind::Separator;
    } else {
      std::string_view rest = src_.substr(pos_);
      auto op = std::find_if(kOperators.begin(), kOperators.end(), [&](std::string_view o) {
        return rest.starts_with(o);
      });
      if (op == kOperators.end()) {
        fail(line, column, fmt::format("illegal character 0x{:02x}", static_cast<unsigned char>(c)));
      }
      advance(op->size());
      kind = TokenKind::Operator;
    }
    return ConcreteToken{kind, std::string(src_.substr(start, pos_ - start)), line, column};
  }

  void check_utf8(int line, int column) {
    unsigned char lead = static_cast<unsigned char>(src_[pos_]);
    std::size_t len = lead >= 0xF0 ? 4 : lead >= 0xE0 ? 3 : lead >= 0xC0 ? 2 : 0;
    if (len == 0 || pos_ + len > src_.size()) fail(line, column, "invalid UTF-8 sequence");
    for (std::size_t k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(src_[pos_ + k]) & 0xC0) != 0x80) {
        fail(line, column, "invalid UTF-8 sequence");
      }
    }
    advance(len);
  }

  void lex_quoted(char quote, int line, int column, const char* unterminated) {
    advance();
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') fail(line, column, unterminated);
      char ch = src_[pos_];
      if (ch == '\\') {
        advance();
        if (pos_ >= src_.size() || src_[pos_] == '\n') fail(line, column, unterminated);
        advance();
      } else if (ch == quote) {
        advance();
        return;
      } else {
        advance();
      }
    }
  }

  void lex_text_block(int line, int column) {
    advance(3);
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) advance();
    if (peek() != '\n') fail(line, column, "text block must start with a line break");
    while (pos_ < src_.size()) {
      if (src_[pos_] == '\\') {
        advance();
        if (pos_ < src_.size()) advance();
      } else if (src_.substr(pos_, 3) == "\"\"\"") {
        advance(3);
        return;
      } else {
        advance();
      }
    }
    fail(line, column, "unterminated text block");
  }

  TokenKind lex_number() {
    bool is_float = false;
    auto digits = [&](auto pred) {
      while (pos_ < src_.size() && (pred(src_[pos_]) || src_[pos_] == '_')) advance();
    };
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
      advance(2);
      digits(is_hex_digit);
      if (peek() == '.') {
        is_float = true;
        advance();
        digits(is_hex_digit);
      }
      if (peek() == 'p' || peek() == 'P') {
        is_float = true;
        advance();
        if (peek() == '+' || peek() == '-') advance();
        digits(is_digit);
      }
    } else if (peek() == '0' && (peek(1) == 'b' || peek(1) == 'B')) {
      advance(2);
      digits([](char ch) { return ch == '0' || ch == '1'; });
    } else {
      digits(is_digit);
      if (peek() == '.' && is_digit(peek(1))) {
        is_float = true;
        advance();
        digits(is_digit);
      } else if (peek() == '.' && !is_ident_start(static_cast<unsigned char>(peek(1))) &&
                 peek(1) != '.') {
        // "1." is a valid double literal
        is_float = true;
        advance();
      }
      if (peek() == 'e' || peek() == 'E') {
        is_float = true;
        advance();
        if (peek() == '+' || peek() == '-') advance();
        digits(is_digit);
      }
    }
    char suffix = peek();
    if (suffix == 'f' || suffix == 'F' || suffix == 'd' || suffix == 'D') {
      is_float = true;
      advance();
    } else if (!is_float && (suffix == 'l' || suffix == 'L')) {
      advance();
    }
    return is_float ? TokenKind::FloatLiteral : TokenKind::IntLiteral;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  ConcreteTokenStream out_;
};

}  // namespace

ConcreteTokenStream lex(std::string_view source, std::string source_path) {
  return Lexer(source, std::move(source_path)).run();
}

std::string render(const ConcreteTokenStream& stream) {
  std::string out = stream.leading.text();
  for (const auto& item : stream.items) {
    out += item.token.lexeme;
    out += item.trailing.text();
  }
  return out;
}

namespace {

SourcePosition advance_over(SourcePosition pos, std::string_view text) {
  for (unsigned char c : text) {
    if (c == '\n') {
      ++pos.line;
      pos.column = 1;
    } else if ((c & 0xC0) != 0x80) {
      ++pos.column;
    }
  }
  return pos;
}

}  // namespace

SourcePosition end_position(const ConcreteToken& token) {
  return advance_over({token.line, token.column}, token.lexeme);
}

bool positions_consistent(const ConcreteTokenStream& stream) {
  SourcePosition pos = advance_over({1, 1}, stream.leading.text());
  for (const auto& item : stream.items) {
    if (item.token.line != pos.line || item.token.column != pos.column) return false;
    pos = advance_over(pos, item.token.lexeme);
    pos = advance_over(pos, item.trailing.text());
  }
  return true;
}

std::optional<std::size_t> find_unbalanced_delimiter(const ConcreteTokenStream& stream) {
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < stream.size(); ++i) {
    const auto& tok = stream.token(i);
    if (tok.kind != TokenKind::Separator || tok.lexeme.size() != 1) continue;
    char c = tok.lexeme[0];
    if (c == '(' || c == '[' || c == '{') {
      open.push_back(i);
    } else if (c == ')' || c == ']' || c == '}') {
      char expected = c == ')' ? '(' : c == ']' ? '[' : '{';
      if (open.empty() || stream.token(open.back()).lexeme[0] != expected) return i;
      open.pop_back();
    }
  }
  if (!open.empty()) return open.back();
  return std::nullopt;
}

SourceText normalize_newlines(std::string_view raw) {
  SourceText out;
  out.text.reserve(raw.size());
  std::size_t crlf = 0;
  std::size_t lf = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '\r' && i + 1 < raw.size() && raw[i + 1] == '\n') {
      ++crlf;
      continue;
    }
    if (raw[i] == '\n') ++lf;
    out.text.push_back(raw[i]);
  }
  // lf counts every line break, including the CRLF ones
  out.ending = crlf > lf - crlf ? LineEnding::Crlf : LineEnding::Lf;
  return out;
}

std::string restore_newlines(std::string_view text, LineEnding ending) {
  if (ending == LineEnding::Lf) return std::string(text);
  std::string out;
  out.reserve(text.size() + text.size() / 16);
  for (char c : text) {
    if (c == '\n') out.push_back('\r');
    out.push_back(c);
  }
  return out;
}

SourceText read_source_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(fmt::format("cannot open {}", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return normalize_newlines(buf.str());
}

void write_source_file(const std::string& path, std::string_view text, LineEnding ending) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(fmt::format("cannot write {}", path));
  std::string data = restore_newlines(text, ending);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

}  // namespace crepair
