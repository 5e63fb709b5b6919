#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "crepair/lexing.hpp"
#include "rule_fixtures.hpp"

using namespace crepair;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<fs::path> clean_corpus() {
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(testing::fixtures_dir() / "clean")) {
    if (e.path().extension() == ".java") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

// Line and code-point column of every byte offset, computed from the raw text.
std::pair<int, int> position_of(std::string_view text, std::size_t offset) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == '\n') {
      ++line;
      column = 1;
    } else if ((c & 0xC0) != 0x80) {
      ++column;
    }
  }
  return {line, column};
}

std::vector<std::pair<TokenKind, std::string>> kinds(const ConcreteTokenStream& s) {
  std::vector<std::pair<TokenKind, std::string>> out;
  for (const auto& item : s.items) out.emplace_back(item.token.kind, item.token.lexeme);
  return out;
}

}  // namespace

TEST_CASE("fixture corpus has at least 50 files") { CHECK(clean_corpus().size() >= 50); }

TEST_CASE("render inverts lex on every fixture file") {
  for (const auto& path : clean_corpus()) {
    CAPTURE(path.string());
    std::string text = normalize_newlines(read_file(path)).text;
    ConcreteTokenStream s = lex(text);
    CHECK(render(s) == text);
    CHECK(positions_consistent(s));
    CHECK(lex(text) == s);
  }
}

TEST_CASE("fixture corpus covers every token kind") {
  std::set<TokenKind> seen;
  for (const auto& path : clean_corpus()) {
    for (const auto& item : lex(normalize_newlines(read_file(path)).text).items) seen.insert(item.token.kind);
  }
  for (TokenKind k : {TokenKind::Keyword, TokenKind::Identifier, TokenKind::Separator, TokenKind::Operator,
                      TokenKind::IntLiteral, TokenKind::FloatLiteral, TokenKind::StringLiteral, TokenKind::CharLiteral,
                      TokenKind::BoolLiteral, TokenKind::NullLiteral, TokenKind::LineComment,
                      TokenKind::BlockComment}) {
    CAPTURE(to_string(k));
    CHECK(seen.contains(k));
  }
}

TEST_CASE("token positions match an offset oracle") {
  for (const auto& path : clean_corpus()) {
    std::string text = normalize_newlines(read_file(path)).text;
    ConcreteTokenStream s = lex(text);
    std::size_t offset = s.leading.text().size();
    for (const auto& item : s.items) {
      auto [line, column] = position_of(text, offset);
      CAPTURE(path.string());
      CAPTURE(item.token.lexeme);
      REQUIRE(text.compare(offset, item.token.lexeme.size(), item.token.lexeme) == 0);
      CHECK(item.token.line == line);
      CHECK(item.token.column == column);
      offset += item.token.lexeme.size() + item.trailing.text().size();
    }
    CHECK(offset == text.size());
  }
}

TEST_CASE("tokens without whitespace") {
  ConcreteTokenStream s = lex("x=1;");
  using K = TokenKind;
  CHECK(kinds(s) == std::vector<std::pair<K, std::string>>{
                        {K::Identifier, "x"}, {K::Operator, "="}, {K::IntLiteral, "1"}, {K::Separator, ";"}});
  CHECK(s.leading.empty());
  for (const auto& item : s.items) CHECK(item.trailing.empty());
}

TEST_CASE("method header with a tab before the brace") {
  ConcreteTokenStream s = lex("public void visitChangedNodes( NodeChangeVisitor visitor, int nodeTypes )\t{");
  REQUIRE(s.size() == 11);
  CHECK(s.token(0).kind == TokenKind::Keyword);
  CHECK(s.token(0).lexeme == "public");
  CHECK(s.items[0].trailing.runs == std::vector<TriviaRun>{{WhitespaceChar::Space, 1}});
  CHECK(s.token(1).lexeme == "void");
  CHECK(s.token(9).kind == TokenKind::Separator);
  CHECK(s.token(9).lexeme == ")");
  CHECK(s.items[9].trailing.runs == std::vector<TriviaRun>{{WhitespaceChar::Tab, 1}});
  CHECK(s.token(10).lexeme == "{");
  CHECK(s.token(10).column == 75);
}

TEST_CASE("block comment is kept as a token") {
  std::string src = "int a = /*c*/ 1;";
  ConcreteTokenStream s = lex(src);
  REQUIRE(s.size() == 6);
  CHECK(s.token(3).kind == TokenKind::BlockComment);
  CHECK(s.token(3).lexeme == "/*c*/");
  CHECK(render(s) == src);
}

TEST_CASE("replacing trivia before a brace moves it to a new line") {
  ConcreteTokenStream s = lex("    void f( int a )    {\n        a++;\n    }\n");
  std::size_t brace = 0;
  while (s.token(brace).lexeme != "{") ++brace;
  s.items[brace - 1].trailing = Trivia::from_text("\n    ");
  CHECK(render(s) == "    void f( int a )\n    {\n        a++;\n    }\n");
}

TEST_CASE("empty input") {
  ConcreteTokenStream s = lex("");
  CHECK(s.size() == 0);
  CHECK(render(s).empty());
  CHECK(render(lex("\n\n  \t\n")) == "\n\n  \t\n");
}

TEST_CASE("literal classification") {
  using K = TokenKind;
  auto kind_of = [](std::string_view src) {
    ConcreteTokenStream s = lex(src);
    REQUIRE(s.size() == 1);
    CHECK(s.token(0).lexeme == src);
    return s.token(0).kind;
  };
  for (auto src : {"0", "42", "1_000", "0x1F", "0b101", "0777", "10L", "0xFFL"}) {
    CAPTURE(src);
    CHECK(kind_of(src) == K::IntLiteral);
  }
  for (auto src : {"1.5", "1.", ".5", "1e10", "1.5e-3", "2f", "3D", "0x1.8p3", "1_0.0_1"}) {
    CAPTURE(src);
    CHECK(kind_of(src) == K::FloatLiteral);
  }
  CHECK(kind_of("'a'") == K::CharLiteral);
  CHECK(kind_of("'\\''") == K::CharLiteral);
  CHECK(kind_of("\"a \\\" b\"") == K::StringLiteral);
  CHECK(kind_of("\"\"\"\n  text\n  \"\"\"") == K::StringLiteral);
  CHECK(kind_of("true") == K::BoolLiteral);
  CHECK(kind_of("false") == K::BoolLiteral);
  CHECK(kind_of("null") == K::NullLiteral);
  CHECK(kind_of("// note") == K::LineComment);
  CHECK(kind_of("/** doc */") == K::BlockComment);
  CHECK(kind_of("café") == K::Identifier);
  CHECK(kind_of("$x_1") == K::Identifier);
  CHECK(kind_of("var") == K::Identifier);
}

TEST_CASE("operators use longest match") {
  ConcreteTokenStream s = lex("a>>>=b>>c->d::e...f");
  std::vector<std::string> lexemes;
  for (const auto& item : s.items) lexemes.push_back(item.token.lexeme);
  CHECK(lexemes == std::vector<std::string>{"a", ">>>=", "b", ">>", "c", "->", "d", "::", "e", "...", "f"});
}

TEST_CASE("annotation is a separator followed by an identifier") {
  ConcreteTokenStream s = lex("@Override");
  REQUIRE(s.size() == 2);
  CHECK(s.token(0).kind == TokenKind::Separator);
  CHECK(s.token(0).lexeme == "@");
  CHECK(s.token(1).kind == TokenKind::Identifier);
}

TEST_CASE("lex errors carry a position") {
  auto fails_at = [](std::string_view src, int line, int column) {
    CAPTURE(src);
    try {
      lex(src);
      FAIL("expected LexError");
    } catch (const LexError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == column);
    }
  };
  fails_at("int s = \"open;", 1, 9);
  fails_at("a\n  /* never closed", 2, 3);
  fails_at("char c = 'x", 1, 10);
  fails_at("int #x;", 1, 5);
  fails_at("a\r\nb", 1, 2);
}

TEST_CASE("delimiter balance") {
  CHECK_FALSE(find_unbalanced_delimiter(lex("f(a[1], {b});")).has_value());
  auto open = find_unbalanced_delimiter(lex("class A { void f() {}"));
  REQUIRE(open.has_value());
  CHECK(*open == 2);
  auto mismatched = find_unbalanced_delimiter(lex("f(a]"));
  REQUIRE(mismatched.has_value());
  CHECK(*mismatched == 3);
}

TEST_CASE("newline normalization round trip") {
  SourceText crlf = normalize_newlines("a\r\nb\r\nc\n");
  CHECK(crlf.text == "a\nb\nc\n");
  CHECK(crlf.ending == LineEnding::Crlf);
  CHECK(restore_newlines(crlf.text, crlf.ending) == "a\r\nb\r\nc\r\n");
  SourceText lf = normalize_newlines("a\nb\r\nc\n");
  CHECK(lf.ending == LineEnding::Lf);
}

TEST_CASE("random token soup round trips") {
  static const std::vector<std::string> lexemes = {
      "class", "int",  "x",      "value", "(",   ")",   "{",      "}",    "[",       "]",    ";",    ",",
      ".",     "=",    "+=",     ">>>",   "<",   ">",   "->",     "::",   "@",       "1",    "0x2A", "3.5f",
      "'c'",   "\"s\"", "true",  "null",  "// line\n", "/* block */", "/** doc\n */", "é", "...", "!",
  };
  static const std::vector<std::string> gaps = {"", " ", "  ", "\t", "\n", "\n    ", "\n\n\t", " \t "};
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_lexeme(0, lexemes.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_gap(1, gaps.size() - 1);
    std::string text;
    std::vector<std::string> expected;
    int n = std::uniform_int_distribution<int>(0, 40)(rng);
    for (int i = 0; i < n; ++i) {
      std::string lexeme = lexemes[pick_lexeme(rng)];
      bool line_comment = lexeme.starts_with("//");
      text += lexeme;
      if (line_comment) {
        expected.push_back(lexeme.substr(0, lexeme.size() - 1));
      } else {
        expected.push_back(lexeme);
      }
      // Separate tokens that would otherwise merge.
      text += line_comment ? std::string() : gaps[pick_gap(rng)];
    }
    CAPTURE(text);
    ConcreteTokenStream s = lex(text);
    REQUIRE(render(s) == text);
    std::vector<std::string> got;
    for (const auto& item : s.items) got.push_back(item.token.lexeme);
    CHECK(got == expected);
    CHECK(positions_consistent(s));
  }
}

TEST_CASE("trivia runs merge adjacent characters") {
  Trivia t = Trivia::from_text("  \t\n\n ");
  CHECK(t.runs == std::vector<TriviaRun>{{WhitespaceChar::Space, 2},
                                         {WhitespaceChar::Tab, 1},
                                         {WhitespaceChar::Newline, 2},
                                         {WhitespaceChar::Space, 1}});
  CHECK(t.text() == "  \t\n\n ");
  CHECK(t.newlines() == 2);
  CHECK(t.length() == 6);
}
