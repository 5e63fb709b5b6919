#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "crepair/checker.hpp"
#include "crepair/encoding.hpp"
#include "crepair/injection.hpp"
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

AbstractSequence enc(std::string_view text, IndentUnit unit = {}) { return encode(lex(text), {unit}); }

const fs::path kGolden = testing::fixtures_dir() / "golden";

}  // namespace

TEST_CASE("formatting vocabulary has 30 tokens that round trip through text") {
  for (IndentUnit unit : {IndentUnit{IndentChar::Space, 4}, IndentUnit{IndentChar::Space, 2},
                          IndentUnit{IndentChar::Tab, 1}}) {
    auto vocab = formatting_vocabulary(unit);
    CHECK(vocab.size() == 30);
    std::set<std::string> texts;
    for (const auto& t : vocab) {
      CAPTURE(t.text());
      auto parsed = FormattingToken::parse(t.text());
      REQUIRE(parsed.has_value());
      CHECK(*parsed == t);
      texts.insert(t.text());
    }
    CHECK(texts.size() == vocab.size());
  }
  CHECK(FormattingToken::newlines(1, 4).text() == "1_NL_4_ID");
  CHECK(FormattingToken::newlines(2, -8).text() == "2_NL_8_DD");
  CHECK(FormattingToken::newlines(1).text() == "1_NL");
  CHECK(FormattingToken::spaces(0).text() == "0_SP");
  CHECK(FormattingToken::tabs(2).text() == "2_TB");
  CHECK_FALSE(FormattingToken::parse("1_NL_0_ID").has_value());
  CHECK_FALSE(FormattingToken::parse("0_TB").has_value());
  CHECK_FALSE(FormattingToken::parse("x_SP").has_value());
  CHECK_FALSE(FormattingToken::parse("Identifier").has_value());
}

TEST_CASE("abstract token text") {
  auto text_of = [](std::string_view src) { return abstract_text(lex(src).token(0)); };
  CHECK(text_of("public") == "public");
  CHECK(text_of("{") == "{");
  CHECK(text_of(">>=") == ">>=");
  CHECK(text_of("nodeTypes") == "Identifier");
  CHECK(text_of("42") == "IntLiteral");
  CHECK(text_of("4.2") == "FloatLiteral");
  CHECK(text_of("\"s\"") == "StringLiteral");
  CHECK(text_of("'c'") == "CharLiteral");
  CHECK(text_of("true") == "BoolLiteral");
  CHECK(text_of("null") == "NullLiteral");
  CHECK(text_of("// c") == "Comment");
  CHECK(text_of("/* c */") == "Comment");
}

TEST_CASE("zero-width trivia encodes as 0_SP") {
  CHECK(to_text(enc("x=1;")) == "Identifier 0_SP = 0_SP IntLiteral 0_SP ;");
}

TEST_CASE("blank line between equally indented lines is 2_NL") {
  AbstractSequence s = enc("    a();\n\n    b();\n");
  CHECK(to_text(s) == "4_SP Identifier 0_SP ( 0_SP ) 0_SP ; 2_NL Identifier 0_SP ( 0_SP ) 0_SP ; 1_NL_4_DD");
}

TEST_CASE("indentation delta in characters") {
  AbstractSequence s = enc("a {\n    b;\n}\n");
  CHECK(to_text(s) == "Identifier 1_SP { 1_NL_4_ID Identifier 0_SP ; 1_NL_4_DD } 1_NL");
  AbstractSequence tabs = enc("a {\n\tb;\n}\n", {IndentChar::Tab, 1});
  CHECK(to_text(tabs) == "Identifier 1_SP { 1_NL_1_ID Identifier 0_SP ; 1_NL_1_DD } 1_NL");
}

TEST_CASE("delta oracle on fixture files") {
  // For consecutive non-blank lines, the newline token's delta equals the
  // difference of the leading-space counts.
  for (const auto& path : clean_corpus()) {
    std::string text = normalize_newlines(read_file(path)).text;
    if (text.find('\t') != std::string::npos) continue;
    AbstractSequence s = enc(text);
    for (std::size_t i = 1; i < s.size(); ++i) {
      const auto& f = s.formatting[i];
      if (!f.is_newline()) continue;
      const auto& prev = s.stream.token(s.alignment[i - 1]);
      const auto& next = s.stream.token(s.alignment[i]);
      auto indent_of_line = [&](int line) {
        std::size_t start = 0;
        for (int l = 1; l < line; ++l) start = text.find('\n', start) + 1;
        std::size_t n = 0;
        while (text[start + n] == ' ') ++n;
        return static_cast<int>(n);
      };
      // The previous token's line indentation is that of the line it starts on
      // only when it is not a multi-line token.
      if (end_position(prev).line != prev.line) continue;
      int delta = indent_of_line(next.line) - indent_of_line(prev.line);
      int capped = std::clamp(delta, -8, 8);
      if (capped % 4 != 0) continue;
      CAPTURE(path.string());
      CAPTURE(next.line);
      CHECK(f.delta == capped);
    }
  }
}

TEST_CASE("decode inverts encode on every fixture file") {
  for (const auto& path : clean_corpus()) {
    CAPTURE(path.string());
    std::string text = normalize_newlines(read_file(path)).text;
    ConcreteTokenStream stream = lex(text);
    IndentUnit unit = detect_indent_unit(std::span(&stream, 1));
    AbstractSequence s = encode(stream, {unit});
    CHECK(decode(s) == text);
    CHECK(s.formatting.size() == s.java.size() + 1);
    CHECK(s.alignment.size() == s.java.size());
  }
}

TEST_CASE("canonical decode of every formatting token is a fixpoint") {
  // Replacing same-line gaps by non-empty whitespace keeps tokens apart and
  // leaves every line's indentation alone, so re-encoding the decoded text
  // yields the same java and formatting tokens.
  AbstractSequence s = enc("class A {\n    void f() {\n        int x = 1;\n    }\n}\n");
  std::mt19937_64 rng(5);
  auto vocab = formatting_vocabulary({});
  for (int round = 0; round < 50; ++round) {
    std::vector<FormattingToken> f = s.formatting;
    for (std::size_t p = 1; p + 1 < f.size(); ++p) {
      if (!f[p].is_newline() && std::bernoulli_distribution(0.3)(rng)) {
        f[p] = vocab[std::uniform_int_distribution<std::size_t>(1, 14)(rng)];
      }
    }
    std::string text = decode(s, f);
    AbstractSequence again = enc(text);
    REQUIRE(again.java == s.java);
    CHECK(again.formatting == f);
  }
}

TEST_CASE("newline with delta materializes indentation") {
  AbstractSequence s = enc("  a b", {IndentChar::Space, 2});
  std::vector<FormattingToken> f = s.formatting;
  f[1] = FormattingToken::newlines(1, 4);
  CHECK(decode(s, f) == "  a\n      b");
  f[1] = FormattingToken::newlines(1);
  CHECK(decode(s, f) == "  a\n  b");
}

TEST_CASE("negative indentation is clamped with a warning") {
  AbstractSequence s = enc("a b");
  std::vector<FormattingToken> f = s.formatting;
  f[1] = FormattingToken::newlines(1, -4);
  std::vector<std::string> warnings;
  CHECK(decode(s, f, &warnings) == "a\nb");
  CHECK(warnings.size() == 1);
}

TEST_CASE("decode rejects a wrong number of formatting tokens") {
  AbstractSequence s = enc("a b");
  std::vector<FormattingToken> f(2, FormattingToken::spaces(1));
  CHECK_THROWS_AS(decode(s, f), DecodeError);
}

TEST_CASE("indent unit detection") {
  auto detect = [](std::vector<std::string> files) {
    std::vector<ConcreteTokenStream> streams;
    for (const auto& f : files) streams.push_back(lex(f));
    return detect_indent_unit(streams);
  };
  CHECK(detect({"a {\n    b;\n}\n", "c {\n    d {\n        e;\n    }\n}\n"}) == IndentUnit{IndentChar::Space, 4});
  CHECK(detect({"a {\n\tb;\n}\n", "c {\n\td {\n\t\te;\n\t}\n}\n"}) == IndentUnit{IndentChar::Tab, 1});
  std::vector<std::string> mixed;
  for (int i = 0; i < 7; ++i) mixed.push_back("a {\n  b;\n}\n");
  for (int i = 0; i < 3; ++i) mixed.push_back("a {\n\tb;\n}\n");
  CHECK(detect(mixed) == IndentUnit{IndentChar::Space, 2});
  CHECK(detect({"a b c;"}) == IndentUnit{IndentChar::Space, 4});
}

TEST_CASE("golden LeftCurly window") {
  std::string text = read_file(kGolden / "NodeRelationshipCache.java");
  AbstractSequence s = enc(text);
  Violation v{"NodeRelationshipCache.java", 812, 82, "LeftCurly", ""};
  ModelInput input = extract_error_window(s, v, {});
  std::string joined = input.text();
  auto open = joined.find("<LeftCurly>");
  auto close = joined.find("</LeftCurly>");
  REQUIRE(open != std::string::npos);
  REQUIRE(close != std::string::npos);
  CHECK(joined.substr(open, close + 12 - open) ==
        "<LeftCurly> Identifier 0_SP , 1_SP int 1_SP Identifier 1_SP ) 4_SP { 1_NL_4_ID long 1_SP Identifier "
        "1_SP = 1_SP Identifier 0_SP ( 1_SP </LeftCurly>");
  CHECK(formatting_text(input.span_formatting) == "0_SP 1_SP 1_SP 1_SP 4_SP 1_NL_4_ID 1_SP 1_SP 1_SP 0_SP 1_SP");
  // Context holds tokens starting on lines 807..817; the block comment above
  // the header starts on line 805.
  CHECK(s.stream.token(s.alignment[input.window_begin]).line == 812);
  CHECK(s.stream.token(s.alignment[input.window_begin - 1]).line == 805);
  CHECK(s.stream.token(s.alignment[input.window_end - 1]).line == 817);
  CHECK(s.stream.token(s.alignment[input.window_end]).line == 818);
}

TEST_CASE("applying the golden fix yields the repaired text") {
  std::string text = read_file(kGolden / "NodeRelationshipCache.java");
  std::string fixed = read_file(kGolden / "NodeRelationshipCache.fixed.java");
  AbstractSequence s = enc(text);
  ModelInput input = extract_error_window(s, {"", 812, 82, "LeftCurly", ""}, {});
  std::vector<FormattingToken> predicted = input.span_formatting;
  predicted[4] = FormattingToken::newlines(1);
  CHECK(decode(apply_formatting(s, input, predicted)) == fixed);
  // Targets come from the clean file at the same java positions.
  CHECK(align_target_window(enc(fixed), input) == predicted);
}

TEST_CASE("window at the first token is truncated and balanced") {
  AbstractSequence s = enc("class A {\n    int x;\n}\n");
  ModelInput input = extract_error_window(s, {"", 1, 1, "LeftCurly", ""}, {});
  CHECK(input.span_begin == 0);
  CHECK(input.window_begin == 0);
  CHECK(input.tokens.front() == "<LeftCurly>");
  CHECK(std::count(input.tokens.begin(), input.tokens.end(), "<LeftCurly>") == 1);
  CHECK(std::count(input.tokens.begin(), input.tokens.end(), "</LeftCurly>") == 1);
}

TEST_CASE("line-only window index arithmetic") {
  // Line 3 holds 5 tokens; i = 2 gives one pair before the line, j = 13 six
  // pairs after it, or fewer at the end of the file.
  std::string text = "a b;\nc d;\ne f g h i\nj k;\nl;\n";
  AbstractSequence s = enc(text);
  ModelInput input = extract_error_window(s, {"", 3, std::nullopt, "LineLength", ""}, {});
  const std::size_t first_on_line = 6;
  const std::size_t last_on_line = 10;
  REQUIRE(s.java[first_on_line] == "Identifier");
  CHECK(input.span_begin == first_on_line - 1);
  std::size_t remaining = s.size() - 1 - last_on_line;
  CHECK(input.span_end == last_on_line + 1 + std::min<std::size_t>(6, remaining));

  auto open = std::find(input.tokens.begin(), input.tokens.end(), "<LineLength>");
  auto close = std::find(input.tokens.begin(), input.tokens.end(), "</LineLength>");
  REQUIRE(open < close);
  // Tags never split a (java, formatting) pair.
  CHECK((close - open - 1) % 2 == 0);
  CHECK(static_cast<std::size_t>(close - open - 1) == 2 * (input.span_end - input.span_begin));
}

TEST_CASE("windows alternate java and formatting tokens with balanced tags") {
  for (const auto& path : clean_corpus()) {
    std::string text = normalize_newlines(read_file(path)).text;
    AbstractSequence s = enc(text);
    if (s.size() == 0) continue;
    std::mt19937_64 rng(std::hash<std::string>{}(path.filename().string()));
    for (int trial = 0; trial < 5; ++trial) {
      std::size_t t = std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng);
      const auto& tok = s.stream.token(s.alignment[t]);
      bool with_column = trial % 2 == 0;
      Violation v{"", tok.line, with_column ? std::optional<int>(tok.column) : std::nullopt, "Rule", ""};
      ModelInput input = extract_error_window(s, v, {});
      CAPTURE(path.string());
      CHECK(input.window_begin <= input.span_begin);
      CHECK(input.span_begin < input.span_end);
      CHECK(input.span_end <= input.window_end);
      CHECK(input.span_formatting.size() == input.formatting_positions());
      std::size_t tags = 0;
      bool inside = false;
      bool expect_java = true;
      for (const auto& token : input.tokens) {
        if (token == "<Rule>") {
          CHECK_FALSE(inside);
          CHECK(expect_java);
          inside = true;
          ++tags;
          continue;
        }
        if (token == "</Rule>") {
          CHECK(inside);
          CHECK(expect_java);
          inside = false;
          ++tags;
          continue;
        }
        CHECK(FormattingToken::parse(token).has_value() == !expect_java);
        expect_java = !expect_java;
      }
      CHECK(tags == 2);
      CHECK(expect_java);
    }
  }
}

TEST_CASE("column matching falls back to the nearest token start") {
  AbstractSequence s = enc("int    x = 1;\n");
  // Column 6 is whitespace between `int` and `x`.
  CHECK(locate_token(s, 1, 6) == 1);
  CHECK(locate_token(s, 1, 2) == 0);
  CHECK(locate_token(s, 1, std::nullopt) == 0);
  CHECK_THROWS_AS(locate_token(s, 5, 1), LocationError);
}

TEST_CASE("target alignment recovers the pre-mutation formatting") {
  Ruleset rs = parse_ruleset(R"(<module name="Checker"><module name="TreeWalker">
    <module name="WhitespaceAround"/><module name="ParenPad"/></module></module>)");
  int checked = 0;
  for (const auto& path : clean_corpus()) {
    std::string text = normalize_newlines(read_file(path)).text;
    if (!check(text, rs).clean()) continue;
    ConcreteTokenStream stream = lex(text);
    IndentUnit unit = detect_indent_unit(std::span(&stream, 1));
    Rng rng(std::hash<std::string>{}(path.string()));
    for (int attempt = 0; attempt < 10; ++attempt) {
      InjectionResult r = inject_random(text, rng, unit);
      // Replay the mutation log on the original text.
      std::string replay = text;
      replay.replace(r.mutation.offset, r.mutation.removed.size(), r.mutation.inserted);
      REQUIRE(replay == r.text);
      CheckResult result = check(r.text, rs);
      if (result.violations.size() != 1 || result.is_broken()) continue;
      AbstractSequence orig = encode(stream, {unit});
      AbstractSequence err = encode(lex(r.text), {unit});
      ModelInput input = extract_error_window(err, result.violations[0], {});
      auto target = align_target_window(orig, input);
      CHECK(target.size() == input.formatting_positions());
      std::size_t differing = 0;
      for (std::size_t p = 0; p < target.size(); ++p) differing += target[p] != input.span_formatting[p];
      CHECK(differing <= 1);
      // When the edit lies in the span, writing the target back restores the file.
      if (differing == 1) CHECK(decode(apply_formatting(err, input, target)) == text);
      ++checked;
    }
  }
  CHECK(checked >= 10);
}

TEST_CASE("alignment rejects different java sequences") {
  AbstractSequence a = enc("a b c;\n");
  AbstractSequence b = enc("a b;\n");
  ModelInput input = extract_error_window(a, {"", 1, 1, "R", ""}, {});
  CHECK_THROWS_AS(align_target_window(b, input), AlignmentError);
}

TEST_CASE("input text uses the dataset rendering") {
  AbstractSequence s = enc("x=1;");
  ModelInput input = extract_error_window(s, {"", 1, 2, "WhitespaceAround", ""}, {});
  CHECK(input.text() == "<WhitespaceAround> Identifier 0_SP = 0_SP IntLiteral 0_SP ; 0_SP </WhitespaceAround>");
  CHECK(split_tokens(input.text()) == input.tokens);
}
