#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <set>

#include "crepair/checker.hpp"
#include "rule_fixtures.hpp"
#include "synthetic_java.hpp"

using namespace crepair;
namespace fs = std::filesystem;

namespace {

std::vector<testing::RuleCase> all_rule_cases() {
  std::vector<testing::RuleCase> cases;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(testing::fixtures_dir() / "rules")) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    auto more = testing::load_rule_fixture(f);
    cases.insert(cases.end(), more.begin(), more.end());
  }
  return cases;
}

std::vector<std::string> report_lines(const CheckResult& result) {
  std::vector<std::string> out;
  for (const auto& v : result.violations) out.push_back(format_report(v));
  return out;
}

Ruleset single_rule(const testing::RuleCase& c) { return make_ruleset({{c.rule, c.properties}}); }

}  // namespace

TEST_CASE("every supported rule has violating and clean fixtures") {
  auto cases = all_rule_cases();
  for (std::string_view rule : supported_rules()) {
    CAPTURE(rule);
    auto count = [&](bool violating) {
      return std::count_if(cases.begin(), cases.end(),
                           [&](const auto& c) { return c.rule == rule && c.violating == violating; });
    };
    CHECK(count(true) >= 3);
    CHECK(count(false) >= 3);
  }
}

TEST_CASE("rule fixtures produce exactly the expected reports") {
  for (const auto& c : all_rule_cases()) {
    CAPTURE(c.rule);
    CAPTURE(c.name);
    CheckResult result = check(c.source, single_rule(c), testing::kFixtureFileName);
    REQUIRE_FALSE(result.is_broken());
    CHECK(report_lines(result) == c.expected);
    if (c.violating) {
      CHECK_FALSE(c.expected.empty());
    } else {
      CHECK(c.expected.empty());
    }
  }
}

TEST_CASE("violations are sorted and scoped to enabled rules") {
  std::vector<RuleConfig> all;
  for (std::string_view rule : supported_rules()) all.push_back({std::string(rule), {}});
  Ruleset rs = make_ruleset(all);
  for (const auto& c : all_rule_cases()) {
    if (!c.properties.empty()) continue;
    CheckResult result = check(c.source, rs, testing::kFixtureFileName);
    CAPTURE(c.name);
    REQUIRE_FALSE(result.is_broken());
    auto key = [](const Violation& v) { return std::tuple(v.line, v.column.value_or(0), v.rule, v.message); };
    CHECK(std::is_sorted(result.violations.begin(), result.violations.end(),
                         [&](const auto& a, const auto& b) { return key(a) < key(b); }));
    // Every report of the single-rule run also appears in the full run.
    auto full = report_lines(result);
    for (const auto& line : c.expected) CHECK(std::find(full.begin(), full.end(), line) != full.end());
  }
}

TEST_CASE("checking is deterministic and independent of other files") {
  Ruleset rs = make_ruleset({{"WhitespaceAround", {}}, {"LeftCurly", {}}, {"Indentation", {}}});
  auto files = testing::synthetic_project(3, {.files = 5});
  for (const auto& f : files) {
    CHECK(check(f.text, rs, f.path).violations == check(f.text, rs, f.path).violations);
  }
}

TEST_CASE("synthetic projects satisfy the default rules") {
  std::vector<RuleConfig> rules;
  for (std::string_view rule : supported_rules()) {
    if (rule == "RegexpSingleline") continue;
    rules.push_back({std::string(rule), {}});
  }
  Ruleset rs = make_ruleset(rules);
  for (const auto& f : testing::synthetic_project(21, {.files = 10})) {
    CAPTURE(f.path);
    CheckResult result = check(f.text, rs, f.path);
    CHECK(report_lines(result) == std::vector<std::string>{});
  }
}

TEST_CASE("broken sources are flagged") {
  Ruleset rs = make_ruleset({{"WhitespaceAround", {}}});
  CHECK(check("class A { \"open", rs).is_broken());
  CHECK(check("class A { void f( }", rs).is_broken());
  CHECK(check("class A {", rs).is_broken());
  CHECK_FALSE(check("class A {}", rs).is_broken());
}

TEST_CASE("report grammar round trip") {
  Violation with_col{"src/A.java", 12, 7, "ParenPad", "'(' is followed by whitespace."};
  CHECK(format_report(with_col) == "[ERROR] src/A.java:12:7: '(' is followed by whitespace. [ParenPad]");
  CHECK(parse_report(format_report(with_col)) == with_col);
  Violation line_only{"A.java", 3, std::nullopt, "LineLength", "Line is longer than 80 characters (found 91)."};
  CHECK(format_report(line_only) == "[ERROR] A.java:3: Line is longer than 80 characters (found 91). [LineLength]");
  CHECK(parse_report(format_report(line_only)) == line_only);
  // Messages may contain ':' and '[' characters.
  Violation tricky{"A.java", 1, 2, "GenericWhitespace", "'<' is followed by whitespace: [x]."};
  CHECK(parse_report(format_report(tricky)) == tricky);
  CHECK_FALSE(parse_report("A.java:1:2: no prefix [Rule]").has_value());
  CHECK_FALSE(parse_report("[ERROR] A.java:x: bad line [Rule]").has_value());
  CHECK_FALSE(parse_report("[ERROR] A.java:1: no rule").has_value());
}

TEST_CASE("ruleset parsing") {
  Ruleset rs = parse_ruleset(R"(<?xml version="1.0"?>
<!DOCTYPE module PUBLIC "-//Checkstyle//DTD Checkstyle Configuration 1.3//EN" "x.dtd">
<module name="Checker">
  <property name="charset" value="UTF-8"/>
  <module name="FileTabCharacter"/>
  <module name="LineLength"><property name="max" value="100"/></module>
  <module name="TreeWalker">
    <property name="tabWidth" value="4"/>
    <module name="LeftCurly"><property name="option" value="nl"/></module>
    <module name="JavadocMethod"/>
  </module>
</module>)");
  CHECK(rs.rule_names() == std::vector<std::string>{"FileTabCharacter", "LineLength", "LeftCurly"});
  CHECK(rs.tab_width == 4);
  CHECK(rs.contains("LeftCurly"));
  CHECK_FALSE(rs.contains("JavadocMethod"));
  REQUIRE(rs.warnings.size() == 1);
  CHECK(rs.warnings[0].find("JavadocMethod") != std::string::npos);
  CHECK(rs.rules[1].properties.at("max") == "100");
}

TEST_CASE("ruleset errors") {
  auto rejects = [](std::string_view xml) {
    CAPTURE(xml);
    CHECK_THROWS_AS(parse_ruleset(xml), ConfigError);
  };
  rejects("<module name=\"Checker\"><module name=\"NoSuchRule\"/></module>");
  rejects("<module name=\"Checker\"><module name=\"LineLength\"><property name=\"max\" value=\"${max}\"/>"
          "</module></module>");
  rejects("<module name=\"Checker\"><module name=\"LineLength\"><property name=\"max\" value=\"ten\"/>"
          "</module></module>");
  rejects("<module name=\"Checker\"><module name=\"LeftCurly\"><property name=\"option\" value=\"middle\"/>"
          "</module></module>");
  rejects("<module name=\"Checker\"><module name=\"ParenPad\"><property name=\"colour\" value=\"x\"/>"
          "</module></module>");
  rejects("<module name=\"TreeWalker\"/>");
  rejects("<module name=\"Checker\"><module");
  CHECK_THROWS_AS(make_ruleset({{"LeftCurly", {{"option", "sideways"}}}}), ConfigError);
  CHECK_THROWS_AS(load_ruleset("/nonexistent/ruleset.xml"), ConfigError);
}

TEST_CASE("supported rules") {
  auto rules = supported_rules();
  CHECK(rules.size() == 18);
  std::set<std::string_view> unique(rules.begin(), rules.end());
  CHECK(unique.size() == rules.size());
}
