#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "crepair/diff.hpp"
#include "crepair/pipeline.hpp"
#include "rule_fixtures.hpp"
#include "synthetic_java.hpp"

using namespace crepair;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  for (auto l : split_lines(text)) out.emplace_back(l);
  return out;
}

// Added plus deleted lines through a longest common subsequence table.
std::size_t lcs_diff_size(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::vector<std::size_t>> t(a.size() + 1, std::vector<std::size_t>(b.size() + 1, 0));
  for (std::size_t i = a.size(); i-- > 0;) {
    for (std::size_t j = b.size(); j-- > 0;) {
      t[i][j] = a[i] == b[j] ? t[i + 1][j + 1] + 1 : std::max(t[i + 1][j], t[i][j + 1]);
    }
  }
  return a.size() + b.size() - 2 * t[0][0];
}

// Applies a unified diff to `a`.
std::string apply_patch(std::string_view a, const std::string& patch) {
  auto old_lines = lines_of(a);
  auto patch_lines = lines_of(patch);
  std::string out;
  std::size_t next = 0;  // first old line not yet copied
  char last = 0;
  for (std::size_t k = 2; k < patch_lines.size(); ++k) {
    const std::string& l = patch_lines[k];
    if (l.starts_with("@@")) {
      std::size_t start = std::stoul(l.substr(4));
      std::size_t count_pos = l.find(',');
      bool empty_old = count_pos != std::string::npos && count_pos < l.find(' ', 4) &&
                       std::stoul(l.substr(count_pos + 1)) == 0;
      std::size_t first = empty_old ? start : start - 1;
      while (next < first) out += old_lines[next++];
      continue;
    }
    if (l == "\\ No newline at end of file\n") {
      // Old lines are copied with their own terminators.
      if (last == '+') out.pop_back();
      continue;
    }
    last = l[0];
    std::string body = l.substr(1);
    if (l[0] == ' ') {
      out += old_lines[next++];
    } else if (l[0] == '-') {
      ++next;
    } else if (l[0] == '+') {
      out += body;
    }
  }
  while (next < old_lines.size()) out += old_lines[next++];
  return out;
}

RepairCandidate candidate(int diff, CandidateSource source, int rank, std::string text) {
  RepairCandidate c;
  c.diff_lines = diff;
  c.source = source;
  c.beam_rank = rank;
  c.text = std::move(text);
  return c;
}

Ruleset spacing_rules() {
  return make_ruleset({{"WhitespaceAround", {}}, {"LeftCurly", {}}, {"ParenPad", {}}});
}

}  // namespace

TEST_CASE("line splitting keeps terminators") {
  CHECK(split_lines("a\nb\n") == std::vector<std::string_view>{"a\n", "b\n"});
  CHECK(split_lines("a\nb") == std::vector<std::string_view>{"a\n", "b"});
  CHECK(split_lines("").empty());
}

TEST_CASE("diff size matches an LCS oracle") {
  std::mt19937_64 rng(12);
  const std::vector<std::string> alphabet{"a\n", "b\n", "c\n", "{\n", "}\n", "    x;\n"};
  for (int trial = 0; trial < 300; ++trial) {
    auto random_text = [&] {
      std::string s;
      int n = std::uniform_int_distribution<int>(0, 12)(rng);
      for (int i = 0; i < n; ++i) s += alphabet[std::uniform_int_distribution<std::size_t>(0, 5)(rng)];
      if (n > 0 && std::bernoulli_distribution(0.2)(rng)) s.pop_back();
      return s;
    };
    std::string a = random_text();
    std::string b = random_text();
    CAPTURE(a);
    CAPTURE(b);
    CHECK(diff_size(a, b) == lcs_diff_size(lines_of(a), lines_of(b)));
    std::string patch = unified_diff(a, b, "a", "b");
    CHECK(apply_patch(a, patch) == b);
    CHECK(patch.empty() == (a == b));
  }
}

TEST_CASE("golden repair is a three-line diff") {
  const fs::path golden = testing::fixtures_dir() / "golden";
  std::string orig = read_file(golden / "NodeRelationshipCache.java");
  std::string fixed = read_file(golden / "NodeRelationshipCache.fixed.java");
  CHECK(diff_size(orig, fixed) == 3);
  CHECK(lcs_diff_size(lines_of(orig), lines_of(fixed)) == 3);
  std::string patch = unified_diff(orig, fixed, "a/NodeRelationshipCache.java", "b/NodeRelationshipCache.java");
  CHECK(patch.find("@@ -809,7 +809,8 @@") != std::string::npos);
  CHECK(apply_patch(orig, patch) == fixed);
}

TEST_CASE("repair selection order") {
  using S = CandidateSource;
  std::vector<RepairCandidate> c{candidate(3, S::Random, 1, "r1"), candidate(1, S::NGramBaseline, 1, "n1"),
                                 candidate(1, S::Random, 2, "r2"), candidate(1, S::ThreeGrams, 4, "t4"),
                                 candidate(1, S::ThreeGrams, 3, "t3")};
  CHECK(select_repair(c).text == "t3");
  c.pop_back();
  c.pop_back();
  CHECK(select_repair(c).text == "r2");
  c.pop_back();
  CHECK(select_repair(c).text == "n1");
  c.pop_back();
  CHECK(select_repair(c).text == "r1");
  c.clear();
  CHECK_THROWS_AS(select_repair(c), Error);
}

TEST_CASE("candidate verification verdicts") {
  Ruleset rules = spacing_rules();
  const std::string original = "class A {\n    void f() {\n        int x=1;\n    }\n}\n";
  CheckResult r = check(original, rules);
  REQUIRE(r.violations.size() == 2);
  const Violation v = r.violations.front();
  using S = CandidateSource;
  std::vector<RepairCandidate> c{
      candidate(1, S::Random, 1, "class A {\n    void f() {\n        int x = 1;\n    }\n}\n"),
      candidate(1, S::Random, 2, "class A {\n    void f() {\n        int x =1;\n    }\n}\n"),
      candidate(1, S::Random, 3, "class A {\n    void f() {\n        int x= 1;\n    }\n}\n"),
      candidate(1, S::Random, 4, "class A {\n    void f(){\n        int x= 1;\n    }\n}\n"),
      candidate(1, S::Random, 5, "class A {\n    void f() {\n        int x= 1;\n    }\n"),
      candidate(1, S::Random, 6, "class A {\n    void f() {\n        intx = 1;\n    }\n}\n"),
      candidate(1, S::Random, 7, "class A {\n    void f(){\n        int x = 1;\n    }\n}\n"),
  };
  // `x=1` reports two violations at the '=' token: the first sorts as
  // "is not followed".
  CHECK(v.message.find("followed") != std::string::npos);
  Verification ver = verify_candidates(c, rules, original, v, {});
  CHECK(ver.verdicts == std::vector<Verdict>{Verdict::Passing, Verdict::SameError, Verdict::SameError,
                                             Verdict::SamePlusNew, Verdict::Broken, Verdict::Broken,
                                             Verdict::NewError});
  CHECK(ver.passing == std::vector<std::size_t>{0});
  CHECK(ver.same_error == std::vector<std::size_t>{1, 2});
  CHECK(ver.same_plus_new == std::vector<std::size_t>{3});
  CHECK(ver.broken == std::vector<std::size_t>{4, 5});
  CHECK(ver.new_error == std::vector<std::size_t>{6});
  Verification parallel = verify_candidates(c, rules, original, v, {}, 4);
  CHECK(parallel.verdicts == ver.verdicts);
}

TEST_CASE("same error follows the token, not the line") {
  Ruleset rules = make_ruleset({{"WhitespaceAround", {}}});
  const std::string original = "class A {\n    int x=1;\n}\n";
  Violation v = check(original, rules).violations.front();
  // The violation moves to line 3 with its token.
  std::vector<RepairCandidate> c{candidate(1, CandidateSource::Random, 1, "class A {\n\n    int x=1;\n}\n")};
  CHECK(verify_candidates(c, rules, original, v, {}).verdicts == std::vector<Verdict>{Verdict::SameError});
}

TEST_CASE("repair with an empty baseline corpus leaves the error") {
  Ruleset rules = spacing_rules();
  ThreeGramCorpus empty;
  RepairModels models;
  models.baseline = &empty;
  const std::string text = "class A {\n    int x=1;\n}\n";
  RepairOutcome out = repair_file(text, rules, models);
  CHECK(out.category == Outcome::NotRepairedSameError);
  CHECK_FALSE(out.chosen.has_value());
  CHECK(out.text(text) == text);
  REQUIRE(out.candidates.size() == 1);
  CHECK(out.candidates[0].text == text);
}

TEST_CASE("baseline repair from corpus statistics") {
  Ruleset rules = spacing_rules();
  std::vector<AbstractSequence> seqs;
  for (const auto& f : testing::synthetic_project(51, {.files = 10})) seqs.push_back(encode(lex(f.text), {}));
  ThreeGramCorpus corpus = mine_3grams(seqs);
  RepairModels models;
  models.baseline = &corpus;
  const std::string text = "class A {\n    void f() {\n        int x=1;\n    }\n}\n";
  RepairOutcome out = repair_file(text, rules, models, {}, "A.java");
  REQUIRE(out.category == Outcome::RepairedNoError);
  REQUIRE(out.chosen.has_value());
  CHECK(out.chosen->source == CandidateSource::NGramBaseline);
  CHECK(out.chosen->text == "class A {\n    void f() {\n        int x = 1;\n    }\n}\n");
  CHECK(out.chosen->diff_lines == 2);
  CHECK(out.violation->file == "A.java");
  CHECK(out.elapsed >= 0);
}

TEST_CASE("repair preconditions") {
  Ruleset rules = spacing_rules();
  ThreeGramCorpus empty;
  RepairModels models;
  models.baseline = &empty;
  CHECK_THROWS_AS(repair_file("class A {\n}\n", rules, models), NothingToRepairError);
  CHECK(repair_file("class A {\n", rules, models).category == Outcome::Broken);
  CHECK_THROWS_AS(repair_file("class A {\n    int x=1;\n}\n", rules, RepairModels{}), Error);
}

TEST_CASE("percentiles interpolate between closest ranks") {
  CHECK(percentile({}, 50) == 0);
  CHECK(percentile({7}, 95) == 7);
  CHECK(percentile({4, 1, 3, 2}, 50) == doctest::Approx(2.5));
  CHECK(percentile({1, 2, 3, 4}, 0) == 1);
  CHECK(percentile({1, 2, 3, 4}, 100) == 4);
  CHECK(percentile({1, 2, 3, 4, 5}, 25) == doctest::Approx(2));
  CHECK(percentile({10, 20}, 5) == doctest::Approx(10.5));
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> v(std::uniform_int_distribution<int>(1, 30)(rng));
    for (auto& x : v) x = std::uniform_real_distribution<double>(-5, 5)(rng);
    auto sorted = v;
    std::sort(sorted.begin(), sorted.end());
    CHECK(percentile(v, 0) == sorted.front());
    CHECK(percentile(v, 100) == sorted.back());
    double prev = sorted.front();
    for (int p = 5; p <= 100; p += 5) {
      double q = percentile(v, p);
      CHECK(q >= prev);
      prev = q;
    }
  }
}

TEST_CASE("corpus evaluation accounting") {
  Ruleset rules = spacing_rules();
  auto clean = testing::synthetic_project(52, {.files = 10});
  std::vector<AbstractSequence> seqs;
  for (const auto& f : clean) seqs.push_back(encode(lex(f.text), {}));
  ThreeGramCorpus corpus = mine_3grams(seqs);

  GenerationConfig cfg;
  cfg.number_of_errors = 30;
  cfg.batch_size = 30;
  cfg.seed = 77;
  auto pairs = generate_training_set(rules, clean, cfg);
  Vocabulary vocab = build_vocab(pairs, rules, {});
  Hyperparams hp;
  hp.units = 16;
  hp.embedding = 8;
  Seq2SeqModel random_init(vocab, hp);
  std::mt19937_64 rng(1);
  random_init.network().initialize(rng, 0.1f);

  std::vector<ErrorFile> files;
  for (const auto& p : pairs) files.push_back({p.source_path, p.err_file});
  RepairModels models;
  models.random = &random_init;
  models.baseline = &corpus;
  RepairOptions options;
  options.beam.width = 3;
  EvaluationReport report = evaluate_corpus(files, rules, models, options);

  CHECK(report.total == files.size());
  CHECK(report.files.size() == files.size());
  std::size_t sum = 0;
  for (const auto& [o, n] : report.categories) sum += n;
  CHECK(sum == report.total);
  std::size_t per_rule = 0;
  for (const auto& [rule, row] : report.per_rule) {
    for (const auto& [o, n] : row) per_rule += n;
  }
  CHECK(per_rule == report.total);
  CHECK(report.exclusive_random + report.exclusive_three_grams + report.both + report.baseline_only ==
        report.repaired());
  CHECK(report.exclusive_three_grams == 0);
  CHECK(report.both == 0);
  std::size_t with_diff = 0;
  std::vector<double> diffs;
  for (const auto& f : report.files) {
    CHECK(f.candidates <= 4);
    CHECK(f.diff_lines.has_value() == (f.category == Outcome::RepairedNoError));
    if (f.diff_lines) {
      ++with_diff;
      diffs.push_back(*f.diff_lines);
      CHECK(*f.diff_lines >= 1);
    }
  }
  CHECK(with_diff == report.repaired());
  CHECK(report.repaired() > 0);
  for (int p : {5, 25, 50, 75, 95}) CHECK(report.diff_percentiles.at(p) == percentile(diffs, p));
  std::vector<double> secs;
  for (const auto& f : report.files) secs.push_back(f.seconds);
  CHECK(report.median_seconds == percentile(secs, 50));

  auto json = report.to_json();
  CHECK(json.find("\"repaired_no_error\"") != std::string::npos);
  CHECK_FALSE(report.to_text().empty());
}
