// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <regex>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "cli.hpp"
#include "crepair/checker.hpp"
#include "crepair/dataset.hpp"
#include "crepair/diff.hpp"
#include "crepair/model.hpp"
#include "crepair/pipeline.hpp"
#include "rule_fixtures.hpp"
#include "synthetic_java.hpp"

using namespace crepair;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Result {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void expect(bool ok, std::string what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 10) failures.push_back(std::move(what));
  }
};

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / fs::path("crepair_acceptance_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& p, std::string_view text) {
  fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << text;
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lexemes(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& item : lex(text).items) out.push_back(item.token.lexeme);
  return out;
}

// Plain O(nm) longest common subsequence over lines.
std::size_t lcs_diff_size(std::string_view a, std::string_view b) {
  auto split = [](std::string_view s) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < s.size()) {
      std::size_t nl = s.find('\n', start);
      if (nl == std::string_view::npos) nl = s.size();
      lines.push_back(s.substr(start, nl - start));
      start = nl + 1;
    }
    return lines;
  };
  auto x = split(a);
  auto y = split(b);
  std::vector<std::vector<std::size_t>> t(x.size() + 1, std::vector<std::size_t>(y.size() + 1, 0));
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= y.size(); ++j) {
      t[i][j] = x[i - 1] == y[j - 1] ? t[i - 1][j - 1] + 1 : std::max(t[i - 1][j], t[i][j - 1]);
    }
  }
  return x.size() + y.size() - 2 * t[x.size()][y.size()];
}

const fs::path kGolden = testing::fixtures_dir() / "golden";

// ---------------------------------------------------------------------------

Result golden() {
  Result r;
  TempDir tmp;
  testing::SyntheticOptions opts{.files = 40, .brace_on_new_line = true, .pad_parentheses = true};
  for (const auto& f : testing::synthetic_project(5, opts)) write_file(tmp.path / "src" / f.path, f.text);
  fs::copy_file(kGolden / "left_curly_nl.xml", tmp.path / "left_curly_nl.xml");
  const std::string cfg = (tmp.path / "p.toml").string();
  write_file(cfg,
             "ruleset = \"left_curly_nl.xml\"\n"
             "corpus = \"src/**/*.java\"\n"
             "seed = 1\n"
             "\n"
             "[generation]\n"
             "number_of_errors = 800\n");

  Run gen = run({"generate", "--config", cfg, "--protocol", "random"});
  r.expect(gen.code == cli::kExitOk, "generate failed: " + gen.err);
  Run train_run = run({"train", "--config", cfg, "--protocol", "random"});
  r.expect(train_run.code == cli::kExitOk, "train failed: " + train_run.err);
  if (!r.pass) return r;

  const std::string broken = read_file(kGolden / "NodeRelationshipCache.java");
  const std::string fixed = read_file(kGolden / "NodeRelationshipCache.fixed.java");
  const fs::path target = tmp.path / "NodeRelationshipCache.java";
  write_file(target, broken);

  auto start = Clock::now();
  Run diff = run({"repair", target.string(), "--config", cfg, "--diff"});
  const double repair_seconds = seconds_since(start);
  r.expect(diff.code == cli::kExitOk, fmt::format("repair --diff exited {}: {}", diff.code, diff.err));
  r.expect(diff.out.find("\n-    public void visitChangedNodes( NodeChangeVisitor visitor, int nodeTypes )    {\n"
                         "+    public void visitChangedNodes( NodeChangeVisitor visitor, int nodeTypes )\n"
                         "+    {\n") != std::string::npos,
           "diff does not move the brace:\n" + diff.out);
  r.expect(repair_seconds < 5.0, fmt::format("repair took {:.2f} s", repair_seconds));

  Run printed = run({"repair", target.string(), "--config", cfg});
  r.expect(printed.code == cli::kExitOk && printed.out == fixed, "repaired text differs from the expected fix");
  Run in_place = run({"repair", target.string(), "--config", cfg, "--in-place"});
  r.expect(in_place.code == cli::kExitOk && read_file(target) == fixed, "in-place repair differs");

  // The encoded window and the applied change.
  Ruleset rules = load_ruleset((kGolden / "left_curly_nl.xml").string());
  Seq2SeqModel model = load_model(tmp.path / "models" / "random.crpr");
  RepairOutcome outcome = repair_file(broken, rules, {&model, nullptr, nullptr}, {}, "NodeRelationshipCache.java");
  r.expect(outcome.category == Outcome::RepairedNoError, "outcome is " + std::string(to_string(outcome.category)));
  if (outcome.input && outcome.chosen) {
    const std::string text = outcome.input->text();
    const std::string expected_span =
        "<LeftCurly> Identifier 0_SP , 1_SP int 1_SP Identifier 1_SP ) 4_SP { 1_NL_4_ID long 1_SP Identifier "
        "1_SP = 1_SP Identifier 0_SP ( 1_SP </LeftCurly>";
    r.expect(text.find(expected_span) != std::string::npos, "window differs: " + text);
    // Extra predictions are dropped, missing ones keep the input's tokens.
    const auto& before = outcome.input->span_formatting;
    const auto& predicted = outcome.chosen->predicted;
    std::vector<FormattingToken> applied = before;
    std::copy_n(predicted.begin(), std::min(predicted.size(), applied.size()), applied.begin());
    std::vector<std::string> changes;
    for (std::size_t i = 0; i < before.size(); ++i) {
      if (before[i] != applied[i]) changes.push_back(before[i].text() + "->" + applied[i].text());
    }
    r.expect(changes == std::vector<std::string>{"4_SP->1_NL"},
             "applied change: " + formatting_text(before) + " => " + formatting_text(applied));
    r.detail = fmt::format("{} predicted for {} positions, ", predicted.size(), before.size());
  } else {
    r.expect(false, "no window or no chosen candidate");
  }
  r.detail += fmt::format("repair {:.2f} s", repair_seconds);
  return r;
}

Result round_trip() {
  Result r;
  std::size_t files = 0;
  std::set<TokenKind> kinds;
  std::set<std::string> formatting;  // SP, TB, NL, NL_ID, NL_DD
  const std::regex digits(R"(\d+_?)");
  for (const auto& e : fs::recursive_directory_iterator(testing::fixtures_dir() / "clean")) {
    if (!e.is_regular_file() || e.path().extension() != ".java") continue;
    const std::string text = read_file(e.path());
    ConcreteTokenStream stream = lex(text);
    for (const auto& item : stream.items) kinds.insert(item.token.kind);
    r.expect(render(stream) == text, "render(lex) differs: " + e.path().filename().string());
    AbstractSequence seq = encode(lex(text), {detect_indent_unit(std::span(&stream, 1))});
    for (const auto& f : seq.formatting) formatting.insert(std::regex_replace(f.text(), digits, ""));
    r.expect(decode(seq) == text, "decode(encode) differs: " + e.path().filename().string());
    ++files;
  }
  r.expect(files >= 50, fmt::format("only {} files", files));
  const std::size_t all_kinds = static_cast<std::size_t>(TokenKind::BlockComment) + 1;
  r.expect(kinds.size() == all_kinds, fmt::format("{} of {} token kinds", kinds.size(), all_kinds));
  r.expect(formatting.size() >= 5, fmt::format("formatting classes: {}", fmt::join(formatting, " ")));
  r.detail = fmt::format("{} files, {} token kinds, formatting {}", files, kinds.size(), fmt::join(formatting, " "));
  return r;
}

Result checker() {
  Result r;
  const std::regex grammar(R"(\[ERROR\] [^:]+:\d+(:\d+)?: .+ \[[A-Za-z]+\])");
  std::size_t cases = 0;
  for (std::string_view rule : supported_rules()) {
    const fs::path path = testing::fixtures_dir() / "rules" / (std::string(rule) + ".txt");
    std::vector<testing::RuleCase> fixture;
    try {
      fixture = testing::load_rule_fixture(path);
    } catch (const std::exception& e) {
      r.expect(false, fmt::format("{}: {}", rule, e.what()));
      continue;
    }
    int bad = 0, good = 0;
    for (const auto& c : fixture) {
      (c.violating ? bad : good)++;
      Ruleset rules = make_ruleset({{c.rule, c.properties}});
      CheckResult result = check(c.source, rules, testing::kFixtureFileName);
      std::vector<std::string> lines;
      for (const auto& v : result.violations) {
        std::string line = format_report(v);
        r.expect(std::regex_match(line, grammar), "report grammar: " + line);
        r.expect(parse_report(line) == v, "report does not parse back: " + line);
        lines.push_back(std::move(line));
      }
      r.expect(!result.broken, fmt::format("{}/{} does not parse", rule, c.name));
      r.expect(lines == c.expected, fmt::format("{}/{} reports differ", rule, c.name));
      ++cases;
    }
    r.expect(bad >= 3 && good >= 3, fmt::format("{}: {} bad, {} good", rule, bad, good));
  }
  r.detail = fmt::format("{} rules, {} cases", supported_rules().size(), cases);
  return r;
}

Result injection() {
  Result r;
  const auto files = testing::synthetic_project(21, {.files = 40});
  Ruleset rules = make_ruleset({{"WhitespaceAround", {}},
                                {"ParenPad", {}},
                                {"LeftCurly", {}},
                                {"RightCurly", {}},
                                {"MethodParamPad", {}},
                                {"WhitespaceAfter", {}},
                                {"NoWhitespaceBefore", {}}});
  std::vector<AbstractSequence> seqs;
  for (const auto& f : files) seqs.push_back(encode(lex(f.text), {}));
  ThreeGramCorpus grams = mine_3grams(seqs);

  std::size_t checked = 0;
  for (Protocol protocol : {Protocol::Random, Protocol::ThreeGrams}) {
    GenerationConfig cfg;
    cfg.protocol = protocol;
    cfg.number_of_errors = 1000;
    cfg.seed = 11;
    cfg.jobs = 4;
    auto pairs = generate_training_set(rules, files, cfg, &grams);
    r.expect(pairs.size() == 1000, fmt::format("{} pairs", pairs.size()));

    // Re-check what was written to disk, not the in-memory pairs.
    TempDir tmp;
    write_dataset(tmp.path, pairs, protocol);
    auto stored = read_dataset(tmp.path, protocol);
    for (const auto& pair : stored) {
      const std::string err = read_file(tmp.path / std::string(to_string(protocol)) / pair.id / "err.java");
      const std::string orig = read_file(tmp.path / std::string(to_string(protocol)) / pair.id / "orig.java");
      CheckResult e = check(err, rules, pair.source_path);
      r.expect(e.violations.size() == 1 && !e.broken, pair.id + ": err does not hold exactly one violation");
      CheckResult o = check(orig, rules, pair.source_path);
      r.expect(o.clean(), pair.id + ": orig is not clean");
      r.expect(lexemes(err) == lexemes(orig), pair.id + ": java tokens differ");
      ++checked;
    }

    cfg.jobs = 1;
    auto again = generate_training_set(rules, files, cfg, &grams);
    bool same = again.size() == pairs.size();
    for (std::size_t i = 0; same && i < pairs.size(); ++i) {
      same = again[i].err_file == pairs[i].err_file && again[i].input.tokens == pairs[i].input.tokens &&
             again[i].target == pairs[i].target;
    }
    r.expect(same, std::string(to_string(protocol)) + ": regeneration differs");
  }
  r.detail = fmt::format("{} pairs re-checked, regeneration identical", checked);
  return r;
}

Result sampling() {
  Result r;
  // A corpus in which only the `) {` context has alternatives.
  const std::string file = "class A {\n    void f() {\n    }\n}\n";
  AbstractSequence seq = encode(lex(file), {});
  ThreeGramCorpus grams;
  for (std::size_t p = 1; p < seq.size(); ++p) grams.add({seq.java[p - 1], seq.formatting[p], seq.java[p]});
  const std::map<FormattingToken, std::uint64_t> extra{{FormattingToken::spaces(1), 49},
                                                       {FormattingToken::newlines(1), 30},
                                                       {FormattingToken::spaces(0), 15},
                                                       {FormattingToken::spaces(2), 5}};
  for (const auto& [token, count] : extra) grams.add({")", token, "{"}, count);

  const int draws = 10000;
  auto entries = grams.matches(")", "{");
  std::uint64_t total = 0;
  for (const auto& [token, count] : entries) total += count;
  Rng rng(77);
  std::map<FormattingToken, int> seen;
  for (int i = 0; i < draws; ++i) ++seen[sample_formatting(entries, rng)];
  double worst = 0;
  for (const auto& [token, count] : entries) {
    worst = std::max(worst, std::abs(seen[token] / double(draws) - count / double(total)));
  }

  // Injection redraws the original token, so replacements follow the
  // frequencies of the other tokens.
  // A position is skipped when every redraw hits the original; that leaves
  // the distribution over the other tokens unchanged.
  std::map<std::string, int> replaced;
  Rng inj(78);
  int injected = 0;
  while (injected < draws) {
    try {
      ++replaced[inject_3gram(file, grams, inj, {}).mutation.after_token];
      ++injected;
    } catch (const NoMatchError&) {
    }
  }
  std::uint64_t others = total - grams.count({")", FormattingToken::spaces(1), "{"});
  for (const auto& [token, count] : entries) {
    if (token == FormattingToken::spaces(1)) {
      r.expect(replaced[token.text()] == 0, "original token drawn as replacement");
      continue;
    }
    worst = std::max(worst, std::abs(replaced[token.text()] / double(draws) - count / double(others)));
  }
  r.expect(worst <= 0.03, fmt::format("deviation {:.4f}", worst));
  r.detail = fmt::format("max deviation {:.4f} over {} draws", worst, draws);
  return r;
}

Batch random_batch(std::mt19937_64& rng, int in_vocab, int out_vocab, int size) {
  Batch b;
  for (int i = 0; i < size; ++i) {
    int src_len = std::uniform_int_distribution<int>(1, 5)(rng);
    int tgt_len = std::uniform_int_distribution<int>(0, 4)(rng);
    std::vector<int> src, tgt;
    for (int t = 0; t < src_len; ++t) src.push_back(std::uniform_int_distribution<int>(3, in_vocab - 1)(rng));
    for (int t = 0; t < tgt_len; ++t) tgt.push_back(std::uniform_int_distribution<int>(3, out_vocab - 1)(rng));
    b.sources.push_back(std::move(src));
    b.targets.push_back(std::move(tgt));
  }
  return b;
}

Result numerics() {
  Result r;
  int configs = 0;
  double worst_gradient = 0;
  for (Attention attention : {Attention::General, Attention::Mlp}) {
    for (int layers : {1, 2}) {
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        NetworkShape shape;
        shape.input_vocab = 9;
        shape.output_vocab = 7;
        shape.embedding = 3 + static_cast<int>(seed % 3);
        shape.units = seed % 2 == 0 ? 4 : 6;
        shape.layers = layers;
        shape.attention = attention;
        Network<double> net(shape);
        std::mt19937_64 rng(seed + 100);
        net.initialize(rng, 0.5);
        Batch batch = random_batch(rng, shape.input_vocab, shape.output_vocab, 3);
        Parameters<double> grads;
        net.loss(batch, &grads);
        double diff_sq = 0, norm_sq = 0;
        const double h = 1e-5;
        for (std::size_t t = 0; t < net.params().tensors.size(); ++t) {
          auto& w = net.params().tensors[t];
          for (Eigen::Index i = 0; i < w.size(); ++i) {
            const double saved = w.data()[i];
            w.data()[i] = saved + h;
            const double up = net.loss(batch);
            w.data()[i] = saved - h;
            const double down = net.loss(batch);
            w.data()[i] = saved;
            const double numeric = (up - down) / (2 * h);
            const double analytic = grads.tensors[t].data()[i];
            diff_sq += (numeric - analytic) * (numeric - analytic);
            norm_sq += numeric * numeric + analytic * analytic;
          }
        }
        const double rel = std::sqrt(diff_sq) / std::sqrt(norm_sq);
        worst_gradient = std::max(worst_gradient, rel);
        ++configs;
      }
    }
  }
  r.expect(configs >= 20, fmt::format("{} configurations", configs));
  r.expect(worst_gradient <= 1e-4, fmt::format("gradient relative error {:.2e}", worst_gradient));

  // Single repeated pair at the default hyperparameters.
  Ruleset rules = make_ruleset({{"WhitespaceAround", {}}, {"ParenPad", {}}, {"LeftCurly", {}}});
  GenerationConfig cfg;
  cfg.number_of_errors = 4;
  cfg.seed = 6;
  auto pairs = generate_training_set(rules, testing::synthetic_project(42, {.files = 6}), cfg);
  Vocabulary vocab = build_vocab(pairs, rules, {});
  std::vector<TrainingPair> one{pairs.front()};
  auto samples = make_samples(one, vocab);
  Hyperparams hp;
  hp.max_iterations = 200;
  hp.eval_every = 200;
  hp.seed = 1;
  Seq2SeqModel model = train_samples(samples, samples, vocab, hp);
  LossStats stats = evaluate_loss(model, samples, 1);
  r.expect(stats.correct == stats.tokens, fmt::format("memorized {}/{} tokens", stats.correct, stats.tokens));

  // Output distributions of the trained and of an untrained model.
  double worst_sum = 0;
  Seq2SeqModel fresh(vocab, hp);
  std::mt19937_64 rng(5);
  fresh.network().initialize(rng, 0.5f);
  for (const Seq2SeqModel* m : {&model, &fresh}) {
    for (const auto& pair : pairs) {
      const auto& net = m->network();
      auto enc = net.encode(vocab.encode_input(pair.input));
      auto state = net.initial_state(enc, 1);
      int last = kBos;
      for (const auto& t : pair.target) {
        auto logp = net.step(enc, state, {last});
        double sum = 0;
        for (Eigen::Index v = 0; v < logp.rows(); ++v) sum += std::exp(static_cast<double>(logp(v, 0)));
        worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
        last = vocab.output_id(t);
      }
    }
  }
  r.expect(worst_sum <= 1e-6, fmt::format("distribution off by {:.2e}", worst_sum));
  r.detail = fmt::format("{} gradient configs (max rel {:.2e}), memorized {}/{}, max |sum-1| {:.1e}", configs,
                         worst_gradient, stats.correct, stats.tokens, worst_sum);
  return r;
}

// Shared by the learning, selection, taxonomy and latency criteria.
struct LearningRun {
  Ruleset rules;
  std::vector<ErrorFile> held_out;
  ThreeGramCorpus corpus;
  std::optional<Seq2SeqModel> random_model, three_gram_model;
  EvaluationReport pipeline, baseline;
  double seconds = 0;
};

LearningRun learn() {
  auto start = Clock::now();
  LearningRun run{parse_ruleset(testing::ruleset_xml(std::vector<std::string>{"LeftCurly", "WhitespaceAround",
                                                                              "ParenPad"}))};
  const auto train_files = testing::synthetic_project(1, {.files = 60});
  const auto held_files = testing::synthetic_project(2, {.files = 20});
  std::vector<ConcreteTokenStream> streams;
  for (const auto& f : train_files) streams.push_back(lex(f.text));
  const IndentUnit unit = detect_indent_unit(streams);
  std::vector<AbstractSequence> seqs;
  for (auto& s : streams) seqs.push_back(encode(std::move(s), {unit}));
  run.corpus = mine_3grams(seqs);

  GenerationConfig cfg;
  cfg.number_of_errors = 800;
  cfg.unit = unit;
  cfg.seed = 7;
  cfg.protocol = Protocol::Random;
  auto random_pairs = generate_training_set(run.rules, train_files, cfg);
  cfg.protocol = Protocol::ThreeGrams;
  auto gram_pairs = generate_training_set(run.rules, train_files, cfg, &run.corpus);

  Hyperparams hp;
  hp.seed = 3;
  run.random_model = train(random_pairs, build_vocab(random_pairs, run.rules, unit), hp);
  run.three_gram_model = train(gram_pairs, build_vocab(gram_pairs, run.rules, unit), hp);

  cfg.number_of_errors = 50;
  cfg.seed = 99;
  cfg.protocol = Protocol::Random;
  for (const auto& p : generate_training_set(run.rules, held_files, cfg)) run.held_out.push_back({p.id + "r", p.err_file});
  cfg.protocol = Protocol::ThreeGrams;
  for (const auto& p : generate_training_set(run.rules, held_files, cfg, &run.corpus)) {
    run.held_out.push_back({p.id + "t", p.err_file});
  }

  run.pipeline = evaluate_corpus(run.held_out, run.rules, {&*run.random_model, &*run.three_gram_model, nullptr});
  run.baseline = evaluate_corpus(run.held_out, run.rules, {nullptr, nullptr, &run.corpus});
  run.seconds = seconds_since(start);
  return run;
}

Result learning(const LearningRun& run) {
  Result r;
  const double total = static_cast<double>(run.pipeline.total);
  const double pipeline = run.pipeline.categories.at(Outcome::RepairedNoError) / total;
  const double baseline = run.baseline.categories.at(Outcome::RepairedNoError) / total;
  r.expect(run.pipeline.total == 100, fmt::format("{} held-out errors", run.pipeline.total));
  r.expect(pipeline >= 0.70, fmt::format("pipeline repaired {:.0f}%", 100 * pipeline));
  r.expect(baseline >= 0.40, fmt::format("baseline repaired {:.0f}%", 100 * baseline));
  r.expect(run.seconds <= 1800, fmt::format("took {:.0f} s", run.seconds));
  r.detail = fmt::format("pipeline {:.0f}%, baseline {:.0f}%, {:.0f} s", 100 * pipeline, 100 * baseline, run.seconds);
  return r;
}

Result selection(const LearningRun& run) {
  Result r;
  const RepairModels models{&*run.random_model, &*run.three_gram_model, nullptr};
  std::size_t repaired = 0;
  for (const auto& e : run.held_out) {
    RepairOutcome outcome = repair_file(e.text, run.rules, models, {}, e.path);
    r.expect(outcome.candidates.size() == 10, fmt::format("{}: {} candidates", e.path, outcome.candidates.size()));
    if (!outcome.chosen) continue;
    ++repaired;
    std::optional<std::size_t> best;
    for (std::size_t i : outcome.verification.passing) {
      std::size_t size = lcs_diff_size(e.text, outcome.candidates[i].text);
      best = best ? std::min(*best, size) : size;
    }
    const std::size_t chosen = lcs_diff_size(e.text, outcome.chosen->text);
    r.expect(best && chosen == *best && outcome.chosen->diff_lines == static_cast<int>(chosen),
             fmt::format("{}: chosen diff {} vs minimum {}", e.path, chosen, best.value_or(0)));
  }
  r.expect(repaired == run.pipeline.repaired(), fmt::format("{} repaired vs {} in the report", repaired,
                                                           run.pipeline.repaired()));
  r.detail = fmt::format("{} repaired files checked", repaired);
  return r;
}

Result taxonomy(const LearningRun& run) {
  Result r;
  for (const EvaluationReport* report : {&run.pipeline, &run.baseline}) {
    std::size_t sum = 0;
    std::map<Outcome, std::size_t> recount;
    for (Outcome o : kOutcomes) sum += report->categories.at(o);
    for (const auto& f : report->files) ++recount[f.category];
    r.expect(sum == report->total && report->files.size() == report->total, "categories do not sum to the total");
    for (Outcome o : kOutcomes) r.expect(recount[o] == report->categories.at(o), "per-file categories differ");
    std::size_t per_rule = 0;
    for (const auto& [rule, row] : report->per_rule) {
      for (const auto& [o, n] : row) per_rule += n;
    }
    r.expect(per_rule == report->total, "per-rule counts do not sum to the total");
    r.expect(report->exclusive_random + report->exclusive_three_grams + report->both + report->baseline_only ==
                 report->repaired(),
             "contributions do not sum to the repaired count");
  }
  const EvaluationReport& p = run.pipeline;
  std::size_t er = 0, et = 0, both = 0;
  for (const auto& f : p.files) {
    if (f.category != Outcome::RepairedNoError && f.category != Outcome::RepairedNewErrors) continue;
    if (f.fixed_by_random && f.fixed_by_three_grams) ++both;
    else if (f.fixed_by_random) ++er;
    else if (f.fixed_by_three_grams) ++et;
  }
  r.expect(p.baseline_only == 0, "baseline contribution without the baseline");
  r.expect(p.exclusive_random + p.exclusive_three_grams + p.both == p.repaired(), "contributions do not sum");
  r.expect(er == p.exclusive_random && et == p.exclusive_three_grams && both == p.both, "contribution recount differs");
  r.detail = fmt::format("random only {}, 3grams only {}, both {}, repaired {}", p.exclusive_random,
                         p.exclusive_three_grams, p.both, p.repaired());
  return r;
}

Result latency(const LearningRun& run) {
  Result r;
  std::vector<double> times;
  for (const auto& f : run.pipeline.files) times.push_back(f.seconds);
  const double median = percentile(times, 50);
  r.expect(std::abs(median - run.pipeline.median_seconds) <= 1e-9, "report median differs from the per-file times");
  r.expect(run.pipeline.median_seconds <= 5.0, fmt::format("median {:.3f} s", run.pipeline.median_seconds));
  r.expect(run.pipeline.to_json().find("\"median_seconds\"") != std::string::npos, "median missing from the report");
  r.detail = fmt::format("median {:.3f} s per error", run.pipeline.median_seconds);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::vector<int> only;
  app.add_option("--only", only, "Criteria to run (default all)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);
  auto wanted = [&](int n) { return only.empty() || std::find(only.begin(), only.end(), n) != only.end(); };

  int failed = 0;
  auto report = [&](int n, const char* name, const std::function<Result()>& body) {
    if (!wanted(n)) return;
    auto start = Clock::now();
    Result r;
    try {
      r = body();
    } catch (const std::exception& e) {
      r.pass = false;
      r.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << fmt::format("criterion {:>2} {:<10} {}  {} [{:.1f} s]\n", n, name, r.pass ? "PASS" : "FAIL", r.detail,
                             seconds_since(start));
    for (const auto& f : r.failures) std::cout << "    " << f << "\n";
    std::cout.flush();
    if (!r.pass) ++failed;
  };

  report(1, "golden", golden);
  report(2, "roundtrip", round_trip);
  report(3, "checker", checker);
  report(4, "injection", injection);
  report(5, "sampling", sampling);
  report(6, "numerics", numerics);
  if (wanted(7) || wanted(8) || wanted(9) || wanted(10)) {
    std::optional<LearningRun> run;
    std::string error;
    try {
      run = learn();
    } catch (const std::exception& e) {
      error = e.what();
    }
    auto with_run = [&](Result (*f)(const LearningRun&)) {
      return [&, f] {
        if (!run) throw Error("learning run failed: " + error);
        return f(*run);
      };
    };
    report(7, "learning", with_run(learning));
    report(8, "selection", with_run(selection));
    report(9, "taxonomy", with_run(taxonomy));
    report(10, "latency", with_run(latency));
  }
  std::cout << (failed ? fmt::format("{} criteria failed\n", failed) : std::string("all criteria passed\n"));
  return failed ? 1 : 0;
}
