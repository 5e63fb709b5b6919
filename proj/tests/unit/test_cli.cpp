#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "cli.hpp"
#include "config.hpp"
#include "rule_fixtures.hpp"
#include "synthetic_java.hpp"

using namespace crepair;
using namespace crepair::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / fs::path("crepair_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

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

std::map<std::string, std::string> snapshot(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) files[e.path().lexically_relative(root).generic_string()] = read_file(e.path());
  }
  return files;
}

const fs::path kGolden = testing::fixtures_dir() / "golden";

// A small project: synthetic sources, a ruleset and a config.
fs::path make_project(const fs::path& root, int errors = 40) {
  for (const auto& f : testing::synthetic_project(61, {.files = 8})) write_file(root / "src" / f.path, f.text);
  write_file(root / "rules.xml", testing::ruleset_xml(std::vector<std::string>{"WhitespaceAround", "ParenPad",
                                                                                "LeftCurly"}));
  const fs::path config = root / "project.toml";
  write_file(config, "# test project\n"
                     "ruleset = \"rules.xml\"\n"
                     "corpus = \"src/**/*.java\"\n"
                     "seed = 4\n"
                     "\n"
                     "[generation]\n"
                     "number_of_errors = " +
                         std::to_string(errors) +
                         "\n"
                         "batch_size = 20\n"
                         "\n"
                         "[model]\n"
                         "units = 16\n"
                         "embedding = 8\n"
                         "max_iterations = 20\n"
                         "eval_every = 10\n");
  return config;
}

}  // namespace

TEST_CASE("config parsing") {
  ProjectConfig cfg = parse_config(R"(
# comment line
ruleset = "cs.xml"   # trailing comment
corpus = "src/**/*.java"
seed = 9
jobs = 3

[window]
k = 4
n = 12

[beam]
width = 7

[generation]
number_of_errors = 250

[model]
attention = mlp
optimizer = sgd
learning_rate = 0.5
checkpoints = 100, 200
)",
                                   "/proj");
  CHECK(cfg.ruleset_path == fs::path("/proj/cs.xml"));
  CHECK(cfg.corpus_glob == "src/**/*.java");
  CHECK(cfg.dataset_dir == fs::path("/proj/data"));
  CHECK(cfg.model_dir == fs::path("/proj/models"));
  CHECK(cfg.seed == 9);
  CHECK(cfg.jobs == 3);
  CHECK(cfg.window.k == 4);
  CHECK(cfg.window.n == 12);
  CHECK(cfg.window.i == WindowParams{}.i);
  CHECK(cfg.beam.width == 7);
  CHECK(cfg.generation.number_of_errors == 250);
  CHECK(cfg.generation.seed == 9);
  CHECK(cfg.generation.window == cfg.window);
  CHECK(cfg.model.attention == Attention::Mlp);
  CHECK(cfg.model.optimizer == Optimizer::Sgd);
  CHECK(cfg.model.learning_rate == 0.5);
  CHECK(cfg.model.checkpoints == std::vector<int>{100, 200});
  CHECK(cfg.model.seed == 9);
}

TEST_CASE("config errors") {
  auto rejects = [](std::string_view text) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_config(text, "/p"), UsageError);
  };
  rejects("corpus = \"x\"\n");
  rejects("ruleset = \"r.xml\"\ncolour = blue\n");
  rejects("ruleset = \"r.xml\"\n[beam]\nwidth = 0\n");
  rejects("ruleset = \"r.xml\"\nseed = many\n");
  rejects("ruleset = \"r.xml\"\n[model]\nattention = dot\n");
  rejects("ruleset = \"r.xml\"\n[model]\nunits = 7\n");
  rejects("ruleset = \"r.xml\"\n[window\n");
  CHECK_THROWS_AS(load_config("/nonexistent/project.toml"), UsageError);
}

TEST_CASE("glob matching") {
  CHECK(glob_match("src/**/*.java", "src/A.java"));
  CHECK(glob_match("src/**/*.java", "src/a/b/A.java"));
  CHECK_FALSE(glob_match("src/**/*.java", "test/A.java"));
  CHECK_FALSE(glob_match("src/*.java", "src/a/A.java"));
  CHECK(glob_match("src/?.java", "src/A.java"));
  CHECK_FALSE(glob_match("src/?.java", "src/AB.java"));
  CHECK(glob_match("**/*.java", "A.java"));
  CHECK_FALSE(glob_match("*.java", "A.javax"));

  TempDir tmp;
  for (auto rel : {"src/A.java", "src/p/B.java", "src/p/q/C.java", "src/p/notes.txt", "other/D.java"}) {
    write_file(tmp.path / rel, "class X {}\n");
  }
  std::vector<std::string> found;
  for (const auto& p : expand_glob(tmp.path, "src/**/*.java")) found.push_back(p.lexically_relative(tmp.path).generic_string());
  CHECK(found == std::vector<std::string>{"src/A.java", "src/p/B.java", "src/p/q/C.java"});
  CHECK(expand_glob(tmp.path, "src/A.java").size() == 1);
  CHECK(expand_glob(tmp.path, "missing/**/*.java").empty());
}

TEST_CASE("check reports violations with exit codes") {
  const std::string bad = (kGolden / "NodeRelationshipCache.java").string();
  const std::string good = (kGolden / "NodeRelationshipCache.fixed.java").string();
  const std::string rules = (kGolden / "left_curly_nl.xml").string();

  Run r = run({"check", bad, "--ruleset", rules});
  CHECK(r.code == kExitFindings);
  CHECK(r.out == "[ERROR] " + bad + ":812:82: '{' at column 82 should be on a new line. [LeftCurly]\n");

  r = run({"check", good, "--ruleset", rules});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());

  r = run({"check", bad, "--ruleset", rules, "--format", "json"});
  CHECK(r.code == kExitFindings);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["line"] == 812);
  CHECK(j[0]["column"] == 82);
  CHECK(j[0]["rule"] == "LeftCurly");

  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"check", bad}).code == kExitUsage);
  CHECK(run({"check", bad, "--ruleset", rules, "--format", "xml"}).code == kExitUsage);
  r = run({"check", "/nonexistent/A.java", "--ruleset", rules});
  CHECK(r.code == kExitUsage);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"check", bad, "--ruleset", "/nonexistent/rules.xml"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("generate, train, repair and eval on a small project") {
  TempDir tmp;
  const fs::path config = make_project(tmp.path);
  const std::string cfg = config.string();

  Run gen = run({"generate", "--config", cfg, "--protocol", "random"});
  REQUIRE(gen.code == kExitOk);
  auto first = snapshot(tmp.path / "data");
  CHECK(first.size() == 40 * 5);
  gen = run({"generate", "--config", cfg, "--protocol", "random", "--jobs", "3"});
  REQUIRE(gen.code == kExitOk);
  CHECK(snapshot(tmp.path / "data") == first);
  for (const auto& [path, bytes] : first) {
    if (path.ends_with("meta.json")) CHECK(nlohmann::json::parse(bytes)["seed"]["seed"] == 4);
  }

  Run train = run({"train", "--config", cfg, "--protocol", "random"});
  REQUIRE(train.code == kExitOk);
  CHECK(fs::is_regular_file(tmp.path / "models" / "random.crpr"));
  auto report = nlohmann::json::parse(read_file(tmp.path / "models" / "random.training.json"));
  CHECK(report["seed"] == 4);
  CHECK(report["history"].size() == 2);

  // An erroneous file from the dataset.
  const fs::path item = tmp.path / "data" / "random" / "00000";
  const fs::path target = tmp.path / "Broken.java";
  write_file(target, read_file(item / "err.java"));
  const std::string before = read_file(target);

  Run diff = run({"repair", target.string(), "--config", cfg, "--diff", "--baseline"});
  CHECK((diff.code == kExitOk || diff.code == kExitNotRepaired));
  CHECK(read_file(target) == before);
  if (diff.code == kExitOk) CHECK(diff.out.starts_with("--- a/"));

  CHECK(run({"repair", target.string(), "--config", cfg, "--diff", "--in-place"}).code == kExitUsage);
  CHECK(run({"repair", (tmp.path / "Missing.java").string(), "--config", cfg}).code == kExitUsage);

  Run clean = run({"repair", (tmp.path / "src" / testing::synthetic_project(61, {.files = 8})[0].path).string(),
                   "--config", cfg});
  CHECK(clean.code == kExitOk);
  CHECK(clean.err.find("no formatting violation") != std::string::npos);

  Run in_place = run({"repair", target.string(), "--config", cfg, "--in-place", "--baseline"});
  if (in_place.code == kExitOk) {
    CHECK(read_file(target) != before);
    CHECK(run({"check", target.string(), "--ruleset", (tmp.path / "rules.xml").string()}).code == kExitOk);
  } else {
    CHECK(in_place.code == kExitNotRepaired);
    CHECK(read_file(target) == before);
  }

  const fs::path corpus = tmp.path / "errors";
  for (int i = 0; i < 5; ++i) {
    write_file(corpus / fmt::format("E{}.java", i), read_file(tmp.path / "data" / "random" / fmt::format("{:05}", i) /
                                                               "err.java"));
  }
  Run eval = run({"eval", "--config", cfg, "--corpus", corpus.string(), "--baseline"});
  REQUIRE(eval.code == kExitOk);
  auto ev = nlohmann::json::parse(read_file(tmp.path / "models" / "evaluation.json"));
  CHECK(ev["total"] == 5);
  CHECK(ev["seed"] == 4);
}

TEST_CASE("commands without models or data fail as usage errors") {
  TempDir tmp;
  const fs::path config = make_project(tmp.path);
  const std::string cfg = config.string();
  Run train = run({"train", "--config", cfg, "--protocol", "random"});
  CHECK(train.code != kExitOk);
  CHECK_FALSE(train.err.empty());
  write_file(tmp.path / "Broken.java", "class A {\n    int x=1;\n}\n");
  Run repair = run({"repair", (tmp.path / "Broken.java").string(), "--config", cfg});
  CHECK(repair.code == kExitUsage);
  CHECK(repair.err.find("no trained model") != std::string::npos);
  CHECK(run({"generate", "--config", cfg, "--protocol", "bigrams"}).code == kExitUsage);
}
