#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "crepair/dataset.hpp"
#include "synthetic_java.hpp"

using namespace crepair;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / fs::path("crepair_dataset_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

void check_same(const TrainingPair& a, const TrainingPair& b) {
  CHECK(a.id == b.id);
  CHECK(a.source_path == b.source_path);
  CHECK(a.protocol == b.protocol);
  CHECK(a.err_file == b.err_file);
  CHECK(a.orig_file == b.orig_file);
  CHECK(a.violation == b.violation);
  CHECK(a.input.tokens == b.input.tokens);
  CHECK(a.input.rule == b.input.rule);
  CHECK(a.input.window_begin == b.input.window_begin);
  CHECK(a.input.window_end == b.input.window_end);
  CHECK(a.input.span_begin == b.input.span_begin);
  CHECK(a.input.span_end == b.input.span_end);
  CHECK(a.input.sequence_size == b.input.sequence_size);
  CHECK(a.input.span_java == b.input.span_java);
  CHECK(a.input.span_formatting == b.input.span_formatting);
  CHECK(a.target == b.target);
  CHECK(a.mutation.kind == b.mutation.kind);
  CHECK(a.mutation.offset == b.mutation.offset);
  CHECK(a.mutation.line == b.mutation.line);
  CHECK(a.mutation.column == b.mutation.column);
  CHECK(a.mutation.removed == b.mutation.removed);
  CHECK(a.mutation.inserted == b.mutation.inserted);
  CHECK(a.mutation.position == b.mutation.position);
  CHECK(a.mutation.before_token == b.mutation.before_token);
  CHECK(a.mutation.after_token == b.mutation.after_token);
  CHECK(a.seed == b.seed);
  CHECK(a.batch == b.batch);
  CHECK(a.item == b.item);
}

std::vector<TrainingPair> make_pairs(Protocol protocol) {
  auto files = testing::synthetic_project(31, {.files = 6});
  Ruleset rules = make_ruleset({{"WhitespaceAround", {}}, {"ParenPad", {}}, {"LeftCurly", {}}});
  GenerationConfig cfg;
  cfg.number_of_errors = 15;
  cfg.batch_size = 20;
  cfg.seed = 8;
  cfg.protocol = protocol;
  ThreeGramCorpus grams;
  for (const auto& f : files) grams.add(encode(lex(f.text), {}));
  return generate_training_set(rules, files, cfg, &grams);
}

}  // namespace

TEST_CASE("datasets round trip through the directory layout") {
  TempDir tmp;
  for (Protocol protocol : {Protocol::Random, Protocol::ThreeGrams}) {
    CAPTURE(to_string(protocol));
    auto pairs = make_pairs(protocol);
    write_dataset(tmp.path, pairs, protocol);
    const fs::path first = tmp.path / std::string(to_string(protocol)) / pairs.front().id;
    for (auto name : {"err.java", "orig.java", "meta.json", "input.txt", "target.txt"}) {
      CHECK(fs::is_regular_file(first / name));
    }
    auto back = read_dataset(tmp.path, protocol);
    REQUIRE(back.size() == pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) check_same(pairs[i], back[i]);
  }
}

TEST_CASE("input and target files hold the token texts") {
  TempDir tmp;
  auto pairs = make_pairs(Protocol::Random);
  write_dataset(tmp.path, pairs, Protocol::Random);
  const fs::path item = tmp.path / "random" / pairs[0].id;
  std::ifstream input(item / "input.txt");
  std::string line;
  std::getline(input, line);
  CHECK(line == pairs[0].input.text());
  std::ifstream target(item / "target.txt");
  std::getline(target, line);
  CHECK(line == formatting_text(pairs[0].target));
}

TEST_CASE("writing replaces an existing protocol directory") {
  TempDir tmp;
  auto pairs = make_pairs(Protocol::Random);
  write_dataset(tmp.path, pairs, Protocol::Random);
  std::vector<TrainingPair> fewer(pairs.begin(), pairs.begin() + 3);
  write_dataset(tmp.path, fewer, Protocol::Random);
  CHECK(read_dataset(tmp.path, Protocol::Random).size() == 3);
}

TEST_CASE("dataset errors") {
  TempDir tmp;
  CHECK_THROWS_AS(read_dataset(tmp.path, Protocol::Random), DatasetError);
  auto pairs = make_pairs(Protocol::Random);
  write_dataset(tmp.path, pairs, Protocol::Random);
  {
    std::ofstream meta(tmp.path / "random" / pairs[0].id / "meta.json");
    meta << "{ \"id\": 3 ";
  }
  CHECK_THROWS_AS(read_dataset(tmp.path, Protocol::Random), DatasetError);
  write_dataset(tmp.path, pairs, Protocol::Random);
  {
    std::ofstream target(tmp.path / "random" / pairs[0].id / "target.txt");
    target << "1_SP 7_XY\n";
  }
  CHECK_THROWS_AS(read_dataset(tmp.path, Protocol::Random), DatasetError);
}
