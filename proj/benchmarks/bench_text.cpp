#include <benchmark/benchmark.h>

#include "crepair/checker.hpp"
#include "crepair/encoding.hpp"
#include "crepair/injection.hpp"
#include "synthetic_java.hpp"

using namespace crepair;

namespace {

const std::vector<SourceFile>& project() {
  static const auto files = testing::synthetic_project(1, {.files = 20});
  return files;
}

std::int64_t total_bytes() {
  std::int64_t n = 0;
  for (const auto& f : project()) n += static_cast<std::int64_t>(f.text.size());
  return n;
}

void BM_Lex(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& f : project()) benchmark::DoNotOptimize(lex(f.text));
  }
  state.SetBytesProcessed(state.iterations() * total_bytes());
}
BENCHMARK(BM_Lex);

void BM_EncodeDecode(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& f : project()) benchmark::DoNotOptimize(decode(encode(lex(f.text), {})));
  }
  state.SetBytesProcessed(state.iterations() * total_bytes());
}
BENCHMARK(BM_EncodeDecode);

void BM_Check(benchmark::State& state) {
  std::vector<RuleConfig> rules;
  for (auto name : supported_rules()) rules.push_back({std::string(name), {}});
  Ruleset ruleset = make_ruleset(std::move(rules));
  for (auto _ : state) {
    for (const auto& f : project()) benchmark::DoNotOptimize(check(f.text, ruleset, f.path));
  }
  state.SetBytesProcessed(state.iterations() * total_bytes());
}
BENCHMARK(BM_Check);

void BM_GenerateRandom(benchmark::State& state) {
  Ruleset rules = make_ruleset({{"WhitespaceAround", {}}, {"ParenPad", {}}, {"LeftCurly", {}}});
  GenerationConfig cfg;
  cfg.number_of_errors = 100;
  for (auto _ : state) benchmark::DoNotOptimize(generate_training_set(rules, project(), cfg));
  state.SetItemsProcessed(state.iterations() * cfg.number_of_errors);
}
BENCHMARK(BM_GenerateRandom)->Unit(benchmark::kMillisecond);

}  // namespace
