#include <benchmark/benchmark.h>

#include "crepair/model.hpp"
#include "crepair/pipeline.hpp"
#include "synthetic_java.hpp"

using namespace crepair;

namespace {

struct Setup {
  Ruleset rules = make_ruleset({{"WhitespaceAround", {}}, {"ParenPad", {}}, {"LeftCurly", {}}});
  std::vector<TrainingPair> pairs;
  Vocabulary vocab;
  Hyperparams hp;

  Setup() {
    GenerationConfig cfg;
    cfg.number_of_errors = 64;
    pairs = generate_training_set(rules, testing::synthetic_project(2, {.files = 10}), cfg);
    vocab = build_vocab(pairs, rules, {});
  }

  Seq2SeqModel model() const {
    Seq2SeqModel m(vocab, hp);
    std::mt19937_64 rng(1);
    m.network().initialize(rng, static_cast<float>(hp.init_scale));
    return m;
  }
};

const Setup& setup() {
  static const Setup s;
  return s;
}

void BM_TrainingStep(benchmark::State& state) {
  const Setup& s = setup();
  Seq2SeqModel model = s.model();
  auto samples = make_samples(s.pairs, s.vocab);
  Batch batch;
  for (int i = 0; i < s.hp.batch_size; ++i) {
    batch.sources.push_back(samples[i].source);
    batch.targets.push_back(samples[i].target);
  }
  Parameters<float> grads;
  for (auto _ : state) benchmark::DoNotOptimize(model.network().loss(batch, &grads));
  state.SetItemsProcessed(state.iterations() * s.hp.batch_size);
}
BENCHMARK(BM_TrainingStep)->Unit(benchmark::kMillisecond);

void BM_BeamSearch(benchmark::State& state) {
  const Setup& s = setup();
  Seq2SeqModel model = s.model();
  BeamParams bp{.width = static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(predict_beam(model, s.pairs[0].input, bp));
}
BENCHMARK(BM_BeamSearch)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_RepairFile(benchmark::State& state) {
  const Setup& s = setup();
  Seq2SeqModel model = s.model();
  const RepairModels models{&model, &model, nullptr};
  for (auto _ : state) benchmark::DoNotOptimize(repair_file(s.pairs[0].err_file, s.rules, models));
}
BENCHMARK(BM_RepairFile)->Unit(benchmark::kMillisecond);

}  // namespace
