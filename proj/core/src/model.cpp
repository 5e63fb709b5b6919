#include "crepair/model.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <numeric>

#include <fmt/format.h>

namespace crepair {

Hyperparams Hyperparams::paper_scale(Protocol protocol) {
  Hyperparams hp;
  hp.attention = Attention::General;
  hp.layers = protocol == Protocol::Random ? 2 : 1;
  hp.units = 512;
  hp.embedding = 512;
  hp.max_iterations = 20000;
  hp.optimizer = Optimizer::Sgd;
  hp.learning_rate = 1.0;
  hp.decay = 5e-5;
  hp.eval_every = 1000;
  hp.checkpoints = {10000, 20000};
  return hp;
}

void validate(const Hyperparams& hp) {
  if (hp.layers < 1 || hp.layers > 3) throw Error(fmt::format("layers must be in 1..3, got {}", hp.layers));
  if (hp.units < 2 || hp.units % 2 != 0) throw Error(fmt::format("units must be even and positive, got {}", hp.units));
  if (hp.embedding < 1) throw Error(fmt::format("embedding must be positive, got {}", hp.embedding));
  if (hp.batch_size < 1) throw Error("batch size must be positive");
  if (hp.max_iterations < 1) throw Error("max_iterations must be positive");
  if (hp.eval_every < 1) throw Error("eval_every must be positive");
  if (!(hp.learning_rate > 0) || !(hp.decay >= 0) || !(hp.clip > 0) || !(hp.init_scale > 0)) {
    throw Error("learning rate, clip and init scale must be positive, decay non-negative");
  }
  if (!(hp.validation_fraction >= 0 && hp.validation_fraction < 1)) throw Error("validation fraction must be in [0, 1)");
}

NetworkShape network_shape(const Vocabulary& vocab, const Hyperparams& hp) {
  NetworkShape s;
  s.input_vocab = vocab.input_size();
  s.output_vocab = vocab.output_size();
  s.embedding = hp.embedding;
  s.units = hp.units;
  s.layers = hp.layers;
  s.attention = hp.attention;
  return s;
}

Seq2SeqModel::Seq2SeqModel(Vocabulary vocab, Hyperparams hp)
    : vocab_(std::move(vocab)), hp_(std::move(hp)), net_(network_shape(vocab_, hp_)) {
  validate(hp_);
}

std::uint64_t Seq2SeqModel::checksum() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& t : net_.params().tensors) {
    const auto* bytes = reinterpret_cast<const unsigned char*>(t.data());
    for (std::size_t i = 0; i < static_cast<std::size_t>(t.size()) * sizeof(float); ++i) {
      h ^= bytes[i];
      h *= 1099511628211ULL;
    }
  }
  return h;
}

std::vector<TrainingSample> make_samples(std::span<const TrainingPair> pairs, const Vocabulary& vocab) {
  std::vector<TrainingSample> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back({vocab.encode_input(p.input), vocab.encode_target(p.target)});
  return out;
}

namespace {

Batch make_batch(std::span<const TrainingSample> samples, std::span<const std::size_t> order) {
  Batch b;
  for (std::size_t i : order) {
    b.sources.push_back(samples[i].source);
    b.targets.push_back(samples[i].target);
  }
  return b;
}

class Updater {
 public:
  Updater(const Hyperparams& hp, const Parameters<float>& params) : hp_(hp) {
    if (hp.optimizer == crepair::Optimizer::Adam) {
      m_.resize_like(params);
      v_.resize_like(params);
    }
  }

  void update(Parameters<float>& params, Parameters<float>& grads) {
    ++t_;
    const double norm = std::sqrt(static_cast<double>(grads.squared_norm()));
    const float scale = norm > hp_.clip ? static_cast<float>(hp_.clip / norm) : 1.0f;
    if (hp_.optimizer == crepair::Optimizer::Sgd) {
      const float lr = static_cast<float>(hp_.learning_rate / (1.0 + hp_.decay * static_cast<double>(t_ - 1)));
      for (std::size_t i = 0; i < params.tensors.size(); ++i) params.tensors[i] -= (lr * scale) * grads.tensors[i];
      return;
    }
    constexpr double b1 = 0.9, b2 = 0.999, eps = 1e-8;
    const double lr = hp_.learning_rate / (1.0 + hp_.decay * static_cast<double>(t_ - 1));
    const double c1 = 1.0 - std::pow(b1, static_cast<double>(t_));
    const double c2 = 1.0 - std::pow(b2, static_cast<double>(t_));
    const float step = static_cast<float>(lr * std::sqrt(c2) / c1);
    for (std::size_t i = 0; i < params.tensors.size(); ++i) {
      auto g = (grads.tensors[i] * scale).array();
      m_.tensors[i] = (b1 * m_.tensors[i].array() + (1 - b1) * g).matrix();
      v_.tensors[i] = (b2 * v_.tensors[i].array() + (1 - b2) * g.square()).matrix();
      params.tensors[i].array() -= step * m_.tensors[i].array() / (v_.tensors[i].array().sqrt() + float(eps));
    }
  }

 private:
  const Hyperparams& hp_;
  Parameters<float> m_, v_;
  long t_ = 0;
};

}  // namespace

LossStats evaluate_loss(const Seq2SeqModel& model, std::span<const TrainingSample> samples, int batch_size) {
  LossStats stats;
  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), 0);
  const std::size_t bs = static_cast<std::size_t>(std::max(1, batch_size));
  for (std::size_t i = 0; i < order.size(); i += bs) {
    auto chunk = std::span<const std::size_t>(order).subspan(i, std::min(bs, order.size() - i));
    model.network().loss(make_batch(samples, chunk), nullptr, &stats);
  }
  return stats;
}

Seq2SeqModel train_samples(std::span<const TrainingSample> train_set, std::span<const TrainingSample> validation_set,
                           const Vocabulary& vocab, const Hyperparams& hp, TrainingReport* report,
                           const TrainingHooks& hooks) {
  validate(hp);
  if (train_set.empty()) throw Error("empty training set");
  if (validation_set.empty()) validation_set = train_set;
  const auto started = std::chrono::steady_clock::now();

  Rng rng(hp.seed);
  Seq2SeqModel model(vocab, hp);
  auto& net = model.network();
  net.initialize(rng, static_cast<float>(hp.init_scale));
  Updater opt(hp, net.params());
  Parameters<float> grads;
  Parameters<float> best = net.params();
  double best_loss = std::numeric_limits<double>::infinity();
  int best_iteration = 0;

  TrainingReport local;
  TrainingReport& rep = report ? *report : local;
  rep = {};
  rep.train_pairs = train_set.size();
  rep.validation_pairs = validation_set.size();

  std::vector<std::size_t> order(train_set.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::size_t cursor = 0;
  const std::size_t bs = std::min(static_cast<std::size_t>(hp.batch_size), order.size());
  double loss_acc = 0;
  int loss_n = 0;

  for (int it = 1; it <= hp.max_iterations; ++it) {
    if (cursor + bs > order.size()) {
      std::shuffle(order.begin(), order.end(), rng);
      cursor = 0;
    }
    Batch batch = make_batch(train_set, std::span<const std::size_t>(order).subspan(cursor, bs));
    cursor += bs;
    float loss = net.loss(batch, &grads);
    loss_acc += loss;
    ++loss_n;
    opt.update(net.params(), grads);

    const bool checkpoint = std::find(hp.checkpoints.begin(), hp.checkpoints.end(), it) != hp.checkpoints.end();
    const bool last = it == hp.max_iterations;
    if (it % hp.eval_every == 0 || checkpoint || last) {
      LossStats stats = evaluate_loss(model, validation_set, hp.batch_size);
      EvalPoint point;
      point.iteration = it;
      point.train_loss = loss_acc / std::max(1, loss_n);
      point.validation_loss = stats.loss_sum / static_cast<double>(std::max<std::size_t>(1, stats.tokens));
      point.validation_accuracy = static_cast<double>(stats.correct) / static_cast<double>(std::max<std::size_t>(1, stats.tokens));
      loss_acc = 0;
      loss_n = 0;
      if (!std::isfinite(point.validation_loss)) {
        throw DivergenceError(fmt::format("validation loss is not finite at iteration {}", it));
      }
      rep.history.push_back(point);
      if (hooks.on_eval) hooks.on_eval(point);
      if (point.validation_loss < best_loss) {
        best_loss = point.validation_loss;
        best_iteration = it;
        best = net.params();
      }
      if ((checkpoint || last) && hooks.on_checkpoint) hooks.on_checkpoint(it, model);
    }
  }
  net.params() = std::move(best);
  rep.best_iteration = best_iteration;
  rep.best_validation_loss = best_loss;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return model;
}

Seq2SeqModel train(std::span<const TrainingPair> dataset, const Vocabulary& vocab, const Hyperparams& hp,
                   TrainingReport* report, const TrainingHooks& hooks) {
  validate(hp);
  if (dataset.empty()) throw Error("empty dataset");
  std::vector<TrainingSample> samples = make_samples(dataset, vocab);
  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), 0);
  Rng split_rng(hp.seed ^ 0x9e3779b97f4a7c15ULL);
  std::shuffle(order.begin(), order.end(), split_rng);
  std::size_t n_val = 0;
  if (samples.size() > 1 && hp.validation_fraction > 0) {
    n_val = std::clamp<std::size_t>(
        static_cast<std::size_t>(std::lround(hp.validation_fraction * static_cast<double>(samples.size()))), 1,
        samples.size() - 1);
  }
  std::vector<TrainingSample> train_set, validation_set;
  for (std::size_t i = 0; i < order.size(); ++i) {
    (i < n_val ? validation_set : train_set).push_back(std::move(samples[order[i]]));
  }
  return train_samples(train_set, validation_set, vocab, hp, report, hooks);
}

}  // namespace crepair
