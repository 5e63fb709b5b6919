#pragma once

// Sequence-to-sequence repair model: training, beam-search prediction and
// the on-disk model format.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "crepair/injection.hpp"
#include "crepair/network.hpp"
#include "crepair/vocabulary.hpp"

namespace crepair {

class DivergenceError : public Error {
 public:
  using Error::Error;
};

class ModelFormatError : public Error {
 public:
  using Error::Error;
};

enum class Optimizer : std::uint8_t { Sgd, Adam };

struct Hyperparams {
  Attention attention = Attention::General;
  int layers = 1;
  int units = 128;
  int embedding = 128;
  int batch_size = 32;
  int max_iterations = 3000;
  Optimizer optimizer = Optimizer::Adam;
  // SGD: lr / (1 + decay * iteration). Adam uses lr as its step size.
  double learning_rate = 1e-3;
  double decay = 0.0;
  double clip = 5.0;
  double init_scale = 0.1;
  double validation_fraction = 0.1;
  int eval_every = 300;
  // Iterations at which on_checkpoint fires, in addition to the last one.
  std::vector<int> checkpoints;
  std::uint64_t seed = 0;

  bool operator==(const Hyperparams&) const = default;

  /// Large configurations: general attention with 2 layers for the random
  /// protocol, 1 layer for 3-grams; 512 units and embedding, 20k iterations
  /// of SGD at lr 1.0.
  static Hyperparams paper_scale(Protocol protocol);
};

/// Throws Error when out of range.
void validate(const Hyperparams& hp);

class Seq2SeqModel {
 public:
  Seq2SeqModel(Vocabulary vocab, Hyperparams hp);

  const Vocabulary& vocab() const { return vocab_; }
  const Hyperparams& hyperparams() const { return hp_; }
  Network<float>& network() { return net_; }
  const Network<float>& network() const { return net_; }

  /// FNV-1a over the raw weight bytes.
  std::uint64_t checksum() const;

 private:
  Vocabulary vocab_;
  Hyperparams hp_;
  Network<float> net_;
};

NetworkShape network_shape(const Vocabulary& vocab, const Hyperparams& hp);

struct TrainingSample {
  std::vector<int> source;
  std::vector<int> target;
};

std::vector<TrainingSample> make_samples(std::span<const TrainingPair> pairs, const Vocabulary& vocab);

struct EvalPoint {
  int iteration = 0;
  double train_loss = 0;       // mean over the iterations since the last point
  double validation_loss = 0;  // per token
  double validation_accuracy = 0;
};

struct TrainingReport {
  std::size_t train_pairs = 0;
  std::size_t validation_pairs = 0;
  std::vector<EvalPoint> history;
  int best_iteration = 0;
  double best_validation_loss = 0;
  double seconds = 0;
};

struct TrainingHooks {
  std::function<void(const EvalPoint&)> on_eval;
  std::function<void(int iteration, const Seq2SeqModel&)> on_checkpoint;
};

/// Mean per-token loss and accuracy of `model` on `samples`.
LossStats evaluate_loss(const Seq2SeqModel& model, std::span<const TrainingSample> samples, int batch_size);

/// Shuffles and splits the dataset, trains with minibatches of the training
/// part and returns the parameters with the lowest validation loss.
/// Deterministic given hp.seed. Throws DivergenceError on a non-finite
/// validation loss.
Seq2SeqModel train(std::span<const TrainingPair> dataset, const Vocabulary& vocab, const Hyperparams& hp,
                   TrainingReport* report = nullptr, const TrainingHooks& hooks = {});

/// Same, on pre-split id sequences.
Seq2SeqModel train_samples(std::span<const TrainingSample> train_set, std::span<const TrainingSample> validation_set,
                           const Vocabulary& vocab, const Hyperparams& hp, TrainingReport* report = nullptr,
                           const TrainingHooks& hooks = {});

struct BeamParams {
  int width = 5;
  // Defaults to 2 * formatting positions + 8.
  std::optional<int> max_length;
};

struct Hypothesis {
  std::vector<FormattingToken> tokens;
  double score = 0;  // summed log-probability, EOS included when finished
};

/// Up to `width` hypotheses in descending score order.
std::vector<Hypothesis> predict_beam(const Seq2SeqModel& model, const ModelInput& input, const BeamParams& bp = {});

void save_model(const Seq2SeqModel& model, std::ostream& out);
void save_model(const Seq2SeqModel& model, const std::filesystem::path& path);
Seq2SeqModel load_model(std::istream& in);
Seq2SeqModel load_model(const std::filesystem::path& path);

/// Per span position, the corpus' most frequent formatting token between the
/// surrounding java tokens (ties to the lexicographically smallest text);
/// positions without corpus evidence keep the input token.
std::vector<FormattingToken> ngram_translate(const ModelInput& input, const ThreeGramCorpus& corpus);

}  // namespace crepair
