#pragma once

// Attentional encoder-decoder: bidirectional LSTM encoder, LSTM decoder with
// input feeding, general (bilinear) or mlp (additive) attention. Templated
// on the scalar so gradients can be checked in double precision.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace crepair {

enum class Attention : std::uint8_t { General, Mlp };

struct NetworkShape {
  int input_vocab = 0;
  int output_vocab = 0;
  int embedding = 64;
  int units = 64;  // decoder width; each encoder direction has units / 2
  int layers = 1;
  Attention attention = Attention::General;

  bool operator==(const NetworkShape&) const = default;
};

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using RowVector = Eigen::Matrix<S, 1, Eigen::Dynamic>;

/// Index and shape of every weight tensor for a given network shape.
struct TensorLayout {
  explicit TensorLayout(const NetworkShape& shape);

  std::vector<std::string> names;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> shapes;

  std::size_t emb_in = 0, emb_out = 0;
  std::vector<std::size_t> enc_fw_w, enc_fw_b, enc_bw_w, enc_bw_b;
  std::vector<std::size_t> dec_w, dec_b;
  std::size_t att_w = 0;                       // general
  std::size_t att_q = 0, att_k = 0, att_v = 0;  // mlp
  std::size_t comb_w = 0, comb_b = 0, out_w = 0, out_b = 0;

 private:
  std::size_t add(std::string name, Eigen::Index rows, Eigen::Index cols);
};

template <class S>
struct Parameters {
  std::vector<Matrix<S>> tensors;

  void resize_like(const Parameters& other);
  void set_zero();
  S squared_norm() const;
};

/// Token ids; sources are tagged window inputs, targets are formatting
/// token ids without BOS/EOS.
struct Batch {
  std::vector<std::vector<int>> sources;
  std::vector<std::vector<int>> targets;

  std::size_t size() const { return sources.size(); }
};

struct LossStats {
  double loss_sum = 0;  // summed cross-entropy
  std::size_t tokens = 0;
  std::size_t correct = 0;  // argmax equals the reference
};

inline constexpr int kPad = 0;
inline constexpr int kBos = 1;
inline constexpr int kEos = 2;
inline constexpr int kUnk = 3;

template <class S>
class Network {
 public:
  explicit Network(const NetworkShape& shape);

  const NetworkShape& shape() const { return shape_; }
  const TensorLayout& layout() const { return layout_; }
  Parameters<S>& params() { return params_; }
  const Parameters<S>& params() const { return params_; }

  void initialize(std::mt19937_64& rng, S scale);

  /// Mean token cross-entropy over targets plus EOS. Fills `grads` (same
  /// layout as params) when given.
  S loss(const Batch& batch, Parameters<S>* grads = nullptr, LossStats* stats = nullptr,
         std::vector<Matrix<S>>* step_probs = nullptr) const;

  struct Encoded {
    Matrix<S> outputs;  // units x length
    Matrix<S> keys;     // mlp attention keys
    std::vector<Matrix<S>> h0, c0;
  };

  struct DecoderState {
    std::vector<Matrix<S>> h, c;  // per layer, units x beams
    Matrix<S> feed;               // attentional hidden state of the last step
  };

  Encoded encode(const std::vector<int>& source) const;
  DecoderState initial_state(const Encoded& enc, int beams) const;
  /// One decoder step for every beam; returns log-probabilities
  /// (output_vocab x beams) and advances `state`.
  Matrix<S> step(const Encoded& enc, DecoderState& state, const std::vector<int>& tokens) const;
  /// Reorders/duplicates beam columns.
  static void select_beams(DecoderState& state, const std::vector<int>& parents);

 private:
  NetworkShape shape_;
  TensorLayout layout_;
  Parameters<S> params_;
};

extern template class Network<float>;
extern template class Network<double>;
extern template struct Parameters<float>;
extern template struct Parameters<double>;

}  // namespace crepair
