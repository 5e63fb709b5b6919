#include "crepair/network.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "crepair/error.hpp"

namespace crepair {

using Eigen::Index;

TensorLayout::TensorLayout(const NetworkShape& s) {
  if (s.units <= 0 || s.units % 2 != 0) throw Error(fmt::format("units must be a positive even number, got {}", s.units));
  if (s.embedding <= 0) throw Error("embedding size must be positive");
  if (s.layers < 1) throw Error("at least one layer is required");
  if (s.input_vocab <= kUnk || s.output_vocab <= kUnk) throw Error("vocabularies must contain the special tokens");
  const Index H = s.units;
  const Index He = s.units / 2;
  const Index E = s.embedding;
  emb_in = add("embedding.input", E, s.input_vocab);
  emb_out = add("embedding.output", E, s.output_vocab);
  for (int l = 0; l < s.layers; ++l) {
    const Index in = l == 0 ? E : H;
    enc_fw_w.push_back(add(fmt::format("encoder.{}.forward.weight", l), 4 * He, in + He));
    enc_fw_b.push_back(add(fmt::format("encoder.{}.forward.bias", l), 4 * He, 1));
    enc_bw_w.push_back(add(fmt::format("encoder.{}.backward.weight", l), 4 * He, in + He));
    enc_bw_b.push_back(add(fmt::format("encoder.{}.backward.bias", l), 4 * He, 1));
  }
  for (int l = 0; l < s.layers; ++l) {
    const Index in = l == 0 ? E + H : H;
    dec_w.push_back(add(fmt::format("decoder.{}.weight", l), 4 * H, in + H));
    dec_b.push_back(add(fmt::format("decoder.{}.bias", l), 4 * H, 1));
  }
  if (s.attention == Attention::General) {
    att_w = add("attention.weight", H, H);
  } else {
    att_q = add("attention.query", H, H);
    att_k = add("attention.key", H, H);
    att_v = add("attention.score", H, 1);
  }
  comb_w = add("combine.weight", H, 2 * H);
  comb_b = add("combine.bias", H, 1);
  out_w = add("output.weight", s.output_vocab, H);
  out_b = add("output.bias", s.output_vocab, 1);
}

std::size_t TensorLayout::add(std::string name, Index rows, Index cols) {
  names.push_back(std::move(name));
  shapes.emplace_back(rows, cols);
  return names.size() - 1;
}

template <class S>
void Parameters<S>::resize_like(const Parameters& other) {
  tensors.resize(other.tensors.size());
  for (std::size_t i = 0; i < tensors.size(); ++i) {
    tensors[i].setZero(other.tensors[i].rows(), other.tensors[i].cols());
  }
}

template <class S>
void Parameters<S>::set_zero() {
  for (auto& t : tensors) t.setZero();
}

template <class S>
S Parameters<S>::squared_norm() const {
  S sum = 0;
  for (const auto& t : tensors) sum += t.squaredNorm();
  return sum;
}

namespace {

template <class D>
auto sigmoid(const Eigen::MatrixBase<D>& z) {
  using S = typename D::Scalar;
  return Matrix<S>((S(1) / (S(1) + (-z.array()).exp())).matrix());
}

template <class S>
Matrix<S> vstack(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> out(a.rows() + b.rows(), a.cols());
  out.topRows(a.rows()) = a;
  out.bottomRows(b.rows()) = b;
  return out;
}

template <class S>
void softmax_columns(Matrix<S>& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    auto col = m.col(j);
    col.array() -= col.maxCoeff();
    col = col.array().exp().matrix();
    col /= col.sum();
  }
}

template <class S>
struct LstmCache {
  Matrix<S> xh, i, f, g, o, c_prev, tanh_c;
  std::vector<char> active;  // empty: every column active
};

// One LSTM step. Columns with mask 0 keep their previous state.
template <class S>
void lstm_forward(const Matrix<S>& W, const Matrix<S>& b, const Matrix<S>& x, Matrix<S>& h, Matrix<S>& c,
                  const std::vector<char>* active, LstmCache<S>* cache) {
  const Index H = h.rows();
  Matrix<S> xh = vstack(x, h);
  Matrix<S> z = W * xh;
  z.colwise() += b.col(0);
  Matrix<S> i = sigmoid(z.topRows(H));
  Matrix<S> f = sigmoid(z.middleRows(H, H));
  Matrix<S> g = z.middleRows(2 * H, H).array().tanh().matrix();
  Matrix<S> o = sigmoid(z.bottomRows(H));
  Matrix<S> c_new = (f.array() * c.array() + i.array() * g.array()).matrix();
  Matrix<S> tc = c_new.array().tanh().matrix();
  Matrix<S> h_new = (o.array() * tc.array()).matrix();
  if (cache) {
    cache->xh = std::move(xh);
    cache->c_prev = c;
    cache->i = std::move(i);
    cache->f = std::move(f);
    cache->g = std::move(g);
    cache->o = std::move(o);
    cache->tanh_c = std::move(tc);
    if (active) cache->active = *active;
  }
  if (active) {
    for (Index j = 0; j < h.cols(); ++j) {
      if (!(*active)[static_cast<std::size_t>(j)]) continue;
      h.col(j) = h_new.col(j);
      c.col(j) = c_new.col(j);
    }
  } else {
    h = std::move(h_new);
    c = std::move(c_new);
  }
}

// On entry dh/dc hold gradients w.r.t. this step's outputs; on exit the
// gradients w.r.t. its inputs h_prev/c_prev.
template <class S>
void lstm_backward(const Matrix<S>& W, const LstmCache<S>& k, Matrix<S>& dh, Matrix<S>& dc, Matrix<S>& dx,
                   Matrix<S>& dW, Matrix<S>& db) {
  const Index H = dh.rows();
  const Index B = dh.cols();
  Matrix<S> dh_keep = Matrix<S>::Zero(H, B);
  Matrix<S> dc_keep = Matrix<S>::Zero(H, B);
  if (!k.active.empty()) {
    for (Index j = 0; j < B; ++j) {
      if (k.active[static_cast<std::size_t>(j)]) continue;
      dh_keep.col(j) = dh.col(j);
      dc_keep.col(j) = dc.col(j);
      dh.col(j).setZero();
      dc.col(j).setZero();
    }
  }
  Matrix<S> dc_tot =
      (dc.array() + dh.array() * k.o.array() * (S(1) - k.tanh_c.array().square())).matrix();
  Matrix<S> dz(4 * H, B);
  dz.topRows(H) = (dc_tot.array() * k.g.array() * k.i.array() * (S(1) - k.i.array())).matrix();
  dz.middleRows(H, H) = (dc_tot.array() * k.c_prev.array() * k.f.array() * (S(1) - k.f.array())).matrix();
  dz.middleRows(2 * H, H) = (dc_tot.array() * k.i.array() * (S(1) - k.g.array().square())).matrix();
  dz.bottomRows(H) = (dh.array() * k.tanh_c.array() * k.o.array() * (S(1) - k.o.array())).matrix();
  dW.noalias() += dz * k.xh.transpose();
  db += dz.rowwise().sum();
  Matrix<S> dxh = W.transpose() * dz;
  const Index in = dxh.rows() - H;
  dx = dxh.topRows(in);
  dh = dxh.bottomRows(H) + dh_keep;
  dc = (dc_tot.array() * k.f.array()).matrix() + dc_keep;
}

}  // namespace

template <class S>
Network<S>::Network(const NetworkShape& shape) : shape_(shape), layout_(shape) {
  params_.tensors.reserve(layout_.shapes.size());
  for (const auto& [rows, cols] : layout_.shapes) params_.tensors.push_back(Matrix<S>::Zero(rows, cols));
}

template <class S>
void Network<S>::initialize(std::mt19937_64& rng, S scale) {
  std::uniform_real_distribution<double> dist(-static_cast<double>(scale), static_cast<double>(scale));
  for (auto& t : params_.tensors) {
    for (Index c = 0; c < t.cols(); ++c) {
      for (Index r = 0; r < t.rows(); ++r) t(r, c) = static_cast<S>(dist(rng));
    }
  }
}

template <class S>
S Network<S>::loss(const Batch& batch, Parameters<S>* grads, LossStats* stats,
                   std::vector<Matrix<S>>* step_probs) const {
  const auto& P = params_.tensors;
  const auto& L = layout_;
  const Index B = static_cast<Index>(batch.size());
  const Index H = shape_.units;
  const Index He = H / 2;
  const Index E = shape_.embedding;
  const int layers = shape_.layers;
  if (B == 0) throw Error("empty batch");

  std::vector<Index> len(static_cast<std::size_t>(B));
  Index T = 0;
  for (Index b = 0; b < B; ++b) {
    len[b] = static_cast<Index>(batch.sources[b].size());
    if (len[b] == 0) throw Error("empty source sequence");
    T = std::max(T, len[b]);
  }
  std::vector<std::vector<char>> active(static_cast<std::size_t>(T), std::vector<char>(B, 0));
  std::vector<Matrix<S>> X(static_cast<std::size_t>(T), Matrix<S>::Zero(E, B));
  for (Index t = 0; t < T; ++t) {
    for (Index b = 0; b < B; ++b) {
      bool on = t < len[b];
      active[t][b] = on;
      int id = on ? batch.sources[b][t] : kPad;
      X[t].col(b) = P[L.emb_in].col(id);
    }
  }

  // Encoder.
  std::vector<std::vector<LstmCache<S>>> fw(layers, std::vector<LstmCache<S>>(T));
  std::vector<std::vector<LstmCache<S>>> bw(layers, std::vector<LstmCache<S>>(T));
  std::vector<Matrix<S>> h(layers), c(layers);
  for (int l = 0; l < layers; ++l) {
    std::vector<Matrix<S>> hf(T), hb(T);
    Matrix<S> hs = Matrix<S>::Zero(He, B), cs = Matrix<S>::Zero(He, B);
    for (Index t = 0; t < T; ++t) {
      lstm_forward(P[L.enc_fw_w[l]], P[L.enc_fw_b[l]], X[t], hs, cs, &active[t], &fw[l][t]);
      hf[t] = hs;
    }
    Matrix<S> h_fw = hs, c_fw = cs;
    hs.setZero();
    cs.setZero();
    for (Index t = T; t-- > 0;) {
      lstm_forward(P[L.enc_bw_w[l]], P[L.enc_bw_b[l]], X[t], hs, cs, &active[t], &bw[l][t]);
      hb[t] = hs;
    }
    h[l] = vstack(h_fw, hs);
    c[l] = vstack(c_fw, cs);
    for (Index t = 0; t < T; ++t) X[t] = vstack(hf[t], hb[t]);
  }
  std::vector<Matrix<S>> Sb(B), Kb;
  for (Index b = 0; b < B; ++b) {
    Sb[b].resize(H, len[b]);
    for (Index j = 0; j < len[b]; ++j) Sb[b].col(j) = X[j].col(b);
  }
  const bool mlp = shape_.attention == Attention::Mlp;
  if (mlp) {
    Kb.resize(B);
    for (Index b = 0; b < B; ++b) Kb[b] = P[L.att_k] * Sb[b];
  }

  // Decoder.
  Index M = 0;
  for (const auto& tgt : batch.targets) M = std::max(M, static_cast<Index>(tgt.size()) + 1);
  std::vector<std::vector<LstmCache<S>>> dec(layers, std::vector<LstmCache<S>>(M));
  std::vector<Matrix<S>> htop(M), tilde(M), comb_in(M), probs(M), U(M), Q(M);
  std::vector<std::vector<Matrix<S>>> alpha(M, std::vector<Matrix<S>>(B));
  std::vector<std::vector<Matrix<S>>> act(mlp ? M : 0, std::vector<Matrix<S>>(B));
  std::vector<std::vector<int>> in_tok(M, std::vector<int>(B)), out_tok(M, std::vector<int>(B));
  Matrix<S> feed = Matrix<S>::Zero(H, B);
  double loss_sum = 0;
  std::size_t tokens = 0, correct = 0;

  for (Index t = 0; t < M; ++t) {
    Matrix<S> x(E + H, B);
    for (Index b = 0; b < B; ++b) {
      const auto& tgt = batch.targets[b];
      const Index tl = static_cast<Index>(tgt.size());
      in_tok[t][b] = t == 0 ? kBos : (t - 1 < tl ? tgt[t - 1] : kPad);
      out_tok[t][b] = t < tl ? tgt[t] : (t == tl ? kEos : -1);
      x.col(b).head(E) = P[L.emb_out].col(in_tok[t][b]);
    }
    x.bottomRows(H) = feed;
    for (int l = 0; l < layers; ++l) {
      lstm_forward(P[L.dec_w[l]], P[L.dec_b[l]], x, h[l], c[l], nullptr, &dec[l][t]);
      x = h[l];
    }
    htop[t] = h[layers - 1];
    Matrix<S> ctx(H, B);
    if (mlp) {
      Q[t] = P[L.att_q] * htop[t];
    } else {
      U[t] = P[L.att_w].transpose() * htop[t];
    }
    for (Index b = 0; b < B; ++b) {
      Matrix<S> scores;
      if (mlp) {
        act[t][b] = (Kb[b].colwise() + Q[t].col(b)).array().tanh().matrix();
        scores = act[t][b].transpose() * P[L.att_v];
      } else {
        scores = Sb[b].transpose() * U[t].col(b);
      }
      softmax_columns(scores);
      alpha[t][b] = scores;
      ctx.col(b) = Sb[b] * scores;
    }
    comb_in[t] = vstack(ctx, htop[t]);
    Matrix<S> pre = P[L.comb_w] * comb_in[t];
    pre.colwise() += P[L.comb_b].col(0);
    tilde[t] = pre.array().tanh().matrix();
    Matrix<S> logits = P[L.out_w] * tilde[t];
    logits.colwise() += P[L.out_b].col(0);
    softmax_columns(logits);
    probs[t] = std::move(logits);
    for (Index b = 0; b < B; ++b) {
      int y = out_tok[t][b];
      if (y < 0) continue;
      loss_sum -= std::log(std::max(static_cast<double>(probs[t](y, b)), 1e-300));
      ++tokens;
      Index best = 0;
      probs[t].col(b).maxCoeff(&best);
      if (best == y) ++correct;
    }
    feed = tilde[t];
  }
  if (stats) {
    stats->loss_sum += loss_sum;
    stats->tokens += tokens;
    stats->correct += correct;
  }
  if (step_probs) *step_probs = probs;
  const S loss = static_cast<S>(loss_sum / static_cast<double>(tokens));
  if (!grads) return loss;

  // Backward.
  grads->resize_like(params_);
  auto& G = grads->tensors;
  const S scale = S(1) / static_cast<S>(tokens);
  std::vector<Matrix<S>> dh(layers, Matrix<S>::Zero(H, B)), dc(layers, Matrix<S>::Zero(H, B));
  Matrix<S> dfeed = Matrix<S>::Zero(H, B);
  std::vector<Matrix<S>> dSb(B), dKb(mlp ? B : 0);
  for (Index b = 0; b < B; ++b) {
    dSb[b].setZero(H, len[b]);
    if (mlp) dKb[b].setZero(H, len[b]);
  }
  Matrix<S> dx;
  for (Index t = M; t-- > 0;) {
    Matrix<S> dlogits = probs[t];
    for (Index b = 0; b < B; ++b) {
      int y = out_tok[t][b];
      if (y < 0) {
        dlogits.col(b).setZero();
      } else {
        dlogits(y, b) -= S(1);
      }
    }
    dlogits *= scale;
    G[L.out_w].noalias() += dlogits * tilde[t].transpose();
    G[L.out_b] += dlogits.rowwise().sum();
    Matrix<S> dtilde = P[L.out_w].transpose() * dlogits + dfeed;
    Matrix<S> dpre = (dtilde.array() * (S(1) - tilde[t].array().square())).matrix();
    G[L.comb_w].noalias() += dpre * comb_in[t].transpose();
    G[L.comb_b] += dpre.rowwise().sum();
    Matrix<S> dcomb = P[L.comb_w].transpose() * dpre;
    Matrix<S> dctx = dcomb.topRows(H);
    Matrix<S> dhtop = dcomb.bottomRows(H);
    Matrix<S> dU(H, B), dQ(H, B);
    for (Index b = 0; b < B; ++b) {
      const Matrix<S>& a = alpha[t][b];
      Matrix<S> dalpha = Sb[b].transpose() * dctx.col(b);
      dSb[b].noalias() += dctx.col(b) * a.transpose();
      S dot = (a.array() * dalpha.array()).sum();
      Matrix<S> dscore = (a.array() * (dalpha.array() - dot)).matrix();
      if (mlp) {
        const Matrix<S>& A = act[t][b];
        G[L.att_v].noalias() += A * dscore;
        Matrix<S> dA = P[L.att_v] * dscore.transpose();
        Matrix<S> dpreA = (dA.array() * (S(1) - A.array().square())).matrix();
        dQ.col(b) = dpreA.rowwise().sum();
        dKb[b] += dpreA;
      } else {
        dU.col(b) = Sb[b] * dscore;
        dSb[b].noalias() += U[t].col(b) * dscore.transpose();
      }
    }
    if (mlp) {
      G[L.att_q].noalias() += dQ * htop[t].transpose();
      dhtop.noalias() += P[L.att_q].transpose() * dQ;
    } else {
      dhtop.noalias() += P[L.att_w] * dU;
      G[L.att_w].noalias() += htop[t] * dU.transpose();
    }
    dh[layers - 1] += dhtop;
    for (int l = layers; l-- > 0;) {
      lstm_backward(P[L.dec_w[l]], dec[l][t], dh[l], dc[l], dx, G[L.dec_w[l]], G[L.dec_b[l]]);
      if (l > 0) dh[l - 1] += dx;
    }
    dfeed = dx.bottomRows(H);
    for (Index b = 0; b < B; ++b) G[L.emb_out].col(in_tok[t][b]) += dx.col(b).head(E);
  }

  if (mlp) {
    for (Index b = 0; b < B; ++b) {
      G[L.att_k].noalias() += dKb[b] * Sb[b].transpose();
      dSb[b].noalias() += P[L.att_k].transpose() * dKb[b];
    }
  }
  std::vector<Matrix<S>> dX(T, Matrix<S>::Zero(H, B));
  for (Index b = 0; b < B; ++b) {
    for (Index j = 0; j < len[b]; ++j) dX[j].col(b) = dSb[b].col(j);
  }
  for (int l = layers; l-- > 0;) {
    const Index in = l == 0 ? E : H;
    std::vector<Matrix<S>> dIn(T, Matrix<S>::Zero(in, B));
    Matrix<S> dhs = dh[l].topRows(He), dcs = dc[l].topRows(He);
    for (Index t = T; t-- > 0;) {
      dhs += dX[t].topRows(He);
      lstm_backward(P[L.enc_fw_w[l]], fw[l][t], dhs, dcs, dx, G[L.enc_fw_w[l]], G[L.enc_fw_b[l]]);
      dIn[t] += dx;
    }
    dhs = dh[l].bottomRows(He);
    dcs = dc[l].bottomRows(He);
    for (Index t = 0; t < T; ++t) {
      dhs += dX[t].bottomRows(He);
      lstm_backward(P[L.enc_bw_w[l]], bw[l][t], dhs, dcs, dx, G[L.enc_bw_w[l]], G[L.enc_bw_b[l]]);
      dIn[t] += dx;
    }
    dX = std::move(dIn);
  }
  for (Index t = 0; t < T; ++t) {
    for (Index b = 0; b < B; ++b) {
      if (active[t][b]) G[L.emb_in].col(batch.sources[b][t]) += dX[t].col(b);
    }
  }
  return loss;
}

template <class S>
typename Network<S>::Encoded Network<S>::encode(const std::vector<int>& source) const {
  const auto& P = params_.tensors;
  const auto& L = layout_;
  const Index T = static_cast<Index>(source.size());
  const Index H = shape_.units;
  const Index He = H / 2;
  if (T == 0) throw Error("empty source sequence");
  std::vector<Matrix<S>> X(T);
  for (Index t = 0; t < T; ++t) X[t] = P[L.emb_in].col(source[t]);
  Encoded enc;
  for (int l = 0; l < shape_.layers; ++l) {
    std::vector<Matrix<S>> hf(T), hb(T);
    Matrix<S> hs = Matrix<S>::Zero(He, 1), cs = Matrix<S>::Zero(He, 1);
    for (Index t = 0; t < T; ++t) {
      lstm_forward<S>(P[L.enc_fw_w[l]], P[L.enc_fw_b[l]], X[t], hs, cs, nullptr, nullptr);
      hf[t] = hs;
    }
    Matrix<S> h_fw = hs, c_fw = cs;
    hs.setZero();
    cs.setZero();
    for (Index t = T; t-- > 0;) {
      lstm_forward<S>(P[L.enc_bw_w[l]], P[L.enc_bw_b[l]], X[t], hs, cs, nullptr, nullptr);
      hb[t] = hs;
    }
    enc.h0.push_back(vstack(h_fw, hs));
    enc.c0.push_back(vstack(c_fw, cs));
    for (Index t = 0; t < T; ++t) X[t] = vstack(hf[t], hb[t]);
  }
  enc.outputs.resize(H, T);
  for (Index t = 0; t < T; ++t) enc.outputs.col(t) = X[t];
  if (shape_.attention == Attention::Mlp) enc.keys = P[L.att_k] * enc.outputs;
  return enc;
}

template <class S>
typename Network<S>::DecoderState Network<S>::initial_state(const Encoded& enc, int beams) const {
  DecoderState st;
  for (int l = 0; l < shape_.layers; ++l) {
    st.h.push_back(enc.h0[l].replicate(1, beams));
    st.c.push_back(enc.c0[l].replicate(1, beams));
  }
  st.feed = Matrix<S>::Zero(shape_.units, beams);
  return st;
}

template <class S>
Matrix<S> Network<S>::step(const Encoded& enc, DecoderState& st, const std::vector<int>& tokens) const {
  const auto& P = params_.tensors;
  const auto& L = layout_;
  const Index B = static_cast<Index>(tokens.size());
  const Index E = shape_.embedding;
  const Index H = shape_.units;
  Matrix<S> x(E + H, B);
  for (Index b = 0; b < B; ++b) x.col(b).head(E) = P[L.emb_out].col(tokens[b]);
  x.bottomRows(H) = st.feed;
  for (int l = 0; l < shape_.layers; ++l) {
    lstm_forward<S>(P[L.dec_w[l]], P[L.dec_b[l]], x, st.h[l], st.c[l], nullptr, nullptr);
    x = st.h[l];
  }
  const Matrix<S>& top = st.h[shape_.layers - 1];
  Matrix<S> ctx(H, B);
  if (shape_.attention == Attention::Mlp) {
    Matrix<S> q = P[L.att_q] * top;
    for (Index b = 0; b < B; ++b) {
      Matrix<S> scores = (enc.keys.colwise() + q.col(b)).array().tanh().matrix().transpose() * P[L.att_v];
      softmax_columns(scores);
      ctx.col(b) = enc.outputs * scores;
    }
  } else {
    Matrix<S> u = P[L.att_w].transpose() * top;
    Matrix<S> scores = enc.outputs.transpose() * u;
    softmax_columns(scores);
    ctx = enc.outputs * scores;
  }
  Matrix<S> pre = P[L.comb_w] * vstack(ctx, top);
  pre.colwise() += P[L.comb_b].col(0);
  st.feed = pre.array().tanh().matrix();
  Matrix<S> logits = P[L.out_w] * st.feed;
  logits.colwise() += P[L.out_b].col(0);
  for (Index b = 0; b < B; ++b) {
    auto col = logits.col(b);
    S m = col.maxCoeff();
    S lse = m + std::log((col.array() - m).exp().sum());
    col.array() -= lse;
  }
  return logits;
}

template <class S>
void Network<S>::select_beams(DecoderState& st, const std::vector<int>& parents) {
  auto pick = [&](Matrix<S>& m) {
    Matrix<S> out(m.rows(), static_cast<Index>(parents.size()));
    for (std::size_t j = 0; j < parents.size(); ++j) out.col(static_cast<Index>(j)) = m.col(parents[j]);
    m = std::move(out);
  };
  for (auto& m : st.h) pick(m);
  for (auto& m : st.c) pick(m);
  pick(st.feed);
}

template struct Parameters<float>;
template struct Parameters<double>;
template class Network<float>;
template class Network<double>;

}  // namespace crepair
