#include <algorithm>
#include <limits>

#include <fmt/format.h>

#include "crepair/model.hpp"

namespace crepair {

namespace {

struct Partial {
  std::vector<int> ids;
  double score = 0;
};

bool better(const Partial& a, const Partial& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.ids < b.ids;
}

}  // namespace

std::vector<Hypothesis> predict_beam(const Seq2SeqModel& model, const ModelInput& input, const BeamParams& bp) {
  if (bp.width < 1) throw Error(fmt::format("beam width must be positive, got {}", bp.width));
  const auto& net = model.network();
  const auto& vocab = model.vocab();
  const std::size_t width = static_cast<std::size_t>(bp.width);
  const int max_len = bp.max_length.value_or(2 * static_cast<int>(input.formatting_positions()) + 8);

  const auto enc = net.encode(vocab.encode_input(input));
  auto state = net.initial_state(enc, 1);
  std::vector<Partial> live{{}};
  std::vector<int> last{kBos};
  std::vector<Partial> finished;

  struct Candidate {
    double score;
    int parent;
    int token;
  };
  std::vector<Candidate> cands;
  for (int step = 0; step < max_len && !live.empty(); ++step) {
    const Matrix<float> logp = net.step(enc, state, last);
    cands.clear();
    for (int b = 0; b < static_cast<int>(live.size()); ++b) {
      for (int v = kEos; v < logp.rows(); ++v) {
        if (v == kUnk) continue;
        cands.push_back({live[b].score + static_cast<double>(logp(v, b)), b, v});
      }
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
      if (a.score != b.score) return a.score > b.score;
      if (a.parent != b.parent) return a.parent < b.parent;
      return a.token < b.token;
    });

    std::vector<Partial> next;
    std::vector<int> parents, tokens;
    for (std::size_t rank = 0; rank < cands.size() && next.size() < width; ++rank) {
      const auto& c = cands[rank];
      if (c.token == kEos) {
        if (rank < width) finished.push_back({live[c.parent].ids, c.score});
        continue;
      }
      Partial p{live[c.parent].ids, c.score};
      p.ids.push_back(c.token);
      next.push_back(std::move(p));
      parents.push_back(c.parent);
      tokens.push_back(c.token);
    }

    if (finished.size() >= width) {
      std::sort(finished.begin(), finished.end(), better);
      const double best_live = next.empty() ? -std::numeric_limits<double>::infinity() : next.front().score;
      // Scores only decrease as hypotheses grow.
      if (finished[width - 1].score >= best_live) {
        next.clear();
      }
    }
    if (next.empty()) {
      live.clear();
      break;
    }
    Network<float>::select_beams(state, parents);
    live = std::move(next);
    last = std::move(tokens);
  }
  // Length limit reached: unfinished hypotheses compete as they are.
  for (auto& p : live) finished.push_back(std::move(p));

  std::sort(finished.begin(), finished.end(), better);
  finished.erase(std::unique(finished.begin(), finished.end(),
                             [](const Partial& a, const Partial& b) { return a.ids == b.ids; }),
                 finished.end());
  if (finished.size() > width) finished.resize(width);

  std::vector<Hypothesis> out;
  out.reserve(finished.size());
  for (const auto& p : finished) {
    Hypothesis h;
    h.score = p.score;
    for (int id : p.ids) h.tokens.push_back(vocab.output_token(id));
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace crepair
