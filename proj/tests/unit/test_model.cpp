#include <doctest.h>

#include <cmath>
#include <sstream>

#include "crepair/model.hpp"
#include "synthetic_java.hpp"

using namespace crepair;

namespace {

struct Fixture {
  Ruleset rules = make_ruleset({{"WhitespaceAround", {}}, {"ParenPad", {}}, {"LeftCurly", {}}});
  std::vector<TrainingPair> pairs;
  Vocabulary vocab;

  explicit Fixture(int count = 12) {
    auto files = testing::synthetic_project(41, {.files = 6});
    GenerationConfig cfg;
    cfg.number_of_errors = count;
    cfg.batch_size = 20;
    cfg.seed = 2;
    pairs = generate_training_set(rules, files, cfg);
    vocab = build_vocab(pairs, rules, {});
  }
};

Hyperparams small_hp() {
  Hyperparams hp;
  hp.units = 16;
  hp.embedding = 8;
  hp.batch_size = 4;
  hp.max_iterations = 20;
  hp.eval_every = 10;
  hp.seed = 3;
  return hp;
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

// Log-probability of `tokens` followed by EOS, one decoder step at a time.
double sequence_logprob(const Seq2SeqModel& model, const ModelInput& input, const std::vector<FormattingToken>& tokens,
                        bool finished) {
  const auto& net = model.network();
  auto enc = net.encode(model.vocab().encode_input(input));
  auto state = net.initial_state(enc, 1);
  int last = kBos;
  double total = 0;
  for (const auto& t : tokens) {
    auto logp = net.step(enc, state, {last});
    last = model.vocab().output_id(t);
    total += logp(last, 0);
  }
  if (finished) total += net.step(enc, state, {last})(kEos, 0);
  return total;
}

Seq2SeqModel random_model(const Vocabulary& vocab, std::uint64_t seed, float scale) {
  Hyperparams hp = small_hp();
  Seq2SeqModel model(vocab, hp);
  std::mt19937_64 rng(seed);
  model.network().initialize(rng, scale);
  return model;
}

}  // namespace

TEST_CASE("gradients match central differences") {
  int configs = 0;
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
        std::mt19937_64 rng(seed);
        net.initialize(rng, 0.5);
        Batch batch = random_batch(rng, shape.input_vocab, shape.output_vocab, 3);

        Parameters<double> grads;
        net.loss(batch, &grads);
        double diff_sq = 0;
        double norm_sq = 0;
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
            CAPTURE(net.layout().names[t]);
            CHECK(std::abs(numeric - analytic) <= 1e-7 + 1e-4 * std::max(std::abs(numeric), std::abs(analytic)));
            diff_sq += (numeric - analytic) * (numeric - analytic);
            norm_sq += numeric * numeric + analytic * analytic;
          }
        }
        CHECK(std::sqrt(diff_sq) / std::sqrt(norm_sq) <= 1e-4);
        ++configs;
      }
    }
  }
  CHECK(configs >= 20);
}

TEST_CASE("decoder steps return normalized distributions") {
  Fixture fx(4);
  for (Attention attention : {Attention::General, Attention::Mlp}) {
    Hyperparams hp = small_hp();
    hp.attention = attention;
    Seq2SeqModel model(fx.vocab, hp);
    std::mt19937_64 rng(9);
    model.network().initialize(rng, 0.3f);
    const auto& net = model.network();
    auto enc = net.encode(fx.vocab.encode_input(fx.pairs[0].input));
    auto state = net.initial_state(enc, 3);
    std::vector<int> last{kBos, kBos, kBos};
    for (int step = 0; step < 6; ++step) {
      auto logp = net.step(enc, state, last);
      for (Eigen::Index b = 0; b < logp.cols(); ++b) {
        double sum = 0;
        for (Eigen::Index v = 0; v < logp.rows(); ++v) sum += std::exp(static_cast<double>(logp(v, b)));
        CHECK(std::abs(sum - 1.0) <= 1e-6);
      }
      last = {4, 5 + step % 3, 6};
    }
  }
}

TEST_CASE("a small model memorizes its training set") {
  Fixture fx(10);
  auto samples = make_samples(fx.pairs, fx.vocab);
  Hyperparams hp = small_hp();
  hp.units = 128;
  hp.embedding = 64;
  hp.batch_size = 10;
  hp.learning_rate = 1e-2;
  hp.max_iterations = 200;
  hp.eval_every = 50;
  TrainingReport report;
  Seq2SeqModel model = train_samples(samples, samples, fx.vocab, hp, &report);
  LossStats stats = evaluate_loss(model, samples, 10);
  CHECK(stats.correct == stats.tokens);
  for (const auto& pair : fx.pairs) {
    auto beams = predict_beam(model, pair.input, {.width = 1});
    REQUIRE_FALSE(beams.empty());
    CHECK(beams[0].tokens == pair.target);
  }
  CHECK(report.history.size() == 4);
}

TEST_CASE("training is deterministic for a seed") {
  Fixture fx(12);
  Hyperparams hp = small_hp();
  Seq2SeqModel a = train(fx.pairs, fx.vocab, hp);
  Seq2SeqModel b = train(fx.pairs, fx.vocab, hp);
  CHECK(a.checksum() == b.checksum());
  hp.seed = 4;
  Seq2SeqModel c = train(fx.pairs, fx.vocab, hp);
  CHECK(a.checksum() != c.checksum());
}

TEST_CASE("width-one beam search is greedy decoding") {
  Fixture fx(6);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    Seq2SeqModel model = random_model(fx.vocab, seed, 0.5f);
    for (const auto& pair : fx.pairs) {
      const auto& net = model.network();
      auto enc = net.encode(fx.vocab.encode_input(pair.input));
      auto state = net.initial_state(enc, 1);
      std::vector<FormattingToken> greedy;
      int last = kBos;
      const int max_len = 2 * static_cast<int>(pair.input.formatting_positions()) + 8;
      for (int step = 0; step < max_len; ++step) {
        auto logp = net.step(enc, state, {last});
        int best = kEos;
        for (int v = kEos; v < logp.rows(); ++v) {
          if (v != kUnk && logp(v, 0) > logp(best, 0)) best = v;
        }
        if (best == kEos) break;
        greedy.push_back(fx.vocab.output_token(best));
        last = best;
      }
      auto beams = predict_beam(model, pair.input, {.width = 1});
      REQUIRE(beams.size() == 1);
      CHECK(beams[0].tokens == greedy);
    }
  }
}

TEST_CASE("beam scores are sequence log-probabilities") {
  Fixture fx(6);
  Seq2SeqModel model = random_model(fx.vocab, 11, 0.5f);
  for (const auto& pair : fx.pairs) {
    BeamParams bp{.width = 5};
    auto beams = predict_beam(model, pair.input, bp);
    REQUIRE_FALSE(beams.empty());
    CHECK(beams.size() <= 5);
    const std::size_t max_len = 2 * pair.input.formatting_positions() + 8;
    for (std::size_t i = 0; i < beams.size(); ++i) {
      if (i > 0) CHECK(beams[i - 1].score >= beams[i].score);
      bool finished = beams[i].tokens.size() < max_len;
      CHECK(beams[i].score == doctest::Approx(sequence_logprob(model, pair.input, beams[i].tokens, finished))
                                 .epsilon(1e-4));
    }
  }
  CHECK_THROWS_AS(predict_beam(model, fx.pairs[0].input, {.width = 0}), Error);
}

TEST_CASE("models serialize bit-exactly") {
  Fixture fx(6);
  Hyperparams hp = small_hp();
  hp.attention = Attention::Mlp;
  hp.layers = 2;
  Seq2SeqModel model = train(fx.pairs, fx.vocab, hp);
  std::stringstream first;
  save_model(model, first);
  Seq2SeqModel loaded = load_model(first);
  CHECK(loaded.checksum() == model.checksum());
  CHECK(loaded.vocab() == model.vocab());
  CHECK(loaded.hyperparams() == model.hyperparams());
  for (std::size_t t = 0; t < model.network().params().tensors.size(); ++t) {
    CHECK(loaded.network().params().tensors[t] == model.network().params().tensors[t]);
  }
  std::stringstream second;
  save_model(loaded, second);
  CHECK(second.str() == first.str());
  auto a = predict_beam(model, fx.pairs[0].input);
  auto b = predict_beam(loaded, fx.pairs[0].input);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].tokens == b[i].tokens);
    CHECK(a[i].score == b[i].score);
  }

  std::string bytes = first.str();
  std::stringstream truncated(bytes.substr(0, bytes.size() / 2));
  CHECK_THROWS_AS(load_model(truncated), ModelFormatError);
  std::string bad_magic = bytes;
  bad_magic[0] ^= 0x55;
  std::stringstream corrupted(bad_magic);
  CHECK_THROWS_AS(load_model(corrupted), ModelFormatError);
  CHECK_THROWS_AS(load_model(std::filesystem::path("/nonexistent/model.crpr")), Error);
}

TEST_CASE("vocabulary layout") {
  Fixture fx(8);
  const auto& in = fx.vocab.input_tokens();
  const auto& out = fx.vocab.output_tokens();
  REQUIRE(in.size() > 4 + 30 + 6);
  CHECK(in[kPad] == kPadText);
  CHECK(in[kBos] == kBosText);
  CHECK(in[kEos] == kEosText);
  CHECK(in[kUnk] == kUnkText);
  CHECK(out.size() == 4 + 30);
  auto fmt = formatting_vocabulary({});
  for (std::size_t i = 0; i < fmt.size(); ++i) {
    CHECK(out[4 + i] == fmt[i].text());
    CHECK(fx.vocab.output_id(fmt[i]) == static_cast<int>(4 + i));
    CHECK(fx.vocab.output_token(static_cast<int>(4 + i)) == fmt[i]);
  }
  CHECK(in[34] == "<WhitespaceAround>");
  CHECK(in[35] == "</WhitespaceAround>");
  CHECK(std::is_sorted(in.begin() + 40, in.end()));
  CHECK(fx.vocab.input_id("NeverSeenToken") == kUnk);
  CHECK(fx.vocab.output_id(FormattingToken::spaces(40)) == kUnk);
  CHECK_THROWS_AS(fx.vocab.output_token(kEos), Error);
  for (const auto& pair : fx.pairs) {
    auto ids = fx.vocab.encode_input(pair.input);
    CHECK(ids.size() == pair.input.tokens.size());
    CHECK(std::find(ids.begin(), ids.end(), kUnk) == ids.end());
  }
}

TEST_CASE("hyperparameter validation") {
  Hyperparams hp;
  CHECK_NOTHROW(validate(hp));
  CHECK_NOTHROW(validate(Hyperparams::paper_scale(Protocol::Random)));
  CHECK(Hyperparams::paper_scale(Protocol::Random).layers == 2);
  CHECK(Hyperparams::paper_scale(Protocol::ThreeGrams).layers == 1);
  CHECK(Hyperparams::paper_scale(Protocol::Random).units == 512);
  hp.units = 7;
  CHECK_THROWS_AS(validate(hp), Error);
  hp = {};
  hp.learning_rate = 0;
  CHECK_THROWS_AS(validate(hp), Error);
  hp = {};
  hp.validation_fraction = 1.0;
  CHECK_THROWS_AS(validate(hp), Error);
}

TEST_CASE("n-gram translation picks the most frequent corpus token") {
  ThreeGramCorpus corpus;
  corpus.add({")", FormattingToken::spaces(1), "{"}, 5);
  corpus.add({")", FormattingToken::newlines(1), "{"}, 2);
  corpus.add({"Identifier", FormattingToken::spaces(0), "("}, 3);
  corpus.add({"Identifier", FormattingToken::spaces(1), "("}, 3);
  ModelInput input;
  input.span_java = {"Identifier", "(", ")", "{", "Identifier"};
  input.span_formatting = {FormattingToken::spaces(2), FormattingToken::spaces(0), FormattingToken::spaces(4),
                           FormattingToken::tabs(1)};
  input.span_begin = 0;
  input.span_end = 4;
  auto out = ngram_translate(input, corpus);
  // Tie between 0_SP and 1_SP resolves to the smaller text.
  CHECK(formatting_text(out) == "0_SP 0_SP 1_SP 1_TB");
}
