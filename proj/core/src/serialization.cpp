// Model file layout, all integers and floats little-endian:
//   "CRPR" u32:version
//   vocabulary: u32:indent_char u32:indent_width, input and output tables as
//     u32:count then (u32:length bytes) per token
//   hyperparams: u32 attention layers units embedding batch_size
//     max_iterations optimizer eval_every, f64 learning_rate decay clip
//     init_scale validation_fraction, u64 seed, u32:count u32 checkpoints
//   u32:tensor_count then (name u32:rows u32:cols f32[rows*cols] row-major)

#include <bit>
#include <cstring>
#include <fstream>

#include <fmt/format.h>

#include "crepair/model.hpp"

namespace crepair {

namespace {

constexpr char kMagic[4] = {'C', 'R', 'P', 'R'};
constexpr std::uint32_t kVersion = 1;

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  void u32(std::uint32_t v) { le(v); }
  void u64(std::uint64_t v) { le(v); }
  void f32(float v) { le(std::bit_cast<std::uint32_t>(v)); }
  void f64(double v) { le(std::bit_cast<std::uint64_t>(v)); }
  void str(const std::string& s) {
    u32(static_cast<std::uint32_t>(s.size()));
    out_.write(s.data(), static_cast<std::streamsize>(s.size()));
  }
  void bytes(const char* p, std::size_t n) { out_.write(p, static_cast<std::streamsize>(n)); }

 private:
  template <class U>
  void le(U v) {
    char buf[sizeof(U)];
    for (std::size_t i = 0; i < sizeof(U); ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out_.write(buf, sizeof(U));
  }

  std::ostream& out_;
};

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  std::uint32_t u32() { return le<std::uint32_t>(); }
  std::uint64_t u64() { return le<std::uint64_t>(); }
  float f32() { return std::bit_cast<float>(le<std::uint32_t>()); }
  double f64() { return std::bit_cast<double>(le<std::uint64_t>()); }
  std::string str() {
    std::uint32_t n = u32();
    if (n > (1u << 20)) throw ModelFormatError("string too long");
    std::string s(n, '\0');
    read(s.data(), n);
    return s;
  }
  void read(char* p, std::size_t n) {
    in_.read(p, static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in_.gcount()) != n) throw ModelFormatError("unexpected end of model file");
  }

 private:
  template <class U>
  U le() {
    unsigned char buf[sizeof(U)];
    read(reinterpret_cast<char*>(buf), sizeof(U));
    U v = 0;
    for (std::size_t i = 0; i < sizeof(U); ++i) v |= static_cast<U>(buf[i]) << (8 * i);
    return v;
  }

  std::istream& in_;
};

void write_table(Writer& w, const std::vector<std::string>& table) {
  w.u32(static_cast<std::uint32_t>(table.size()));
  for (const auto& t : table) w.str(t);
}

std::vector<std::string> read_table(Reader& r) {
  std::uint32_t n = r.u32();
  if (n > (1u << 20)) throw ModelFormatError("vocabulary too large");
  std::vector<std::string> table;
  table.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) table.push_back(r.str());
  return table;
}

}  // namespace

void save_model(const Seq2SeqModel& model, std::ostream& out) {
  Writer w(out);
  w.bytes(kMagic, sizeof kMagic);
  w.u32(kVersion);

  const auto& vocab = model.vocab();
  w.u32(static_cast<std::uint32_t>(vocab.unit().ch));
  w.u32(static_cast<std::uint32_t>(vocab.unit().width));
  write_table(w, vocab.input_tokens());
  write_table(w, vocab.output_tokens());

  const auto& hp = model.hyperparams();
  for (int v : {static_cast<int>(hp.attention), hp.layers, hp.units, hp.embedding, hp.batch_size, hp.max_iterations,
                static_cast<int>(hp.optimizer), hp.eval_every}) {
    w.u32(static_cast<std::uint32_t>(v));
  }
  for (double v : {hp.learning_rate, hp.decay, hp.clip, hp.init_scale, hp.validation_fraction}) w.f64(v);
  w.u64(hp.seed);
  w.u32(static_cast<std::uint32_t>(hp.checkpoints.size()));
  for (int c : hp.checkpoints) w.u32(static_cast<std::uint32_t>(c));

  const auto& layout = model.network().layout();
  const auto& tensors = model.network().params().tensors;
  w.u32(static_cast<std::uint32_t>(tensors.size()));
  for (std::size_t i = 0; i < tensors.size(); ++i) {
    const auto& t = tensors[i];
    w.str(layout.names[i]);
    w.u32(static_cast<std::uint32_t>(t.rows()));
    w.u32(static_cast<std::uint32_t>(t.cols()));
    for (Eigen::Index r = 0; r < t.rows(); ++r) {
      for (Eigen::Index c = 0; c < t.cols(); ++c) w.f32(t(r, c));
    }
  }
  if (!out) throw Error("failed to write model");
}

void save_model(const Seq2SeqModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(fmt::format("cannot write {}", path.string()));
  save_model(model, out);
}

Seq2SeqModel load_model(std::istream& in) {
  Reader r(in);
  char magic[4];
  r.read(magic, sizeof magic);
  if (std::memcmp(magic, kMagic, sizeof magic) != 0) throw ModelFormatError("not a model file");
  std::uint32_t version = r.u32();
  if (version != kVersion) throw ModelFormatError(fmt::format("unsupported model version {}", version));

  IndentUnit unit;
  std::uint32_t ch = r.u32();
  if (ch > 1) throw ModelFormatError("bad indent character");
  unit.ch = static_cast<IndentChar>(ch);
  unit.width = static_cast<int>(r.u32());
  auto input = read_table(r);
  auto output = read_table(r);

  Hyperparams hp;
  std::uint32_t attention = r.u32();
  if (attention > 1) throw ModelFormatError("bad attention kind");
  hp.attention = static_cast<Attention>(attention);
  hp.layers = static_cast<int>(r.u32());
  hp.units = static_cast<int>(r.u32());
  hp.embedding = static_cast<int>(r.u32());
  hp.batch_size = static_cast<int>(r.u32());
  hp.max_iterations = static_cast<int>(r.u32());
  std::uint32_t optimizer = r.u32();
  if (optimizer > 1) throw ModelFormatError("bad optimizer kind");
  hp.optimizer = static_cast<Optimizer>(optimizer);
  hp.eval_every = static_cast<int>(r.u32());
  hp.learning_rate = r.f64();
  hp.decay = r.f64();
  hp.clip = r.f64();
  hp.init_scale = r.f64();
  hp.validation_fraction = r.f64();
  hp.seed = r.u64();
  std::uint32_t n_checkpoints = r.u32();
  if (n_checkpoints > 4096) throw ModelFormatError("too many checkpoints");
  for (std::uint32_t i = 0; i < n_checkpoints; ++i) hp.checkpoints.push_back(static_cast<int>(r.u32()));

  try {
    Seq2SeqModel model(Vocabulary(std::move(input), std::move(output), unit), hp);
    const auto& layout = model.network().layout();
    auto& tensors = model.network().params().tensors;
    std::uint32_t count = r.u32();
    if (count != tensors.size()) {
      throw ModelFormatError(fmt::format("expected {} tensors, found {}", tensors.size(), count));
    }
    for (std::size_t i = 0; i < tensors.size(); ++i) {
      auto& t = tensors[i];
      std::string name = r.str();
      std::uint32_t rows = r.u32();
      std::uint32_t cols = r.u32();
      if (name != layout.names[i] || rows != t.rows() || cols != t.cols()) {
        throw ModelFormatError(fmt::format("tensor {} ({}x{}) does not match {} ({}x{})", name, rows, cols,
                                           layout.names[i], t.rows(), t.cols()));
      }
      for (Eigen::Index rr = 0; rr < t.rows(); ++rr) {
        for (Eigen::Index c = 0; c < t.cols(); ++c) t(rr, c) = r.f32();
      }
    }
    return model;
  } catch (const ModelFormatError&) {
    throw;
  } catch (const Error& e) {
    throw ModelFormatError(e.what());
  }
}

Seq2SeqModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(fmt::format("cannot read {}", path.string()));
  return load_model(in);
}

}  // namespace crepair
