#include "crepair/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

namespace crepair {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void write_file(const fs::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DatasetError(fmt::format("cannot write {}", path.string()));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DatasetError(fmt::format("cannot read {}", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json violation_json(const Violation& v) {
  json j = {{"file", v.file}, {"line", v.line}, {"rule", v.rule}, {"message", v.message}};
  if (v.column) j["column"] = *v.column;
  return j;
}

Mutation::Kind parse_kind(const std::string& s) {
  if (s == "insert") return Mutation::Kind::Insert;
  if (s == "delete") return Mutation::Kind::Delete;
  if (s == "replace") return Mutation::Kind::Replace;
  throw DatasetError(fmt::format("unknown mutation kind '{}'", s));
}

}  // namespace

std::string pair_metadata(const TrainingPair& pair) {
  const Mutation& m = pair.mutation;
  json mutation = {{"kind", std::string(to_string(m.kind))},
                   {"offset", m.offset},
                   {"line", m.line},
                   {"column", m.column},
                   {"removed", m.removed},
                   {"inserted", m.inserted},
                   {"description", m.describe()}};
  if (m.position) {
    mutation["position"] = *m.position;
    mutation["before_token"] = m.before_token;
    mutation["after_token"] = m.after_token;
  }
  json meta = {
      {"id", pair.id},
      {"protocol", std::string(to_string(pair.protocol))},
      {"source_file", pair.source_path},
      {"violation", violation_json(pair.violation)},
      {"mutation_log", mutation},
      {"seed", {{"seed", pair.seed}, {"batch", pair.batch}, {"item", pair.item}}},
      {"window",
       {{"window_begin", pair.input.window_begin},
        {"window_end", pair.input.window_end},
        {"span_begin", pair.input.span_begin},
        {"span_end", pair.input.span_end},
        {"sequence_size", pair.input.sequence_size},
        {"span_java", pair.input.span_java},
        {"span_formatting", formatting_text(pair.input.span_formatting)}}},
  };
  return meta.dump(2) + "\n";
}

void write_dataset(const fs::path& root, std::span<const TrainingPair> pairs, Protocol protocol) {
  const fs::path dir = root / std::string(to_string(protocol));
  std::error_code ec;
  fs::remove_all(dir, ec);
  fs::create_directories(dir);
  for (const auto& pair : pairs) {
    const fs::path item = dir / pair.id;
    fs::create_directories(item);
    write_file(item / "err.java", pair.err_file);
    write_file(item / "orig.java", pair.orig_file);
    write_file(item / "meta.json", pair_metadata(pair));
    write_file(item / "input.txt", pair.input.text() + "\n");
    write_file(item / "target.txt", formatting_text(pair.target) + "\n");
  }
}

std::vector<TrainingPair> read_dataset(const fs::path& root, Protocol protocol) {
  const fs::path dir = root / std::string(to_string(protocol));
  if (!fs::is_directory(dir)) throw DatasetError(fmt::format("no dataset at {}", dir.string()));
  std::vector<fs::path> items;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_directory()) items.push_back(entry.path());
  }
  std::sort(items.begin(), items.end());

  std::vector<TrainingPair> pairs;
  pairs.reserve(items.size());
  for (const auto& item : items) {
    TrainingPair pair;
    json meta;
    try {
      meta = json::parse(read_file(item / "meta.json"));
      pair.id = meta.at("id").get<std::string>();
      pair.protocol = parse_protocol(meta.at("protocol").get<std::string>());
      pair.source_path = meta.at("source_file").get<std::string>();
      const json& v = meta.at("violation");
      pair.violation.file = v.at("file").get<std::string>();
      pair.violation.line = v.at("line").get<int>();
      if (v.contains("column")) pair.violation.column = v.at("column").get<int>();
      pair.violation.rule = v.at("rule").get<std::string>();
      pair.violation.message = v.at("message").get<std::string>();
      const json& m = meta.at("mutation_log");
      pair.mutation.kind = parse_kind(m.at("kind").get<std::string>());
      pair.mutation.offset = m.at("offset").get<std::size_t>();
      pair.mutation.line = m.at("line").get<int>();
      pair.mutation.column = m.at("column").get<int>();
      pair.mutation.removed = m.at("removed").get<std::string>();
      pair.mutation.inserted = m.at("inserted").get<std::string>();
      if (m.contains("position")) {
        pair.mutation.position = m.at("position").get<std::size_t>();
        pair.mutation.before_token = m.at("before_token").get<std::string>();
        pair.mutation.after_token = m.at("after_token").get<std::string>();
      }
      const json& s = meta.at("seed");
      pair.seed = s.at("seed").get<std::uint64_t>();
      pair.batch = s.at("batch").get<std::uint64_t>();
      pair.item = s.at("item").get<std::uint64_t>();
      const json& w = meta.at("window");
      pair.input.rule = pair.violation.rule;
      pair.input.window_begin = w.at("window_begin").get<std::size_t>();
      pair.input.window_end = w.at("window_end").get<std::size_t>();
      pair.input.span_begin = w.at("span_begin").get<std::size_t>();
      pair.input.span_end = w.at("span_end").get<std::size_t>();
      pair.input.sequence_size = w.at("sequence_size").get<std::size_t>();
      pair.input.span_java = w.at("span_java").get<std::vector<std::string>>();
      for (const auto& t : split_tokens(w.at("span_formatting").get<std::string>())) {
        auto f = FormattingToken::parse(t);
        if (!f) throw DatasetError(fmt::format("bad formatting token '{}'", t));
        pair.input.span_formatting.push_back(*f);
      }
    } catch (const json::exception& e) {
      throw DatasetError(fmt::format("{}: {}", (item / "meta.json").string(), e.what()));
    }
    pair.err_file = read_file(item / "err.java");
    pair.orig_file = read_file(item / "orig.java");
    pair.input.tokens = split_tokens(read_file(item / "input.txt"));
    for (const auto& t : split_tokens(read_file(item / "target.txt"))) {
      auto f = FormattingToken::parse(t);
      if (!f) throw DatasetError(fmt::format("{}: bad target token '{}'", item.string(), t));
      pair.target.push_back(*f);
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

}  // namespace crepair
