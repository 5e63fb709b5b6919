#include "crepair/vocabulary.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include <fmt/format.h>

#include "crepair/network.hpp"

namespace crepair {

namespace {

std::vector<std::string> with_specials() {
  return {std::string(kPadText), std::string(kBosText), std::string(kEosText), std::string(kUnkText)};
}

void index(const std::vector<std::string>& tokens, std::unordered_map<std::string, int>& out, const char* what) {
  out.clear();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!out.emplace(tokens[i], static_cast<int>(i)).second) {
      throw Error(fmt::format("duplicate {} token '{}'", what, tokens[i]));
    }
  }
}

bool is_tag(std::string_view t) {
  if (t.size() < 3 || t.front() != '<' || t.back() != '>') return false;
  t = t.substr(1, t.size() - 2);
  if (t.starts_with('/')) t.remove_prefix(1);
  return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)); });
}

}  // namespace

Vocabulary::Vocabulary(std::vector<std::string> input_tokens, std::vector<std::string> output_tokens, IndentUnit unit)
    : input_(std::move(input_tokens)), output_(std::move(output_tokens)), unit_(unit) {
  const auto specials = with_specials();
  for (const auto* table : {&input_, &output_}) {
    if (table->size() < specials.size() || !std::equal(specials.begin(), specials.end(), table->begin())) {
      throw Error("vocabulary must start with the special tokens");
    }
  }
  index(input_, input_index_, "input");
  index(output_, output_index_, "output");
  for (std::size_t i = specials.size(); i < output_.size(); ++i) {
    if (!FormattingToken::parse(output_[i])) throw Error(fmt::format("'{}' is not a formatting token", output_[i]));
  }
}

int Vocabulary::input_id(std::string_view token) const {
  auto it = input_index_.find(std::string(token));
  return it == input_index_.end() ? kUnk : it->second;
}

int Vocabulary::output_id(const FormattingToken& token) const {
  auto it = output_index_.find(token.text());
  return it == output_index_.end() ? kUnk : it->second;
}

FormattingToken Vocabulary::output_token(int id) const {
  if (id <= kUnk || id >= output_size()) throw Error(fmt::format("output id {} is not a formatting token", id));
  return *FormattingToken::parse(output_[static_cast<std::size_t>(id)]);
}

std::vector<int> Vocabulary::encode_input(const ModelInput& input) const {
  std::vector<int> ids;
  ids.reserve(input.tokens.size());
  for (const auto& t : input.tokens) ids.push_back(input_id(t));
  return ids;
}

std::vector<int> Vocabulary::encode_target(std::span<const FormattingToken> target) const {
  std::vector<int> ids;
  ids.reserve(target.size());
  for (const auto& t : target) ids.push_back(output_id(t));
  return ids;
}

Vocabulary build_vocab(std::span<const TrainingPair> dataset, const Ruleset& ruleset, IndentUnit unit) {
  if (dataset.empty()) throw Error("cannot build a vocabulary from an empty dataset");
  std::vector<std::string> input = with_specials();
  std::vector<std::string> output = with_specials();
  for (const auto& f : formatting_vocabulary(unit)) {
    input.push_back(f.text());
    output.push_back(f.text());
  }
  std::set<std::string> seen(input.begin(), input.end());
  for (const auto& rule : ruleset.rule_names()) {
    for (auto tag : {open_tag(rule), close_tag(rule)}) {
      if (seen.insert(tag).second) input.push_back(tag);
    }
  }
  std::set<std::string> java;
  for (const auto& pair : dataset) {
    for (const auto& t : pair.input.tokens) {
      if (!seen.contains(t) && !FormattingToken::parse(t) && !is_tag(t)) java.insert(t);
    }
  }
  input.insert(input.end(), java.begin(), java.end());
  return Vocabulary(std::move(input), std::move(output), unit);
}

}  // namespace crepair
