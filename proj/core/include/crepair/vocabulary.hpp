#pragma once

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "crepair/checker.hpp"
#include "crepair/encoding.hpp"
#include "crepair/injection.hpp"

namespace crepair {

inline constexpr std::string_view kPadText = "<pad>";
inline constexpr std::string_view kBosText = "<s>";
inline constexpr std::string_view kEosText = "</s>";
inline constexpr std::string_view kUnkText = "<unk>";

/// Input and output token tables. Ids 0..3 are PAD, BOS, EOS, UNK in both.
class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(std::vector<std::string> input_tokens, std::vector<std::string> output_tokens, IndentUnit unit);

  const std::vector<std::string>& input_tokens() const { return input_; }
  const std::vector<std::string>& output_tokens() const { return output_; }
  IndentUnit unit() const { return unit_; }

  int input_size() const { return static_cast<int>(input_.size()); }
  int output_size() const { return static_cast<int>(output_.size()); }

  /// UNK for unseen tokens.
  int input_id(std::string_view token) const;
  /// UNK for tokens outside the output table.
  int output_id(const FormattingToken& token) const;
  /// The formatting token of an output id; throws Error for specials.
  FormattingToken output_token(int id) const;

  std::vector<int> encode_input(const ModelInput& input) const;
  std::vector<int> encode_target(std::span<const FormattingToken> target) const;

  bool operator==(const Vocabulary& other) const {
    return input_ == other.input_ && output_ == other.output_ && unit_ == other.unit_;
  }

 private:
  std::vector<std::string> input_;
  std::vector<std::string> output_;
  IndentUnit unit_;
  std::unordered_map<std::string, int> input_index_;
  std::unordered_map<std::string, int> output_index_;
};

/// Input: specials, the formatting vocabulary, an open/close tag pair per
/// ruleset rule, then the observed java tokens in sorted order. Output:
/// specials and the formatting vocabulary.
Vocabulary build_vocab(std::span<const TrainingPair> dataset, const Ruleset& ruleset, IndentUnit unit);

}  // namespace crepair
