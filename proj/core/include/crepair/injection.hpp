#pragma once

// Training data generation: seed a single formatting error into a clean
// file, either by a one-character whitespace edit (random protocol) or by
// replacing one formatting token with one that developers use in the same
// java-token context (3-gram protocol), then keep only files with exactly
// one violation.

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crepair/checker.hpp"
#include "crepair/encoding.hpp"

namespace crepair {

enum class Protocol : std::uint8_t { Random, ThreeGrams };

std::string_view to_string(Protocol protocol);
/// "random" or "3grams"; throws Error otherwise.
Protocol parse_protocol(std::string_view text);

class NoSiteError : public Error {
 public:
  using Error::Error;
};

class NoMatchError : public Error {
 public:
  using Error::Error;
};

class ExhaustionError : public Error {
 public:
  using Error::Error;
};

using Rng = std::mt19937_64;

struct ThreeGram {
  std::string left;
  FormattingToken fmt;
  std::string right;

  auto operator<=>(const ThreeGram&) const = default;
};

class ThreeGramCorpus {
 public:
  using Entry = std::pair<FormattingToken, std::uint64_t>;

  void add(const ThreeGram& gram, std::uint64_t count = 1);
  void add(const AbstractSequence& seq);

  std::uint64_t count(const ThreeGram& gram) const;
  std::uint64_t total() const { return total_; }
  bool empty() const { return total_ == 0; }
  const std::map<ThreeGram, std::uint64_t>& counts() const { return counts_; }

  /// Formatting tokens seen between `left` and `right`, ordered by token.
  std::span<const Entry> matches(std::string_view left, std::string_view right) const;

 private:
  std::map<ThreeGram, std::uint64_t> counts_;
  std::map<std::pair<std::string, std::string>, std::vector<Entry>, std::less<>> index_;
  std::uint64_t total_ = 0;
};

/// Counts every (java, formatting, java) triple of every sequence.
ThreeGramCorpus mine_3grams(std::span<const AbstractSequence> corpus);

/// Draws a formatting token with probability proportional to its count.
FormattingToken sample_formatting(std::span<const ThreeGramCorpus::Entry> entries, Rng& rng);

/// A single whitespace edit, described on the original file.
struct Mutation {
  enum class Kind : std::uint8_t { Insert, Delete, Replace };

  Kind kind = Kind::Insert;
  std::size_t offset = 0;  // byte offset in the original text
  int line = 1;
  int column = 1;
  std::string removed;
  std::string inserted;
  // 3-gram protocol: formatting position and the tokens swapped there.
  std::optional<std::size_t> position;
  std::string before_token;
  std::string after_token;

  std::string describe() const;
};

std::string_view to_string(Mutation::Kind kind);

struct InjectionResult {
  std::string text;
  Mutation mutation;
};

/// One insertion or deletion of a space, tab or newline. Insertion sites are
/// both ends of every gap between tokens; deletion sites are gaps next to a
/// separator or operator and runs of at least two indent characters. The
/// java-token sequence is unchanged. Throws NoSiteError for token-less input.
InjectionResult inject_random(std::string_view file, Rng& rng, IndentUnit unit = {});

inline constexpr int kThreeGramRetries = 8;

/// Replaces the formatting token at a random inner position by one sampled
/// from the corpus for the same (left, right) java tokens. Positions whose
/// draws keep returning the original token, or whose replacement would change
/// the java tokens, are skipped. Throws NoMatchError when no position works.
InjectionResult inject_3gram(std::string_view file, const ThreeGramCorpus& corpus, Rng& rng,
                             IndentUnit unit);

struct GenerationConfig {
  int number_of_errors = 1000;
  int batch_size = 500;
  Protocol protocol = Protocol::Random;
  std::uint64_t seed = 0;
  IndentUnit unit;
  WindowParams window;
  // Consecutive batches without an accepted file before giving up.
  int watchdog = 50;
  int jobs = 1;
};

struct SourceFile {
  std::string path;
  std::string text;  // LF-normalized
};

struct TrainingPair {
  std::string id;
  std::string source_path;
  Protocol protocol = Protocol::Random;
  std::string err_file;
  std::string orig_file;
  Violation violation;
  ModelInput input;
  std::vector<FormattingToken> target;
  Mutation mutation;
  std::uint64_t seed = 0;
  std::uint64_t batch = 0;
  std::uint64_t item = 0;
};

struct GenerationStats {
  std::uint64_t batches = 0;
  std::uint64_t attempted = 0;
  std::uint64_t no_site = 0;
  std::uint64_t rejected_zero = 0;
  std::uint64_t rejected_multiple = 0;
  std::uint64_t rejected_broken = 0;
  std::uint64_t rejected_window = 0;
};

/// Per-item random stream; makes parallel generation match sequential.
Rng item_rng(std::uint64_t seed, std::uint64_t batch, std::uint64_t item);

/// Batch loop: mutate randomly chosen files (with replacement), check the
/// batch, keep files with exactly one violation. `corpus` is required for
/// the 3-gram protocol. Input files must be clean under `ruleset`.
std::vector<TrainingPair> generate_training_set(const Ruleset& ruleset, std::span<const SourceFile> files,
                                                const GenerationConfig& cfg,
                                                const ThreeGramCorpus* corpus = nullptr,
                                                GenerationStats* stats = nullptr);

}  // namespace crepair
