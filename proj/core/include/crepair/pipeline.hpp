#pragma once

// Repair of a single-violation file: encode the error window, collect beam
// candidates from each model, decode and re-check them, keep the passing
// candidate with the smallest diff. Plus corpus-level evaluation.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crepair/checker.hpp"
#include "crepair/encoding.hpp"
#include "crepair/model.hpp"

namespace crepair {

/// Declaration order is the tie-break order of select_repair.
enum class CandidateSource : std::uint8_t { ThreeGrams, Random, NGramBaseline };

std::string_view to_string(CandidateSource source);

struct RepairCandidate {
  std::string text;
  CandidateSource source = CandidateSource::Random;
  int beam_rank = 1;
  int diff_lines = 0;
  double score = 0;  // beam log-probability; 0 for the n-gram baseline
  std::vector<FormattingToken> predicted;
};

enum class Verdict : std::uint8_t { Passing, NewError, SameError, SamePlusNew, Broken };

std::string_view to_string(Verdict verdict);

struct Verification {
  std::vector<Verdict> verdicts;  // parallel to the candidates
  std::vector<std::size_t> passing, new_error, same_error, same_plus_new, broken;
};

/// Checks every candidate. A violation is the "same" as `original` when it
/// has the same rule and locates to the same java token.
Verification verify_candidates(std::span<const RepairCandidate> candidates, const Ruleset& ruleset,
                               std::string_view original_text, const Violation& original, IndentUnit unit,
                               int jobs = 1);

/// Smallest diff, then source order, then beam rank. Throws Error when
/// `passing` is empty.
const RepairCandidate& select_repair(std::span<const RepairCandidate> passing);

enum class Outcome : std::uint8_t {
  RepairedNoError,
  RepairedNewErrors,
  NotRepairedSameError,
  NotRepairedSamePlusNew,
  Broken
};

inline constexpr std::array<Outcome, 5> kOutcomes = {Outcome::RepairedNoError, Outcome::RepairedNewErrors,
                                                     Outcome::NotRepairedSameError, Outcome::NotRepairedSamePlusNew,
                                                     Outcome::Broken};

std::string_view to_string(Outcome outcome);

struct RepairModels {
  const Seq2SeqModel* random = nullptr;
  const Seq2SeqModel* three_grams = nullptr;
  // Pools the n-gram baseline's candidate when set.
  const ThreeGramCorpus* baseline = nullptr;
};

struct RepairOptions {
  WindowParams window;
  BeamParams beam;
  int jobs = 1;
};

struct RepairOutcome {
  Outcome category = Outcome::NotRepairedSameError;
  std::optional<RepairCandidate> chosen;
  double elapsed = 0;  // seconds
  std::optional<Violation> violation;
  std::optional<ModelInput> input;
  std::vector<RepairCandidate> candidates;
  Verification verification;
  std::optional<std::string> broken_reason;

  /// The chosen repair, or the original file.
  const std::string& text(const std::string& original) const { return chosen ? chosen->text : original; }
};

class NothingToRepairError : public Error {
 public:
  using Error::Error;
};

/// Repairs the first violation of `text`. Throws NothingToRepairError when
/// the file is clean and Error when no model is given.
RepairOutcome repair_file(const std::string& text, const Ruleset& ruleset, const RepairModels& models,
                          const RepairOptions& options = {}, std::string_view file = {});

struct ErrorFile {
  std::string path;
  std::string text;
};

struct FileResult {
  std::string path;
  std::string rule;
  Outcome category = Outcome::NotRepairedSameError;
  std::optional<CandidateSource> chosen_source;
  std::optional<int> diff_lines;
  bool fixed_by_random = false;  // the model produced a passing candidate
  bool fixed_by_three_grams = false;
  bool fixed_by_baseline = false;
  std::size_t candidates = 0;
  double seconds = 0;
};

struct EvaluationReport {
  std::size_t total = 0;
  std::map<Outcome, std::size_t> categories;
  // rule → outcome → count
  std::map<std::string, std::map<Outcome, std::size_t>> per_rule;
  std::map<int, double> diff_percentiles;  // 5, 25, 50, 75, 95
  std::size_t exclusive_random = 0;
  std::size_t exclusive_three_grams = 0;
  std::size_t both = 0;
  // Repaired only through the n-gram baseline candidate.
  std::size_t baseline_only = 0;
  double mean_seconds = 0;
  double median_seconds = 0;
  std::vector<FileResult> files;

  std::size_t repaired() const;
  std::string to_json() const;
  std::string to_text() const;
};

/// Linear interpolation between closest ranks; 0 for an empty sample.
double percentile(std::vector<double> values, double p);

EvaluationReport evaluate_corpus(std::span<const ErrorFile> files, const Ruleset& ruleset, const RepairModels& models,
                                 const RepairOptions& options = {});

}  // namespace crepair
