#include "crepair/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <thread>

#include <fmt/format.h>

#include "crepair/diff.hpp"

namespace crepair {

std::string_view to_string(CandidateSource source) {
  switch (source) {
    case CandidateSource::ThreeGrams:
      return "3grams";
    case CandidateSource::Random:
      return "random";
    case CandidateSource::NGramBaseline:
      return "ngram";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Passing:
      return "passing";
    case Verdict::NewError:
      return "new_error";
    case Verdict::SameError:
      return "same_error";
    case Verdict::SamePlusNew:
      return "same_plus_new";
    case Verdict::Broken:
      return "broken";
  }
  return "?";
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::RepairedNoError:
      return "repaired_no_error";
    case Outcome::RepairedNewErrors:
      return "repaired_new_errors";
    case Outcome::NotRepairedSameError:
      return "not_repaired_same_error";
    case Outcome::NotRepairedSamePlusNew:
      return "not_repaired_same_plus_new";
    case Outcome::Broken:
      return "broken";
  }
  return "?";
}

namespace {

std::optional<std::size_t> try_locate(const AbstractSequence& seq, const Violation& v) {
  try {
    return locate_token(seq, v.line, v.column);
  } catch (const LocationError&) {
    return std::nullopt;
  }
}

Verdict classify(const RepairCandidate& cand, const Ruleset& ruleset, const AbstractSequence& orig_seq,
                 const Violation& original, std::optional<std::size_t> orig_at) {
  CheckResult r = check(cand.text, ruleset, original.file);
  if (r.is_broken()) return Verdict::Broken;
  AbstractSequence seq;
  try {
    seq = encode(lex(cand.text), EncodeOptions{orig_seq.unit});
  } catch (const Error&) {
    return Verdict::Broken;
  }
  // A whitespace edit that swallows code into a comment still lexes.
  if (seq.java != orig_seq.java) return Verdict::Broken;
  if (r.violations.empty()) return Verdict::Passing;
  bool same = false;
  bool other = false;
  for (const auto& v : r.violations) {
    bool is_same = false;
    if (v.rule == original.rule) {
      auto at = try_locate(seq, v);
      is_same = at && orig_at ? *at == *orig_at : v.line == original.line;
    }
    (is_same ? same : other) = true;
  }
  if (same) return other ? Verdict::SamePlusNew : Verdict::SameError;
  return Verdict::NewError;
}

template <class F>
void parallel_for(std::size_t n, int jobs, F&& f) {
  const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, jobs)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::jthread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) f(i);
    });
  }
}

}  // namespace

Verification verify_candidates(std::span<const RepairCandidate> candidates, const Ruleset& ruleset,
                               std::string_view original_text, const Violation& original, IndentUnit unit, int jobs) {
  const AbstractSequence orig_seq = encode(lex(original_text), EncodeOptions{unit});
  const auto orig_at = try_locate(orig_seq, original);
  Verification out;
  out.verdicts.resize(candidates.size());
  parallel_for(candidates.size(), jobs, [&](std::size_t i) {
    out.verdicts[i] = classify(candidates[i], ruleset, orig_seq, original, orig_at);
  });
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    switch (out.verdicts[i]) {
      case Verdict::Passing:
        out.passing.push_back(i);
        break;
      case Verdict::NewError:
        out.new_error.push_back(i);
        break;
      case Verdict::SameError:
        out.same_error.push_back(i);
        break;
      case Verdict::SamePlusNew:
        out.same_plus_new.push_back(i);
        break;
      case Verdict::Broken:
        out.broken.push_back(i);
        break;
    }
  }
  return out;
}

const RepairCandidate& select_repair(std::span<const RepairCandidate> passing) {
  if (passing.empty()) throw Error("no passing candidate to select from");
  return *std::min_element(passing.begin(), passing.end(), [](const RepairCandidate& a, const RepairCandidate& b) {
    return std::tuple(a.diff_lines, a.source, a.beam_rank) < std::tuple(b.diff_lines, b.source, b.beam_rank);
  });
}

RepairOutcome repair_file(const std::string& text, const Ruleset& ruleset, const RepairModels& models,
                          const RepairOptions& options, std::string_view file) {
  const auto started = std::chrono::steady_clock::now();
  RepairOutcome out;
  auto finish = [&]() -> RepairOutcome {
    out.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return std::move(out);
  };

  CheckResult initial = check(text, ruleset, file);
  if (initial.is_broken()) {
    out.category = Outcome::Broken;
    out.broken_reason = initial.broken;
    return finish();
  }
  if (initial.violations.empty()) throw NothingToRepairError("the file has no formatting violation");
  if (!models.random && !models.three_grams && !models.baseline) throw Error("no repair model given");
  const Violation& v = out.violation.emplace(initial.violations.front());

  // Step E: encode the error window.
  const Seq2SeqModel* any = models.three_grams ? models.three_grams : models.random;
  ConcreteTokenStream stream = lex(text, std::string(file));
  IndentUnit unit = any ? any->vocab().unit() : detect_indent_unit(std::span(&stream, 1));
  const AbstractSequence seq = encode(std::move(stream), EncodeOptions{unit});
  const ModelInput& input = out.input.emplace(extract_error_window(seq, v, options.window));

  // Steps F and G: predict and decode candidates.
  auto add = [&](CandidateSource source, int rank, double score, std::vector<FormattingToken> predicted) {
    RepairCandidate c;
    c.source = source;
    c.beam_rank = rank;
    c.score = score;
    AbstractSequence repaired = apply_formatting(seq, input, predicted);
    c.text = decode(repaired);
    c.diff_lines = static_cast<int>(diff_size(text, c.text));
    c.predicted = std::move(predicted);
    out.candidates.push_back(std::move(c));
  };
  for (auto [source, model] : {std::pair{CandidateSource::Random, models.random},
                               std::pair{CandidateSource::ThreeGrams, models.three_grams}}) {
    if (!model) continue;
    auto beams = predict_beam(*model, input, options.beam);
    for (std::size_t r = 0; r < beams.size(); ++r) {
      add(source, static_cast<int>(r + 1), beams[r].score, std::move(beams[r].tokens));
    }
  }
  if (models.baseline) add(CandidateSource::NGramBaseline, 1, 0, ngram_translate(input, *models.baseline));

  // Step H: verify.
  out.verification = verify_candidates(out.candidates, ruleset, text, v, unit, options.jobs);

  // Step I: select.
  if (!out.verification.passing.empty()) {
    std::vector<RepairCandidate> passing;
    for (std::size_t i : out.verification.passing) passing.push_back(out.candidates[i]);
    out.chosen = select_repair(passing);
    out.category = Outcome::RepairedNoError;
    return finish();
  }
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < out.candidates.size(); ++i) {
    const auto& c = out.candidates[i];
    if (c.text == text) continue;
    double score = c.source == CandidateSource::NGramBaseline ? -std::numeric_limits<double>::infinity() : c.score;
    double best_score = best ? (out.candidates[*best].source == CandidateSource::NGramBaseline
                                    ? -std::numeric_limits<double>::infinity()
                                    : out.candidates[*best].score)
                             : 0;
    if (!best || score > best_score) best = i;
  }
  if (!best) {
    out.category = Outcome::NotRepairedSameError;
    return finish();
  }
  switch (out.verification.verdicts[*best]) {
    case Verdict::NewError:
      out.category = Outcome::RepairedNewErrors;
      break;
    case Verdict::SamePlusNew:
      out.category = Outcome::NotRepairedSamePlusNew;
      break;
    case Verdict::Broken:
      out.category = Outcome::Broken;
      break;
    case Verdict::SameError:
    case Verdict::Passing:
      out.category = Outcome::NotRepairedSameError;
      break;
  }
  return finish();
}

}  // namespace crepair
