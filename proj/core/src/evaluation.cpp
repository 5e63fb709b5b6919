#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>
#include <json.hpp>

#include "crepair/pipeline.hpp"

namespace crepair {

using nlohmann::ordered_json;

namespace {

constexpr int kPercentiles[] = {5, 25, 50, 75, 95};

}  // namespace

double percentile(std::vector<double> values, double p) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  const double rank = std::clamp(p, 0.0, 100.0) / 100.0 * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(rank));
  const auto hi = static_cast<std::size_t>(std::ceil(rank));
  return values[lo] + (values[hi] - values[lo]) * (rank - static_cast<double>(lo));
}

std::size_t EvaluationReport::repaired() const {
  auto it = categories.find(Outcome::RepairedNoError);
  return it == categories.end() ? 0 : it->second;
}

EvaluationReport evaluate_corpus(std::span<const ErrorFile> files, const Ruleset& ruleset, const RepairModels& models,
                                 const RepairOptions& options) {
  EvaluationReport report;
  for (Outcome o : kOutcomes) report.categories[o] = 0;
  std::vector<double> diffs, seconds;
  for (const auto& file : files) {
    RepairOutcome outcome = repair_file(file.text, ruleset, models, options, file.path);
    FileResult r;
    r.path = file.path;
    r.rule = outcome.violation ? outcome.violation->rule : std::string("(unparsed)");
    r.category = outcome.category;
    r.seconds = outcome.elapsed;
    r.candidates = outcome.candidates.size();
    for (std::size_t i : outcome.verification.passing) {
      switch (outcome.candidates[i].source) {
        case CandidateSource::Random:
          r.fixed_by_random = true;
          break;
        case CandidateSource::ThreeGrams:
          r.fixed_by_three_grams = true;
          break;
        case CandidateSource::NGramBaseline:
          r.fixed_by_baseline = true;
          break;
      }
    }
    if (outcome.chosen) {
      r.chosen_source = outcome.chosen->source;
      r.diff_lines = outcome.chosen->diff_lines;
      diffs.push_back(outcome.chosen->diff_lines);
      if (r.fixed_by_random && r.fixed_by_three_grams) {
        ++report.both;
      } else if (r.fixed_by_random) {
        ++report.exclusive_random;
      } else if (r.fixed_by_three_grams) {
        ++report.exclusive_three_grams;
      } else {
        ++report.baseline_only;
      }
    }
    ++report.categories[r.category];
    auto& row = report.per_rule[r.rule];
    if (row.empty()) {
      for (Outcome o : kOutcomes) row[o] = 0;
    }
    ++row[r.category];
    seconds.push_back(r.seconds);
    report.files.push_back(std::move(r));
  }
  report.total = files.size();
  for (int p : kPercentiles) report.diff_percentiles[p] = percentile(diffs, p);
  if (!seconds.empty()) {
    report.mean_seconds = std::accumulate(seconds.begin(), seconds.end(), 0.0) / static_cast<double>(seconds.size());
    report.median_seconds = percentile(seconds, 50);
  }
  return report;
}

std::string EvaluationReport::to_json() const {
  ordered_json j;
  j["total"] = total;
  ordered_json cats = ordered_json::object();
  for (const auto& [o, n] : categories) cats[std::string(to_string(o))] = n;
  j["categories"] = cats;
  ordered_json rules = ordered_json::object();
  for (const auto& [rule, row] : per_rule) {
    ordered_json r = ordered_json::object();
    std::size_t errors = 0;
    for (const auto& [o, n] : row) {
      r[std::string(to_string(o))] = n;
      errors += n;
    }
    r["errors"] = errors;
    r["repair_rate"] = errors ? static_cast<double>(row.at(Outcome::RepairedNoError)) / static_cast<double>(errors) : 0.0;
    rules[rule] = r;
  }
  j["per_rule"] = rules;
  ordered_json pct = ordered_json::object();
  for (const auto& [p, v] : diff_percentiles) pct[fmt::format("p{}", p)] = v;
  j["diff_percentiles"] = pct;
  j["contributions"] = {{"exclusive_random", exclusive_random},
                        {"exclusive_3grams", exclusive_three_grams},
                        {"both", both},
                        {"baseline_only", baseline_only}};
  j["timing"] = {{"mean_seconds", mean_seconds}, {"median_seconds", median_seconds}};
  ordered_json list = ordered_json::array();
  for (const auto& f : files) {
    ordered_json e = {{"path", f.path},
                      {"rule", f.rule},
                      {"category", std::string(to_string(f.category))},
                      {"candidates", f.candidates},
                      {"fixed_by_random", f.fixed_by_random},
                      {"fixed_by_3grams", f.fixed_by_three_grams},
                      {"fixed_by_baseline", f.fixed_by_baseline},
                      {"seconds", f.seconds}};
    if (f.chosen_source) e["chosen_source"] = std::string(to_string(*f.chosen_source));
    if (f.diff_lines) e["diff_lines"] = *f.diff_lines;
    list.push_back(std::move(e));
  }
  j["files"] = list;
  return j.dump(2) + "\n";
}

std::string EvaluationReport::to_text() const {
  std::string out = fmt::format("files: {}\n", total);
  auto pct = [&](std::size_t n) { return total ? 100.0 * static_cast<double>(n) / static_cast<double>(total) : 0.0; };
  for (const auto& [o, n] : categories) out += fmt::format("  {:<28} {:>6} ({:.1f}%)\n", to_string(o), n, pct(n));
  out += "per rule (repaired / errors):\n";
  for (const auto& [rule, row] : per_rule) {
    std::size_t errors = 0;
    for (const auto& [o, n] : row) errors += n;
    out += fmt::format("  {:<28} {:>6} / {}\n", rule, row.at(Outcome::RepairedNoError), errors);
  }
  out += "diff size percentiles:";
  for (const auto& [p, v] : diff_percentiles) out += fmt::format(" p{}={:g}", p, v);
  out += "\n";
  out += fmt::format("repaired by random only: {}, by 3grams only: {}, by both: {}", exclusive_random,
                     exclusive_three_grams, both);
  if (baseline_only) out += fmt::format(", by the n-gram baseline only: {}", baseline_only);
  out += "\n";
  out += fmt::format("prediction time per error: mean {:.3f} s, median {:.3f} s\n", mean_seconds, median_seconds);
  return out;
}

}  // namespace crepair
