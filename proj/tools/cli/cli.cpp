#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "config.hpp"
#include "crepair/checker.hpp"
#include "crepair/dataset.hpp"
#include "crepair/diff.hpp"
#include "crepair/model.hpp"
#include "crepair/pipeline.hpp"

namespace crepair::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct Corpus {
  std::vector<SourceFile> files;
  std::vector<ConcreteTokenStream> streams;
  IndentUnit unit;
};

Corpus load_corpus(const ProjectConfig& cfg, const Ruleset* ruleset, std::ostream& err) {
  if (cfg.corpus_glob.empty()) throw UsageError("config: 'corpus' is required for this command");
  Corpus c;
  for (const auto& path : expand_glob(cfg.root, cfg.corpus_glob)) {
    SourceText src = read_source_file(path.string());
    std::string rel = path.lexically_relative(cfg.root).generic_string();
    if (ruleset) {
      CheckResult r = check(src.text, *ruleset, rel);
      if (!r.clean()) {
        err << fmt::format("warning: skipping {}: {}\n", rel,
                           r.broken ? *r.broken : fmt::format("{} violation(s)", r.violations.size()));
        continue;
      }
    }
    try {
      c.streams.push_back(lex(src.text, rel));
    } catch (const LexError& e) {
      err << fmt::format("warning: skipping {}: {}\n", rel, e.what());
      continue;
    }
    c.files.push_back({rel, std::move(src.text)});
  }
  if (c.files.empty()) throw UsageError(fmt::format("no usable corpus files match '{}'", cfg.corpus_glob));
  c.unit = detect_indent_unit(c.streams);
  return c;
}

SourceText read_input(const std::string& path) {
  if (!fs::is_regular_file(path)) throw UsageError(fmt::format("no such file: {}", path));
  return read_source_file(path);
}

ThreeGramCorpus mine(const Corpus& c) {
  std::vector<AbstractSequence> seqs;
  seqs.reserve(c.streams.size());
  for (const auto& s : c.streams) seqs.push_back(encode(s, EncodeOptions{c.unit}));
  return mine_3grams(seqs);
}

fs::path model_path(const ProjectConfig& cfg, Protocol p) {
  return cfg.model_dir / fmt::format("{}.crpr", to_string(p));
}

void write_text(const fs::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(fmt::format("cannot write {}", path.string()));
  out << text;
}

struct LoadedModels {
  std::optional<Seq2SeqModel> random, three_grams;
  std::optional<ThreeGramCorpus> baseline;

  RepairModels view() const {
    return {random ? &*random : nullptr, three_grams ? &*three_grams : nullptr, baseline ? &*baseline : nullptr};
  }
};

LoadedModels load_models(const ProjectConfig& cfg, const Ruleset& ruleset, bool baseline, std::ostream& err) {
  LoadedModels m;
  for (Protocol p : {Protocol::Random, Protocol::ThreeGrams}) {
    fs::path path = model_path(cfg, p);
    if (!fs::exists(path)) {
      err << fmt::format("warning: no {} model at {}\n", to_string(p), path.string());
      continue;
    }
    (p == Protocol::Random ? m.random : m.three_grams).emplace(load_model(path));
  }
  if (baseline) m.baseline = mine(load_corpus(cfg, &ruleset, err));
  if (!m.random && !m.three_grams && !m.baseline) {
    throw UsageError(fmt::format("no trained model in {}; run 'train' first", cfg.model_dir.string()));
  }
  return m;
}

RepairOptions repair_options(const ProjectConfig& cfg) {
  RepairOptions o;
  o.window = cfg.window;
  o.beam = cfg.beam;
  o.jobs = cfg.jobs;
  return o;
}

int cmd_check(const std::vector<std::string>& files, const std::string& ruleset_path, const std::string& format,
              std::ostream& out, std::ostream& err) {
  Ruleset ruleset = load_ruleset(ruleset_path);
  for (const auto& w : ruleset.warnings) err << "warning: " << w << "\n";
  bool findings = false;
  ordered_json list = ordered_json::array();
  for (const auto& file : files) {
    SourceText src = read_input(file);
    CheckResult r = check(src.text, ruleset, file);
    if (r.broken) {
      err << fmt::format("{}: cannot be checked: {}\n", file, *r.broken);
      findings = true;
      continue;
    }
    for (const auto& v : r.violations) {
      findings = true;
      if (format == "json") {
        ordered_json j = {{"file", v.file}, {"line", v.line}};
        if (v.column) j["column"] = *v.column;
        j["rule"] = v.rule;
        j["message"] = v.message;
        list.push_back(std::move(j));
      } else {
        out << format_report(v) << "\n";
      }
    }
  }
  if (format == "json") out << list.dump(2) << "\n";
  return findings ? kExitFindings : kExitOk;
}

int cmd_generate(const ProjectConfig& cfg, Protocol protocol, bool paper_scale, std::ostream& out, std::ostream& err) {
  Ruleset ruleset = load_ruleset(cfg.ruleset_path.string());
  Corpus corpus = load_corpus(cfg, &ruleset, err);
  GenerationConfig gen = cfg.generation;
  gen.protocol = protocol;
  gen.unit = corpus.unit;
  if (paper_scale) gen.number_of_errors = 10000;
  std::optional<ThreeGramCorpus> grams;
  if (protocol == Protocol::ThreeGrams) grams = mine(corpus);
  GenerationStats stats;
  auto pairs = generate_training_set(ruleset, corpus.files, gen, grams ? &*grams : nullptr, &stats);
  write_dataset(cfg.dataset_dir, pairs, protocol);
  out << fmt::format("wrote {} {} pairs to {} ({} batches, {} mutated files)\n", pairs.size(), to_string(protocol),
                     (cfg.dataset_dir / std::string(to_string(protocol))).string(), stats.batches, stats.attempted);
  return kExitOk;
}

int cmd_train(const ProjectConfig& cfg, Protocol protocol, bool paper_scale, std::ostream& out, std::ostream& err) {
  Ruleset ruleset = load_ruleset(cfg.ruleset_path.string());
  auto pairs = read_dataset(cfg.dataset_dir, protocol);
  if (pairs.empty()) throw UsageError("the dataset is empty; run 'generate' first");
  std::vector<ConcreteTokenStream> streams;
  std::set<std::string> seen;
  for (const auto& p : pairs) {
    if (seen.insert(p.source_path).second) streams.push_back(lex(p.orig_file));
  }
  IndentUnit unit = detect_indent_unit(streams);
  Hyperparams hp = cfg.model;
  if (paper_scale) {
    hp = Hyperparams::paper_scale(protocol);
    hp.seed = cfg.seed;
  }
  Vocabulary vocab = build_vocab(pairs, ruleset, unit);
  fs::create_directories(cfg.model_dir);
  TrainingHooks hooks;
  hooks.on_eval = [&](const EvalPoint& p) {
    err << fmt::format("iteration {}: train loss {:.4f}, validation loss {:.4f}, accuracy {:.3f}\n", p.iteration,
                       p.train_loss, p.validation_loss, p.validation_accuracy);
  };
  hooks.on_checkpoint = [&](int iteration, const Seq2SeqModel& m) {
    save_model(m, cfg.model_dir / fmt::format("{}-{}.crpr", to_string(protocol), iteration));
  };
  TrainingReport report;
  Seq2SeqModel model = train(pairs, vocab, hp, &report, hooks);
  const fs::path path = model_path(cfg, protocol);
  save_model(model, path);

  ordered_json j;
  j["protocol"] = std::string(to_string(protocol));
  j["seed"] = hp.seed;
  j["train_pairs"] = report.train_pairs;
  j["validation_pairs"] = report.validation_pairs;
  j["best_iteration"] = report.best_iteration;
  j["best_validation_loss"] = report.best_validation_loss;
  j["seconds"] = report.seconds;
  j["checksum"] = fmt::format("{:016x}", model.checksum());
  ordered_json history = ordered_json::array();
  for (const auto& p : report.history) {
    history.push_back({{"iteration", p.iteration},
                       {"train_loss", p.train_loss},
                       {"validation_loss", p.validation_loss},
                       {"validation_accuracy", p.validation_accuracy}});
  }
  j["history"] = history;
  write_text(cfg.model_dir / fmt::format("{}.training.json", to_string(protocol)), j.dump(2) + "\n");
  out << fmt::format("wrote {} (best iteration {}, validation loss {:.4f})\n", path.string(), report.best_iteration,
                     report.best_validation_loss);
  return kExitOk;
}

int cmd_repair(const ProjectConfig& cfg, const std::string& file, bool in_place, bool diff, bool baseline,
               std::ostream& out, std::ostream& err) {
  SourceText src = read_input(file);
  Ruleset ruleset = load_ruleset(cfg.ruleset_path.string());
  LoadedModels models = load_models(cfg, ruleset, baseline, err);
  RepairOutcome outcome;
  try {
    outcome = repair_file(src.text, ruleset, models.view(), repair_options(cfg), file);
  } catch (const NothingToRepairError&) {
    err << fmt::format("{}: no formatting violation\n", file);
    return kExitOk;
  }
  if (outcome.violation) err << format_report(*outcome.violation) << "\n";
  err << fmt::format("{}: {} ({} candidates, {:.2f} s)\n", file, to_string(outcome.category), outcome.candidates.size(),
                     outcome.elapsed);
  if (!outcome.chosen) return kExitNotRepaired;
  const std::string& repaired = outcome.chosen->text;
  if (diff) {
    out << unified_diff(restore_newlines(src.text, src.ending), restore_newlines(repaired, src.ending), "a/" + file,
                        "b/" + file);
  } else if (in_place) {
    write_source_file(file, repaired, src.ending);
  } else {
    out << restore_newlines(repaired, src.ending);
  }
  return kExitOk;
}

int cmd_eval(const ProjectConfig& cfg, const std::string& dir, bool baseline, const std::string& output,
             std::ostream& out, std::ostream& err) {
  Ruleset ruleset = load_ruleset(cfg.ruleset_path.string());
  LoadedModels models = load_models(cfg, ruleset, baseline, err);
  if (!fs::is_directory(dir)) throw UsageError(fmt::format("{} is not a directory", dir));
  std::vector<ErrorFile> files;
  for (const auto& path : expand_glob(dir, "**/*.java")) {
    std::string rel = path.lexically_relative(dir).generic_string();
    SourceText src = read_source_file(path.string());
    CheckResult r = check(src.text, ruleset, rel);
    if (!r.is_broken() && r.violations.empty()) {
      err << fmt::format("warning: skipping {}: no formatting violation\n", rel);
      continue;
    }
    files.push_back({rel, std::move(src.text)});
  }
  if (files.empty()) throw UsageError(fmt::format("no erroneous .java files under {}", dir));
  EvaluationReport report = evaluate_corpus(files, ruleset, models.view(), repair_options(cfg));
  ordered_json j = ordered_json::parse(report.to_json());
  j["seed"] = cfg.seed;
  const fs::path path = output.empty() ? cfg.model_dir / "evaluation.json" : fs::path(output);
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  write_text(path, j.dump(2) + "\n");
  out << report.to_text();
  out << fmt::format("report written to {}\n", path.string());
  return kExitOk;
}

Protocol protocol_option(const std::string& text) {
  try {
    return parse_protocol(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Learns a project's formatting conventions and repairs formatting violations", "crepair"};
  app.require_subcommand(1);
  std::string config_path;
  std::string protocol_text;
  bool paper_scale = false;
  int jobs = 0;

  auto* check_cmd = app.add_subcommand("check", "Report formatting violations");
  std::vector<std::string> check_files;
  std::string ruleset_path;
  std::string format = "text";
  check_cmd->add_option("files", check_files, "Java files")->required();
  check_cmd->add_option("--ruleset", ruleset_path, "Checkstyle XML ruleset")->required();
  check_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "Project config file")->required();
    cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* generate_cmd = app.add_subcommand("generate", "Seed errors into the corpus to build a training set");
  add_common(generate_cmd);
  generate_cmd->add_option("--protocol", protocol_text, "random or 3grams")->required();
  generate_cmd->add_flag("--paper-scale", paper_scale, "Generate 10000 pairs");

  auto* train_cmd = app.add_subcommand("train", "Train a repair model on a generated dataset");
  add_common(train_cmd);
  train_cmd->add_option("--protocol", protocol_text, "random or 3grams")->required();
  train_cmd->add_flag("--paper-scale", paper_scale, "Use 512-unit models and 20k iterations");

  auto* repair_cmd = app.add_subcommand("repair", "Repair the formatting violation of a file");
  add_common(repair_cmd);
  std::string repair_file_path;
  bool in_place = false;
  bool diff = false;
  bool baseline = false;
  repair_cmd->add_option("file", repair_file_path, "Java file")->required();
  auto* in_place_flag = repair_cmd->add_flag("--in-place", in_place, "Rewrite the file");
  repair_cmd->add_flag("--diff", diff, "Print a unified diff")->excludes(in_place_flag);
  repair_cmd->add_flag("--baseline", baseline, "Also pool the n-gram baseline candidate");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate repairs on a directory of erroneous files");
  add_common(eval_cmd);
  std::string corpus_dir;
  std::string output;
  eval_cmd->add_option("--corpus", corpus_dir, "Directory of files with one violation each")->required();
  eval_cmd->add_option("--output", output, "Report path (default <model_dir>/evaluation.json)");
  eval_cmd->add_flag("--baseline", baseline, "Also pool the n-gram baseline candidate");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(check_cmd)) return cmd_check(check_files, ruleset_path, format, out, err);
    ProjectConfig cfg = load_config(config_path);
    if (jobs > 0) {
      cfg.jobs = jobs;
      cfg.generation.jobs = jobs;
    }
    if (app.got_subcommand(generate_cmd)) return cmd_generate(cfg, protocol_option(protocol_text), paper_scale, out, err);
    if (app.got_subcommand(train_cmd)) return cmd_train(cfg, protocol_option(protocol_text), paper_scale, out, err);
    if (app.got_subcommand(repair_cmd)) return cmd_repair(cfg, repair_file_path, in_place, diff, baseline, out, err);
    if (app.got_subcommand(eval_cmd)) return cmd_eval(cfg, corpus_dir, baseline, output, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace crepair::cli
