#include "crepair/injection.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <thread>

#include <fmt/format.h>

namespace crepair {

std::string_view to_string(Protocol protocol) {
  return protocol == Protocol::Random ? "random" : "3grams";
}

Protocol parse_protocol(std::string_view text) {
  if (text == "random") return Protocol::Random;
  if (text == "3grams") return Protocol::ThreeGrams;
  throw Error(fmt::format("unknown protocol '{}' (expected random or 3grams)", text));
}

std::string_view to_string(Mutation::Kind kind) {
  switch (kind) {
    case Mutation::Kind::Insert: return "insert";
    case Mutation::Kind::Delete: return "delete";
    case Mutation::Kind::Replace: return "replace";
  }
  return "";
}

namespace {

std::string visible(std::string_view ws) {
  std::string out;
  for (char c : ws) {
    if (c == ' ') out += "\\s";
    else if (c == '\t') out += "\\t";
    else if (c == '\n') out += "\\n";
    else out += c;
  }
  return out;
}

}  // namespace

std::string Mutation::describe() const {
  if (kind == Kind::Replace) {
    return fmt::format("replace {} with {} at formatting position {} ({}:{})", before_token, after_token,
                       position.value_or(0), line, column);
  }
  if (kind == Kind::Insert) return fmt::format("insert '{}' at {}:{}", visible(inserted), line, column);
  return fmt::format("delete '{}' at {}:{}", visible(removed), line, column);
}

// ---------------------------------------------------------------------------
// 3-gram corpus

void ThreeGramCorpus::add(const ThreeGram& gram, std::uint64_t count) {
  if (count == 0) return;
  counts_[gram] += count;
  total_ += count;
  auto& entries = index_[{gram.left, gram.right}];
  auto it = std::lower_bound(entries.begin(), entries.end(), gram.fmt,
                             [](const Entry& e, const FormattingToken& f) { return e.first < f; });
  if (it != entries.end() && it->first == gram.fmt) {
    it->second += count;
  } else {
    entries.insert(it, {gram.fmt, count});
  }
}

void ThreeGramCorpus::add(const AbstractSequence& seq) {
  for (std::size_t i = 1; i < seq.size(); ++i) add(ThreeGram{seq.java[i - 1], seq.formatting[i], seq.java[i]});
}

std::uint64_t ThreeGramCorpus::count(const ThreeGram& gram) const {
  auto it = counts_.find(gram);
  return it == counts_.end() ? 0 : it->second;
}

std::span<const ThreeGramCorpus::Entry> ThreeGramCorpus::matches(std::string_view left,
                                                                 std::string_view right) const {
  auto it = index_.find(std::make_pair(std::string(left), std::string(right)));
  if (it == index_.end()) return {};
  return it->second;
}

ThreeGramCorpus mine_3grams(std::span<const AbstractSequence> corpus) {
  ThreeGramCorpus out;
  for (const auto& seq : corpus) out.add(seq);
  return out;
}

FormattingToken sample_formatting(std::span<const ThreeGramCorpus::Entry> entries, Rng& rng) {
  if (entries.empty()) throw NoMatchError("no formatting token to sample from");
  std::uint64_t total = 0;
  for (const auto& [fmt, count] : entries) total += count;
  std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
  std::uint64_t r = pick(rng);
  for (const auto& [fmt, count] : entries) {
    if (r < count) return fmt;
    r -= count;
  }
  return entries.back().first;
}

// ---------------------------------------------------------------------------
// Mutations

namespace {

std::vector<std::string> lexemes(const ConcreteTokenStream& stream) {
  std::vector<std::string> out;
  out.reserve(stream.size());
  for (const auto& item : stream.items) out.push_back(item.token.lexeme);
  return out;
}

bool same_tokens(std::string_view text, const std::vector<std::string>& expected) {
  try {
    return lexemes(lex(text)) == expected;
  } catch (const LexError&) {
    return false;
  }
}

SourcePosition position_of(std::string_view text, std::size_t offset) {
  SourcePosition pos;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
      ++pos.column;
    }
  }
  return pos;
}

bool punctuation_or_operator(const ConcreteToken& t) {
  return t.kind == TokenKind::Separator || t.kind == TokenKind::Operator;
}

struct Site {
  std::size_t offset;
  char ch;  // deleted character; unused for insertions
};

}  // namespace

InjectionResult inject_random(std::string_view file, Rng& rng, IndentUnit unit) {
  const ConcreteTokenStream stream = lex(file);
  if (stream.size() == 0) throw NoSiteError("file has no tokens");
  const auto expected = lexemes(stream);
  const char indent_char = unit.ch == IndentChar::Space ? ' ' : '\t';

  // Byte offset of every gap start.
  std::vector<std::size_t> gap_start(stream.size() + 1);
  std::size_t offset = 0;
  for (std::size_t g = 0; g <= stream.size(); ++g) {
    gap_start[g] = offset;
    offset += static_cast<std::size_t>(stream.gap(g).length());
    if (g < stream.size()) offset += stream.token(g).lexeme.size();
  }

  std::vector<std::size_t> insertions;
  std::vector<Site> deletions;
  for (std::size_t g = 0; g <= stream.size(); ++g) {
    const std::size_t begin = gap_start[g];
    const std::size_t end = begin + static_cast<std::size_t>(stream.gap(g).length());
    insertions.push_back(begin);
    if (end != begin) insertions.push_back(end);
    if (end == begin) continue;

    bool punct = (g > 0 && punctuation_or_operator(stream.token(g - 1))) ||
                 (g < stream.size() && punctuation_or_operator(stream.token(g)));
    std::set<std::size_t> seen;
    if (punct) {
      seen.insert(begin);
      seen.insert(end - 1);
    }
    // Runs of two or more indent characters.
    std::size_t run = begin;
    while (run < end) {
      std::size_t stop = run;
      while (stop < end && file[stop] == file[run]) ++stop;
      if (file[run] == indent_char && stop - run >= 2) {
        seen.insert(run);
      }
      run = stop;
    }
    for (std::size_t s : seen) deletions.push_back({s, file[s]});
  }

  static constexpr char kChars[] = {' ', '\t', '\n'};
  while (!insertions.empty() || !deletions.empty()) {
    bool remove = !deletions.empty() && (insertions.empty() || std::bernoulli_distribution(0.5)(rng));
    std::string text(file);
    Mutation m;
    if (remove) {
      std::size_t k = std::uniform_int_distribution<std::size_t>(0, deletions.size() - 1)(rng);
      Site site = deletions[k];
      deletions.erase(deletions.begin() + static_cast<std::ptrdiff_t>(k));
      text.erase(site.offset, 1);
      m.kind = Mutation::Kind::Delete;
      m.offset = site.offset;
      m.removed = std::string(1, site.ch);
    } else {
      std::size_t k = std::uniform_int_distribution<std::size_t>(0, insertions.size() - 1)(rng);
      char ch = kChars[std::uniform_int_distribution<int>(0, 2)(rng)];
      std::size_t at = insertions[k];
      insertions.erase(insertions.begin() + static_cast<std::ptrdiff_t>(k));
      text.insert(at, 1, ch);
      m.kind = Mutation::Kind::Insert;
      m.offset = at;
      m.inserted = std::string(1, ch);
    }
    if (!same_tokens(text, expected)) continue;
    auto pos = position_of(file, m.offset);
    m.line = pos.line;
    m.column = pos.column;
    return {std::move(text), std::move(m)};
  }
  throw NoSiteError("no edit keeps the token sequence intact");
}

InjectionResult inject_3gram(std::string_view file, const ThreeGramCorpus& corpus, Rng& rng, IndentUnit unit) {
  const AbstractSequence seq = encode(lex(file), EncodeOptions{unit});
  const auto expected = lexemes(seq.stream);
  if (seq.size() < 2) throw NoMatchError("file has no inner formatting position");

  std::vector<std::size_t> positions(seq.size() - 1);
  std::iota(positions.begin(), positions.end(), std::size_t{1});
  std::shuffle(positions.begin(), positions.end(), rng);

  for (std::size_t p : positions) {
    auto entries = corpus.matches(seq.java[p - 1], seq.java[p]);
    if (entries.empty()) continue;
    const FormattingToken original = seq.formatting[p];
    std::optional<FormattingToken> replacement;
    for (int attempt = 0; attempt < kThreeGramRetries; ++attempt) {
      FormattingToken drawn = sample_formatting(entries, rng);
      if (drawn != original) {
        replacement = drawn;
        break;
      }
    }
    if (!replacement) continue;
    std::vector<FormattingToken> formatting = seq.formatting;
    formatting[p] = *replacement;
    std::string text = decode(seq, formatting);
    if (!same_tokens(text, expected)) continue;

    Mutation m;
    m.kind = Mutation::Kind::Replace;
    m.position = p;
    m.before_token = original.text();
    m.after_token = replacement->text();
    const auto& prev = seq.stream.token(seq.alignment[p - 1]);
    auto end = end_position(prev);
    m.line = end.line;
    m.column = end.column;
    m.removed = seq.stream.gap(p).text();
    // The gap is rewritten in place; offsets before it are unchanged.
    std::size_t offset = 0;
    for (std::size_t g = 0; g < p; ++g) {
      offset += static_cast<std::size_t>(seq.stream.gap(g).length()) + seq.stream.token(g).lexeme.size();
    }
    m.offset = offset;
    std::size_t tail = file.size() - offset - m.removed.size();
    m.inserted = text.substr(offset, text.size() - offset - tail);
    return {std::move(text), std::move(m)};
  }
  throw NoMatchError("no formatting position admits a different corpus token");
}

// ---------------------------------------------------------------------------
// Batch generation

Rng item_rng(std::uint64_t seed, std::uint64_t batch, std::uint64_t item) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(batch), static_cast<std::uint32_t>(batch >> 32),
                    static_cast<std::uint32_t>(item), static_cast<std::uint32_t>(item >> 32)};
  return Rng(seq);
}

namespace {

enum class ItemStatus { Accepted, NoSite, Zero, Multiple, Broken, Window };

struct ItemResult {
  ItemStatus status = ItemStatus::NoSite;
  TrainingPair pair;
};

ItemResult run_item(const Ruleset& ruleset, std::span<const SourceFile> files, const GenerationConfig& cfg,
                    const ThreeGramCorpus* corpus, std::uint64_t batch, std::uint64_t item) {
  ItemResult result;
  Rng rng = item_rng(cfg.seed, batch, item);
  std::size_t index = std::uniform_int_distribution<std::size_t>(0, files.size() - 1)(rng);
  const SourceFile& source = files[index];

  InjectionResult injected;
  try {
    injected = cfg.protocol == Protocol::Random ? inject_random(source.text, rng, cfg.unit)
                                                : inject_3gram(source.text, *corpus, rng, cfg.unit);
  } catch (const NoSiteError&) {
    return result;
  } catch (const NoMatchError&) {
    return result;
  }

  CheckResult checked = check(injected.text, ruleset, source.path);
  if (checked.is_broken()) {
    result.status = ItemStatus::Broken;
    return result;
  }
  if (checked.violations.empty()) {
    result.status = ItemStatus::Zero;
    return result;
  }
  if (checked.violations.size() > 1) {
    result.status = ItemStatus::Multiple;
    return result;
  }

  TrainingPair& pair = result.pair;
  try {
    AbstractSequence err = encode(lex(injected.text, source.path), EncodeOptions{cfg.unit});
    AbstractSequence orig = encode(lex(source.text, source.path), EncodeOptions{cfg.unit});
    pair.input = extract_error_window(err, checked.violations.front(), cfg.window);
    pair.target = align_target_window(orig, pair.input);
  } catch (const Error&) {
    result.status = ItemStatus::Window;
    return result;
  }
  pair.source_path = source.path;
  pair.protocol = cfg.protocol;
  pair.err_file = std::move(injected.text);
  pair.orig_file = source.text;
  pair.violation = checked.violations.front();
  pair.mutation = std::move(injected.mutation);
  pair.seed = cfg.seed;
  pair.batch = batch;
  pair.item = item;
  result.status = ItemStatus::Accepted;
  return result;
}

}  // namespace

std::vector<TrainingPair> generate_training_set(const Ruleset& ruleset, std::span<const SourceFile> files,
                                                const GenerationConfig& cfg, const ThreeGramCorpus* corpus,
                                                GenerationStats* stats) {
  if (cfg.number_of_errors <= 0) throw Error("number_of_errors must be positive");
  if (cfg.batch_size <= 0) throw Error("batch_size must be positive");
  if (files.empty()) throw Error("no clean files to inject errors into");
  if (cfg.protocol == Protocol::ThreeGrams && (!corpus || corpus->empty())) {
    throw Error("the 3-gram protocol needs a non-empty 3-gram corpus");
  }
  for (const auto& f : files) {
    CheckResult r = check(f.text, ruleset, f.path);
    if (!r.clean()) {
      throw Error(fmt::format("{} is not clean under the ruleset ({})", f.path,
                              r.is_broken() ? *r.broken : format_report(r.violations.front())));
    }
  }

  GenerationStats local;
  GenerationStats& st = stats ? *stats : local;
  std::vector<TrainingPair> pairs;
  const auto target = static_cast<std::size_t>(cfg.number_of_errors);
  const auto batch_size = static_cast<std::size_t>(cfg.batch_size);
  const auto jobs = static_cast<std::size_t>(std::max(1, cfg.jobs));
  int idle_batches = 0;

  for (std::uint64_t batch = 0; pairs.size() < target; ++batch) {
    std::vector<ItemResult> results(batch_size);
    auto worker = [&](std::size_t w) {
      for (std::size_t item = w; item < batch_size; item += jobs) {
        results[item] = run_item(ruleset, files, cfg, corpus, batch, item);
      }
    };
    if (jobs == 1) {
      worker(0);
    } else {
      std::vector<std::jthread> threads;
      for (std::size_t w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    }

    ++st.batches;
    std::size_t accepted = 0;
    for (auto& r : results) {
      ++st.attempted;
      switch (r.status) {
        case ItemStatus::NoSite: ++st.no_site; break;
        case ItemStatus::Zero: ++st.rejected_zero; break;
        case ItemStatus::Multiple: ++st.rejected_multiple; break;
        case ItemStatus::Broken: ++st.rejected_broken; break;
        case ItemStatus::Window: ++st.rejected_window; break;
        case ItemStatus::Accepted:
          ++accepted;
          if (pairs.size() < target) {
            r.pair.id = fmt::format("{:05}", pairs.size());
            pairs.push_back(std::move(r.pair));
          }
          break;
      }
    }
    idle_batches = accepted == 0 ? idle_batches + 1 : 0;
    if (idle_batches >= cfg.watchdog) {
      throw ExhaustionError(fmt::format("{} consecutive batches produced no single-error file ({} of {} pairs)",
                                        idle_batches, pairs.size(), target));
    }
  }
  return pairs;
}

}  // namespace crepair
