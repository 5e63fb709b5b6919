#include "crepair/encoding.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include <fmt/format.h>

namespace crepair {

std::string to_string(IndentUnit unit) {
  return fmt::format("{}x{}", unit.ch == IndentChar::Space ? "space" : "tab", unit.width);
}

// ---------------------------------------------------------------------------
// Formatting tokens

std::string FormattingToken::text() const {
  switch (kind) {
    case Kind::Space: return fmt::format("{}_SP", count);
    case Kind::Tab: return fmt::format("{}_TB", count);
    case Kind::Newline:
      if (delta == 0) return fmt::format("{}_NL", count);
      return fmt::format("{}_NL_{}_{}", count, std::abs(delta), delta > 0 ? "ID" : "DD");
  }
  return {};
}

namespace {

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 0) return std::nullopt;
  return value;
}

}  // namespace

std::optional<FormattingToken> FormattingToken::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t us = text.find('_', start);
    parts.push_back(text.substr(start, us == std::string_view::npos ? std::string_view::npos : us - start));
    if (us == std::string_view::npos) break;
    start = us + 1;
  }
  if (parts.size() != 2 && parts.size() != 4) return std::nullopt;
  auto count = parse_int(parts[0]);
  if (!count) return std::nullopt;
  if (parts.size() == 2) {
    if (parts[1] == "SP") return spaces(*count);
    if (parts[1] == "TB" && *count > 0) return tabs(*count);
    if (parts[1] == "NL" && *count > 0) return newlines(*count);
    return std::nullopt;
  }
  auto magnitude = parse_int(parts[2]);
  if (parts[1] != "NL" || *count == 0 || !magnitude || *magnitude == 0) return std::nullopt;
  if (parts[3] == "ID") return newlines(*count, *magnitude);
  if (parts[3] == "DD") return newlines(*count, -*magnitude);
  return std::nullopt;
}

std::vector<FormattingToken> formatting_vocabulary(IndentUnit unit) {
  std::vector<FormattingToken> vocab;
  for (int n = 0; n <= kMaxSpaces; ++n) vocab.push_back(FormattingToken::spaces(n));
  for (int n = 1; n <= kMaxTabs; ++n) vocab.push_back(FormattingToken::tabs(n));
  for (int n = 1; n <= kMaxNewlines; ++n) {
    vocab.push_back(FormattingToken::newlines(n));
    for (int u = 1; u <= kMaxDeltaUnits; ++u) vocab.push_back(FormattingToken::newlines(n, u * unit.width));
    for (int u = 1; u <= kMaxDeltaUnits; ++u) vocab.push_back(FormattingToken::newlines(n, -u * unit.width));
  }
  return vocab;
}

MixedIndentError::MixedIndentError(int line, std::string message)
    : Error(fmt::format("line {}: {}", line, message)), line_(line) {}

// ---------------------------------------------------------------------------
// Encoding

std::string abstract_text(const ConcreteToken& token) {
  switch (token.kind) {
    case TokenKind::Keyword:
    case TokenKind::Separator:
    case TokenKind::Operator:
      return token.lexeme;
    case TokenKind::LineComment:
    case TokenKind::BlockComment:
      return "Comment";
    default:
      return std::string(to_string(token.kind));
  }
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (true) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

std::string_view indent_prefix(std::string_view line) {
  std::size_t n = 0;
  while (n < line.size() && (line[n] == ' ' || line[n] == '\t')) ++n;
  return line.substr(0, n);
}

class Encoder {
 public:
  Encoder(const EncodeOptions& options, std::string_view text, std::vector<std::string>& warnings)
      : options_(options), lines_(split_lines(text)), warnings_(warnings) {}

  // Indentation of a 1-based line in indent characters.
  int indentation(int line) {
    if (line < 1 || line > static_cast<int>(lines_.size())) return 0;
    std::string_view prefix = indent_prefix(lines_[static_cast<std::size_t>(line - 1)]);
    bool spaces = prefix.find(' ') != std::string_view::npos;
    bool tabs = prefix.find('\t') != std::string_view::npos;
    if (spaces && tabs) {
      if (options_.strict_mixed_indent) {
        throw MixedIndentError(line, "indentation mixes spaces and tabs");
      }
      warnings_.push_back(fmt::format("line {}: indentation mixes spaces and tabs", line));
    }
    return static_cast<int>(prefix.size());
  }

  FormattingToken gap_token(const Trivia& trivia, int prev_line, int next_line) {
    if (trivia.empty()) return FormattingToken::spaces(0);
    int nl = trivia.newlines();
    if (nl > 0) {
      int delta = next_line > 0 ? indentation(next_line) - (prev_line > 0 ? indentation(prev_line) : 0) : 0;
      const int width = std::max(1, options_.unit.width);
      int units = static_cast<int>(std::lround(static_cast<double>(delta) / width));
      units = std::clamp(units, -kMaxDeltaUnits, kMaxDeltaUnits);
      return FormattingToken::newlines(std::min(nl, kMaxNewlines), units * width);
    }
    int spaces = trivia.count(WhitespaceChar::Space);
    int tabs = trivia.count(WhitespaceChar::Tab);
    if (spaces > 0 && tabs > 0) {
      warnings_.push_back(fmt::format("line {}: whitespace mixes spaces and tabs", prev_line));
      return spaces >= tabs ? FormattingToken::spaces(std::min(spaces + tabs, kMaxSpaces))
                            : FormattingToken::tabs(std::min(spaces + tabs, kMaxTabs));
    }
    if (tabs > 0) return FormattingToken::tabs(std::min(tabs, kMaxTabs));
    return FormattingToken::spaces(std::min(spaces, kMaxSpaces));
  }

  int line_count() const { return static_cast<int>(lines_.size()); }

 private:
  const EncodeOptions& options_;
  std::vector<std::string_view> lines_;
  std::vector<std::string>& warnings_;
};

}  // namespace

AbstractSequence encode(ConcreteTokenStream stream, const EncodeOptions& options) {
  AbstractSequence seq;
  seq.unit = options.unit;
  const std::string text = render(stream);
  Encoder encoder(options, text, seq.warnings);

  const std::size_t n = stream.size();
  seq.java.reserve(n);
  seq.alignment.reserve(n);
  seq.formatting.reserve(n + 1);
  for (std::size_t p = 0; p <= n; ++p) {
    int prev_line = p == 0 ? 0 : end_position(stream.token(p - 1)).line;
    int next_line = p < n ? stream.token(p).line : encoder.line_count();
    seq.formatting.push_back(encoder.gap_token(stream.gap(p), prev_line, next_line));
    if (p < n) {
      seq.java.push_back(abstract_text(stream.token(p)));
      seq.alignment.push_back(p);
    }
  }
  seq.source_formatting = seq.formatting;
  seq.stream = std::move(stream);
  return seq;
}

std::string decode(const AbstractSequence& seq, std::span<const FormattingToken> new_formatting,
                   std::vector<std::string>* warnings) {
  if (new_formatting.size() != seq.source_formatting.size()) {
    throw DecodeError(fmt::format("expected {} formatting tokens, got {}",
                                  seq.source_formatting.size(), new_formatting.size()));
  }
  const char indent_char = seq.unit.ch == IndentChar::Space ? ' ' : '\t';
  std::string out;

  auto emit_gap = [&](std::size_t p) {
    const FormattingToken& tok = new_formatting[p];
    if (tok == seq.source_formatting[p]) {
      out += seq.stream.gap(p).text();
      return;
    }
    switch (tok.kind) {
      case FormattingToken::Kind::Space:
        out.append(static_cast<std::size_t>(tok.count), ' ');
        break;
      case FormattingToken::Kind::Tab:
        out.append(static_cast<std::size_t>(tok.count), '\t');
        break;
      case FormattingToken::Kind::Newline: {
        std::size_t line_start = out.rfind('\n');
        line_start = line_start == std::string::npos ? 0 : line_start + 1;
        int current = static_cast<int>(indent_prefix(std::string_view(out).substr(line_start)).size());
        int target = current + tok.delta;
        if (target < 0) {
          if (warnings) {
            warnings->push_back(fmt::format("formatting position {}: {} implies negative indentation; clamped to 0",
                                            p, tok.text()));
          }
          target = 0;
        }
        out.append(static_cast<std::size_t>(tok.count), '\n');
        out.append(static_cast<std::size_t>(target), indent_char);
        break;
      }
    }
  };

  for (std::size_t p = 0; p <= seq.size(); ++p) {
    emit_gap(p);
    if (p < seq.size()) out += seq.stream.token(seq.alignment[p]).lexeme;
  }
  return out;
}

std::string to_text(const AbstractSequence& seq) {
  std::vector<std::string> tokens;
  const auto zero = FormattingToken::spaces(0);
  if (seq.formatting.front() != zero) tokens.push_back(seq.formatting.front().text());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    tokens.push_back(seq.java[i]);
    if (i + 1 < seq.size() || seq.formatting[i + 1] != zero) {
      tokens.push_back(seq.formatting[i + 1].text());
    }
  }
  return join_tokens(tokens);
}

// ---------------------------------------------------------------------------
// Indentation unit detection

IndentUnit detect_indent_unit(std::span<const ConcreteTokenStream> corpus) {
  std::size_t space_lines = 0;
  std::size_t tab_lines = 0;
  // (char, indentation) of every line that starts with a token.
  std::vector<std::vector<std::pair<char, int>>> per_file;
  for (const auto& stream : corpus) {
    std::string text = render(stream);
    auto lines = split_lines(text);
    auto& code_lines = per_file.emplace_back();
    for (std::size_t i = 0; i < stream.size(); ++i) {
      if (i > 0 && stream.gap(i).newlines() == 0) continue;
      const auto& tok = stream.token(i);
      std::string_view prefix = indent_prefix(lines[static_cast<std::size_t>(tok.line - 1)]);
      bool spaces = prefix.find(' ') != std::string_view::npos;
      bool tabs = prefix.find('\t') != std::string_view::npos;
      if (spaces && tabs) {
        code_lines.emplace_back('?', 0);
        continue;
      }
      if (spaces) ++space_lines;
      if (tabs) ++tab_lines;
      code_lines.emplace_back(spaces ? ' ' : tabs ? '\t' : '\0', static_cast<int>(prefix.size()));
    }
  }
  if (space_lines == 0 && tab_lines == 0) return IndentUnit{};

  IndentUnit unit;
  unit.ch = tab_lines > space_lines ? IndentChar::Tab : IndentChar::Space;
  const char majority = unit.ch == IndentChar::Space ? ' ' : '\t';
  std::map<int, std::size_t> deltas;
  for (const auto& lines : per_file) {
    for (std::size_t i = 1; i < lines.size(); ++i) {
      auto [prev_ch, prev] = lines[i - 1];
      auto [cur_ch, cur] = lines[i];
      bool prev_ok = prev_ch == majority || prev_ch == '\0';
      bool cur_ok = cur_ch == majority || cur_ch == '\0';
      if (prev_ok && cur_ok && cur > prev) ++deltas[cur - prev];
    }
  }
  if (deltas.empty()) {
    unit.width = unit.ch == IndentChar::Space ? 4 : 1;
    return unit;
  }
  auto best = std::max_element(deltas.begin(), deltas.end(), [](const auto& a, const auto& b) {
    return a.second < b.second;  // first maximum → smallest delta on ties
  });
  unit.width = best->first;
  return unit;
}

// ---------------------------------------------------------------------------
// Error windows

std::string open_tag(std::string_view rule) { return fmt::format("<{}>", rule); }
std::string close_tag(std::string_view rule) { return fmt::format("</{}>", rule); }

std::string ModelInput::text() const { return join_tokens(tokens); }

namespace {

int total_lines(const AbstractSequence& seq) {
  int lines = 1;
  for (std::size_t p = 0; p <= seq.stream.size(); ++p) {
    lines += seq.stream.gap(p).newlines();
    if (p < seq.stream.size()) {
      const auto& tok = seq.stream.token(p);
      lines += end_position(tok).line - tok.line;
    }
  }
  return lines;
}

const ConcreteToken& token_at(const AbstractSequence& seq, std::size_t i) {
  return seq.stream.token(seq.alignment[i]);
}

// [first, last] java indices of tokens starting on `line`, nullopt if none.
std::optional<std::pair<std::size_t, std::size_t>> tokens_on_line(const AbstractSequence& seq, int line) {
  auto lower = std::partition_point(seq.alignment.begin(), seq.alignment.end(), [&](std::size_t a) {
    return seq.stream.token(a).line < line;
  });
  std::size_t first = static_cast<std::size_t>(lower - seq.alignment.begin());
  if (first == seq.size() || token_at(seq, first).line != line) return std::nullopt;
  std::size_t last = first;
  while (last + 1 < seq.size() && token_at(seq, last + 1).line == line) ++last;
  return std::make_pair(first, last);
}

// Last java token starting at or before (line, column); 0 if none.
std::size_t token_before(const AbstractSequence& seq, int line, int column) {
  SourcePosition pos{line, column};
  auto upper = std::partition_point(seq.alignment.begin(), seq.alignment.end(), [&](std::size_t a) {
    const auto& t = seq.stream.token(a);
    return SourcePosition{t.line, t.column} <= pos;
  });
  std::size_t idx = static_cast<std::size_t>(upper - seq.alignment.begin());
  return idx == 0 ? 0 : idx - 1;
}

}  // namespace

std::size_t locate_token(const AbstractSequence& seq, int line, std::optional<int> column) {
  if (seq.size() == 0) throw LocationError("cannot locate a violation in a file without tokens");
  if (line < 1 || line > total_lines(seq)) {
    throw LocationError(fmt::format("line {} is outside the file", line));
  }
  if (!column) {
    if (auto range = tokens_on_line(seq, line)) return range->first;
    return token_before(seq, line, 1);
  }
  std::size_t before = token_before(seq, line, *column);
  const auto& candidate = token_at(seq, before);
  SourcePosition pos{line, *column};
  if (SourcePosition{candidate.line, candidate.column} <= pos && pos < end_position(candidate)) {
    return before;
  }
  if (auto range = tokens_on_line(seq, line)) {
    std::size_t best = range->first;
    int best_distance = std::abs(token_at(seq, best).column - *column);
    for (std::size_t i = range->first + 1; i <= range->second; ++i) {
      int d = std::abs(token_at(seq, i).column - *column);
      if (d < best_distance) {
        best = i;
        best_distance = d;
      }
    }
    return best;
  }
  return before;
}

ModelInput extract_error_window(const AbstractSequence& seq, const Violation& v, const WindowParams& params) {
  const std::size_t total = seq.size();
  if (total == 0) throw LocationError("cannot build an error window for a file without tokens");

  std::size_t span_begin = 0;
  std::size_t span_end = 0;
  auto pairs_before = [](int tokens) { return static_cast<std::size_t>((tokens + 1) / 2); };
  auto pairs_after = [](int tokens) { return static_cast<std::size_t>(tokens / 2); };
  if (v.column) {
    std::size_t e = locate_token(seq, v.line, v.column);
    span_begin = e - std::min(e, pairs_before(params.n));
    span_end = std::min(total, e + pairs_after(params.n) + 1);
  } else {
    std::size_t first = locate_token(seq, v.line, std::nullopt);
    std::size_t last = first;
    if (auto range = tokens_on_line(seq, v.line)) last = range->second;
    span_begin = first - std::min(first, pairs_before(params.i));
    span_end = std::min(total, last + pairs_after(params.j) + 1);
  }

  const int error_line = v.line;
  std::size_t window_begin = span_begin;
  while (window_begin > 0 && token_at(seq, window_begin - 1).line >= error_line - params.k) --window_begin;
  std::size_t window_end = span_end;
  while (window_end < total && token_at(seq, window_end).line <= error_line + params.k) ++window_end;

  ModelInput input;
  input.rule = v.rule;
  input.window_begin = window_begin;
  input.window_end = window_end;
  input.span_begin = span_begin;
  input.span_end = span_end;
  input.sequence_size = total;
  for (std::size_t i = window_begin; i < window_end; ++i) {
    if (i == span_begin) input.tokens.push_back(open_tag(v.rule));
    input.tokens.push_back(seq.java[i]);
    input.tokens.push_back(seq.formatting[i + 1].text());
    if (i + 1 == span_end) input.tokens.push_back(close_tag(v.rule));
  }
  for (std::size_t i = span_begin; i <= std::min(span_end, total - 1); ++i) input.span_java.push_back(seq.java[i]);
  input.span_formatting.assign(seq.formatting.begin() + static_cast<std::ptrdiff_t>(span_begin + 1),
                               seq.formatting.begin() + static_cast<std::ptrdiff_t>(span_end + 1));
  return input;
}

std::vector<FormattingToken> align_target_window(const AbstractSequence& orig_seq, const ModelInput& err_input) {
  if (orig_seq.size() != err_input.sequence_size) {
    throw AlignmentError(fmt::format("java token counts differ: {} vs {}", orig_seq.size(),
                                     err_input.sequence_size));
  }
  std::size_t java_index = err_input.window_begin;
  bool expect_java = true;
  const std::string open = open_tag(err_input.rule);
  const std::string close = close_tag(err_input.rule);
  for (const auto& tok : err_input.tokens) {
    if (tok == open || tok == close) continue;
    if (expect_java) {
      if (java_index >= orig_seq.size() || orig_seq.java[java_index] != tok) {
        throw AlignmentError(fmt::format("java token {} differs", java_index));
      }
      ++java_index;
    }
    expect_java = !expect_java;
  }
  return {orig_seq.formatting.begin() + static_cast<std::ptrdiff_t>(err_input.span_begin + 1),
          orig_seq.formatting.begin() + static_cast<std::ptrdiff_t>(err_input.span_end + 1)};
}

AbstractSequence apply_formatting(const AbstractSequence& seq, const ModelInput& input,
                                  std::span<const FormattingToken> predicted) {
  AbstractSequence out = seq;
  const std::size_t positions = input.formatting_positions();
  const std::size_t used = std::min(positions, predicted.size());
  for (std::size_t p = 0; p < used; ++p) {
    out.formatting[input.span_begin + 1 + p] = predicted[p];
  }
  return out;
}

std::string join_tokens(std::span<const std::string> tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\n' && text[i] != '\t') ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

std::string formatting_text(std::span<const FormattingToken> tokens) {
  std::vector<std::string> texts;
  texts.reserve(tokens.size());
  for (const auto& t : tokens) texts.push_back(t.text());
  return join_tokens(texts);
}

}  // namespace crepair
