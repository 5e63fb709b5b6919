#include "crepair/checker.hpp"

#include <algorithm>
#include <charconv>
#include <regex>
#include <set>

#include <fmt/format.h>

#include "token_analysis.hpp"

namespace crepair {

namespace {

using detail::BlockOwner;
using detail::TokenAnalysis;

std::string_view prop(const RuleConfig& rule, std::string_view name, std::string_view fallback) {
  auto it = rule.properties.find(std::string(name));
  return it == rule.properties.end() ? fallback : std::string_view(it->second);
}

bool prop_bool(const RuleConfig& rule, std::string_view name, bool fallback) {
  auto value = prop(rule, name, fallback ? "true" : "false");
  return value == "true";
}

int prop_int(const RuleConfig& rule, std::string_view name, int fallback) {
  auto value = prop(rule, name, "");
  int out = fallback;
  if (!value.empty()) std::from_chars(value.data(), value.data() + value.size(), out);
  return out;
}

std::set<std::string, std::less<>> token_set(const RuleConfig& rule,
                                             std::initializer_list<std::string_view> defaults) {
  std::set<std::string, std::less<>> out;
  auto it = rule.properties.find("tokens");
  if (it == rule.properties.end()) {
    for (auto d : defaults) out.emplace(d);
    return out;
  }
  std::string_view rest = it->second;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (!item.empty()) out.emplace(item);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

int code_points(std::string_view s) {
  int n = 0;
  for (char c : s) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  if (text.empty()) return lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

struct Context {
  const TokenAnalysis& ta;
  std::string_view source;
  std::vector<std::string_view> lines;
  std::string file;
  int tab_width;
  std::vector<Violation>& out;

  void report(int line, std::optional<int> column, std::string_view rule, std::string message) const {
    out.push_back(Violation{file, line, column, std::string(rule), std::move(message)});
  }
  void report_at(std::size_t i, std::string_view rule, std::string message) const {
    const auto& t = ta.tok(i);
    report(t.line, t.column, rule, std::move(message));
  }
  bool same_line(std::size_t a, std::size_t b) const { return ta.tok(a).line == ta.tok(b).line; }
};

bool has(const std::set<std::string, std::less<>>& set, std::string_view type) { return set.contains(type); }

// ---------------------------------------------------------------- braces

bool checks_line_break_after(BlockOwner owner) {
  switch (owner) {
    case BlockOwner::Class:
    case BlockOwner::Interface:
    case BlockOwner::Enum:
    case BlockOwner::AnonymousClass:
    case BlockOwner::EnumConstant:
    case BlockOwner::None:
    case BlockOwner::Bare:
      return false;
    default:
      return true;
  }
}

bool owner_selected(const std::set<std::string, std::less<>>& tokens, BlockOwner owner) {
  if (owner == BlockOwner::Method) return has(tokens, "METHOD_DEF") || has(tokens, "CTOR_DEF");
  if (owner == BlockOwner::Case) return has(tokens, "LITERAL_CASE") || has(tokens, "LITERAL_DEFAULT");
  return has(tokens, detail::owner_type(owner));
}

void check_left_curly(const Context& c, const RuleConfig& rule) {
  static constexpr std::string_view kName = "LeftCurly";
  const auto tokens =
      token_set(rule, {"ANNOTATION_DEF", "CLASS_DEF", "CTOR_DEF", "ENUM_CONSTANT_DEF", "ENUM_DEF",
                       "INTERFACE_DEF", "LAMBDA", "LITERAL_CASE", "LITERAL_CATCH", "LITERAL_DEFAULT",
                       "LITERAL_DO", "LITERAL_ELSE", "LITERAL_FINALLY", "LITERAL_FOR", "LITERAL_IF",
                       "LITERAL_SWITCH", "LITERAL_SYNCHRONIZED", "LITERAL_TRY", "LITERAL_WHILE", "METHOD_DEF",
                       "OBJBLOCK", "STATIC_INIT"});
  std::string_view option = prop(rule, "option", "eol");
  const auto& ta = c.ta;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (!ta.is(i, "{")) continue;
    BlockOwner owner = ta.block_owner(i);
    if (owner == BlockOwner::None || owner == BlockOwner::Bare) continue;
    if (owner == BlockOwner::AnonymousClass || owner == BlockOwner::Class || owner == BlockOwner::Interface ||
        owner == BlockOwner::Enum) {
      if (!has(tokens, "OBJBLOCK") && !owner_selected(tokens, owner)) continue;
    } else if (!owner_selected(tokens, owner)) {
      continue;
    }
    int column = ta.tok(i).column;
    bool starts_line = ta.first_on_line(i);

    std::string_view policy = option;
    if (option == "nlow") {
      // New line on wrap: nl when the header spans several lines.
      policy = "eol";
      if (auto p = ta.prev_code(i); p && ta.is(*p, ")")) {
        if (auto open = ta.match(*p); open && !c.same_line(*open, *p)) policy = "nl";
      }
      if (policy == "eol" && starts_line) {
        auto p = ta.prev_code(i);
        if (p && !c.same_line(*p, i)) {
          c.report_at(i, kName, fmt::format("'{{' at column {} should be on the previous line.", column));
        }
        continue;
      }
    }
    if (policy == "nl") {
      if (!starts_line) c.report_at(i, kName, fmt::format("'{{' at column {} should be on a new line.", column));
      continue;
    }
    if (starts_line && i > 0) {
      c.report_at(i, kName, fmt::format("'{{' at column {} should be on the previous line.", column));
    }
    if (checks_line_break_after(owner)) {
      auto next = ta.next_code(i);
      if (next && !ta.is(*next, "}") && c.same_line(i, *next)) {
        c.report_at(i, kName, fmt::format("'{{' at column {} should have line break after.", column));
      }
    }
  }
}

std::optional<BlockOwner> continuation_of(const TokenAnalysis& ta, std::size_t next) {
  const auto& t = ta.tok(next);
  if (t.kind != TokenKind::Keyword) return std::nullopt;
  if (t.lexeme == "else") return BlockOwner::Else;
  if (t.lexeme == "catch") return BlockOwner::Catch;
  if (t.lexeme == "finally") return BlockOwner::Finally;
  if (t.lexeme == "while") return BlockOwner::While;
  return std::nullopt;
}

void check_right_curly(const Context& c, const RuleConfig& rule) {
  static constexpr std::string_view kName = "RightCurly";
  const auto tokens =
      token_set(rule, {"LITERAL_TRY", "LITERAL_CATCH", "LITERAL_FINALLY", "LITERAL_IF", "LITERAL_ELSE"});
  std::string_view option = prop(rule, "option", "same");
  const auto& ta = c.ta;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (!ta.is(i, "}")) continue;
    BlockOwner owner = ta.block_owner(i);
    if (owner == BlockOwner::None || owner == BlockOwner::Bare || !owner_selected(tokens, owner)) continue;
    auto open = ta.match(i);
    if (!open) continue;
    int column = ta.tok(i).column;
    bool single_line = c.same_line(*open, i);
    auto next = ta.next_code(i);
    bool continued = next && continuation_of(ta, *next).has_value() &&
                     !(ta.is(*next, "while") && owner != BlockOwner::Do);

    auto alone_message = fmt::format("'}}' at column {} should be alone on a line.", column);
    if (option == "same") {
      if (!single_line && !ta.first_on_line(i)) {
        c.report_at(i, kName, fmt::format("'}}' at column {} should have line break before.", column));
      } else if (continued && !c.same_line(i, *next)) {
        c.report_at(i, kName,
                    fmt::format("'}}' at column {} should be on the same line as the next part of a "
                                "multi-block statement (one that directly contains multiple blocks: "
                                "if/else-if/else, do/while or try/catch/finally).",
                                column));
      } else if (!continued && !single_line && next && c.same_line(i, *next) && !ta.is(*next, ";") &&
                 !ta.is(*next, ")") && !ta.is(*next, ",") && !ta.is(*next, ".")) {
        c.report_at(i, kName, alone_message);
      }
      continue;
    }
    bool allow_single = option == "alone_or_singleline" && single_line;
    if (allow_single) continue;
    bool alone_before = ta.first_on_line(i);
    bool alone_after = !next || !c.same_line(i, *next) || ta.is(*next, ";") || ta.is(*next, ")") ||
                       ta.is(*next, ",");
    if (!alone_before || !alone_after) c.report_at(i, kName, alone_message);
  }
}

// ------------------------------------------------------------ whitespace

std::string display(const TokenAnalysis& ta, std::size_t i) {
  std::string_view l = ta.lexeme(i);
  if (ta.type(i) == "GENERIC_END") return ">";
  return std::string(l);
}

bool empty_block_allowed(const Context& c, const RuleConfig& rule, std::size_t brace) {
  const auto& ta = c.ta;
  switch (ta.block_owner(brace)) {
    case BlockOwner::Method: return prop_bool(rule, "allowEmptyMethods", false) ||
                                    prop_bool(rule, "allowEmptyConstructors", false);
    case BlockOwner::Class:
    case BlockOwner::Interface:
    case BlockOwner::Enum:
    case BlockOwner::AnonymousClass:
    case BlockOwner::EnumConstant: return prop_bool(rule, "allowEmptyTypes", false);
    case BlockOwner::For:
    case BlockOwner::While:
    case BlockOwner::Do: return prop_bool(rule, "allowEmptyLoops", false);
    case BlockOwner::Lambda: return prop_bool(rule, "allowEmptyLambdas", false);
    case BlockOwner::Catch: return prop_bool(rule, "allowEmptyCatches", false);
    default: return false;
  }
}

void check_whitespace_around(const Context& c, const RuleConfig& rule) {
  static constexpr std::string_view kName = "WhitespaceAround";
  const auto tokens = token_set(
      rule, {"ASSIGN",        "BAND",          "BAND_ASSIGN",          "BOR",          "BOR_ASSIGN",
             "BSR",           "BSR_ASSIGN",    "BXOR",                 "BXOR_ASSIGN",  "COLON",
             "DIV",           "DIV_ASSIGN",    "DO_WHILE",             "EQUAL",        "GE",
             "GT",            "LAMBDA",        "LAND",                 "LCURLY",       "LE",
             "LITERAL_CATCH", "LITERAL_DO",    "LITERAL_ELSE",         "LITERAL_FINALLY", "LITERAL_FOR",
             "LITERAL_IF",    "LITERAL_RETURN", "LITERAL_SWITCH",      "LITERAL_SYNCHRONIZED", "LITERAL_TRY",
             "LITERAL_WHILE", "LOR",           "LT",                   "MINUS",        "MINUS_ASSIGN",
             "MOD",           "MOD_ASSIGN",    "NOT_EQUAL",            "PLUS",         "PLUS_ASSIGN",
             "QUESTION",      "RCURLY",        "SL",                   "SLIST",        "SL_ASSIGN",
             "SR",            "SR_ASSIGN",     "STAR",                 "STAR_ASSIGN",  "LITERAL_ASSERT",
             "TYPE_EXTENSION_AND"});
  bool ignore_for_colon = prop_bool(rule, "ignoreEnhancedForColon", true);
  const auto& ta = c.ta;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    std::string_view type = ta.type(i);
    bool selected = has(tokens, type);
    if (type == "FOR_EACH_COLON") selected = !ignore_for_colon && has(tokens, "COLON");
    if (type == "LCURLY" || type == "SLIST") selected = has(tokens, "LCURLY") || has(tokens, "SLIST");
    if (!selected) continue;

    bool check_before = true;
    bool check_after = true;
    if (ta.is(i, "{")) {
      if (ta.next_is(i, "}") && ta.match(i) == i + 1 && empty_block_allowed(c, rule, i)) check_after = false;
      if (auto p = ta.prev_code(i); p && (ta.is(*p, "(") || ta.is(*p, "{"))) check_before = false;
    } else if (ta.is(i, "}")) {
      if (auto open = ta.match(i); open && *open + 1 == i && empty_block_allowed(c, rule, *open)) {
        check_before = false;
      }
      if (i + 1 < ta.size()) {
        std::string_view n = ta.lexeme(i + 1);
        if (n == ")" || n == ";" || n == "," || n == ".") check_after = false;
      }
    } else if (type == "LITERAL_RETURN") {
      if (ta.next_is(i, ";")) check_after = false;
    }

    std::string label = display(ta, i);
    if (check_before && i > 0 && !ta.ws_before(i)) {
      c.report_at(i, kName, fmt::format("'{}' is not preceded with whitespace.", label));
    }
    if (check_after && i + 1 < ta.size() && !ta.ws_after(i)) {
      c.report_at(i, kName, fmt::format("'{}' is not followed by whitespace.", label));
    }
  }
}

void check_whitespace_after(const Context& c, const RuleConfig& rule) {
  static constexpr std::string_view kName = "WhitespaceAfter";
  const auto tokens = token_set(rule, {"COMMA", "SEMI", "TYPECAST"});
  const auto& ta = c.ta;
  for (std::size_t i = 0; i + 1 < ta.size(); ++i) {
    std::string_view type = ta.type(i);
    std::string label;
    if (ta.is_cast_close(i) && has(tokens, "TYPECAST")) {
      label = "typecast";
    } else if (has(tokens, type) && type != "RPAREN") {
      label = std::string(ta.lexeme(i));
    } else {
      continue;
    }
    if (ta.ws_after(i)) continue;
    std::string_view next = ta.lexeme(i + 1);
    if (next == ";" || next == ")") continue;
    c.report_at(i, kName, fmt::format("'{}' is not followed by whitespace.", label));
  }
}

void check_no_whitespace_before(const Context& c, const RuleConfig& rule) {
  static constexpr std::string_view kName = "NoWhitespaceBefore";
  const auto tokens = token_set(rule, {"COMMA", "SEMI", "POST_INC", "POST_DEC", "ELLIPSIS"});
  bool allow_breaks = prop_bool(rule, "allowLineBreaks", false);
  const auto& ta = c.ta;
  for (std::size_t i = 1; i < ta.size(); ++i) {
    if (!has(tokens, ta.type(i))) continue;
    if (!ta.ws_before(i)) continue;
    if (ta.is(i, ";")) {
      auto p = ta.prev_code(i);
      if (p && (ta.is(*p, ";") || ta.is(*p, "("))) continue;
    }
    if (allow_breaks && ta.first_on_line(i)) continue;
    c.report_at(i, kName, fmt::format("'{}' is preceded with whitespace.", display(ta, i)));
  }
}

void check_no_whitespace_after(const Context& c, const RuleConfig& rule) {
  static constexpr std::string_view kName = "NoWhitespaceAfter";
  const auto tokens = token_set(
      rule, {"AT", "INC", "DEC", "UNARY_MINUS", "UNARY_PLUS", "BNOT", "LNOT", "ARRAY_DECLARATOR"});
  bool allow_breaks = prop_bool(rule, "allowLineBreaks", true);
  const auto& ta = c.ta;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    std::string_view type = ta.type(i);
    if (!has(tokens, type)) continue;
    if (type == "ARRAY_DECLARATOR") {
      if (i == 0 || !ta.ws_before(i)) continue;
      if (allow_breaks && ta.first_on_line(i)) continue;
      auto p = i - 1;
      if (ta.tok(p).kind != TokenKind::Identifier && ta.tok(p).kind != TokenKind::Keyword &&
          !ta.is(p, "]") && !(ta.type(p) == "GENERIC_END")) {
        continue;
      }
      c.report_at(p, kName, fmt::format("'{}' is followed by whitespace.", display(ta, p)));
      continue;
    }
    if (i + 1 >= ta.size() || !ta.ws_after(i)) continue;
    if (allow_breaks && ta.gap_after(i).newlines() > 0) continue;
    c.report_at(i, kName, fmt::format("'{}' is followed by whitespace.", ta.lexeme(i)));
  }
}

// ------------------------------------------------------------ line rules

void check_line_length(const Context& c, const RuleConfig& rule) {
  int max = prop_int(rule, "max", 80);
  std::string_view pattern = prop(rule, "ignorePattern", "");
  std::optional<std::regex> ignore;
  if (!pattern.empty()) ignore.emplace(std::string(pattern));
  for (std::size_t l = 0; l < c.lines.size(); ++l) {
    std::string_view line = c.lines[l];
    if (code_points(line) <= max) continue;
    if (ignore && std::regex_search(line.begin(), line.end(), *ignore)) continue;
    c.report(static_cast<int>(l + 1), std::nullopt, "LineLength",
             fmt::format("Line is longer than {} characters.", max));
  }
}

void check_file_tab_character(const Context& c, const RuleConfig& rule) {
  bool each_line = prop_bool(rule, "eachLine", false);
  for (std::size_t l = 0; l < c.lines.size(); ++l) {
    if (c.lines[l].find('\t') == std::string_view::npos) continue;
    if (each_line) {
      c.report(static_cast<int>(l + 1), std::nullopt, "FileTabCharacter", "Line contains a tab character.");
    } else {
      c.report(static_cast<int>(l + 1), std::nullopt, "FileTabCharacter",
               "File contains tab characters (this is the first instance).");
      return;
    }
  }
}

void check_newline_at_end(const Context& c, const RuleConfig&) {
  if (c.source.empty() || c.source.back() == '\n') return;
  c.report(static_cast<int>(std::max<std::size_t>(c.lines.size(), 1)), std::nullopt, "NewlineAtEndOfFile",
           "File does not end with a newline.");
}

void check_regexp_singleline(const Context& c, const RuleConfig& rule) {
  std::string format(prop(rule, "format", "$."));
  auto flags = std::regex::ECMAScript;
  if (prop_bool(rule, "ignoreCase", false)) flags |= std::regex::icase;
  std::regex re(format, flags);
  std::string message(prop(rule, "message", ""));
  if (message.empty()) message = fmt::format("Line matches the illegal pattern '{}'.", format);
  int minimum = prop_int(rule, "minimum", 0);
  int maximum = prop_int(rule, "maximum", 0);
  int matches = 0;
  for (std::size_t l = 0; l < c.lines.size(); ++l) {
    std::string_view line = c.lines[l];
    if (!std::regex_search(line.begin(), line.end(), re)) continue;
    ++matches;
    if (matches > maximum) c.report(static_cast<int>(l + 1), std::nullopt, "RegexpSingleline", message);
  }
  if (matches < minimum) {
    c.report(1, std::nullopt, "RegexpSingleline",
             fmt::format("File does not contain at least {} matches for pattern '{}'.", minimum, format));
  }
}

// --------------------------------------------------------------- padding

bool for_header_semicolon(const TokenAnalysis& ta, std::size_t i, std::size_t& open) {
  // Finds the enclosing `(` of a `;` and checks it belongs to a for.
  int depth = 0;
  for (std::size_t j = i; j-- > 0;) {
    if (ta.is(j, ")") || ta.is(j, "]") || ta.is(j, "}")) ++depth;
    if (ta.is(j, "(") || ta.is(j, "[") || ta.is(j, "{")) {
      if (depth == 0) {
        open = j;
        return ta.is(j, "(") && ta.paren_owner(j) == "for";
      }
      --depth;
    }
  }
  return false;
}

void check_paren_pad(const Context& c, const RuleConfig& rule) {
  static constexpr std::string_view kName = "ParenPad";
  bool space = prop(rule, "option", "nospace") == "space";
  const auto& ta = c.ta;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (ta.is(i, "(")) {
      if (i + 1 >= ta.size() || ta.is(i + 1, ")")) continue;
      if (ta.gap_after(i).newlines() > 0) continue;
      if (ta.is(i + 1, ";") && ta.paren_owner(i) == "for") continue;
      if (!space && ta.ws_after(i)) c.report_at(i, kName, "'(' is followed by whitespace.");
      if (space && !ta.ws_after(i)) c.report_at(i, kName, "'(' is not followed by whitespace.");
    } else if (ta.is(i, ")")) {
      if (i == 0 || ta.is(i - 1, "(") || ta.first_on_line(i)) continue;
      if (ta.is(i - 1, ";")) {
        if (auto open = ta.match(i); open && ta.paren_owner(*open) == "for") continue;
      }
      if (!space && ta.ws_before(i)) c.report_at(i, kName, "')' is preceded with whitespace.");
      if (space && !ta.ws_before(i)) c.report_at(i, kName, "')' is not preceded with whitespace.");
    }
  }
}

void check_method_param_pad(const Context& c, const RuleConfig& rule) {
  static constexpr std::string_view kName = "MethodParamPad";
  bool space = prop(rule, "option", "nospace") == "space";
  bool allow_breaks = prop_bool(rule, "allowLineBreaks", false);
  const auto& ta = c.ta;
  for (std::size_t i = 1; i < ta.size(); ++i) {
    if (!ta.is(i, "(")) continue;
    std::size_t p = i - 1;
    const auto& prev = ta.tok(p);
    bool call_like = prev.kind == TokenKind::Identifier ||
                     (prev.kind == TokenKind::Keyword && (prev.lexeme == "this" || prev.lexeme == "super"));
    if (!call_like) continue;
    // Annotation arguments are not parameter lists.
    std::size_t k = p;
    while (k >= 2 && ta.is(k - 1, ".") && ta.tok(k - 2).kind == TokenKind::Identifier) k -= 2;
    if (k >= 1 && ta.is(k - 1, "@")) continue;

    const Trivia& gap = ta.gap_before(i);
    if (gap.newlines() > 0) {
      if (!allow_breaks) c.report_at(i, kName, "'(' should be on the previous line.");
      continue;
    }
    if (!space && !gap.empty()) c.report_at(i, kName, "'(' is preceded with whitespace.");
    if (space && gap.empty()) c.report_at(i, kName, "'(' is not preceded with whitespace.");
  }
}

void check_empty_for_iterator_pad(const Context& c, const RuleConfig& rule) {
  static constexpr std::string_view kName = "EmptyForIteratorPad";
  bool space = prop(rule, "option", "nospace") == "space";
  const auto& ta = c.ta;
  for (std::size_t i = 0; i + 1 < ta.size(); ++i) {
    if (!ta.is(i, ";") || !ta.is(i + 1, ")")) continue;
    auto open = ta.match(i + 1);
    if (!open || ta.paren_owner(*open) != "for") continue;
    const Trivia& gap = ta.gap_after(i);
    if (gap.newlines() > 0) continue;
    if (!space && !gap.empty()) c.report_at(i, kName, "';' is followed by whitespace.");
    if (space && gap.empty()) c.report_at(i, kName, "';' is not followed by whitespace.");
  }
}

bool is_modifier_keyword(const ConcreteToken& t) {
  if (t.kind != TokenKind::Keyword) return false;
  static constexpr std::string_view kModifiers[] = {"public", "protected", "private", "static", "final",
                                                    "abstract", "synchronized", "native", "default", "strictfp"};
  return std::find(std::begin(kModifiers), std::end(kModifiers), t.lexeme) != std::end(kModifiers);
}

void check_generic_whitespace(const Context& c, const RuleConfig&) {
  static constexpr std::string_view kName = "GenericWhitespace";
  const auto& ta = c.ta;
  // Innermost open `<` kinds: method type parameters, method call type args.
  struct Open {
    bool method_params;
    bool method_call;
  };
  std::vector<Open> stack;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    std::string_view type = ta.type(i);
    if (type == "GENERIC_START") {
      auto p = ta.prev_code(i);
      bool method_params = p && is_modifier_keyword(ta.tok(*p));
      bool method_call = p && ta.is(*p, ".");
      stack.push_back({method_params, method_call});
      if (i > 0 && !ta.first_on_line(i)) {
        if (method_params && !ta.ws_before(i)) c.report_at(i, kName, "'<' is not preceded with whitespace.");
        if (!method_params && ta.ws_before(i)) c.report_at(i, kName, "'<' is preceded with whitespace.");
      }
      if (i + 1 < ta.size() && ta.ws_after(i) && ta.gap_after(i).newlines() == 0) {
        c.report_at(i, kName, "'<' is followed by whitespace.");
      }
    } else if (type == "GENERIC_END") {
      Open closed{false, false};
      for (std::size_t n = 0; n < ta.lexeme(i).size() && !stack.empty(); ++n) {
        closed = stack.back();
        stack.pop_back();
      }
      if (i > 0 && ta.ws_before(i) && !ta.first_on_line(i)) {
        c.report_at(i, kName, "'>' is preceded with whitespace.");
      }
      if (i + 1 >= ta.size() || ta.gap_after(i).newlines() > 0) continue;
      const auto& next = ta.tok(i + 1);
      bool ws = ta.ws_after(i);
      bool word = next.kind == TokenKind::Identifier || next.kind == TokenKind::Keyword;
      if (closed.method_params) {
        if (!ws) c.report_at(i, kName, "'>' is followed by an illegal character.");
        continue;
      }
      if (closed.method_call) {
        if (ws) c.report_at(i, kName, "'>' is followed by whitespace.");
        continue;
      }
      if (ws) {
        std::string_view n = next.lexeme;
        if (next.kind != TokenKind::StringLiteral &&
            (n == "(" || n == ")" || n == "," || n == "[" || n == "." || n == ";" || n == "::" || n == "...")) {
          c.report_at(i, kName, "'>' is followed by whitespace.");
        }
      } else if (word || is_literal(next.kind)) {
        c.report_at(i, kName, "'>' is followed by an illegal character.");
      }
    }
  }
}

// ------------------------------------------------------------------ wrap

void check_operator_wrap(const Context& c, const RuleConfig& rule) {
  static constexpr std::string_view kName = "OperatorWrap";
  const auto tokens = token_set(rule, {"QUESTION", "COLON", "EQUAL", "NOT_EQUAL", "DIV", "PLUS", "MINUS",
                                       "STAR", "MOD", "SR", "BSR", "GE", "GT", "SL", "LE", "LT", "BXOR",
                                       "BOR", "LOR", "BAND", "LAND", "TYPE_EXTENSION_AND",
                                       "LITERAL_INSTANCEOF"});
  bool nl = prop(rule, "option", "nl") == "nl";
  const auto& ta = c.ta;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (!has(tokens, ta.type(i))) continue;
    if (nl && i + 1 < ta.size() && ta.gap_after(i).newlines() > 0) {
      c.report_at(i, kName, fmt::format("'{}' should be on a new line.", ta.lexeme(i)));
    }
    if (!nl && i > 0 && ta.first_on_line(i)) {
      c.report_at(i, kName, fmt::format("'{}' should be on the previous line.", ta.lexeme(i)));
    }
  }
}

void check_separator_wrap(const Context& c, const RuleConfig& rule) {
  static constexpr std::string_view kName = "SeparatorWrap";
  const auto tokens = token_set(rule, {"DOT", "COMMA"});
  bool nl = prop(rule, "option", "eol") == "nl";
  const auto& ta = c.ta;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (!has(tokens, ta.type(i))) continue;
    if (nl && i + 1 < ta.size() && ta.gap_after(i).newlines() > 0) {
      c.report_at(i, kName, fmt::format("'{}' should be on a new line.", ta.lexeme(i)));
    }
    if (!nl && i > 0 && ta.first_on_line(i)) {
      c.report_at(i, kName, fmt::format("'{}' should be on the previous line.", ta.lexeme(i)));
    }
  }
}

// ------------------------------------------------------------ statements

void check_one_statement_per_line(const Context& c, const RuleConfig&) {
  const auto& ta = c.ta;
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (ta.is(i, "(") || ta.is(i, "[") || ta.is(i, "{")) {
      open.push_back(i);
      continue;
    }
    if (ta.is(i, ")") || ta.is(i, "]") || ta.is(i, "}")) {
      if (!open.empty()) open.pop_back();
      continue;
    }
    if (!ta.is(i, ";")) continue;
    if (!open.empty() && !ta.is(open.back(), "{")) continue;
    auto next = ta.next_code(i);
    if (!next || !c.same_line(i, *next)) continue;
    if (ta.is(*next, "}") || ta.is(*next, ";")) continue;
    c.report_at(*next, "OneStatementPerLine", "Only one statement per line allowed.");
  }
}

// ------------------------------------------------------------ indentation

struct IndentBlock {
  std::size_t brace;
  int base;     // indentation of the construct owning the block
  int content;  // indentation of statements inside
  bool is_switch;
  bool array_init;
};

void check_indentation(const Context& c, const RuleConfig& rule) {
  static constexpr std::string_view kName = "Indentation";
  const int offset = prop_int(rule, "basicOffset", 4);
  const int case_indent = prop_int(rule, "caseIndent", 4);
  const int array_indent = prop_int(rule, "arrayInitIndent", 4);
  const auto& ta = c.ta;

  std::vector<IndentBlock> blocks;
  int stmt_expected = 0;
  bool line_is_statement = true;
  int current_line = 0;

  auto statement_start = [&](std::size_t i) {
    auto p = ta.prev_code(i);
    if (!p) return true;
    std::string_view pt = ta.type(*p);
    if (pt == "SEMI" || pt == "LCURLY" || pt == "SLIST" || pt == "RCURLY" || pt == "LABEL_COLON") {
      if (pt == "SEMI") {
        std::size_t open = 0;
        if (for_header_semicolon(ta, *p, open)) return false;
        // `;` inside parentheses (try resources) continues the statement.
        int depth = 0;
        for (std::size_t j = *p; j-- > 0;) {
          if (ta.is(j, ")") || ta.is(j, "]") || ta.is(j, "}")) ++depth;
          if (ta.is(j, "(") || ta.is(j, "[") || ta.is(j, "{")) {
            if (depth == 0) return !ta.is(j, "(");
            --depth;
          }
        }
      }
      return true;
    }
    // Line after an annotation line.
    std::size_t first = *p;
    while (first > 0 && c.same_line(first - 1, *p)) --first;
    if (ta.is(first, "@")) {
      int depth = 0;
      for (std::size_t j = first; j <= *p; ++j) {
        if (ta.is(j, "(")) ++depth;
        if (ta.is(j, ")")) --depth;
      }
      return depth == 0;
    }
    return false;
  };

  for (std::size_t i = 0; i < ta.size(); ++i) {
    const auto& t = ta.tok(i);
    if (ta.first_on_line(i) && t.line != current_line) {
      current_line = t.line;
      if (is_comment(t.kind)) {
        line_is_statement = false;
      } else {
        int actual = ta.line_indent(i, c.tab_width);
        const IndentBlock* top = blocks.empty() ? nullptr : &blocks.back();
        bool closes = ta.is(i, "}") && ta.match(i) && top && top->brace == *ta.match(i);
        bool in_array = top && top->array_init;
        line_is_statement = !in_array && (closes || statement_start(i));
        if (ta.is(i, "{") && ta.is_block_brace(i) && !line_is_statement) {
          // Brace of a wrapped header on its own line.
          line_is_statement = true;
          if (actual != stmt_expected) {
            c.report_at(i, kName,
                        fmt::format("'{{' has incorrect indentation level {}, expected level should be {}.",
                                    actual, stmt_expected));
          }
        } else if (closes && !top->array_init) {
          if (actual != top->base) {
            c.report_at(i, kName,
                        fmt::format("'}}' has incorrect indentation level {}, expected level should be {}.",
                                    actual, top->base));
          }
        } else if (line_is_statement) {
          int expected = top ? top->content : 0;
          if (top && top->is_switch) {
            bool label = ta.is(i, "case") || (ta.is(i, "default") && ta.next_is(i, ":"));
            if (!label) expected += offset;
          }
          stmt_expected = expected;
          if (actual != expected) {
            c.report_at(i, kName,
                        fmt::format("'{}' has incorrect indentation level {}, expected level should be {}.",
                                    t.lexeme, actual, expected));
          }
        } else {
          int minimum = top ? (top->array_init ? top->base : stmt_expected) : stmt_expected;
          if (actual < minimum) {
            c.report_at(i, kName,
                        fmt::format("'{}' has incorrect indentation level {}, expected level should be {}.",
                                    t.lexeme, actual, minimum));
          }
        }
      }
    }

    if (ta.is(i, "{")) {
      BlockOwner owner = ta.block_owner(i);
      int base = stmt_expected;
      bool array_init = owner == BlockOwner::None;
      if (!line_is_statement && (owner == BlockOwner::Lambda || owner == BlockOwner::AnonymousClass || array_init)) {
        std::size_t first = i;
        while (first > 0 && c.same_line(first - 1, i)) --first;
        base = std::max(base, ta.line_indent(first, c.tab_width));
      }
      if (!blocks.empty() && blocks.back().array_init) base = blocks.back().content;
      bool is_switch = owner == BlockOwner::Switch;
      int content = base + (is_switch ? case_indent : array_init ? array_indent : offset);
      blocks.push_back({i, base, content, is_switch, array_init});
    } else if (ta.is(i, "}")) {
      if (!blocks.empty() && ta.match(i) && blocks.back().brace == *ta.match(i)) {
        if (!blocks.back().array_init) stmt_expected = blocks.back().base;
        blocks.pop_back();
      }
    }
  }
}

using RuleFn = void (*)(const Context&, const RuleConfig&);

RuleFn rule_function(std::string_view name) {
  if (name == "LeftCurly") return check_left_curly;
  if (name == "RightCurly") return check_right_curly;
  if (name == "WhitespaceAround") return check_whitespace_around;
  if (name == "WhitespaceAfter") return check_whitespace_after;
  if (name == "NoWhitespaceBefore") return check_no_whitespace_before;
  if (name == "NoWhitespaceAfter") return check_no_whitespace_after;
  if (name == "LineLength") return check_line_length;
  if (name == "FileTabCharacter") return check_file_tab_character;
  if (name == "NewlineAtEndOfFile") return check_newline_at_end;
  if (name == "ParenPad") return check_paren_pad;
  if (name == "MethodParamPad") return check_method_param_pad;
  if (name == "EmptyForIteratorPad") return check_empty_for_iterator_pad;
  if (name == "GenericWhitespace") return check_generic_whitespace;
  if (name == "OperatorWrap") return check_operator_wrap;
  if (name == "SeparatorWrap") return check_separator_wrap;
  if (name == "OneStatementPerLine") return check_one_statement_per_line;
  if (name == "Indentation") return check_indentation;
  if (name == "RegexpSingleline") return check_regexp_singleline;
  throw ConfigError(fmt::format("unknown rule '{}'", name));
}

}  // namespace

CheckResult check(std::string_view source, const Ruleset& ruleset, std::string_view file) {
  CheckResult result;
  ConcreteTokenStream stream;
  try {
    stream = lex(source, std::string(file));
  } catch (const LexError& e) {
    result.broken = fmt::format("lex error at {}:{}: {}", e.line(), e.column(), e.reason());
    return result;
  }
  if (auto bad = find_unbalanced_delimiter(stream)) {
    const auto& t = stream.token(*bad);
    result.broken = fmt::format("unbalanced '{}' at {}:{}", t.lexeme, t.line, t.column);
    return result;
  }
  TokenAnalysis analysis(stream);
  Context ctx{analysis, source, split_lines(source), std::string(file), ruleset.tab_width, result.violations};
  for (const auto& rule : ruleset.rules) rule_function(rule.name)(ctx, rule);

  auto& vs = result.violations;
  auto key = [](const Violation& v) { return std::tie(v.line, v.column, v.rule, v.message); };
  std::sort(vs.begin(), vs.end(), [&](const Violation& a, const Violation& b) {
    return std::make_tuple(a.line, a.column.value_or(0), std::cref(a.rule), std::cref(a.message)) <
           std::make_tuple(b.line, b.column.value_or(0), std::cref(b.rule), std::cref(b.message));
  });
  vs.erase(std::unique(vs.begin(), vs.end(), [&](const Violation& a, const Violation& b) { return key(a) == key(b); }),
           vs.end());
  return result;
}

std::string format_report(const Violation& v) {
  if (v.column) return fmt::format("[ERROR] {}:{}:{}: {} [{}]", v.file, v.line, *v.column, v.message, v.rule);
  return fmt::format("[ERROR] {}:{}: {} [{}]", v.file, v.line, v.message, v.rule);
}

std::optional<Violation> parse_report(std::string_view line) {
  static const std::regex kReport(R"(^\[ERROR\] (.+?):(\d+)(?::(\d+))?: (.*) \[(\w+)\]$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(line.begin(), line.end(), m, kReport)) return std::nullopt;
  Violation v;
  v.file = m[1].str();
  v.line = std::stoi(m[2].str());
  if (m[3].matched) v.column = std::stoi(m[3].str());
  v.message = m[4].str();
  v.rule = m[5].str();
  return v;
}

}  // namespace crepair
