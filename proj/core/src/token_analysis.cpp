#include "token_analysis.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace crepair::detail {

namespace {

constexpr std::array<std::string_view, 8> kPrimitives = {"boolean", "byte", "char", "short",
                                                         "int",     "long", "float", "double"};

bool is_primitive(std::string_view word) {
  return std::find(kPrimitives.begin(), kPrimitives.end(), word) != kPrimitives.end();
}

bool is_modifier(std::string_view word) {
  static constexpr std::array<std::string_view, 11> kModifiers = {
      "public", "protected", "private", "static", "final", "abstract",
      "synchronized", "native", "default", "strictfp", "transient"};
  return std::find(kModifiers.begin(), kModifiers.end(), word) != kModifiers.end();
}

bool is_keyword(const ConcreteToken& t, std::string_view word) {
  return t.kind == TokenKind::Keyword && t.lexeme == word;
}

bool closes_generic(std::string_view lexeme) {
  return lexeme == ">" || lexeme == ">>" || lexeme == ">>>";
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string_view owner_type(BlockOwner owner) {
  switch (owner) {
    case BlockOwner::None: return "ARRAY_INIT";
    case BlockOwner::If: return "LITERAL_IF";
    case BlockOwner::Else: return "LITERAL_ELSE";
    case BlockOwner::For: return "LITERAL_FOR";
    case BlockOwner::While: return "LITERAL_WHILE";
    case BlockOwner::Do: return "LITERAL_DO";
    case BlockOwner::Try: return "LITERAL_TRY";
    case BlockOwner::Catch: return "LITERAL_CATCH";
    case BlockOwner::Finally: return "LITERAL_FINALLY";
    case BlockOwner::Switch: return "LITERAL_SWITCH";
    case BlockOwner::Synchronized: return "LITERAL_SYNCHRONIZED";
    case BlockOwner::StaticInit: return "STATIC_INIT";
    case BlockOwner::Method: return "METHOD_DEF";
    case BlockOwner::Class: return "CLASS_DEF";
    case BlockOwner::Interface: return "INTERFACE_DEF";
    case BlockOwner::Enum: return "ENUM_DEF";
    case BlockOwner::EnumConstant: return "ENUM_CONSTANT_DEF";
    case BlockOwner::AnonymousClass: return "OBJBLOCK";
    case BlockOwner::Lambda: return "LAMBDA";
    case BlockOwner::Case: return "LITERAL_CASE";
    case BlockOwner::Bare: return "SLIST";
  }
  return "";
}

TokenAnalysis::TokenAnalysis(const ConcreteTokenStream& stream)
    : stream_(stream),
      match_(stream.size(), -1),
      owner_(stream.size(), BlockOwner::None),
      generic_(stream.size(), 0),
      cast_close_(stream.size(), 0),
      types_(stream.size()) {
  text_ = render(stream);
  std::size_t start = 0;
  while (true) {
    std::size_t nl = text_.find('\n', start);
    lines_.push_back(std::string_view(text_).substr(start, nl == std::string::npos ? std::string::npos : nl - start));
    if (nl == std::string::npos) break;
    start = nl + 1;
  }
  match_delimiters();
  classify_generics();
  classify_blocks();
  classify_casts();
  assign_types();
}

bool TokenAnalysis::is(std::size_t i, std::string_view lexeme) const {
  const auto& t = tok(i);
  return !is_comment(t.kind) && t.kind != TokenKind::StringLiteral && t.kind != TokenKind::CharLiteral &&
         t.lexeme == lexeme;
}

std::optional<std::size_t> TokenAnalysis::prev_code(std::size_t i) const {
  while (i > 0) {
    --i;
    if (is_code(i)) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> TokenAnalysis::next_code(std::size_t i) const {
  for (std::size_t j = i + 1; j < size(); ++j) {
    if (is_code(j)) return j;
  }
  return std::nullopt;
}

bool TokenAnalysis::prev_is(std::size_t i, std::string_view lexeme) const {
  auto p = prev_code(i);
  return p && is(*p, lexeme);
}

bool TokenAnalysis::next_is(std::size_t i, std::string_view lexeme) const {
  auto n = next_code(i);
  return n && is(*n, lexeme);
}

int TokenAnalysis::line_indent(std::size_t i, int tab_width) const {
  std::string_view line = lines_[static_cast<std::size_t>(tok(i).line - 1)];
  int width = 0;
  for (char c : line) {
    if (c == ' ') {
      ++width;
    } else if (c == '\t') {
      width += tab_width - (width % tab_width);
    } else {
      break;
    }
  }
  return width;
}

void TokenAnalysis::match_delimiters() {
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < size(); ++i) {
    if (tok(i).kind != TokenKind::Separator) continue;
    std::string_view l = lexeme(i);
    if (l == "(" || l == "[" || l == "{") {
      open.push_back(i);
    } else if (l == ")" || l == "]" || l == "}") {
      char expected = l == ")" ? '(' : l == "]" ? '[' : '{';
      if (!open.empty() && lexeme(open.back())[0] == expected) {
        match_[i] = static_cast<int>(open.back());
        match_[open.back()] = static_cast<int>(i);
        open.pop_back();
      }
    }
  }
}

void TokenAnalysis::classify_generics() {
  for (std::size_t i = 0; i < size(); ++i) {
    if (!is(i, "<")) continue;
    auto p = prev_code(i);
    if (!p) continue;
    const auto& prev = tok(*p);
    bool plausible = prev.kind == TokenKind::Identifier || is(*p, ".") ||
                     (prev.kind == TokenKind::Keyword && is_modifier(prev.lexeme));
    if (!plausible) continue;

    int depth = 1;
    std::vector<std::size_t> marked = {i};
    bool generic = false;
    for (std::size_t j = i + 1; j < size() && j < i + 96; ++j) {
      if (!is_code(j)) continue;
      const auto& t = tok(j);
      std::string_view l = t.lexeme;
      if (l == "<" && t.kind == TokenKind::Operator) {
        ++depth;
        marked.push_back(j);
      } else if (t.kind == TokenKind::Operator && closes_generic(l)) {
        depth -= static_cast<int>(l.size());
        marked.push_back(j);
        if (depth <= 0) {
          generic = true;
          break;
        }
      } else if (t.kind == TokenKind::Identifier || l == "." || l == "," || l == "[" || l == "]" ||
                 l == "@" || is_keyword(t, "extends") || is_keyword(t, "super") ||
                 (t.kind == TokenKind::Keyword && is_primitive(l))) {
        continue;
      } else if (l == "?" || l == "&") {
        marked.push_back(j);
      } else {
        break;
      }
    }
    if (generic) {
      for (std::size_t m : marked) generic_[m] = 1;
    }
  }
}

std::optional<std::size_t> TokenAnalysis::skip_type_args_back(std::size_t close) const {
  // `close` is a generic closer; walk back to the `<` that opens it.
  int depth = 0;
  for (std::size_t j = close + 1; j-- > 0;) {
    if (!generic_[j]) continue;
    std::string_view l = lexeme(j);
    if (l == "<") {
      --depth;
    } else {
      depth += static_cast<int>(l.size());
    }
    if (depth <= 0) return j;
  }
  return std::nullopt;
}

std::string_view TokenAnalysis::paren_owner(std::size_t open) const {
  auto p = prev_code(open);
  if (!p || tok(*p).kind != TokenKind::Keyword) return {};
  std::string_view l = lexeme(*p);
  if (l == "if" || l == "for" || l == "while" || l == "switch" || l == "catch" || l == "synchronized" ||
      l == "try") {
    return l;
  }
  return {};
}

BlockOwner TokenAnalysis::owner_of_open_brace(std::size_t i) const {
  auto p = prev_code(i);
  if (!p) return BlockOwner::Bare;
  const auto& prev = tok(*p);
  std::string_view l = prev.lexeme;

  if (prev.kind == TokenKind::Separator) {
    if (l == ")") {
      auto open = match(*p);
      if (!open) return BlockOwner::Bare;
      std::string_view kw = paren_owner(*open);
      if (kw == "if") return BlockOwner::If;
      if (kw == "for") return BlockOwner::For;
      if (kw == "while") return BlockOwner::While;
      if (kw == "switch") return BlockOwner::Switch;
      if (kw == "catch") return BlockOwner::Catch;
      if (kw == "synchronized") return BlockOwner::Synchronized;
      if (kw == "try") return BlockOwner::Try;
      auto q = prev_code(*open);
      if (!q) return BlockOwner::Bare;
      std::size_t name = *q;
      if (generic_[name] && closes_generic(lexeme(name))) {
        auto lt = skip_type_args_back(name);
        if (!lt) return BlockOwner::Method;
        auto before = prev_code(*lt);
        if (!before) return BlockOwner::Method;
        name = *before;
      }
      if (tok(name).kind != TokenKind::Identifier) return BlockOwner::Method;
      // Walk a qualified name back to see whether `new` introduces it.
      std::size_t k = name;
      while (true) {
        auto dot = prev_code(k);
        if (!dot || !is(*dot, ".")) break;
        auto ident = prev_code(*dot);
        if (!ident || tok(*ident).kind != TokenKind::Identifier) break;
        k = *ident;
      }
      auto before = prev_code(k);
      if (before && is_keyword(tok(*before), "new")) return BlockOwner::AnonymousClass;
      if (before && (is(*before, ",") || (is(*before, "{") && owner_[*before] == BlockOwner::Enum))) {
        return BlockOwner::EnumConstant;
      }
      return BlockOwner::Method;
    }
    if (l == "]" || l == "," || l == "(") return BlockOwner::None;
    if (l == "{") return owner_[*p] == BlockOwner::None ? BlockOwner::None : BlockOwner::Bare;
    return BlockOwner::Bare;
  }
  if (prev.kind == TokenKind::Operator) {
    if (l == "->") return BlockOwner::Lambda;
    if (l == "=") return BlockOwner::None;
    if (l == ":") return BlockOwner::Case;
    if (!closes_generic(l) || !generic_[*p]) return BlockOwner::None;
  }
  if (prev.kind == TokenKind::Keyword) {
    if (l == "else") return BlockOwner::Else;
    if (l == "try") return BlockOwner::Try;
    if (l == "finally") return BlockOwner::Finally;
    if (l == "do") return BlockOwner::Do;
    if (l == "static") return BlockOwner::StaticInit;
    if (l == "return") return BlockOwner::None;
  }
  if (prev.kind == TokenKind::Identifier || prev.kind == TokenKind::Operator || prev.kind == TokenKind::Keyword) {
    // Scan the declaration header back to its start.
    for (std::size_t j = *p + 1; j-- > 0;) {
      if (!is_code(j)) continue;
      const auto& t = tok(j);
      if (t.kind == TokenKind::Separator && (t.lexeme == ";" || t.lexeme == "{" || t.lexeme == "}")) break;
      if (t.kind == TokenKind::Keyword) {
        if (t.lexeme == "class") return BlockOwner::Class;
        if (t.lexeme == "interface") return BlockOwner::Interface;
        if (t.lexeme == "enum") return BlockOwner::Enum;
        if (t.lexeme == "throws") return BlockOwner::Method;
      }
      if (t.kind == TokenKind::Separator && t.lexeme == ")") {
        auto open = match(j);
        if (!open) break;
        j = *open;
      }
    }
    if (prev.kind == TokenKind::Identifier) return BlockOwner::EnumConstant;
  }
  return BlockOwner::Bare;
}

void TokenAnalysis::classify_blocks() {
  for (std::size_t i = 0; i < size(); ++i) {
    if (is(i, "{")) {
      owner_[i] = owner_of_open_brace(i);
      if (auto close = match(i)) owner_[*close] = owner_[i];
    }
  }
}

void TokenAnalysis::classify_casts() {
  for (std::size_t close = 0; close < size(); ++close) {
    if (!is(close, ")")) continue;
    auto open_opt = match(close);
    if (!open_opt) continue;
    std::size_t open = *open_opt;
    if (auto p = prev_code(open)) {
      const auto& prev = tok(*p);
      if (prev.kind == TokenKind::Identifier || is(*p, ")") || is(*p, "]") || !paren_owner(open).empty() ||
          (prev.kind == TokenKind::Keyword && (prev.lexeme == "this" || prev.lexeme == "super")) ||
          (generic_[*p] && closes_generic(prev.lexeme))) {
        continue;
      }
    }
    auto first = next_code(open);
    if (!first || *first >= close) continue;
    bool primitive = tok(*first).kind == TokenKind::Keyword && is_primitive(tok(*first).lexeme);
    if (!primitive && tok(*first).kind != TokenKind::Identifier) continue;
    bool type_like = true;
    for (std::size_t j = *first; j < close; ++j) {
      if (!is_code(j)) continue;
      const auto& t = tok(j);
      bool ok = t.kind == TokenKind::Identifier || generic_[j] || t.lexeme == "." || t.lexeme == "[" ||
                t.lexeme == "]" || t.lexeme == "," || t.lexeme == "&" ||
                (t.kind == TokenKind::Keyword && (is_primitive(t.lexeme) || t.lexeme == "extends" ||
                                                  t.lexeme == "super"));
      // Adjacent identifiers are parameter declarations, not a type.
      if (t.kind == TokenKind::Identifier && j > *first) {
        auto pj = prev_code(j);
        if (pj && (tok(*pj).kind == TokenKind::Identifier || is(*pj, "]"))) ok = false;
      }
      if (!ok) {
        type_like = false;
        break;
      }
    }
    if (!type_like) continue;
    auto next = next_code(close);
    if (!next) continue;
    const auto& n = tok(*next);
    bool operand = n.kind == TokenKind::Identifier || is_literal(n.kind) || n.lexeme == "(" || n.lexeme == "!" ||
                   n.lexeme == "~" ||
                   (n.kind == TokenKind::Keyword &&
                    (n.lexeme == "this" || n.lexeme == "super" || n.lexeme == "new"));
    if (primitive) {
      operand = operand || n.lexeme == "-" || n.lexeme == "+" || n.lexeme == "++" || n.lexeme == "--";
    }
    if (operand) cast_close_[close] = 1;
  }
}

void TokenAnalysis::assign_types() {
  static const std::unordered_map<std::string_view, std::string_view> kFixed = {
      {"=", "ASSIGN"},      {"+=", "PLUS_ASSIGN"},  {"-=", "MINUS_ASSIGN"}, {"*=", "STAR_ASSIGN"},
      {"/=", "DIV_ASSIGN"}, {"%=", "MOD_ASSIGN"},   {"&=", "BAND_ASSIGN"},  {"|=", "BOR_ASSIGN"},
      {"^=", "BXOR_ASSIGN"}, {"<<=", "SL_ASSIGN"},  {">>=", "SR_ASSIGN"},   {">>>=", "BSR_ASSIGN"},
      {"==", "EQUAL"},      {"!=", "NOT_EQUAL"},    {"<=", "LE"},           {">=", "GE"},
      {"&&", "LAND"},       {"||", "LOR"},          {"!", "LNOT"},          {"~", "BNOT"},
      {"*", "STAR"},        {"/", "DIV"},           {"%", "MOD"},           {"|", "BOR"},
      {"^", "BXOR"},        {"<<", "SL"},           {"->", "LAMBDA"},       {"(", "LPAREN"},
      {")", "RPAREN"},      {"]", "RBRACK"},        {";", "SEMI"},          {",", "COMMA"},
      {".", "DOT"},         {"...", "ELLIPSIS"},    {"@", "AT"},            {"::", "METHOD_REF"}};
  static std::vector<std::string> keyword_types;  // storage for LITERAL_* names
  static const std::unordered_map<std::string, std::string> kKeywordTypes = [] {
    std::unordered_map<std::string, std::string> m;
    for (std::string_view kw : {"abstract", "assert", "boolean", "break", "byte", "case", "catch", "char", "class",
                                "const", "continue", "default", "do", "double", "else", "enum", "extends",
                                "final", "finally", "float", "for", "goto", "if", "implements", "import",
                                "instanceof", "int", "interface", "long", "native", "new", "package", "private",
                                "protected", "public", "return", "short", "static", "strictfp", "super", "switch",
                                "synchronized", "this", "throw", "throws", "transient", "try", "void",
                                "volatile", "while"}) {
      m.emplace(std::string(kw), "LITERAL_" + upper(kw));
    }
    return m;
  }();

  for (std::size_t i = 0; i < size(); ++i) {
    const auto& t = tok(i);
    std::string_view l = t.lexeme;
    std::string_view type;
    switch (t.kind) {
      case TokenKind::Identifier: type = "IDENT"; break;
      case TokenKind::IntLiteral: type = "NUM_INT"; break;
      case TokenKind::FloatLiteral: type = "NUM_FLOAT"; break;
      case TokenKind::StringLiteral: type = "STRING_LITERAL"; break;
      case TokenKind::CharLiteral: type = "CHAR_LITERAL"; break;
      case TokenKind::BoolLiteral: type = l == "true" ? "LITERAL_TRUE" : "LITERAL_FALSE"; break;
      case TokenKind::NullLiteral: type = "LITERAL_NULL"; break;
      case TokenKind::LineComment:
      case TokenKind::BlockComment: type = "COMMENT"; break;
      case TokenKind::Keyword: {
        type = kKeywordTypes.at(std::string(l));
        if (l == "while") {
          auto p = prev_code(i);
          if (p && is(*p, "}") && owner_[*p] == BlockOwner::Do) type = "DO_WHILE";
        }
        break;
      }
      case TokenKind::Separator:
      case TokenKind::Operator: {
        if (auto it = kFixed.find(l); it != kFixed.end()) {
          type = it->second;
        } else if (l == "{") {
          type = owner_[i] == BlockOwner::None ? "ARRAY_INIT" : owner_[i] == BlockOwner::Bare ? "SLIST" : "LCURLY";
        } else if (l == "}") {
          type = owner_[i] == BlockOwner::None ? "ARRAY_INIT_END" : "RCURLY";
        } else if (l == "[") {
          type = next_is(i, "]") ? "ARRAY_DECLARATOR" : "INDEX_OP";
        } else if (l == "<") {
          type = generic_[i] ? "GENERIC_START" : "LT";
        } else if (l == ">") {
          type = generic_[i] ? "GENERIC_END" : "GT";
        } else if (l == ">>") {
          type = generic_[i] ? "GENERIC_END" : "SR";
        } else if (l == ">>>") {
          type = generic_[i] ? "GENERIC_END" : "BSR";
        } else if (l == "?") {
          type = generic_[i] ? "WILDCARD_TYPE" : "QUESTION";
        } else if (l == "&") {
          type = generic_[i] ? "TYPE_EXTENSION_AND" : "BAND";
        } else if (l == "+" || l == "-") {
          auto p = prev_code(i);
          bool unary = true;
          if (p) {
            const auto& prev = tok(*p);
            bool operand_end = prev.kind == TokenKind::Identifier || is_literal(prev.kind) || is(*p, ")") ||
                               is(*p, "]") || (prev.kind == TokenKind::Keyword &&
                                               (prev.lexeme == "this" || prev.lexeme == "super")) ||
                               ((is(*p, "++") || is(*p, "--")) && types_[*p] != "INC" && types_[*p] != "DEC");
            unary = !operand_end || cast_close_[*p];
          }
          type = l == "+" ? (unary ? "UNARY_PLUS" : "PLUS") : (unary ? "UNARY_MINUS" : "MINUS");
        } else if (l == "++" || l == "--") {
          auto p = prev_code(i);
          bool postfix = p && (tok(*p).kind == TokenKind::Identifier || is(*p, ")") || is(*p, "]") ||
                               is_literal(tok(*p).kind)) &&
                         !cast_close_[*p];
          type = l == "++" ? (postfix ? "POST_INC" : "INC") : (postfix ? "POST_DEC" : "DEC");
        } else if (l == ":") {
          type = "COLON";
          // case/default labels and statement labels
          auto p = prev_code(i);
          if (p && is_keyword(tok(*p), "default")) {
            type = "LABEL_COLON";
          } else {
            int depth = 0;
            for (std::size_t j = i; j-- > 0;) {
              if (!is_code(j)) continue;
              std::string_view lj = lexeme(j);
              if (tok(j).kind == TokenKind::Separator && (lj == ")" || lj == "]")) ++depth;
              if (tok(j).kind == TokenKind::Separator && (lj == "(" || lj == "[")) {
                if (depth == 0) {
                  if (paren_owner(j) == "for") type = "FOR_EACH_COLON";
                  break;
                }
                --depth;
              }
              if (depth > 0) continue;
              if (is_keyword(tok(j), "case")) {
                type = "LABEL_COLON";
                break;
              }
              if (lj == "?" || lj == ";" || lj == "{" || lj == "}" || lj == "->" || lj == ":") break;
            }
            if (type == "COLON" && p && tok(*p).kind == TokenKind::Identifier) {
              auto pp = prev_code(*p);
              if (!pp || is(*pp, ";") || is(*pp, "{") || is(*pp, "}") || is(*pp, ":")) type = "LABEL_COLON";
            }
          }
        } else {
          type = "UNKNOWN";
        }
        break;
      }
    }
    types_[i] = type;
  }
}

}  // namespace crepair::detail
