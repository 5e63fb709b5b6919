#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <fmt/format.h>

#include "crepair/checker.hpp"

namespace crepair {

namespace {

constexpr std::array<std::string_view, 18> kRules = {
    "LeftCurly",          "RightCurly",        "WhitespaceAround", "WhitespaceAfter",
    "NoWhitespaceBefore", "NoWhitespaceAfter", "LineLength",       "FileTabCharacter",
    "NewlineAtEndOfFile", "ParenPad",          "MethodParamPad",   "EmptyForIteratorPad",
    "GenericWhitespace",  "OperatorWrap",      "SeparatorWrap",    "OneStatementPerLine",
    "Indentation",        "RegexpSingleline"};

// Formatting checks deliberately left out of the engine.
constexpr std::array<std::string_view, 7> kExcluded = {
    "CommentsIndentation", "EmptyLineSeparator", "NoLineWrap", "Regexp",
    "RegexpMultiline",     "RegexpSinglelineJava", "TrailingComment"};

// Checkstyle modules outside formatting; accepted and skipped.
constexpr std::string_view kNonFormatting[] = {
    "AbbreviationAsWordInName", "AbstractClassName", "AnnotationLocation", "AnnotationUseStyle",
    "AnonInnerLength", "ArrayTrailingComma", "ArrayTypeStyle", "AtclauseOrder", "AvoidEscapedUnicodeCharacters",
    "AvoidInlineConditionals", "AvoidNestedBlocks", "AvoidStarImport", "AvoidStaticImport", "BooleanExpressionComplexity",
    "CatchParameterName", "ClassDataAbstractionCoupling", "ClassFanOutComplexity", "ClassTypeParameterName",
    "ConstantName", "CovariantEquals", "CustomImportOrder", "CyclomaticComplexity", "DeclarationOrder",
    "DefaultComesLast", "DesignForExtension", "EmptyBlock", "EmptyCatchBlock", "EmptyStatement",
    "EqualsAvoidNull", "EqualsHashCode", "ExecutableStatementCount", "ExplicitInitialization",
    "FallThrough", "FileLength", "FinalClass", "FinalLocalVariable", "FinalParameters", "HiddenField",
    "HideUtilityClassConstructor", "IllegalCatch", "IllegalImport", "IllegalInstantiation", "IllegalThrows",
    "IllegalType", "ImportControl", "ImportOrder", "InnerAssignment", "InnerTypeLast", "InterfaceIsType",
    "JavadocMethod", "JavadocPackage", "JavadocParagraph", "JavadocStyle", "JavadocTagContinuationIndentation",
    "JavadocType", "JavadocVariable", "JavaNCSS", "LocalFinalVariableName", "LocalVariableName", "MagicNumber",
    "MemberName", "MethodCount", "MethodLength", "MethodName", "MethodTypeParameterName", "MissingDeprecated",
    "MissingJavadocMethod", "MissingOverride", "MissingSwitchDefault", "ModifiedControlVariable", "ModifierOrder",
    "MultipleStringLiterals", "MultipleVariableDeclarations", "MutableException", "NeedBraces",
    "NestedForDepth", "NestedIfDepth", "NestedTryDepth", "NoClone", "NoFinalizer", "NPathComplexity",
    "OuterTypeFilename", "OuterTypeNumber", "PackageDeclaration", "PackageName", "ParameterAssignment",
    "ParameterName", "ParameterNumber", "RedundantImport", "RedundantModifier", "ReturnCount",
    "SimplifyBooleanExpression", "SimplifyBooleanReturn", "StaticVariableName", "StringLiteralEquality",
    "TodoComment", "TypeName"};

constexpr std::string_view kSkippedInfrastructure[] = {
    "SuppressionFilter", "SuppressionCommentFilter", "SuppressWithNearbyCommentFilter",
    "SuppressWarningsFilter", "SuppressWarningsHolder", "SuppressionXpathFilter",
    "SuppressionXpathSingleFilter", "SuppressWithPlainTextCommentFilter", "SeverityMatchFilter",
    "UniqueProperties", "Translation", "BeforeExecutionExclusionFileFilter"};

template <class Set>
bool contains(const Set& set, std::string_view name) {
  return std::find(std::begin(set), std::end(set), name) != std::end(set);
}

enum class PropKind { Option, Int, NonNegInt, Bool, Tokens, Regex, Text };

struct PropSpec {
  std::string_view name;
  PropKind kind;
  std::vector<std::string_view> options = {};
};

const std::vector<PropSpec>& rule_properties(std::string_view rule) {
  static const std::map<std::string_view, std::vector<PropSpec>> kSpecs = {
      {"LeftCurly",
       {{"option", PropKind::Option, {"eol", "nl", "nlow"}},
        {"tokens", PropKind::Tokens},
        {"ignoreEnums", PropKind::Bool}}},
      {"RightCurly",
       {{"option", PropKind::Option, {"same", "alone", "alone_or_singleline"}},
        {"tokens", PropKind::Tokens},
        {"shouldStartLine", PropKind::Bool}}},
      {"WhitespaceAround",
       {{"tokens", PropKind::Tokens},
        {"allowEmptyConstructors", PropKind::Bool},
        {"allowEmptyMethods", PropKind::Bool},
        {"allowEmptyTypes", PropKind::Bool},
        {"allowEmptyLoops", PropKind::Bool},
        {"allowEmptyLambdas", PropKind::Bool},
        {"allowEmptyCatches", PropKind::Bool},
        {"ignoreEnhancedForColon", PropKind::Bool}}},
      {"WhitespaceAfter", {{"tokens", PropKind::Tokens}}},
      {"NoWhitespaceBefore", {{"tokens", PropKind::Tokens}, {"allowLineBreaks", PropKind::Bool}}},
      {"NoWhitespaceAfter", {{"tokens", PropKind::Tokens}, {"allowLineBreaks", PropKind::Bool}}},
      {"LineLength",
       {{"max", PropKind::Int}, {"ignorePattern", PropKind::Regex}, {"fileExtensions", PropKind::Text}}},
      {"FileTabCharacter", {{"eachLine", PropKind::Bool}, {"fileExtensions", PropKind::Text}}},
      {"NewlineAtEndOfFile",
       {{"lineSeparator", PropKind::Option, {"lf", "crlf", "cr", "lf_cr_crlf", "system"}},
        {"fileExtensions", PropKind::Text}}},
      {"ParenPad", {{"option", PropKind::Option, {"nospace", "space"}}, {"tokens", PropKind::Tokens}}},
      {"MethodParamPad",
       {{"option", PropKind::Option, {"nospace", "space"}},
        {"allowLineBreaks", PropKind::Bool},
        {"tokens", PropKind::Tokens}}},
      {"EmptyForIteratorPad", {{"option", PropKind::Option, {"nospace", "space"}}}},
      {"GenericWhitespace", {}},
      {"OperatorWrap", {{"option", PropKind::Option, {"nl", "eol"}}, {"tokens", PropKind::Tokens}}},
      {"SeparatorWrap", {{"option", PropKind::Option, {"nl", "eol"}}, {"tokens", PropKind::Tokens}}},
      {"OneStatementPerLine", {{"treatTryResourcesAsStatement", PropKind::Bool}}},
      {"Indentation",
       {{"basicOffset", PropKind::NonNegInt},
        {"caseIndent", PropKind::NonNegInt},
        {"braceAdjustment", PropKind::NonNegInt},
        {"throwsIndent", PropKind::NonNegInt},
        {"arrayInitIndent", PropKind::NonNegInt},
        {"lineWrappingIndentation", PropKind::NonNegInt},
        {"forceStrictCondition", PropKind::Bool}}},
      {"RegexpSingleline",
       {{"format", PropKind::Regex},
        {"message", PropKind::Text},
        {"ignoreCase", PropKind::Bool},
        {"minimum", PropKind::NonNegInt},
        {"maximum", PropKind::NonNegInt},
        {"fileExtensions", PropKind::Text}}},
  };
  return kSpecs.at(rule);
}

bool parse_int(std::string_view text, int& out) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

void validate_property(std::string_view rule, std::string_view name, const std::string& value) {
  const auto& specs = rule_properties(rule);
  // Every Checkstyle module accepts these.
  if (name == "severity" || name == "id") return;
  auto it = std::find_if(specs.begin(), specs.end(), [&](const PropSpec& s) { return s.name == name; });
  if (it == specs.end()) throw ConfigError(fmt::format("unknown property '{}' for rule {}", name, rule));
  auto bad = [&](std::string_view why) {
    return ConfigError(fmt::format("invalid value '{}' for {}.{}: {}", value, rule, name, why));
  };
  int n = 0;
  switch (it->kind) {
    case PropKind::Option:
      if (std::find(it->options.begin(), it->options.end(), value) == it->options.end()) {
        throw bad("not a recognized option");
      }
      break;
    case PropKind::Int:
      if (!parse_int(value, n) || n <= 0) throw bad("expected a positive integer");
      break;
    case PropKind::NonNegInt:
      if (!parse_int(value, n) || n < 0) throw bad("expected a non-negative integer");
      break;
    case PropKind::Bool:
      if (value != "true" && value != "false") throw bad("expected true or false");
      break;
    case PropKind::Tokens: {
      static const std::regex kTokenList(R"(\s*[A-Z_]+\s*(,\s*[A-Z_]+\s*)*)");
      if (!std::regex_match(value, kTokenList)) throw bad("expected a comma-separated token list");
      break;
    }
    case PropKind::Regex:
      try {
        std::regex re(value);
      } catch (const std::regex_error& e) {
        throw bad(e.what());
      }
      break;
    case PropKind::Text:
      break;
  }
}

void check_variables(const std::string& value) {
  if (value.find("${") != std::string::npos) {
    throw ConfigError(fmt::format("unresolved variable in '{}'", value));
  }
}

std::string attribute(const boost::property_tree::ptree& node, const char* name) {
  return node.get<std::string>(std::string("<xmlattr>.") + name, "");
}

void parse_module(const boost::property_tree::ptree& node, Ruleset& out, int depth) {
  const std::string name = attribute(node, "name");
  if (name.empty()) throw ConfigError("module without a name attribute");

  // Properties first: they are validated even on container modules.
  std::vector<std::pair<std::string, std::string>> properties;
  for (const auto& [tag, child] : node) {
    if (tag != "property") continue;
    std::string pname = attribute(child, "name");
    std::string value = attribute(child, "value");
    if (pname.empty()) throw ConfigError(fmt::format("property without a name in module {}", name));
    check_variables(value);
    properties.emplace_back(std::move(pname), std::move(value));
  }

  if (depth == 0 && name != "Checker") throw ConfigError(fmt::format("root module must be Checker, found {}", name));
  if (name == "Checker" || name == "TreeWalker") {
    if (name == "Checker" && depth != 0) throw ConfigError("nested Checker module");
    for (const auto& [pname, value] : properties) {
      if (pname == "tabWidth") {
        int width = 0;
        if (!parse_int(value, width) || width <= 0) {
          throw ConfigError(fmt::format("invalid tabWidth '{}'", value));
        }
        out.tab_width = width;
      }
    }
    for (const auto& [tag, child] : node) {
      if (tag == "module") parse_module(child, out, depth + 1);
    }
    return;
  }

  if (contains(kRules, name)) {
    RuleConfig rule{name, {}};
    for (auto& [pname, value] : properties) {
      validate_property(name, pname, value);
      rule.properties[pname] = value;
    }
    out.rules.push_back(std::move(rule));
  } else if (contains(kExcluded, name)) {
    out.warnings.push_back(fmt::format("formatting rule {} is not supported; ignored", name));
  } else if (contains(kNonFormatting, name) || contains(kSkippedInfrastructure, name)) {
    out.warnings.push_back(fmt::format("non-formatting module {} ignored", name));
  } else {
    throw ConfigError(fmt::format("unknown module '{}'", name));
  }
}

}  // namespace

bool Ruleset::contains(std::string_view rule) const {
  return std::any_of(rules.begin(), rules.end(), [&](const RuleConfig& r) { return r.name == rule; });
}

std::vector<std::string> Ruleset::rule_names() const {
  std::vector<std::string> names;
  for (const auto& r : rules) {
    if (std::find(names.begin(), names.end(), r.name) == names.end()) names.push_back(r.name);
  }
  return names;
}

std::span<const std::string_view> supported_rules() { return kRules; }

Ruleset parse_ruleset(std::string_view xml) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    std::istringstream in{std::string(xml)};
    pt::read_xml(in, tree, pt::xml_parser::no_comments);
  } catch (const pt::xml_parser_error& e) {
    throw ConfigError(fmt::format("malformed ruleset XML: {}", e.what()));
  }
  Ruleset out;
  int roots = 0;
  for (const auto& [tag, child] : tree) {
    if (tag != "module") continue;
    ++roots;
    parse_module(child, out, 0);
  }
  if (roots != 1) throw ConfigError("ruleset must have exactly one root Checker module");
  return out;
}

Ruleset load_ruleset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(fmt::format("cannot open ruleset '{}'", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ruleset(buf.str());
}

Ruleset make_ruleset(std::vector<RuleConfig> rules, int tab_width) {
  if (tab_width <= 0) throw ConfigError("tab width must be positive");
  Ruleset out;
  out.tab_width = tab_width;
  for (auto& rule : rules) {
    if (!contains(kRules, rule.name)) throw ConfigError(fmt::format("unknown rule '{}'", rule.name));
    for (const auto& [name, value] : rule.properties) {
      check_variables(value);
      validate_property(rule.name, name, value);
    }
    out.rules.push_back(std::move(rule));
  }
  return out;
}

}  // namespace crepair
