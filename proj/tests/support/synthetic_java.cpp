#include "synthetic_java.hpp"

#include <algorithm>
#include <array>
#include <random>

#include <fmt/format.h>

namespace crepair::testing {

namespace {

constexpr std::array kNouns = {"count", "total", "index", "value", "result", "size",  "offset", "limit",
                               "sum",   "delta", "width", "height", "score", "level", "weight", "depth"};
constexpr std::array kClassStems = {"Order",   "Account", "Report", "Parser", "Buffer", "Cache",  "Router",
                                    "Planner", "Ledger",  "Shape",  "Vector", "Matrix", "Window", "Stream",
                                    "Widget",  "Engine",  "Queue",  "Record", "Signal", "Filter"};
constexpr std::array kClassSuffixes = {"Service", "Manager", "Helper", "Builder", "Store", "Index", "Model", "Util"};
constexpr std::array kVerbs = {"compute", "update", "resolve", "collect", "measure", "combine", "adjust", "scan",
                               "apply",   "merge",  "check",   "select",  "count",   "build",   "shift", "find"};
constexpr std::array kWords = {"ready", "done", "skipped", "empty", "value", "total", "found", "missing"};

class Generator {
 public:
  Generator(std::uint64_t seed, const SyntheticOptions& options) : rng_(seed), options_(options) {}

  SourceFile file(int number) {
    out_.clear();
    depth_ = 0;
    const std::string cls = fmt::format("{}{}", pick(kClassStems), pick(kClassSuffixes));
    const std::string pkg = fmt::format("com.example.gen{}", number);
    line(fmt::format("package {};", pkg));
    blank();
    std::vector<std::string> imports = {"java.util.ArrayList", "java.util.HashMap", "java.util.List", "java.util.Map"};
    for (const auto& imp : imports) line(fmt::format("import {};", imp));
    blank();
    if (chance(0.7)) {
      line("/**");
      line(fmt::format(" * {} support for generated module {}.", cls, number));
      line(" */");
    }
    std::string header = fmt::format("public {}class {}", chance(0.3) ? "final " : "", cls);
    if (chance(0.25)) header += " implements Comparable<" + cls + ">";
    open(header);
    class_body(cls, header.find("Comparable") != std::string::npos);
    close();
    return {fmt::format("src/com/example/gen{}/{}.java", number, cls), out_};
  }

 private:
  template <class A>
  std::string pick(const A& a) {
    return std::string(a[std::uniform_int_distribution<std::size_t>(0, a.size() - 1)(rng_)]);
  }
  int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  void line(const std::string& text) {
    for (int i = 0; i < depth_; ++i) out_ += options_.indent;
    out_ += text;
    out_ += '\n';
  }
  void blank() { out_ += '\n'; }
  void open(const std::string& head) {
    if (options_.brace_on_new_line) {
      line(head);
      line("{");
    } else {
      line(head + " {");
    }
    ++depth_;
  }
  // Closes the current block and opens a continuation such as `else`.
  void reopen(const std::string& head) {
    --depth_;
    if (options_.brace_on_new_line) {
      line("}");
      line(head);
      line("{");
    } else {
      line("} " + head + " {");
    }
    ++depth_;
  }
  void close(const std::string& tail = "") {
    --depth_;
    line("}" + tail);
  }

  std::string fresh(const std::string& base) {
    for (int i = 0;; ++i) {
      std::string name = i == 0 ? base : fmt::format("{}{}", base, i + 1);
      bool taken = std::any_of(scopes_.begin(), scopes_.end(), [&](const auto& scope) {
        return std::find(scope.begin(), scope.end(), name) != scope.end();
      });
      if (!taken) return name;
    }
  }
  std::vector<std::string> ints() const {
    std::vector<std::string> all;
    for (const auto& s : scopes_) all.insert(all.end(), s.begin(), s.end());
    return all;
  }
  std::string int_var() {
    auto all = ints();
    return all.empty() ? "limit" : pick(all);
  }

  std::string atom() {
    switch (range(0, 5)) {
      case 0:
        return std::to_string(range(0, 64));
      case 1:
        return "names.size()";
      default:
        return int_var();
    }
  }

  std::string int_expr(int nesting = 0) {
    static constexpr std::array ops = {"+", "-", "*", "/", "%"};
    switch (nesting > 1 ? 0 : range(0, 6)) {
      case 0:
      case 1:
        return atom();
      case 2:
        return fmt::format("{} {} {}", atom(), pick(ops), atom());
      case 3:
        return fmt::format("({} + {}) * {}", atom(), atom(), range(2, 9));
      case 4:
        return fmt::format("Math.max({}, {})", int_expr(nesting + 1), atom());
      case 5:
        return fmt::format("{} > {} ? {} : {}", atom(), atom(), atom(), atom());
      default:
        return fmt::format("(int) ({} * 0.{})", atom(), range(1, 9));
    }
  }

  std::string condition() {
    static constexpr std::array cmp = {"<", "<=", ">", ">=", "==", "!="};
    switch (range(0, 5)) {
      case 0:
        return fmt::format("{} {} {} && {} {} {}", atom(), pick(cmp), atom(), atom(), pick(cmp), atom());
      case 1:
        return fmt::format("{} {} {} || !names.isEmpty()", atom(), pick(cmp), atom());
      case 2:
        return "names.isEmpty()";
      default:
        return fmt::format("{} {} {}", atom(), pick(cmp), atom());
    }
  }

  void statements(int n, int nesting) {
    for (int i = 0; i < n; ++i) statement(nesting);
  }

  void block_body(int nesting) { statements(range(1, 3), nesting + 1); }

  void statement(int nesting) {
    const int kinds = nesting >= 2 ? 8 : 17;
    switch (range(0, kinds - 1)) {
      case 0:
      case 1: {
        std::string name = fresh(pick(kNouns));
        line(fmt::format("int {} = {};", name, int_expr()));
        scopes_.back().push_back(name);
        break;
      }
      case 2:
        line(fmt::format("{} = {};", int_var(), int_expr()));
        break;
      case 3: {
        static constexpr std::array ops = {"+=", "-=", "*="};
        line(fmt::format("{} {} {};", int_var(), pick(ops), atom()));
        break;
      }
      case 4:
        line(fmt::format("{}{};", int_var(), chance(0.5) ? "++" : "--"));
        break;
      case 5:
        line(fmt::format("System.out.println(\"{}: \" + {});", pick(kWords), int_var()));
        break;
      case 6:
        line(fmt::format("names.add(\"{}\" + {});", pick(kWords), atom()));
        break;
      case 7:
        line(fmt::format("// {} the {} before continuing", pick(kVerbs), pick(kNouns)));
        statement(nesting);
        break;
      case 8:
      case 9: {
        open(fmt::format("if ({})", condition()));
        scoped([&] { block_body(nesting); });
        if (chance(0.3)) {
          reopen(fmt::format("else if ({})", condition()));
          scoped([&] { block_body(nesting); });
        }
        if (chance(0.4)) {
          reopen("else");
          scoped([&] { block_body(nesting); });
        }
        close();
        break;
      }
      case 10: {
        std::string i = fresh("i");
        open(fmt::format("for (int {0} = 0; {0} < {1}; {0}++)", i, atom()));
        scoped([&] {
          scopes_.back().push_back(i);
          block_body(nesting);
        });
        close();
        break;
      }
      case 11: {
        std::string s = fresh("item");
        open(fmt::format("for (String {} : names)", s));
        scoped([&] {
          line(fmt::format("{} += {}.length();", int_var(), s));
          if (chance(0.5)) block_body(nesting);
        });
        close();
        break;
      }
      case 12:
        open(fmt::format("while ({})", condition()));
        scoped([&] {
          block_body(nesting);
          line("break;");
        });
        close();
        break;
      case 13:
        open("try");
        scoped([&] { block_body(nesting); });
        reopen("catch (IllegalStateException e)");
        line("System.err.println(e.getMessage());");
        if (chance(0.3)) {
          reopen("finally");
          line("names.clear();");
        }
        close();
        break;
      case 14: {
        open(fmt::format("switch ({})", int_var()));
        int cases = range(1, 3);
        for (int c = 0; c < cases; ++c) {
          line(fmt::format("case {}:", c + range(0, 3) * 4));
          ++depth_;
          scoped([&] { statements(range(1, 2), nesting + 1); });
          line("break;");
          --depth_;
        }
        line("default:");
        ++depth_;
        line(fmt::format("{} = {};", int_var(), atom()));
        line("break;");
        --depth_;
        close();
        break;
      }
      case 15:
        line(fmt::format("names.forEach(n -> System.out.println(n + {}));", atom()));
        break;
      default: {
        std::string name = fresh("data");
        line(fmt::format("int[] {} = new int[{}];", name, range(2, 16)));
        line(fmt::format("{}[{}] = {};", name, range(0, 1), int_expr()));
        std::string v = fresh(pick(kNouns));
        line(fmt::format("int {} = {}[0] + {}.length;", v, name, name));
        scopes_.back().push_back(v);
        break;
      }
    }
  }

  template <class F>
  void scoped(F&& f) {
    scopes_.emplace_back();
    f();
    scopes_.pop_back();
  }

  void method(bool is_static) {
    const std::string verb = pick(kVerbs);
    const std::string noun = pick(kNouns);
    std::string name = fmt::format("{}{}{}", verb, char(noun[0] - 'a' + 'A'), noun.substr(1));
    while (std::find(methods_.begin(), methods_.end(), name) != methods_.end()) name += "Again";
    methods_.push_back(name);
    const int params = range(0, 3);
    std::vector<std::string> names;
    std::string plist;
    for (int p = 0; p < params; ++p) {
      std::string param = pick(kNouns);
      if (std::find(names.begin(), names.end(), param) != names.end()) param += std::to_string(p);
      names.push_back(param);
      if (!plist.empty()) plist += ", ";
      plist += "int " + param;
    }
    const int ret = range(0, 2);
    const char* ret_type = ret == 0 ? "void" : ret == 1 ? "int" : "boolean";
    if (chance(0.4)) {
      line("/**");
      line(fmt::format(" * {}s the {}.", verb, noun));
      line(" */");
    }
    open(fmt::format("{} {}{} {}({})", chance(0.7) ? "public" : "private", is_static ? "static " : "", ret_type, name,
                     plist));
    scoped([&] {
      scopes_.back() = names;
      if (!is_static) scopes_.back().push_back("limit");
      if (is_static) {
        line("List<String> names = new ArrayList<>();");
        line(fmt::format("int base = {};", range(1, 9)));
        scopes_.back().push_back("base");
      }
      statements(range(2, 5), 0);
      if (ret == 1) line(fmt::format("return {};", int_expr()));
      if (ret == 2) line(fmt::format("return {};", condition()));
    });
    close();
  }

  void class_body(const std::string& cls, bool comparable) {
    methods_.clear();
    scopes_.clear();
    line(fmt::format("private static final String NAME = \"{}\";", cls));
    line("private final List<String> names = new ArrayList<>();");
    line("private final Map<String, Integer> counts = new HashMap<>();");
    line(fmt::format("private int limit = {};", range(1, 100)));
    blank();
    open(fmt::format("public {}(int limit)", cls));
    line("this.limit = limit;");
    close();
    for (int m = 0, n = range(options_.min_methods, options_.max_methods); m < n; ++m) {
      blank();
      method(chance(0.2));
    }
    if (comparable) {
      blank();
      line("@Override");
      open(fmt::format("public int compareTo({} other)", cls));
      line("return Integer.compare(limit, other.limit);");
      close();
    }
    if (chance(0.5)) {
      blank();
      line("@Override");
      open("public String toString()");
      line("return NAME + \"(\" + limit + \")\";");
      close();
    }
    if (chance(0.3)) {
      blank();
      open("enum Mode");
      line("FAST,");
      line("SLOW;");
      blank();
      open("boolean isFast()");
      line("return this == FAST;");
      close();
      close();
    }
    if (chance(0.3)) {
      blank();
      open("interface Visitor");
      line("void visit(String name, int value);");
      close();
    }
  }

  std::mt19937_64 rng_;
  const SyntheticOptions& options_;
  std::string out_;
  int depth_ = 0;
  std::vector<std::vector<std::string>> scopes_;
  std::vector<std::string> methods_;
};

}  // namespace

std::string pad_parentheses(std::string_view source) {
  ConcreteTokenStream stream = lex(source);
  for (std::size_t i = 0; i + 1 < stream.size(); ++i) {
    const auto& t = stream.token(i);
    const auto& next = stream.token(i + 1);
    Trivia& gap = stream.items[i].trailing;
    if (!gap.empty()) continue;
    bool open = t.lexeme == "(" && next.lexeme != ")";
    bool close = next.lexeme == ")" && t.lexeme != "(";
    if (t.kind == TokenKind::Separator && open) gap = Trivia::from_text(" ");
    if (next.kind == TokenKind::Separator && close) gap = Trivia::from_text(" ");
  }
  return render(stream);
}

std::vector<SourceFile> synthetic_project(std::uint64_t seed, const SyntheticOptions& options) {
  Generator gen(seed, options);
  std::vector<SourceFile> files;
  for (int i = 0; i < options.files; ++i) {
    files.push_back(gen.file(i));
    if (options.pad_parentheses) files.back().text = pad_parentheses(files.back().text);
  }
  return files;
}

std::string ruleset_xml(const std::vector<std::string>& rules) {
  std::vector<RuleConfig> configs;
  for (const auto& r : rules) configs.push_back({r, {}});
  return ruleset_xml(configs);
}

std::string ruleset_xml(const std::vector<RuleConfig>& rules) {
  std::string xml =
      "<?xml version=\"1.0\"?>\n"
      "<!DOCTYPE module PUBLIC \"-//Checkstyle//DTD Checkstyle Configuration 1.3//EN\"\n"
      "    \"https://checkstyle.org/dtds/configuration_1_3.dtd\">\n"
      "<module name=\"Checker\">\n"
      "  <module name=\"TreeWalker\">\n";
  for (const auto& r : rules) {
    if (r.properties.empty()) {
      xml += fmt::format("    <module name=\"{}\"/>\n", r.name);
      continue;
    }
    xml += fmt::format("    <module name=\"{}\">\n", r.name);
    for (const auto& [key, value] : r.properties) {
      xml += fmt::format("      <property name=\"{}\" value=\"{}\"/>\n", key, value);
    }
    xml += "    </module>\n";
  }
  xml += "  </module>\n</module>\n";
  return xml;
}

}  // namespace crepair::testing
