#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

namespace crepair::cli {

namespace fs = std::filesystem;
namespace pt = boost::property_tree;

namespace {

// Drops '#' comments outside double quotes so the INI reader accepts the
// TOML subset.
std::string strip_comments(std::string_view text) {
  std::string out;
  bool quoted = false;
  bool comment = false;
  for (char c : text) {
    if (c == '\n') {
      comment = false;
      quoted = false;
    } else if (comment) {
      continue;
    } else if (c == '"') {
      quoted = !quoted;
    } else if (c == '#' && !quoted) {
      comment = true;
      continue;
    }
    out += c;
  }
  return out;
}

std::string unquote(std::string v) {
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"') return v.substr(1, v.size() - 2);
  return v;
}

template <class T>
T number(const std::string& key, const std::string& raw) {
  T value{};
  std::string v = unquote(raw);
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw UsageError(fmt::format("config key '{}': '{}' is not a valid number", key, raw));
  }
  return value;
}

int positive(const std::string& key, const std::string& raw) {
  int v = number<int>(key, raw);
  if (v < 1) throw UsageError(fmt::format("config key '{}' must be positive", key));
  return v;
}

bool boolean(const std::string& key, const std::string& raw) {
  std::string v = unquote(raw);
  if (v == "true") return true;
  if (v == "false") return false;
  throw UsageError(fmt::format("config key '{}': expected true or false, got '{}'", key, raw));
}

std::vector<int> int_list(const std::string& key, std::string raw) {
  raw = unquote(raw);
  raw.erase(std::remove_if(raw.begin(), raw.end(), [](char c) { return c == '[' || c == ']' || c == ' '; }), raw.end());
  std::vector<int> out;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(positive(key, item));
  }
  return out;
}

using Setter = void (*)(ProjectConfig&, const std::string&, const std::string&);

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"ruleset", [](ProjectConfig& c, const std::string&, const std::string& v) { c.ruleset_path = unquote(v); }},
      {"corpus", [](ProjectConfig& c, const std::string&, const std::string& v) { c.corpus_glob = unquote(v); }},
      {"dataset_dir", [](ProjectConfig& c, const std::string&, const std::string& v) { c.dataset_dir = unquote(v); }},
      {"model_dir", [](ProjectConfig& c, const std::string&, const std::string& v) { c.model_dir = unquote(v); }},
      {"seed", [](ProjectConfig& c, const std::string& k, const std::string& v) { c.seed = number<std::uint64_t>(k, v); }},
      {"jobs", [](ProjectConfig& c, const std::string& k, const std::string& v) { c.jobs = positive(k, v); }},
      {"window.k", [](ProjectConfig& c, const std::string& k, const std::string& v) { c.window.k = number<int>(k, v); }},
      {"window.n", [](ProjectConfig& c, const std::string& k, const std::string& v) { c.window.n = number<int>(k, v); }},
      {"window.i", [](ProjectConfig& c, const std::string& k, const std::string& v) { c.window.i = number<int>(k, v); }},
      {"window.j", [](ProjectConfig& c, const std::string& k, const std::string& v) { c.window.j = number<int>(k, v); }},
      {"beam.width", [](ProjectConfig& c, const std::string& k, const std::string& v) { c.beam.width = positive(k, v); }},
      {"beam.max_length",
       [](ProjectConfig& c, const std::string& k, const std::string& v) { c.beam.max_length = positive(k, v); }},
      {"generation.number_of_errors",
       [](ProjectConfig& c, const std::string& k, const std::string& v) { c.generation.number_of_errors = positive(k, v); }},
      {"generation.batch_size",
       [](ProjectConfig& c, const std::string& k, const std::string& v) { c.generation.batch_size = positive(k, v); }},
      {"generation.watchdog",
       [](ProjectConfig& c, const std::string& k, const std::string& v) { c.generation.watchdog = positive(k, v); }},
      {"model.attention",
       [](ProjectConfig& c, const std::string& k, const std::string& v) {
         std::string a = unquote(v);
         if (a == "general") {
           c.model.attention = Attention::General;
         } else if (a == "mlp") {
           c.model.attention = Attention::Mlp;
         } else {
           throw UsageError(fmt::format("config key '{}': expected general or mlp, got '{}'", k, v));
         }
       }},
      {"model.optimizer",
       [](ProjectConfig& c, const std::string& k, const std::string& v) {
         std::string a = unquote(v);
         if (a == "sgd") {
           c.model.optimizer = Optimizer::Sgd;
         } else if (a == "adam") {
           c.model.optimizer = Optimizer::Adam;
         } else {
           throw UsageError(fmt::format("config key '{}': expected sgd or adam, got '{}'", k, v));
         }
       }},
      {"model.layers", [](ProjectConfig& c, const std::string& k, const std::string& v) { c.model.layers = positive(k, v); }},
      {"model.units", [](ProjectConfig& c, const std::string& k, const std::string& v) { c.model.units = positive(k, v); }},
      {"model.embedding",
       [](ProjectConfig& c, const std::string& k, const std::string& v) { c.model.embedding = positive(k, v); }},
      {"model.batch_size",
       [](ProjectConfig& c, const std::string& k, const std::string& v) { c.model.batch_size = positive(k, v); }},
      {"model.max_iterations",
       [](ProjectConfig& c, const std::string& k, const std::string& v) { c.model.max_iterations = positive(k, v); }},
      {"model.eval_every",
       [](ProjectConfig& c, const std::string& k, const std::string& v) { c.model.eval_every = positive(k, v); }},
      {"model.learning_rate",
       [](ProjectConfig& c, const std::string& k, const std::string& v) { c.model.learning_rate = number<double>(k, v); }},
      {"model.decay",
       [](ProjectConfig& c, const std::string& k, const std::string& v) { c.model.decay = number<double>(k, v); }},
      {"model.clip", [](ProjectConfig& c, const std::string& k, const std::string& v) { c.model.clip = number<double>(k, v); }},
      {"model.init_scale",
       [](ProjectConfig& c, const std::string& k, const std::string& v) { c.model.init_scale = number<double>(k, v); }},
      {"model.validation_fraction",
       [](ProjectConfig& c, const std::string& k, const std::string& v) {
         c.model.validation_fraction = number<double>(k, v);
       }},
      {"model.checkpoints",
       [](ProjectConfig& c, const std::string& k, const std::string& v) { c.model.checkpoints = int_list(k, v); }},
  };
  return table;
}

bool match_here(std::string_view p, std::string_view s) {
  while (!p.empty()) {
    if (p.starts_with("**/")) {
      // Zero or more whole directories.
      std::string_view rest = p.substr(3);
      if (match_here(rest, s)) return true;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '/' && match_here(rest, s.substr(i + 1))) return true;
      }
      return false;
    }
    if (p.starts_with("**")) {
      std::string_view rest = p.substr(2);
      for (std::size_t i = 0; i <= s.size(); ++i) {
        if (match_here(rest, s.substr(i))) return true;
      }
      return false;
    }
    if (p.front() == '*') {
      std::string_view rest = p.substr(1);
      for (std::size_t i = 0; i <= s.size(); ++i) {
        if (match_here(rest, s.substr(i))) return true;
        if (i < s.size() && s[i] == '/') break;
      }
      return false;
    }
    if (s.empty()) return false;
    if (p.front() == '?' ? s.front() == '/' : p.front() != s.front()) return false;
    p.remove_prefix(1);
    s.remove_prefix(1);
  }
  return s.empty();
}

}  // namespace

bool glob_match(std::string_view pattern, std::string_view path) { return match_here(pattern, path); }

std::vector<fs::path> expand_glob(const fs::path& root, std::string_view pattern) {
  // Walk from the longest wildcard-free directory prefix.
  std::string_view fixed = pattern.substr(0, pattern.find_first_of("*?"));
  std::size_t slash = fixed.rfind('/');
  fs::path base = slash == std::string_view::npos ? root : root / std::string(fixed.substr(0, slash));
  std::vector<fs::path> out;
  if (fs::path(std::string(pattern)).is_absolute()) {
    base = slash == std::string_view::npos ? fs::path("/") : fs::path(std::string(fixed.substr(0, slash)));
  }
  std::error_code ec;
  if (pattern.find_first_of("*?") == std::string_view::npos) {
    fs::path p = fs::path(std::string(pattern)).is_absolute() ? fs::path(std::string(pattern)) : root / std::string(pattern);
    if (fs::is_regular_file(p, ec)) out.push_back(p);
    return out;
  }
  if (!fs::is_directory(base, ec)) return out;
  for (auto it = fs::recursive_directory_iterator(base, ec); it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (ec) break;
    if (!it->is_regular_file(ec)) continue;
    fs::path p = it->path();
    std::string rel = fs::path(std::string(pattern)).is_absolute() ? p.generic_string()
                                                                    : p.lexically_relative(root).generic_string();
    if (glob_match(pattern, rel)) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ProjectConfig parse_config(std::string_view text, const fs::path& root) {
  pt::ptree tree;
  std::istringstream in(strip_comments(text));
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw UsageError(fmt::format("config: {} (line {})", e.message(), e.line()));
  }
  ProjectConfig cfg;
  cfg.root = root;
  const auto& table = setters();
  auto apply = [&](const std::string& key, const std::string& value) {
    auto it = table.find(key);
    if (it == table.end()) throw UsageError(fmt::format("unknown config key '{}'", key));
    it->second(cfg, key, value);
  };
  for (const auto& [name, node] : tree) {
    if (node.empty()) {
      apply(name, node.data());
      continue;
    }
    for (const auto& [key, leaf] : node) apply(name + "." + key, leaf.data());
  }
  if (cfg.ruleset_path.empty()) throw UsageError("config: 'ruleset' is required");
  if (cfg.dataset_dir.empty()) cfg.dataset_dir = "data";
  if (cfg.model_dir.empty()) cfg.model_dir = "models";
  for (fs::path* p : {&cfg.ruleset_path, &cfg.dataset_dir, &cfg.model_dir}) {
    if (p->is_relative()) *p = root / *p;
  }
  cfg.generation.seed = cfg.seed;
  cfg.generation.jobs = cfg.jobs;
  cfg.generation.window = cfg.window;
  cfg.model.seed = cfg.seed;
  try {
    validate(cfg.model);
  } catch (const Error& e) {
    throw UsageError(fmt::format("config: {}", e.what()));
  }
  return cfg;
}

ProjectConfig load_config(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(fmt::format("cannot read config file {}", path.string()));
  std::stringstream buf;
  buf << in.rdbuf();
  fs::path root = path.parent_path();
  if (root.empty()) root = ".";
  return parse_config(buf.str(), root);
}

}  // namespace crepair::cli
