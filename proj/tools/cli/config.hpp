#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "crepair/encoding.hpp"
#include "crepair/injection.hpp"
#include "crepair/model.hpp"

namespace crepair::cli {

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Project settings read from a TOML-style file: top-level keys plus the
/// [window], [beam], [generation] and [model] tables. Relative paths are
/// resolved against the config file's directory.
struct ProjectConfig {
  std::filesystem::path root;
  std::filesystem::path ruleset_path;
  std::string corpus_glob;
  std::filesystem::path dataset_dir;
  std::filesystem::path model_dir;
  std::uint64_t seed = 0;
  int jobs = 1;
  WindowParams window;
  BeamParams beam;
  GenerationConfig generation;
  Hyperparams model;
};

/// Throws UsageError for unreadable files, unknown keys and bad values.
ProjectConfig load_config(const std::filesystem::path& path);
ProjectConfig parse_config(std::string_view text, const std::filesystem::path& root);

/// Files under `root` matching `pattern`; `*` and `?` stay within a path
/// component, `**/` spans any number of directories. Sorted.
std::vector<std::filesystem::path> expand_glob(const std::filesystem::path& root, std::string_view pattern);

/// Whether `path` (with '/' separators) matches `pattern`.
bool glob_match(std::string_view pattern, std::string_view path);

}  // namespace crepair::cli
