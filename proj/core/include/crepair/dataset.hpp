#pragma once

// On-disk training datasets:
//   <root>/<protocol>/<id>/{err.java, orig.java, meta.json, input.txt, target.txt}

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "crepair/injection.hpp"

namespace crepair {

class DatasetError : public Error {
 public:
  using Error::Error;
};

/// Metadata of one pair as JSON text: violation, mutation log, seed path and
/// window indices.
std::string pair_metadata(const TrainingPair& pair);

/// Replaces <root>/<protocol> with the given pairs.
void write_dataset(const std::filesystem::path& root, std::span<const TrainingPair> pairs, Protocol protocol);

/// Reads every pair of one protocol, ordered by id.
std::vector<TrainingPair> read_dataset(const std::filesystem::path& root, Protocol protocol);

}  // namespace crepair
