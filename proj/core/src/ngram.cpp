#include "crepair/model.hpp"

namespace crepair {

std::vector<FormattingToken> ngram_translate(const ModelInput& input, const ThreeGramCorpus& corpus) {
  std::vector<FormattingToken> out = input.span_formatting;
  for (std::size_t q = 0; q < out.size(); ++q) {
    if (q + 1 >= input.span_java.size()) continue;  // trailing trivia of the file
    auto entries = corpus.matches(input.span_java[q], input.span_java[q + 1]);
    const ThreeGramCorpus::Entry* best = nullptr;
    for (const auto& e : entries) {
      if (!best || e.second > best->second || (e.second == best->second && e.first.text() < best->first.text())) {
        best = &e;
      }
    }
    if (best) out[q] = best->first;
  }
  return out;
}

}  // namespace crepair
