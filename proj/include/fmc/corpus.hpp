#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fmc/graded.hpp"

namespace fmc {

struct CorpusEntry {
  std::string name;
  std::string summary;
  /// Suite or identity names this entry is expected to pass.
  std::vector<std::string> advertised;
  /// Canonical spec text.
  std::string text;
};

const std::vector<CorpusEntry>& corpus();
/// Throws InvalidArgument for an unknown name.
const CorpusEntry& corpus_entry(std::string_view name);
AlgebraSpec corpus_spec(std::string_view name);

}  // namespace fmc
