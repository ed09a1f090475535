#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liftfact/json_io.hpp"

namespace liftfact {

struct CorpusEntry {
  std::string name;
  std::string description;
  std::optional<FilterBank> filters;  // absent when stored as a matrix
  PolyMatrix2 polyphase;
  DetMonomial expected_det;
  // Standard-form factorizations keyed by strategy text.
  std::map<std::string, std::vector<LiftingStep>> golden;
};

std::vector<std::string> builtin_names();
CorpusEntry builtin_entry(std::string_view name);

// $LIFTFACT_CORPUS_DIR when set, else the source tree's corpus/.
std::string corpus_dir();

// A path to a JSON file, or a name looked up in corpus_dir() and then
// among the built-ins.
CorpusEntry load_entry(std::string_view name_or_path);

CorpusEntry entry_from_json(const json& j);
json to_json(const CorpusEntry& e);

}  // namespace liftfact
