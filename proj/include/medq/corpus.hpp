#pragma once

#include <optional>
#include <string>
#include <vector>

#include "medq/diagram.hpp"

namespace medq {

struct CorpusEntry {
  std::string name;
  std::string description;
  // Diagram source: JSON or PD code.
  std::string source;
  long determinant = 0;
  long imq_size = 0;
  // Reduced Alexander module, as a readable note.
  std::string module_note;

  Diagram diagram() const { return read_diagram(source); }
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(const std::string& name);

}  // namespace medq
