// Serialization: canonical JSON and Graphviz DOT renderings of crystal
// graphs, plus small file helpers with atomic replacement.
//
// The JSON layout is
//   {
//     "metadata": {"type": ..., "s": ..., "index_set": [colors...]},
//     "nodes":    [{"id": i, "label": ..., "weight": [...]}, ...],
//     "edges":    [{"src": i, "dst": j, "color": c}, ...]
//   }
// with nodes listed by id and edges sorted by (src, color, dst).  Emission
// uses a fixed key order and indentation so that parse + re-emit is byte
// identical (round-trip tested).
#pragma once

#include <filesystem>
#include <string>

#include "e7kr/crystal.hpp"

namespace e7kr {

struct GraphMetadata {
  std::string type;  // e.g. "letters", "classical", "kr", "adjoint"
  int s = 0;         // row length / tensor power, as applicable
};

std::string graph_to_json(const CrystalGraph& g, const GraphMetadata& meta);

// Parses graph_to_json output.  Node keys are regenerated as zero-padded id
// strings (the export does not carry domain keys); everything else round
// trips exactly.
CrystalGraph graph_from_json(const std::string& text,
                             GraphMetadata* meta = nullptr);

// DOT rendering: one node per line with its label, one edge per line with
// label=<color>; color-0 edges are drawn dashed and red so the affine
// structure stands out.
std::string graph_to_dot(const CrystalGraph& g, const GraphMetadata& meta);

std::string read_file(const std::filesystem::path& path);

// Writes content to a sibling temporary file and renames it over the target,
// so readers never observe a partial file.
void atomic_write_file(const std::filesystem::path& path,
                       const std::string& content);

}  // namespace e7kr
