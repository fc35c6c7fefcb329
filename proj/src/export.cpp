#include "e7kr/export.hpp"

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace e7kr {

using ordered_json = nlohmann::ordered_json;

std::string graph_to_json(const CrystalGraph& g, const GraphMetadata& meta) {
  ordered_json j;
  j["metadata"]["type"] = meta.type;
  j["metadata"]["s"] = meta.s;
  j["metadata"]["index_set"] = g.colors;
  j["nodes"] = ordered_json::array();
  for (int v = 0; v < g.size(); ++v) {
    ordered_json node;
    node["id"] = v;
    node["label"] = g.labels[v];
    node["weight"] = g.weights[v];
    j["nodes"].push_back(std::move(node));
  }
  j["edges"] = ordered_json::array();
  for (int v = 0; v < g.size(); ++v) {
    for (std::size_t c = 0; c < g.colors.size(); ++c) {
      const int w = g.f_edge[c][v];
      if (w < 0) continue;
      ordered_json edge;
      edge["src"] = v;
      edge["dst"] = w;
      edge["color"] = g.colors[c];
      j["edges"].push_back(std::move(edge));
    }
  }
  return j.dump(2) + "\n";
}

CrystalGraph graph_from_json(const std::string& text, GraphMetadata* meta) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed graph JSON: ") +
                                e.what());
  }
  CrystalGraph g;
  try {
  if (meta) {
    meta->type = j.at("metadata").at("type").get<std::string>();
    meta->s = j.at("metadata").at("s").get<int>();
  }
  g.colors = j.at("metadata").at("index_set").get<std::vector<int>>();
  const auto& nodes = j.at("nodes");
  const int n = static_cast<int>(nodes.size());
  g.keys.resize(n);
  g.labels.resize(n);
  g.weights.resize(n);
  for (int v = 0; v < n; ++v) {
    if (nodes[v].at("id").get<int>() != v)
      throw std::invalid_argument("node ids must be 0..n-1 in order");
    char key[16];
    std::snprintf(key, sizeof key, "%08d", v);
    g.keys[v] = key;
    g.labels[v] = nodes[v].at("label").get<std::string>();
    g.weights[v] = nodes[v].at("weight").get<std::vector<int>>();
  }
  g.f_edge.assign(g.colors.size(), std::vector<std::int32_t>(n, -1));
  g.e_edge.assign(g.colors.size(), std::vector<std::int32_t>(n, -1));
  for (const auto& edge : j.at("edges")) {
    const int src = edge.at("src").get<int>();
    const int dst = edge.at("dst").get<int>();
    const int c = g.color_index(edge.at("color").get<int>());
    if (src < 0 || src >= n || dst < 0 || dst >= n)
      throw std::invalid_argument("edge endpoint out of range");
    g.f_edge[c][src] = dst;
    g.e_edge[c][dst] = src;
  }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed graph JSON: ") +
                                e.what());
  }
  // weight_nodes and alpha are not carried by the export; leave the colors as
  // nominal weight coordinates when the arities happen to match.
  if (!g.weights.empty() &&
      g.weights[0].size() == g.colors.size())
    g.weight_nodes = g.colors;
  return g;
}

std::string graph_to_dot(const CrystalGraph& g, const GraphMetadata& meta) {
  std::ostringstream out;
  out << "digraph \"" << meta.type << "_s" << meta.s << "\" {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (int v = 0; v < g.size(); ++v) {
    std::string escaped;
    for (char ch : g.labels[v]) {
      if (ch == '"' || ch == '\\') escaped += '\\';
      escaped += ch;
    }
    out << "  n" << v << " [label=\"" << escaped << "\"];\n";
  }
  for (int v = 0; v < g.size(); ++v) {
    for (std::size_t c = 0; c < g.colors.size(); ++c) {
      const int w = g.f_edge[c][v];
      if (w < 0) continue;
      out << "  n" << v << " -> n" << w << " [label=\"" << g.colors[c] << "\"";
      if (g.colors[c] == 0) out << ", style=dashed, color=red";
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void atomic_write_file(const std::filesystem::path& path,
                       const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace e7kr
