// Generic crystal-graph container and generation engine.
//
// A CrystalGraph is a finite colored digraph: nodes carry an integer weight
// vector and a display label, and for every color there is a partial
// successor map f (lowering) with inverse e (raising).  Graphs are stored
// with nodes in a canonical order (sorted by their domain key), so the same
// mathematical crystal always serializes to identical bytes.
//
// generate_crystal() builds the graph reachable from a set of generators in
// a user-supplied Domain.  A Domain models the element-level operations:
//
//   struct Domain {
//     using Element = ...;                         // value type
//     std::vector<int> colors() const;             // arrow colors, ascending
//     std::vector<int> weight_nodes() const;       // node label per weight coord
//     std::vector<int> alpha(int color) const;     // simple root, same coords
//     std::string key(const Element&) const;       // canonical id (sortable)
//     std::string label(const Element&) const;     // display string
//     std::vector<int> weight(const Element&) const;
//     std::optional<Element> f(const Element&, int color) const;
//     std::optional<Element> e(const Element&, int color) const;
//   };
//
// Several moves here use the signature rule for tensor products, in the
// convention where a tensor word is written left to right, each factor
// contributes phi_i(b) minus signs followed by eps_i(b) plus signs, adjacent
// "+ -" pairs cancel (plus opens, minus closes), f_i acts on the factor of
// the rightmost surviving minus and e_i on the factor of the leftmost
// surviving plus.  signature_scan() implements that rule once for all users.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "e7kr/cartan.hpp"

namespace e7kr {

struct CrystalGraph {
  std::vector<int> colors;        // ascending arrow colors
  std::vector<int> weight_nodes;  // diagram node of each weight coordinate

  std::vector<std::string> keys;    // canonical key per node (strictly sorted)
  std::vector<std::string> labels;  // display label per node
  std::vector<std::vector<int>> weights;  // weight vector per node

  // alpha[c] = simple root of colors[c] in the graph's weight coordinates.
  std::vector<std::vector<int>> alpha;

  // f_edge[c][v] / e_edge[c][v] = target node or -1, with c an index into
  // colors (not the color value itself).
  std::vector<std::vector<std::int32_t>> f_edge;
  std::vector<std::vector<std::int32_t>> e_edge;

  int size() const { return static_cast<int>(keys.size()); }
  int color_index(int color) const;  // throws if the color is absent

  int f(int node, int color) const { return f_edge[color_index(color)][node]; }
  int e(int node, int color) const { return e_edge[color_index(color)][node]; }

  // String lengths phi_i / eps_i read off by walking edges.
  int phi(int node, int color) const;
  int eps(int node, int color) const;

  int node_by_key(const std::string& key) const;  // -1 if absent
};

// Result of running the signature rule over factors 0..length-1 (factor 0 is
// the leftmost written factor).  f_pos / e_pos are the acting factor indices,
// -1 when the operator annihilates the word.
struct SignatureResult {
  int phi = 0;
  int eps = 0;
  int f_pos = -1;
  int e_pos = -1;
};

SignatureResult signature_scan(
    int length, const std::function<std::pair<int, int>(int)>& phi_eps);

// --- Generation ------------------------------------------------------------

template <class Domain>
struct Generated {
  CrystalGraph graph;
  std::vector<typename Domain::Element> nodes;  // aligned with graph ids
};

// Breadth-first closure of the generators under all e and f moves, followed
// by canonical renumbering.  Throws ResourceLimitError when more than
// max_nodes distinct elements appear.
template <class Domain>
Generated<Domain> generate_crystal(
    const Domain& dom, const std::vector<typename Domain::Element>& generators,
    std::size_t max_nodes = 50'000'000);

// --- Whole-graph queries ----------------------------------------------------

// Nodes with eps_i = 0 for every listed color.
std::vector<int> highest_weight_nodes(const CrystalGraph& g,
                                      const std::vector<int>& colors);

// Connected components under the listed colors (edges in both directions).
// Returns the component id per node; ids are dense and ordered by the
// smallest node in each component.
std::vector<int> component_ids(const CrystalGraph& g,
                               const std::vector<int>& colors,
                               int* component_count = nullptr);

bool is_connected(const CrystalGraph& g, const std::vector<int>& colors);

// Verifies the seminormal crystal axioms on every node and color:
//   * e and f are mutually inverse partial bijections,
//   * wt(f_i b) = wt(b) - alpha_i,
//   * phi_i(b) - eps_i(b) = <alpha_i^vee, wt(b)> (coordinate of color i,
//     which requires the color's node to appear among weight_nodes).
// Returns an empty string on success, else a description of the first
// violation.
std::string check_crystal_axioms(const CrystalGraph& g);

// Follows the unique color-preserving map of crystals that sends src (in g1)
// to dst (in g2), translating colors through dict.  Returns the image node
// per g1 node (-1 outside the component of src) and throws std::logic_error
// if the two components are not isomorphic.
std::vector<int> match_isomorphism(const CrystalGraph& g1, int src,
                                   const std::vector<int>& colors,
                                   const CrystalGraph& g2, int dst,
                                   const std::map<int, int>& dict);

// --- Implementation of generate_crystal -------------------------------------

template <class Domain>
Generated<Domain> generate_crystal(
    const Domain& dom, const std::vector<typename Domain::Element>& generators,
    std::size_t max_nodes) {
  using Element = typename Domain::Element;
  const std::vector<int> colors = dom.colors();

  std::vector<Element> elems;
  std::unordered_map<std::string, int> index;
  std::vector<std::string> keys;

  auto intern = [&](const Element& x) -> int {
    std::string k = dom.key(x);
    auto it = index.find(k);
    if (it != index.end()) return it->second;
    if (elems.size() >= max_nodes)
      throw ResourceLimitError("crystal generation exceeded node budget");
    int id = static_cast<int>(elems.size());
    elems.push_back(x);
    keys.push_back(std::move(k));
    index.emplace(keys.back(), id);
    return id;
  };

  for (const Element& g : generators) intern(g);

  const std::size_t ncol = colors.size();
  struct FArrow {
    int color_idx, src, dst;
  };
  std::vector<FArrow> arrows;  // every f-arrow, discovered from either end
  for (std::size_t head = 0; head < elems.size(); ++head) {
    const Element cur = elems[head];  // copy: intern() may reallocate elems
    for (std::size_t c = 0; c < ncol; ++c) {
      if (auto down = dom.f(cur, colors[c]))
        arrows.push_back({static_cast<int>(c), static_cast<int>(head), intern(*down)});
      if (auto up = dom.e(cur, colors[c]))
        arrows.push_back({static_cast<int>(c), intern(*up), static_cast<int>(head)});
    }
  }

  // Canonical order: sort by key.
  const int n = static_cast<int>(elems.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<int> newid(n);
  for (int i = 0; i < n; ++i) newid[order[i]] = i;

  Generated<Domain> out;
  out.graph.colors = colors;
  out.graph.weight_nodes = dom.weight_nodes();
  out.graph.alpha.reserve(ncol);
  for (int color : colors) out.graph.alpha.push_back(dom.alpha(color));

  out.nodes.resize(n);
  out.graph.keys.resize(n);
  out.graph.labels.resize(n);
  out.graph.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    out.nodes[newid[i]] = elems[i];
    out.graph.keys[newid[i]] = keys[i];
    out.graph.labels[newid[i]] = dom.label(elems[i]);
    out.graph.weights[newid[i]] = dom.weight(elems[i]);
  }
  out.graph.f_edge.assign(ncol, std::vector<std::int32_t>(n, -1));
  out.graph.e_edge.assign(ncol, std::vector<std::int32_t>(n, -1));
  for (const auto& a : arrows) {
    const int src = newid[a.src], dst = newid[a.dst];
    auto& fcol = out.graph.f_edge[a.color_idx];
    auto& ecol = out.graph.e_edge[a.color_idx];
    if ((fcol[src] >= 0 && fcol[src] != dst) || (ecol[dst] >= 0 && ecol[dst] != src))
      throw std::logic_error("domain produced inconsistent crystal arrows");
    fcol[src] = dst;
    ecol[dst] = src;
  }
  return out;
}

}  // namespace e7kr
