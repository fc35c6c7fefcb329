#include "e7kr/crystal.hpp"

#include <numeric>
#include <queue>
#include <sstream>

namespace e7kr {

int CrystalGraph::color_index(int color) const {
  auto it = std::lower_bound(colors.begin(), colors.end(), color);
  if (it == colors.end() || *it != color)
    throw std::domain_error("color not present in this crystal");
  return static_cast<int>(it - colors.begin());
}

int CrystalGraph::phi(int node, int color) const {
  const auto& edges = f_edge[color_index(color)];
  int k = 0;
  for (int v = node; edges[v] >= 0; v = edges[v]) ++k;
  return k;
}

int CrystalGraph::eps(int node, int color) const {
  const auto& edges = e_edge[color_index(color)];
  int k = 0;
  for (int v = node; edges[v] >= 0; v = edges[v]) ++k;
  return k;
}

int CrystalGraph::node_by_key(const std::string& key) const {
  auto it = std::lower_bound(keys.begin(), keys.end(), key);
  if (it == keys.end() || *it != key) return -1;
  return static_cast<int>(it - keys.begin());
}

SignatureResult signature_scan(
    int length, const std::function<std::pair<int, int>(int)>& phi_eps) {
  SignatureResult r;
  std::vector<int> plus_stack;  // factor index per unmatched plus
  for (int i = 0; i < length; ++i) {
    auto [nminus, nplus] = phi_eps(i);
    for (int t = 0; t < nminus; ++t) {
      if (!plus_stack.empty()) {
        plus_stack.pop_back();  // a minus closes the nearest open plus
      } else {
        ++r.phi;
        r.f_pos = i;  // survivors accrue left to right; keep the rightmost
      }
    }
    for (int t = 0; t < nplus; ++t) plus_stack.push_back(i);
  }
  r.eps = static_cast<int>(plus_stack.size());
  if (!plus_stack.empty()) r.e_pos = plus_stack.front();
  return r;
}

std::vector<int> highest_weight_nodes(const CrystalGraph& g,
                                      const std::vector<int>& colors) {
  std::vector<int> idx;
  for (int c : colors) idx.push_back(g.color_index(c));
  std::vector<int> out;
  for (int v = 0; v < g.size(); ++v) {
    bool highest = true;
    for (int c : idx)
      if (g.e_edge[c][v] >= 0) {
        highest = false;
        break;
      }
    if (highest) out.push_back(v);
  }
  return out;
}

std::vector<int> component_ids(const CrystalGraph& g,
                               const std::vector<int>& colors,
                               int* component_count) {
  std::vector<int> idx;
  for (int c : colors) idx.push_back(g.color_index(c));
  std::vector<int> comp(g.size(), -1);
  int next = 0;
  for (int start = 0; start < g.size(); ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = next;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int c : idx) {
        for (int w : {g.f_edge[c][v], g.e_edge[c][v]}) {
          if (w >= 0 && comp[w] < 0) {
            comp[w] = next;
            q.push(w);
          }
        }
      }
    }
    ++next;
  }
  if (component_count) *component_count = next;
  return comp;
}

bool is_connected(const CrystalGraph& g, const std::vector<int>& colors) {
  if (g.size() == 0) return true;
  int count = 0;
  component_ids(g, colors, &count);
  return count == 1;
}

std::string check_crystal_axioms(const CrystalGraph& g) {
  std::ostringstream oss;
  const std::size_t ncol = g.colors.size();
  // Locate the weight coordinate carrying each color's pairing.
  std::vector<int> coord(ncol, -1);
  for (std::size_t c = 0; c < ncol; ++c) {
    for (std::size_t k = 0; k < g.weight_nodes.size(); ++k)
      if (g.weight_nodes[k] == g.colors[c]) coord[c] = static_cast<int>(k);
    if (coord[c] < 0) {
      oss << "color " << g.colors[c] << " has no weight coordinate";
      return oss.str();
    }
  }
  for (int v = 0; v < g.size(); ++v) {
    for (std::size_t c = 0; c < ncol; ++c) {
      const int color = g.colors[c];
      const int down = g.f_edge[c][v];
      if (down >= 0) {
        if (g.e_edge[c][down] != v) {
          oss << "f_" << color << " on node " << v << " is not inverted by e";
          return oss.str();
        }
        for (std::size_t k = 0; k < g.weights[v].size(); ++k) {
          if (g.weights[down][k] != g.weights[v][k] - g.alpha[c][k]) {
            oss << "wt(f_" << color << " b) != wt(b) - alpha on node " << v;
            return oss.str();
          }
        }
      }
      const int up = g.e_edge[c][v];
      if (up >= 0 && g.f_edge[c][up] != v) {
        oss << "e_" << color << " on node " << v << " is not inverted by f";
        return oss.str();
      }
      const int pairing = g.weights[v][coord[c]];
      if (g.phi(v, color) - g.eps(v, color) != pairing) {
        oss << "phi - eps != <alpha^vee, wt> for color " << color << " on node "
            << v;
        return oss.str();
      }
    }
  }
  return {};
}

std::vector<int> match_isomorphism(const CrystalGraph& g1, int src,
                                   const std::vector<int>& colors,
                                   const CrystalGraph& g2, int dst,
                                   const std::map<int, int>& dict) {
  std::vector<int> image(g1.size(), -1);
  image[src] = dst;
  std::queue<int> q;
  q.push(src);
  auto relate = [&](int v, int w) {
    // v in g1 should map to w in g2 (either may be -1).
    if ((v < 0) != (w < 0))
      throw std::logic_error("match_isomorphism: arrow present on one side only");
    if (v < 0) return;
    if (image[v] < 0) {
      image[v] = w;
      q.push(v);
    } else if (image[v] != w) {
      throw std::logic_error("match_isomorphism: inconsistent images");
    }
  };
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int color : colors) {
      const int c1 = g1.color_index(color);
      const int c2 = g2.color_index(dict.at(color));
      relate(g1.f_edge[c1][v], g2.f_edge[c2][image[v]]);
      relate(g1.e_edge[c1][v], g2.e_edge[c2][image[v]]);
    }
  }
  return image;
}

}  // namespace e7kr
