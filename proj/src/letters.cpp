#include "e7kr/letters.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace e7kr {
namespace {

constexpr const char* kMacron = "\xCC\x84";  // U+0304 combining macron

ClassicalWeight named_weight(std::initializer_list<std::pair<int, int>> terms) {
  ClassicalWeight w{};
  for (auto [node, coeff] : terms) w[node - 1] = coeff;
  return w;
}

}  // namespace

std::string letter_style_label(const ClassicalWeight& w) {
  std::string out;
  for (int i = 1; i <= 7; ++i)
    if (w[i - 1] < 0) {
      out += static_cast<char>('0' + i);
      out += kMacron;
    }
  for (int i = 1; i <= 7; ++i)
    if (w[i - 1] > 0) out += static_cast<char>('0' + i);
  return out;
}

LetterCrystal::LetterCrystal() {
  // Breadth-first closure of varpi_7 under the minuscule rule: f_i applies
  // exactly when the i-th coefficient is +1 and subtracts alpha_i.
  ClassicalWeight top{};
  top[6] = 1;
  std::vector<ClassicalWeight> elems{top};
  std::vector<int> depth{0};
  std::map<ClassicalWeight, int> index{{top, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    const ClassicalWeight cur = elems[head];
    for (int i = 1; i <= 7; ++i) {
      if (cur[i - 1] != 1) continue;
      ClassicalWeight down = cur;
      const ClassicalWeight alpha = simple_root_classical(i);
      for (int k = 0; k < 7; ++k) down[k] -= alpha[k];
      if (index.emplace(down, static_cast<int>(elems.size())).second) {
        elems.push_back(down);
        depth.push_back(depth[head] + 1);
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  if (n != 56) throw std::logic_error("minuscule orbit has unexpected size");

  // Canonical ids: by (depth, weight lexicographically).
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (depth[a] != depth[b]) return depth[a] < depth[b];
    return elems[a] < elems[b];
  });

  weights_.resize(n);
  depth_.resize(n);
  for (int id = 0; id < n; ++id) {
    weights_[id] = elems[order[id]];
    depth_[id] = depth[order[id]];
  }
  std::map<ClassicalWeight, int> canon;
  for (int id = 0; id < n; ++id) canon[weights_[id]] = id;

  graph_.colors = index_set_classical();
  graph_.weight_nodes = index_set_classical();
  for (int i = 1; i <= 7; ++i) {
    const ClassicalWeight alpha = simple_root_classical(i);
    graph_.alpha.emplace_back(alpha.begin(), alpha.end());
  }
  graph_.keys.resize(n);
  graph_.labels.resize(n);
  graph_.weights.resize(n);
  graph_.f_edge.assign(7, std::vector<std::int32_t>(n, -1));
  graph_.e_edge.assign(7, std::vector<std::int32_t>(n, -1));
  for (int id = 0; id < n; ++id) {
    char key[3];
    std::snprintf(key, sizeof key, "%02d", id);
    graph_.keys[id] = key;
    graph_.labels[id] = letter_style_label(weights_[id]);
    graph_.weights[id].assign(weights_[id].begin(), weights_[id].end());
    for (int i = 1; i <= 7; ++i) {
      if (weights_[id][i - 1] != 1) continue;
      ClassicalWeight down = weights_[id];
      const ClassicalWeight alpha = simple_root_classical(i);
      for (int k = 0; k < 7; ++k) down[k] -= alpha[k];
      const int target = canon.at(down);
      graph_.f_edge[i - 1][id] = target;
      graph_.e_edge[i - 1][target] = id;
    }
  }

  // Reachability by lowering steps (reflexive).  Ids are sorted by depth, so
  // one pass from the bottom up suffices.
  reach_down_.assign(n, 0);
  for (int id = n - 1; id >= 0; --id) {
    reach_down_[id] = std::uint64_t{1} << static_cast<unsigned>(id);
    for (int c = 0; c < 7; ++c) {
      const int down = graph_.f_edge[c][id];
      if (down >= 0) reach_down_[id] |= reach_down_[down];
    }
  }

  // Distinguished letters, located by weight.
  x_[0] = canon.at(named_weight({{7, 1}}));                    // 7
  x_[1] = canon.at(named_weight({{6, -1}, {5, 1}}));           // 6̄5
  x_[2] = canon.at(named_weight({{4, -1}, {2, 1}, {3, 1}}));   // 4̄23
  x_[3] = canon.at(named_weight({{1, -1}, {2, 1}}));           // 1̄2
  x_[4] = canon.at(named_weight({{2, -1}, {3, 1}}));           // 2̄3
  x_[5] = canon.at(named_weight({{1, -1}, {2, -1}, {4, 1}}));  // 1̄2̄4
  x_[6] = canon.at(named_weight({{2, -1}, {6, 1}}));           // 2̄6
  x_[7] = canon.at(named_weight({{2, -1}, {1, 1}}));           // 2̄1
  chain_[0] = x_[0];
  chain_[1] = canon.at(named_weight({{7, -1}, {6, 1}}));       // 7̄6
  chain_[2] = canon.at(named_weight({{7, -1}, {1, 1}}));       // 7̄1
  chain_[3] = canon.at(named_weight({{7, -1}}));               // 7̄
}

const LetterCrystal& LetterCrystal::instance() {
  static const LetterCrystal inst;
  return inst;
}

int LetterCrystal::f(int id, int color) const {
  return graph_.f_edge[color - 1][id];
}

int LetterCrystal::e(int id, int color) const {
  return graph_.e_edge[color - 1][id];
}

int LetterCrystal::phi(int id, int color) const {
  return weights_[id][color - 1] > 0 ? 1 : 0;
}

int LetterCrystal::eps(int id, int color) const {
  return weights_[id][color - 1] < 0 ? 1 : 0;
}

int LetterCrystal::id_by_label(const std::string& label) const {
  for (int id = 0; id < size(); ++id)
    if (graph_.labels[id] == label) return id;
  throw std::invalid_argument("unknown letter label: " + label);
}

int LetterCrystal::id_by_weight(const ClassicalWeight& w) const {
  for (int id = 0; id < size(); ++id)
    if (weights_[id] == w) return id;
  throw std::invalid_argument("weight is not a letter weight");
}

// --- Tensor words ------------------------------------------------------------

namespace {

SignatureResult word_signature(const Word& w, int color) {
  const LetterCrystal& L = letters();
  return signature_scan(static_cast<int>(w.size()), [&](int i) {
    const int c = L.weight(w[i])[color - 1];
    return std::pair<int, int>{c > 0 ? c : 0, c < 0 ? -c : 0};
  });
}

}  // namespace

std::optional<Word> word_f(const Word& w, int color) {
  const SignatureResult sig = word_signature(w, color);
  if (sig.f_pos < 0) return std::nullopt;
  Word out = w;
  out[sig.f_pos] = static_cast<std::uint8_t>(letters().f(w[sig.f_pos], color));
  return out;
}

std::optional<Word> word_e(const Word& w, int color) {
  const SignatureResult sig = word_signature(w, color);
  if (sig.e_pos < 0) return std::nullopt;
  Word out = w;
  out[sig.e_pos] = static_cast<std::uint8_t>(letters().e(w[sig.e_pos], color));
  return out;
}

int word_phi(const Word& w, int color) { return word_signature(w, color).phi; }
int word_eps(const Word& w, int color) { return word_signature(w, color).eps; }

ClassicalWeight word_weight(const Word& w) {
  ClassicalWeight sum{};
  for (std::uint8_t id : w)
    for (int k = 0; k < 7; ++k) sum[k] += letters().weight(id)[k];
  return sum;
}

std::string word_key(const Word& w) {
  std::string key;
  key.reserve(w.size());
  for (std::uint8_t id : w) key += static_cast<char>('A' + id);
  return key;
}

std::string word_label(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "\xE2\x8A\x97";  // U+2297 circled times
    out += letters().label(w[i]);
  }
  return out;
}

std::vector<int> WordDomain::alpha(int color) const {
  const ClassicalWeight a = simple_root_classical(color);
  return {a.begin(), a.end()};
}

std::vector<int> WordDomain::weight(const Word& w) const {
  const ClassicalWeight cw = word_weight(w);
  return {cw.begin(), cw.end()};
}

}  // namespace e7kr
