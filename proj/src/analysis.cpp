#include "e7kr/analysis.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "e7kr/ssyt.hpp"

namespace e7kr {

PerfectnessReport check_perfectness(const KrCrystal& kr, bool check_square) {
  PerfectnessReport rep;
  rep.s = kr.s;
  const CrystalGraph& g = kr.graph;
  const int n = g.size();
  rep.size = n;
  const auto& marks = dual_marks();

  // String lengths for all eight colors at every node.
  std::vector<std::array<int, 8>> eps(n), phi(n);
  for (int v = 0; v < n; ++v)
    for (int c = 0; c <= 7; ++c) {
      eps[v][c] = g.eps(v, c);
      phi[v][c] = g.phi(v, c);
    }

  rep.level_bound_holds = true;
  std::map<AffineWeight, int> eps_count, phi_count;
  std::ostringstream detail;
  for (int v = 0; v < n; ++v) {
    int lev = 0;
    for (int c = 0; c <= 7; ++c) lev += marks[c] * eps[v][c];
    if (lev < kr.s) {
      if (rep.level_bound_holds)
        detail << "node " << v << " has eps of level " << lev << "\n";
      rep.level_bound_holds = false;
    } else if (lev == kr.s) {
      ++rep.minimal_count;
      AffineWeight he{}, hp{};
      for (int c = 0; c <= 7; ++c) {
        he[c] = eps[v][c];
        hp[c] = phi[v][c];
      }
      ++eps_count[he];
      ++phi_count[hp];
    }
  }

  const std::vector<AffineWeight> level_weights = enumerate_level_weights(kr.s);
  rep.level_weight_count = static_cast<int>(level_weights.size());
  auto bijective = [&](const std::map<AffineWeight, int>& counts) {
    if (static_cast<int>(counts.size()) != rep.level_weight_count) return false;
    for (const auto& [w, c] : counts)
      if (c != 1 || !std::binary_search(level_weights.begin(),
                                        level_weights.end(), w))
        return false;
    return true;
  };
  rep.eps_bijection = bijective(eps_count);
  rep.phi_bijection = bijective(phi_count);

  if (check_square) {
    rep.square_checked = true;
    // Connectivity of B tensor B under all eight colors, using the
    // two-factor signature rule: for the written order v tensor w,
    //   f: acts on w when phi(w) > eps(v), else on v  (if any minus survives)
    //   e: acts on v when eps(v) > phi(w), else on w  (if any plus survives).
    const std::size_t total = static_cast<std::size_t>(n) * n;
    std::vector<bool> seen(total, false);
    std::vector<std::uint64_t> stack;
    auto push = [&](int v, int w) {
      const std::uint64_t id = static_cast<std::uint64_t>(v) * n + w;
      if (!seen[id]) {
        seen[id] = true;
        stack.push_back(id);
      }
    };
    push(0, 0);
    std::size_t reached = 0;
    while (!stack.empty()) {
      const std::uint64_t id = stack.back();
      stack.pop_back();
      ++reached;
      const int v = static_cast<int>(id / n), w = static_cast<int>(id % n);
      for (int c = 0; c <= 7; ++c) {
        // lowering
        if (phi[w][c] > eps[v][c]) {
          if (g.f_edge[c][w] >= 0) push(v, g.f_edge[c][w]);
        } else if (phi[v][c] > 0) {
          push(g.f_edge[c][v], w);
        }
        // raising
        if (eps[v][c] > phi[w][c]) {
          push(g.e_edge[c][v], w);
        } else if (eps[w][c] > 0) {
          push(v, g.e_edge[c][w]);
        }
      }
    }
    rep.square_connected = (reached == total);
    if (!rep.square_connected)
      detail << "tensor square: reached " << reached << " of " << total
             << " pairs\n";
  }
  rep.detail = detail.str();
  return rep;
}

Generated<WordDomain> build_adjoint_crystal(int k, std::size_t max_nodes) {
  if (k < 0) throw std::domain_error("tensor power must be nonnegative");
  const LetterCrystal& L = letters();
  int x = L.x1();  // the highest letter "7"
  for (int color : {7, 6, 5, 4, 2, 3, 4, 5, 6, 7}) {
    x = L.f(x, color);
    if (x < 0) throw std::logic_error("lowering string left the crystal");
  }
  Word generator;
  for (int t = 0; t < k; ++t) {
    generator.push_back(static_cast<std::uint8_t>(x));
    generator.push_back(static_cast<std::uint8_t>(L.x1()));
  }
  return generate_crystal(WordDomain{}, {generator}, max_nodes);
}

TensorSquareReport check_tensor_square() {
  TensorSquareReport rep;
  const LetterCrystal& L = letters();
  const auto adj = build_adjoint_crystal(1);
  const auto square = build_adjoint_crystal(2);
  const int n = adj.graph.size();

  std::unordered_set<std::string> members;
  for (const auto& key : square.graph.keys) members.insert(key);

  // Reachability by lowering inside the adjoint crystal (reflexive):
  // process nodes in reverse topological order of the lowering edges.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  {
    const std::size_t ncol = adj.graph.colors.size();
    std::vector<int> indegree(n, 0);
    for (std::size_t c = 0; c < ncol; ++c)
      for (int v = 0; v < n; ++v)
        if (adj.graph.f_edge[c][v] >= 0) ++indegree[adj.graph.f_edge[c][v]];
    std::vector<int> topo;
    for (int v = 0; v < n; ++v)
      if (indegree[v] == 0) topo.push_back(v);
    for (std::size_t head = 0; head < topo.size(); ++head)
      for (std::size_t c = 0; c < ncol; ++c) {
        const int w = adj.graph.f_edge[c][topo[head]];
        if (w >= 0 && --indegree[w] == 0) topo.push_back(w);
      }
    if (static_cast<int>(topo.size()) != n)
      throw std::logic_error("lowering edges are not acyclic");
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      const int v = *it;
      reach[v][v] = true;
      for (std::size_t c = 0; c < ncol; ++c) {
        const int w = adj.graph.f_edge[c][v];
        if (w < 0) continue;
        for (int t = 0; t < n; ++t)
          if (reach[w][t]) reach[v][t] = true;
      }
    }
  }

  std::ostringstream detail;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ++rep.pairs;
      const Word& wi = adj.nodes[i];
      const Word& wj = adj.nodes[j];
      Word pair = wi;
      pair.insert(pair.end(), wj.begin(), wj.end());
      const bool member = members.count(word_key(pair)) > 0;
      if (member) ++rep.members;
      const bool first_le = L.le(wi[0], wj[0]);
      const bool second_le = L.le(wi[1], wj[1]);
      const bool below = reach[i][j];
      const bool strict = below && i != j;
      if (member && !first_le) {
        rep.first_letter_rule = false;
        detail << "member with incomparable first letters: " << i << "," << j
               << "\n";
      }
      if (member && !second_le) {
        rep.second_letter_rule = false;
        detail << "member with incomparable second letters: " << i << "," << j
               << "\n";
      }
      if (!member && first_le && second_le && strict) {
        rep.strict_rule = false;
        detail << "letterwise-comparable strict pair outside: " << i << ","
               << j << "\n";
      }
      if (i != j && member != (first_le && second_le && strict))
        rep.offdiag_iff = false;
      if (i == j) {
        ClassicalWeight w{};
        for (int c = 0; c < 7; ++c) w[c] = adj.graph.weights[i][c];
        const bool zero = (w == ClassicalWeight{});
        if (member) ++rep.diagonal_members;
        else ++rep.diagonal_nonmembers;
        if (member != !zero) rep.diagonal_weight_split = false;
      }
    }
  }
  rep.detail = detail.str();
  return rep;
}

std::array<int, 7> a7_restrict_weight(const ClassicalWeight& w) {
  std::array<int, 7> out{};
  for (int a = 1; a <= 6; ++a) out[a - 1] = w[e7_node_of_a7(a) - 1];
  out[6] = -classical_level(w);
  return out;
}

namespace {

long long dominance_rank(const std::vector<int>& w) {
  // <2 rho^vee, w> for A7 in fundamental-weight coordinates.
  static const int r[7] = {7, 12, 15, 16, 15, 12, 7};
  long long sum = 0;
  for (int a = 0; a < 7; ++a) sum += static_cast<long long>(r[a]) * w[a];
  return sum;
}

}  // namespace

std::map<std::vector<int>, long long> peel_decompose(A7Character character) {
  std::map<std::vector<int>, long long> result;
  std::map<std::vector<int>, long long> work;
  for (const auto& [w, m] : character)
    if (m != 0) work[std::vector<int>(w.begin(), w.end())] = m;

  while (!work.empty()) {
    // The maximal entry for (rank, lex); rank strictly increases along the
    // dominance order, so this entry is dominance-maximal and must be the
    // highest weight of a component.
    auto best = work.begin();
    long long best_rank = dominance_rank(best->first);
    for (auto it = std::next(work.begin()); it != work.end(); ++it) {
      const long long r = dominance_rank(it->first);
      if (r > best_rank || (r == best_rank && it->first > best->first)) {
        best = it;
        best_rank = r;
      }
    }
    const std::vector<int> lambda = best->first;
    const long long mult = best->second;
    if (mult < 0)
      throw std::logic_error("negative multiplicity while peeling");
    for (int c : lambda)
      if (c < 0)
        throw std::logic_error("maximal weight is not dominant while peeling");
    const auto& crystal = tableau_crystal(lambda, 7);
    for (const auto& w : crystal.graph.weights) {
      auto it = work.find(w);
      if (it == work.end() || it->second < mult)
        throw std::logic_error("peeling drove a multiplicity negative");
      it->second -= mult;
      if (it->second == 0) work.erase(it);
    }
    result[lambda] += mult;
  }
  return result;
}

long long triangle_entry(int d, int s) {
  if (s < 0 || d < 0 || d > s) return 0;
  long long sum = 0;
  for (int i = std::max(2 * d + 1 - s, 0); i <= d + 1; ++i) sum += (i + 1) / 2;
  return sum;
}

long long branching_multiplicity(int a, int b, int c, int d, int s) {
  if (a < 0 || b < 0 || c < 0 || d < 0) return 0;
  const int sp = s - a - 2 * b - 3 * c;
  if (sp < 0 || d > sp) return 0;
  return triangle_entry(sp - d, sp);
}

BranchingReport check_branching(int s) {
  if (s < 0) throw std::domain_error("degree must be nonnegative");
  BranchingReport rep;
  rep.s = s;

  A7Character character;
  for (int k = 0; k <= s; ++k) {
    const auto adj = build_adjoint_crystal(k);
    for (const auto& wvec : adj.graph.weights) {
      ClassicalWeight w{};
      for (int c = 0; c < 7; ++c) w[c] = wvec[c];
      ++character[a7_restrict_weight(w)];
    }
  }
  rep.observed = peel_decompose(character);

  for (int a = 0; a <= s; ++a)
    for (int b = 0; a + 2 * b <= s; ++b)
      for (int c = 0; a + 2 * b + 3 * c <= s; ++c)
        for (int d = 0; a + 2 * b + 3 * c + d <= s; ++d) {
          const long long m = branching_multiplicity(a, b, c, d, s);
          if (m > 0) rep.predicted[{a, b, c, d, c, b, a}] = m;
        }

  rep.match = (rep.observed == rep.predicted);
  rep.palindromic = true;
  std::ostringstream detail;
  for (const auto& [w, m] : rep.observed) {
    for (int a = 0; a < 7; ++a)
      if (w[a] != w[6 - a]) rep.palindromic = false;
    detail << m << " x [";
    for (int a = 0; a < 7; ++a) detail << (a ? "," : "") << w[a];
    detail << "]\n";
  }
  rep.detail = detail.str();
  return rep;
}

CompositionGraph composition_graph(const CrystalGraph& g,
                                   const std::vector<int>& J,
                                   const std::function<bool(int, int)>& le) {
  const int n = g.size();
  const std::size_t ncol = g.colors.size();
  std::vector<bool> in_j(ncol, false);
  for (int color : J) in_j[static_cast<std::size_t>(g.color_index(color))] = true;

  std::vector<std::vector<int>> eps(ncol, std::vector<int>(n));
  std::vector<std::vector<int>> phi(ncol, std::vector<int>(n));
  for (std::size_t c = 0; c < ncol; ++c)
    for (int v = 0; v < n; ++v) {
      eps[c][v] = g.eps(v, g.colors[c]);
      phi[c][v] = g.phi(v, g.colors[c]);
    }

  // Seeds: highest for every color outside J; then the closure.
  std::vector<bool> admitted(n, false);
  for (int v = 0; v < n; ++v) {
    bool seed = true;
    for (std::size_t c = 0; c < ncol && seed; ++c)
      if (!in_j[c] && eps[c][v] > 0) seed = false;
    admitted[v] = seed;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (admitted[v]) continue;
      bool ok = true;
      for (std::size_t c = 0; c < ncol && ok; ++c) {
        if (in_j[c] || eps[c][v] == 0) continue;
        bool witnessed = false;
        for (int bp = 0; bp < n && !witnessed; ++bp)
          if (admitted[bp] && phi[c][bp] > 0 && le(v, bp)) witnessed = true;
        ok = witnessed;
      }
      if (ok) {
        admitted[v] = true;
        changed = true;
      }
    }
  }

  CompositionGraph out;
  for (int v = 0; v < n; ++v)
    if (admitted[v]) out.vertices.push_back(v);
  const int m = static_cast<int>(out.vertices.size());

  // Full order relation on the vertex set, then transitive reduction of the
  // loop-free part.
  std::vector<std::vector<bool>> rel(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      rel[i][j] = le(out.vertices[i], out.vertices[j]);
      if (rel[i][j] && j < i && rel[j][i])
        throw std::logic_error("order relation has a two-cycle");
    }
  for (int v : out.vertices)
    if (le(v, v)) out.loops.push_back(v);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (!rel[i][j]) continue;
      bool covering = true;
      for (int k = 0; k < m && covering; ++k)
        if (k != i && k != j && rel[i][k] && rel[k][j]) covering = false;
      if (covering) out.edges.emplace_back(out.vertices[i], out.vertices[j]);
    }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace e7kr
