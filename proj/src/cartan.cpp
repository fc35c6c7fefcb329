#include "e7kr/cartan.hpp"

#include <algorithm>
#include <stdexcept>

namespace e7kr {
namespace {

// Adjacency of the affine E7 diagram: path 0-1-3-4-5-6-7 plus the edge 2-4.
constexpr std::array<std::array<int, 2>, 8> kAffineEdges = {{
    {0, 1}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4},
    {-1, -1},  // padding so the array has a fixed extent
}};

bool affine_adjacent(int i, int j) {
  for (const auto& e : kAffineEdges) {
    if ((e[0] == i && e[1] == j) || (e[0] == j && e[1] == i)) return true;
  }
  return false;
}

void check_affine_node(int i) {
  if (i < 0 || i > 7) throw std::domain_error("affine E7 node out of range");
}

void check_classical_node(int i) {
  if (i < 1 || i > 7) throw std::domain_error("classical E7 node out of range");
}

}  // namespace

int cartan_entry(int i, int j) {
  check_affine_node(i);
  check_affine_node(j);
  if (i == j) return 2;
  return affine_adjacent(i, j) ? -1 : 0;
}

int cartan_entry_classical(int i, int j) {
  check_classical_node(i);
  check_classical_node(j);
  return cartan_entry(i, j);
}

int cartan_entry_a(int n, int i, int j) {
  if (n < 1) throw std::domain_error("A_n rank must be positive");
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::domain_error("A_n node out of range");
  if (i == j) return 2;
  return (i + 1 == j || j + 1 == i) ? -1 : 0;
}

const std::array<int, 8>& dual_marks() {
  static const std::array<int, 8> marks = {1, 2, 2, 3, 4, 3, 2, 1};
  return marks;
}

int classical_level(const ClassicalWeight& w) {
  const auto& marks = dual_marks();
  int lev = 0;
  for (int i = 1; i <= 7; ++i) lev += marks[i] * w[i - 1];
  return lev;
}

int level(const AffineWeight& w) {
  const auto& marks = dual_marks();
  int lev = 0;
  for (int i = 0; i <= 7; ++i) lev += marks[i] * w[i];
  return lev;
}

AffineWeight affinize(const ClassicalWeight& w) {
  AffineWeight out{};
  for (int i = 1; i <= 7; ++i) out[i] = w[i - 1];
  out[0] = -classical_level(w);
  return out;
}

ClassicalWeight simple_root_classical(int i) {
  check_classical_node(i);
  ClassicalWeight col{};
  for (int j = 1; j <= 7; ++j) col[j - 1] = cartan_entry(j, i);
  return col;
}

AffineWeight simple_root_affine(int i) {
  check_affine_node(i);
  AffineWeight col{};
  for (int j = 0; j <= 7; ++j) col[j] = cartan_entry(j, i);
  return col;
}

std::vector<int> simple_root_a(int n, int i) {
  std::vector<int> col(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) col[j - 1] = cartan_entry_a(n, j, i);
  return col;
}

std::vector<int> index_set_affine() { return {0, 1, 2, 3, 4, 5, 6, 7}; }
std::vector<int> index_set_classical() { return {1, 2, 3, 4, 5, 6, 7}; }
std::vector<int> index_set_i2() { return {0, 1, 3, 4, 5, 6, 7}; }
std::vector<int> index_set_i02() { return {1, 3, 4, 5, 6, 7}; }
std::vector<int> index_set_i07() { return {1, 2, 3, 4, 5, 6}; }

int a7_node_of_e7(int i) {
  switch (i) {
    case 7: return 1;
    case 6: return 2;
    case 5: return 3;
    case 4: return 4;
    case 3: return 5;
    case 1: return 6;
    case 0: return 7;
    default: throw std::domain_error("node not in the A7 subdiagram");
  }
}

int e7_node_of_a7(int a) {
  switch (a) {
    case 1: return 7;
    case 2: return 6;
    case 3: return 5;
    case 4: return 4;
    case 5: return 3;
    case 6: return 1;
    case 7: return 0;
    default: throw std::domain_error("A7 node out of range");
  }
}

std::vector<AffineWeight> enumerate_level_weights(int ell) {
  if (ell < 0) throw std::domain_error("level must be nonnegative");
  std::vector<AffineWeight> out;
  AffineWeight cur{};
  const auto& marks = dual_marks();
  // Depth-first over coefficients c_0..c_7 with running level.
  auto rec = [&](auto&& self, int node, int remaining) -> void {
    if (node == 8) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int c = 0; c * marks[node] <= remaining; ++c) {
      cur[node] = c;
      self(self, node + 1, remaining - c * marks[node]);
    }
    cur[node] = 0;
  };
  rec(rec, 0, ell);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace e7kr
