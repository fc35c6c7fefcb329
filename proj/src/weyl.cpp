#include "e7kr/weyl.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace e7kr {
namespace {

// All roots as the closure of the simple roots under simple reflections.
// In simple-root coordinates, s_i(r) = r - <alpha_i^vee, r> alpha_i with
// <alpha_i^vee, r> = sum_j cartan[i][j] r_j.
std::vector<std::vector<int>> all_roots(const std::vector<std::vector<int>>& cartan) {
  const int rank = static_cast<int>(cartan.size());
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> simple(rank, 0);
    simple[i] = 1;
    seen.insert(simple);
    queue.push_back(simple);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::vector<int> r = queue[head];
    for (int i = 0; i < rank; ++i) {
      int pairing = 0;
      for (int j = 0; j < rank; ++j) pairing += cartan[i][j] * r[j];
      std::vector<int> img = r;
      img[i] -= pairing;
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return {queue.begin(), queue.end()};
}

RootSystem build(std::vector<std::vector<int>> cartan) {
  RootSystem rs;
  rs.rank = static_cast<int>(cartan.size());
  rs.cartan = std::move(cartan);
  for (auto& r : all_roots(rs.cartan)) {
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; }))
      rs.positive_roots.push_back(std::move(r));
  }
  // Sort by height, then lexicographically, for reproducible output.
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              int ha = 0, hb = 0;
              for (int c : a) ha += c;
              for (int c : b) hb += c;
              if (ha != hb) return ha < hb;
              return a < b;
            });
  return rs;
}

}  // namespace

RootSystem root_system_from_cartan(std::vector<std::vector<int>> cartan) {
  return build(std::move(cartan));
}

RootSystem root_system_e7() {
  std::vector<std::vector<int>> cartan(7, std::vector<int>(7));
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) cartan[i - 1][j - 1] = cartan_entry_classical(i, j);
  return build(std::move(cartan));
}

RootSystem root_system_e6() {
  std::vector<std::vector<int>> cartan(6, std::vector<int>(6));
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) cartan[i - 1][j - 1] = cartan_entry_classical(i, j);
  return build(std::move(cartan));
}

RootSystem root_system_a(int n) {
  std::vector<std::vector<int>> cartan(n, std::vector<int>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) cartan[i - 1][j - 1] = cartan_entry_a(n, i, j);
  return build(std::move(cartan));
}

BigInt weyl_dimension(const RootSystem& rs, const std::vector<int>& lambda) {
  if (static_cast<int>(lambda.size()) != rs.rank)
    throw std::invalid_argument("weight rank mismatch");
  for (int c : lambda)
    if (c < 0) throw std::invalid_argument("weight must be dominant");
  BigInt num = 1, den = 1;
  for (const auto& root : rs.positive_roots) {
    // Simply laced: <lambda + rho, alpha^vee> = sum_j c_j (lambda_j + 1).
    long long shifted = 0, height = 0;
    for (int j = 0; j < rs.rank; ++j) {
      shifted += static_cast<long long>(root[j]) * (lambda[j] + 1);
      height += root[j];
    }
    num *= shifted;
    den *= height;
  }
  BigInt quot = num / den;
  if (quot * den != num)
    throw std::logic_error("Weyl dimension product did not divide exactly");
  return quot;
}

std::vector<ClassicalWeight> weyl_orbit_e7(const ClassicalWeight& w) {
  std::set<ClassicalWeight> seen{w};
  std::vector<ClassicalWeight> queue{w};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const ClassicalWeight cur = queue[head];
    for (int i = 1; i <= 7; ++i) {
      const int pairing = cur[i - 1];
      if (pairing == 0) continue;
      ClassicalWeight img = cur;
      const ClassicalWeight alpha = simple_root_classical(i);
      for (int j = 0; j < 7; ++j) img[j] -= pairing * alpha[j];
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return queue;
}

}  // namespace e7kr
