// Single-row crystals B(s varpi_7): length-s multichains in the letter order.
//
// A Row stores letter ids in weakly increasing letter order (consecutive
// entries comparable, earlier <= later); the leftmost entry is the leftmost
// written tensor factor.  The classical operators act by the signature rule
// and provably preserve the multichain property; row_f/row_e still verify it
// and throw std::logic_error on violation as an internal sanity check.
//
// The rows annihilated by e_i for every i in I_{0,2} = {1,3,4,5,6,7} are
// exactly the multichains drawn from the eight distinguished letters
//   x1 = 7, x2 = 6̄5, x3 = 4̄23, x4 = 1̄2, x4' = 2̄3, x5 = 1̄2̄4, x6 = 2̄6,
//   x7 = 2̄1
// whose multiplicities m = (m1, m2, m3, m4, m4', m5, m6, m7) satisfy
//   m2 <= m6,  m3 <= m5,  m4 + m5 <= m7,  min(m4, m4') = 0.
// CompParams packages those multiplicities; classify_i02_highest checks the
// conditions and weight_of_params evaluates the resulting E7 weight.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "e7kr/cartan.hpp"
#include "e7kr/crystal.hpp"
#include "e7kr/letters.hpp"

namespace e7kr {

using Row = std::vector<std::uint8_t>;  // letter ids, weakly increasing

bool is_multichain(const Row& r);

std::optional<Row> row_f(const Row& r, int color);
std::optional<Row> row_e(const Row& r, int color);
int row_phi(const Row& r, int color);
int row_eps(const Row& r, int color);
ClassicalWeight row_weight(const Row& r);
std::string row_key(const Row& r);
std::string row_label(const Row& r);

// All multichains of the given length, in lexicographic id order.
std::vector<Row> enumerate_rows(int s);

// Multiplicities of the eight distinguished letters in an I_{0,2}-highest row.
struct CompParams {
  int m1 = 0, m2 = 0, m3 = 0, m4 = 0, m4p = 0, m5 = 0, m6 = 0, m7 = 0;
  int s() const { return m1 + m2 + m3 + m4 + m4p + m5 + m6 + m7; }
  bool valid() const {
    return m1 >= 0 && m2 >= 0 && m3 >= 0 && m4 >= 0 && m4p >= 0 && m5 >= 0 &&
           m6 >= 0 && m7 >= 0 && m2 <= m6 && m3 <= m5 && m4 + m5 <= m7 &&
           (m4 == 0 || m4p == 0);
  }
  auto tie() const { return std::tie(m1, m2, m3, m4, m4p, m5, m6, m7); }
  bool operator==(const CompParams& o) const { return tie() == o.tie(); }
  bool operator<(const CompParams& o) const { return tie() < o.tie(); }
};

// If the row consists of the eight distinguished letters with multiplicities
// satisfying the constraints above, returns them; otherwise nullopt.  (For
// rows this is equivalent to being I_{0,2}-highest; tests verify that
// equivalence against the operators themselves.)
std::optional<CompParams> classify_i02_highest(const Row& r);

// E7 weight of the multichain with those multiplicities:
//   (m7-m4-m5, m3+m4-m4'-m5-m6-m7, m3+m4', m5-m3, m2, m6-m2, m1)
// on varpi_1..varpi_7.
ClassicalWeight weight_of_params(const CompParams& p);

// The multichain realizing the multiplicities (letters in increasing order).
Row row_of_params(const CompParams& p);

// Domain over rows of a fixed length for generate_crystal (classical colors).
struct RowDomain {
  using Element = Row;
  std::vector<int> colors() const { return index_set_classical(); }
  std::vector<int> weight_nodes() const { return index_set_classical(); }
  std::vector<int> alpha(int color) const;
  std::string key(const Row& r) const { return row_key(r); }
  std::string label(const Row& r) const { return row_label(r); }
  std::vector<int> weight(const Row& r) const;
  std::optional<Row> f(const Row& r, int color) const { return row_f(r, color); }
  std::optional<Row> e(const Row& r, int color) const { return row_e(r, color); }
};

}  // namespace e7kr
