// Semistandard Young tableaux and the type A_n crystal structure on them,
// plus the tableau surgery used by the affine construction: even-column
// padding, entry stripping, full-column removal, jeu de taquin
// rectification, and the color-reversing transport map.
//
// Conventions (English notation): rows[r][c] is the entry in row r, column c
// with row 0 on top; rows weakly increase left to right, columns strictly
// increase top to bottom.  Entries run over 1..n+1 for the A_n crystal.  The
// reading word lists columns left to right, each bottom to top; crystal
// operators apply the signature rule of crystal.hpp to it, an entry i
// contributing a minus and an entry i+1 a plus for color i.
//
// A dominant A_n weight with coefficients (a_1..a_n) on the fundamental
// weights corresponds to the partition shape whose r-th row (1-based) has
// length a_r + a_{r+1} + ... + a_n.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "e7kr/cartan.hpp"
#include "e7kr/crystal.hpp"

namespace e7kr {

struct Ssyt {
  std::vector<std::vector<int>> rows;

  bool empty() const { return rows.empty(); }
  std::vector<int> shape() const;
  int height(int c) const;          // cells in column c
  std::vector<int> column(int c) const;  // entries top to bottom
  int cells() const;

  // Semistandard with entries in 1..max_entry and partition shape.
  bool is_valid(int max_entry) const;

  bool operator==(const Ssyt& o) const { return rows == o.rows; }

  // Highest-weight tableau of the given shape: row r filled with r+1.
  static Ssyt of_shape(const std::vector<int>& shape);
};

std::vector<int> weight_to_shape(const std::vector<int>& fw_coeffs);
// Requires the shape to fit in `rank` rows.
std::vector<int> shape_to_weight(const std::vector<int>& shape, int rank);

// Highest-weight tableau of the rank-n weight with those coefficients.
Ssyt superstandard(const std::vector<int>& fw_coeffs);

std::optional<Ssyt> ssyt_f(const Ssyt& t, int color, int max_entry);
std::optional<Ssyt> ssyt_e(const Ssyt& t, int color, int max_entry);
int ssyt_phi(const Ssyt& t, int color);
int ssyt_eps(const Ssyt& t, int color);
std::vector<int> ssyt_weight(const Ssyt& t, int rank);
std::string ssyt_key(const Ssyt& t);
std::string ssyt_label(const Ssyt& t);

// Appends `filler` below every odd-height column.  The filler must be larger
// than every entry (we use it with filler = n+2 on tableaux with entries
// <= n+1); the result is again semistandard of even-column shape.
Ssyt pad_even_columns(const Ssyt& t, int filler);

// Removes every cell holding `entry`; those cells must form column bottoms
// and leave a partition shape, else std::logic_error.
Ssyt strip_entry(const Ssyt& t, int entry);

// Removes the columns of exactly the given height; they must be the leading
// columns and superstandard (entries 1..height), else std::logic_error.
Ssyt strip_full_columns(const Ssyt& t, int height);

// Jeu de taquin rectification of the column word c_0 .. c_{k-1}: column c_0
// is placed bottom-left, each subsequent column immediately above and to the
// right (so the reading word of the skew tableau is c_0 bottom to top, then
// c_1, and so on).  Columns are given top to bottom (strictly increasing).
// slide_seed selects the order in which inner corners are processed; every
// seed yields the same rectified tableau (tested), 0 being the deterministic
// default.
Ssyt rectify_columns(const std::vector<std::vector<int>>& columns,
                     unsigned slide_seed = 0);

// The weight-reversing transport map B(lambda) -> B(lambda^rev) for A_n,
// where lambda^rev has the coefficient vector of lambda reversed: the unique
// map sending highest element to highest element with
// transport(f_i b) = f_{n+1-i} transport(b).  Applied twice it is the
// identity on B(lambda) when lambda^rev = lambda.
Ssyt reversal_transport(const Ssyt& t, int rank);

// Shapes mu obtained from `shape` by removing a horizontal strip (at most
// one cell per column), restricted to at most max_rows rows.  These index
// the components of the rank-(n-1) restriction of B_{A_n}(shape), each
// appearing exactly once.
std::vector<std::vector<int>> interlacing_shapes(const std::vector<int>& shape,
                                                 int max_rows);

// Domain over tableaux with a fixed A_n rank for generate_crystal.
struct SsytDomain {
  using Element = Ssyt;
  int rank;
  std::vector<int> colors() const;
  std::vector<int> weight_nodes() const { return colors(); }
  std::vector<int> alpha(int color) const { return simple_root_a(rank, color); }
  std::string key(const Ssyt& t) const { return ssyt_key(t); }
  std::string label(const Ssyt& t) const { return ssyt_label(t); }
  std::vector<int> weight(const Ssyt& t) const { return ssyt_weight(t, rank); }
  std::optional<Ssyt> f(const Ssyt& t, int color) const {
    return ssyt_f(t, color, rank + 1);
  }
  std::optional<Ssyt> e(const Ssyt& t, int color) const {
    return ssyt_e(t, color, rank + 1);
  }
};

// Memoized full crystal B(fw_coeffs) for A_rank, generated from the
// superstandard tableau.  The reference stays valid for the process
// lifetime.
const Generated<SsytDomain>& tableau_crystal(const std::vector<int>& fw_coeffs,
                                             int rank);

}  // namespace e7kr
