#include "e7kr/ssyt.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>

namespace e7kr {
namespace {

// Cells of the reading word: columns left to right, bottom to top.
std::vector<std::pair<int, int>> reading_cells(const Ssyt& t) {
  std::vector<std::pair<int, int>> cells;
  cells.reserve(t.cells());
  const int width = t.rows.empty() ? 0 : static_cast<int>(t.rows[0].size());
  for (int c = 0; c < width; ++c)
    for (int r = t.height(c) - 1; r >= 0; --r) cells.emplace_back(r, c);
  return cells;
}

SignatureResult ssyt_signature(const Ssyt& t, int color,
                               const std::vector<std::pair<int, int>>& cells) {
  return signature_scan(static_cast<int>(cells.size()), [&](int i) {
    const int entry = t.rows[cells[i].first][cells[i].second];
    return std::pair<int, int>{entry == color ? 1 : 0, entry == color + 1 ? 1 : 0};
  });
}

bool is_partition(const std::vector<int>& shape) {
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] <= 0) return false;
    if (i + 1 < shape.size() && shape[i] < shape[i + 1]) return false;
  }
  return true;
}

Ssyt from_columns(std::vector<std::vector<int>> cols) {
  Ssyt out;
  if (cols.empty()) return out;
  for (std::size_t c = 0; c + 1 < cols.size(); ++c)
    if (cols[c].size() < cols[c + 1].size())
      throw std::logic_error("column heights are not weakly decreasing");
  out.rows.resize(cols[0].size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < cols[c].size(); ++r)
      out.rows[r].push_back(cols[c][r]);
  while (!out.rows.empty() && out.rows.back().empty()) out.rows.pop_back();
  return out;
}

}  // namespace

std::vector<int> Ssyt::shape() const {
  std::vector<int> s;
  s.reserve(rows.size());
  for (const auto& row : rows) s.push_back(static_cast<int>(row.size()));
  return s;
}

int Ssyt::height(int c) const {
  int h = 0;
  while (h < static_cast<int>(rows.size()) &&
         c < static_cast<int>(rows[h].size()))
    ++h;
  return h;
}

std::vector<int> Ssyt::column(int c) const {
  std::vector<int> col;
  for (int r = 0; r < height(c); ++r) col.push_back(rows[r][c]);
  return col;
}

int Ssyt::cells() const {
  int n = 0;
  for (const auto& row : rows) n += static_cast<int>(row.size());
  return n;
}

bool Ssyt::is_valid(int max_entry) const {
  if (!rows.empty() && !is_partition(shape())) return false;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const int entry = rows[r][c];
      if (entry < 1 || entry > max_entry) return false;
      if (c + 1 < rows[r].size() && rows[r][c + 1] < entry) return false;
      if (r + 1 < rows.size() && c < rows[r + 1].size() &&
          rows[r + 1][c] <= entry)
        return false;
    }
  }
  return true;
}

Ssyt Ssyt::of_shape(const std::vector<int>& shape) {
  if (!shape.empty() && !is_partition(shape))
    throw std::invalid_argument("not a partition shape");
  Ssyt t;
  for (std::size_t r = 0; r < shape.size(); ++r)
    t.rows.emplace_back(static_cast<std::size_t>(shape[r]),
                        static_cast<int>(r) + 1);
  return t;
}

std::vector<int> weight_to_shape(const std::vector<int>& fw_coeffs) {
  std::vector<int> shape;
  int tail = 0;
  for (auto it = fw_coeffs.rbegin(); it != fw_coeffs.rend(); ++it) {
    if (*it < 0) throw std::invalid_argument("weight must be dominant");
    tail += *it;
    shape.push_back(tail);
  }
  std::reverse(shape.begin(), shape.end());
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  return shape;
}

std::vector<int> shape_to_weight(const std::vector<int>& shape, int rank) {
  std::vector<int> s = shape;
  while (!s.empty() && s.back() == 0) s.pop_back();
  if (!s.empty() && !is_partition(s))
    throw std::invalid_argument("not a partition shape");
  if (static_cast<int>(s.size()) > rank)
    throw std::invalid_argument("shape does not fit in the given rank");
  s.resize(static_cast<std::size_t>(rank) + 1, 0);
  std::vector<int> fw(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) fw[i] = s[i] - s[i + 1];
  return fw;
}

Ssyt superstandard(const std::vector<int>& fw_coeffs) {
  return Ssyt::of_shape(weight_to_shape(fw_coeffs));
}

std::optional<Ssyt> ssyt_f(const Ssyt& t, int color, int max_entry) {
  const auto cells = reading_cells(t);
  const SignatureResult sig = ssyt_signature(t, color, cells);
  if (sig.f_pos < 0) return std::nullopt;
  if (color + 1 > max_entry) return std::nullopt;
  Ssyt out = t;
  out.rows[cells[sig.f_pos].first][cells[sig.f_pos].second] = color + 1;
  if (!out.is_valid(max_entry))
    throw std::logic_error("lowering produced an invalid tableau");
  return out;
}

std::optional<Ssyt> ssyt_e(const Ssyt& t, int color, int max_entry) {
  const auto cells = reading_cells(t);
  const SignatureResult sig = ssyt_signature(t, color, cells);
  if (sig.e_pos < 0) return std::nullopt;
  Ssyt out = t;
  out.rows[cells[sig.e_pos].first][cells[sig.e_pos].second] = color;
  if (!out.is_valid(max_entry))
    throw std::logic_error("raising produced an invalid tableau");
  return out;
}

int ssyt_phi(const Ssyt& t, int color) {
  return ssyt_signature(t, color, reading_cells(t)).phi;
}

int ssyt_eps(const Ssyt& t, int color) {
  return ssyt_signature(t, color, reading_cells(t)).eps;
}

std::vector<int> ssyt_weight(const Ssyt& t, int rank) {
  std::vector<int> count(static_cast<std::size_t>(rank) + 2, 0);
  for (const auto& row : t.rows)
    for (int entry : row) {
      if (entry < 1 || entry > rank + 1)
        throw std::invalid_argument("entry out of range for this rank");
      ++count[static_cast<std::size_t>(entry)];
    }
  std::vector<int> fw(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) fw[i - 1] = count[i] - count[i + 1];
  return fw;
}

std::string ssyt_key(const Ssyt& t) {
  if (t.rows.empty()) return "-";
  std::string out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (r) out += '/';
    for (int entry : t.rows[r]) {
      if (entry > 9) throw std::logic_error("entry too large to serialize");
      out += static_cast<char>('0' + entry);
    }
  }
  return out;
}

std::string ssyt_label(const Ssyt& t) { return ssyt_key(t); }

Ssyt pad_even_columns(const Ssyt& t, int filler) {
  const int width = t.rows.empty() ? 0 : static_cast<int>(t.rows[0].size());
  std::vector<std::vector<int>> cols;
  for (int c = 0; c < width; ++c) {
    cols.push_back(t.column(c));
    if (cols.back().size() % 2 == 1) {
      if (!cols.back().empty() && cols.back().back() >= filler)
        throw std::invalid_argument("filler must exceed all entries");
      cols.back().push_back(filler);
    }
  }
  return from_columns(std::move(cols));
}

Ssyt strip_entry(const Ssyt& t, int entry) {
  const int width = t.rows.empty() ? 0 : static_cast<int>(t.rows[0].size());
  std::vector<std::vector<int>> cols;
  for (int c = 0; c < width; ++c) {
    std::vector<int> col = t.column(c);
    while (!col.empty() && col.back() == entry) col.pop_back();
    for (int e : col)
      if (e == entry)
        throw std::logic_error("entry to strip is not at a column bottom");
    cols.push_back(std::move(col));
  }
  while (!cols.empty() && cols.back().empty()) cols.pop_back();
  for (const auto& col : cols)
    if (col.empty()) throw std::logic_error("stripping left a hole");
  return from_columns(std::move(cols));
}

Ssyt strip_full_columns(const Ssyt& t, int height) {
  const int width = t.rows.empty() ? 0 : static_cast<int>(t.rows[0].size());
  int k = 0;
  for (int c = 0; c < width; ++c) {
    const int h = t.height(c);
    if (h > height) throw std::logic_error("column taller than the full height");
    if (h == height) {
      if (c != k) throw std::logic_error("full columns are not leading");
      for (int r = 0; r < h; ++r)
        if (t.rows[r][c] != r + 1)
          throw std::logic_error("full column is not superstandard");
      ++k;
    }
  }
  Ssyt out;
  for (const auto& row : t.rows) {
    if (static_cast<int>(row.size()) <= k) break;
    out.rows.emplace_back(row.begin() + k, row.end());
  }
  return out;
}

Ssyt rectify_columns(const std::vector<std::vector<int>>& columns,
                     unsigned slide_seed) {
  if (columns.empty()) return {};
  int total = 0;
  for (const auto& col : columns) {
    if (col.empty()) throw std::invalid_argument("empty column");
    for (std::size_t i = 0; i + 1 < col.size(); ++i)
      if (col[i] >= col[i + 1])
        throw std::invalid_argument("column entries must strictly increase");
    total += static_cast<int>(col.size());
  }
  const int W = static_cast<int>(columns.size());
  const int H = total;

  // grid[r][c] with row 0 on top; column j occupies a contiguous block of
  // rows, later columns stacked above earlier ones.
  std::vector<std::vector<int>> grid(H, std::vector<int>(W, -1));
  std::vector<int> lam(H, 0), mu(H, 0);
  {
    int bottom = H;  // one past the last row of the next column to place
    for (int j = 0; j < W; ++j) {
      const int h = static_cast<int>(columns[j].size());
      for (int i = 0; i < h; ++i) grid[bottom - h + i][j] = columns[j][i];
      for (int r = bottom - h; r < bottom; ++r) {
        lam[r] = j + 1;
        mu[r] = j;
      }
      bottom -= h;
    }
  }

  std::mt19937 rng(slide_seed);
  while (true) {
    // Removable corners of the inner shape.
    std::vector<int> corners;
    for (int r = 0; r < H; ++r)
      if (mu[r] > 0 && (r + 1 >= H || mu[r + 1] < mu[r])) corners.push_back(r);
    if (corners.empty()) break;
    int r = corners.back();
    if (slide_seed != 0)
      r = corners[std::uniform_int_distribution<std::size_t>(
          0, corners.size() - 1)(rng)];
    int c = --mu[r];
    // Slide the hole at (r, c) out through the tableau.
    while (true) {
      const bool has_right = c + 1 < lam[r];
      const bool has_below = r + 1 < H && c < lam[r + 1];
      if (!has_right && !has_below) {
        lam[r] = c;
        grid[r][c] = -1;
        break;
      }
      if (has_right && (!has_below || grid[r][c + 1] < grid[r + 1][c])) {
        grid[r][c] = grid[r][c + 1];
        ++c;
      } else {
        grid[r][c] = grid[r + 1][c];
        ++r;
      }
    }
  }

  Ssyt out;
  for (int r = 0; r < H && lam[r] > 0; ++r)
    out.rows.emplace_back(grid[r].begin(), grid[r].begin() + lam[r]);
  if (!out.is_valid(1 << 20))
    throw std::logic_error("rectification produced an invalid tableau");
  return out;
}

Ssyt reversal_transport(const Ssyt& t, int rank) {
  // Raise to the highest tableau of the component, recording colors.
  Ssyt cur = t;
  std::vector<int> record;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int color = 1; color <= rank; ++color) {
      if (auto up = ssyt_e(cur, color, rank + 1)) {
        cur = std::move(*up);
        record.push_back(color);
        progressed = true;
        break;
      }
    }
  }
  std::vector<int> lam = shape_to_weight(cur.shape(), rank);
  std::reverse(lam.begin(), lam.end());
  Ssyt out = superstandard(lam);
  for (auto it = record.rbegin(); it != record.rend(); ++it) {
    auto down = ssyt_f(out, rank + 1 - *it, rank + 1);
    if (!down)
      throw std::logic_error("reversal transport left the target crystal");
    out = std::move(*down);
  }
  return out;
}

std::vector<std::vector<int>> interlacing_shapes(const std::vector<int>& shape,
                                                 int max_rows) {
  if (!shape.empty() && !is_partition(shape))
    throw std::invalid_argument("not a partition shape");
  std::vector<std::vector<int>> out;
  std::vector<int> mu;
  const int R = static_cast<int>(shape.size());
  auto rec = [&](auto&& self, int i) -> void {
    if (i == R) {
      std::vector<int> trimmed = mu;
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      out.push_back(std::move(trimmed));
      return;
    }
    const int lo = (i + 1 < R) ? shape[i + 1] : 0;
    const int hi = (i < max_rows) ? shape[i] : 0;
    for (int v = lo; v <= hi; ++v) {
      mu.push_back(v);
      self(self, i + 1);
      mu.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> SsytDomain::colors() const {
  std::vector<int> c(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) c[i - 1] = i;
  return c;
}

const Generated<SsytDomain>& tableau_crystal(const std::vector<int>& fw_coeffs,
                                             int rank) {
  static std::mutex mu;
  static std::map<std::pair<int, std::vector<int>>,
                  std::unique_ptr<Generated<SsytDomain>>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(rank, fw_coeffs);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto built = std::make_unique<Generated<SsytDomain>>(
        generate_crystal(SsytDomain{rank}, {superstandard(fw_coeffs)}));
    it = cache.emplace(std::move(key), std::move(built)).first;
  }
  return *it->second;
}

}  // namespace e7kr
