#include "e7kr/row.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace e7kr {
namespace {

Row checked(Row r) {
  if (!is_multichain(r))
    throw std::logic_error("crystal operator left the multichain family");
  return r;
}

}  // namespace

bool is_multichain(const Row& r) {
  const LetterCrystal& L = letters();
  for (std::size_t i = 0; i + 1 < r.size(); ++i)
    if (!L.le(r[i], r[i + 1])) return false;
  return true;
}

std::optional<Row> row_f(const Row& r, int color) {
  auto w = word_f(r, color);
  if (!w) return std::nullopt;
  return checked(std::move(*w));
}

std::optional<Row> row_e(const Row& r, int color) {
  auto w = word_e(r, color);
  if (!w) return std::nullopt;
  return checked(std::move(*w));
}

int row_phi(const Row& r, int color) { return word_phi(r, color); }
int row_eps(const Row& r, int color) { return word_eps(r, color); }
ClassicalWeight row_weight(const Row& r) { return word_weight(r); }
std::string row_key(const Row& r) { return word_key(r); }
std::string row_label(const Row& r) { return word_label(r); }

std::vector<Row> enumerate_rows(int s) {
  if (s < 0) throw std::domain_error("row length must be nonnegative");
  const LetterCrystal& L = letters();
  std::vector<Row> out;
  Row cur;
  auto rec = [&](auto&& self, int first) -> void {
    if (static_cast<int>(cur.size()) == s) {
      out.push_back(cur);
      return;
    }
    for (int id = first; id < L.size(); ++id) {
      if (!cur.empty() && !L.le(cur.back(), id)) continue;
      cur.push_back(static_cast<std::uint8_t>(id));
      self(self, id);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::optional<CompParams> classify_i02_highest(const Row& r) {
  const LetterCrystal& L = letters();
  CompParams p;
  for (std::uint8_t id : r) {
    if (id == L.x1()) ++p.m1;
    else if (id == L.x2()) ++p.m2;
    else if (id == L.x3()) ++p.m3;
    else if (id == L.x4()) ++p.m4;
    else if (id == L.x4p()) ++p.m4p;
    else if (id == L.x5()) ++p.m5;
    else if (id == L.x6()) ++p.m6;
    else if (id == L.x7()) ++p.m7;
    else return std::nullopt;
  }
  if (!p.valid()) return std::nullopt;
  return p;
}

ClassicalWeight weight_of_params(const CompParams& p) {
  ClassicalWeight w{};
  w[0] = p.m7 - p.m4 - p.m5;
  w[1] = p.m3 + p.m4 - p.m4p - p.m5 - p.m6 - p.m7;
  w[2] = p.m3 + p.m4p;
  w[3] = p.m5 - p.m3;
  w[4] = p.m2;
  w[5] = p.m6 - p.m2;
  w[6] = p.m1;
  return w;
}

Row row_of_params(const CompParams& p) {
  const LetterCrystal& L = letters();
  Row r;
  const std::array<std::pair<int, int>, 8> parts = {{
      {L.x1(), p.m1}, {L.x2(), p.m2}, {L.x3(), p.m3}, {L.x4(), p.m4},
      {L.x4p(), p.m4p}, {L.x5(), p.m5}, {L.x6(), p.m6}, {L.x7(), p.m7},
  }};
  for (auto [id, count] : parts)
    for (int t = 0; t < count; ++t) r.push_back(static_cast<std::uint8_t>(id));
  if (!is_multichain(r))
    throw std::logic_error("parameters do not describe a multichain");
  return r;
}

std::vector<int> RowDomain::alpha(int color) const {
  const ClassicalWeight a = simple_root_classical(color);
  return {a.begin(), a.end()};
}

std::vector<int> RowDomain::weight(const Row& r) const {
  const ClassicalWeight cw = row_weight(r);
  return {cw.begin(), cw.end()};
}

}  // namespace e7kr
