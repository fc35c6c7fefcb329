#include "e7kr/kr.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <thread>

#include "e7kr/export.hpp"

namespace e7kr {
namespace {

// Raising scan order over I_{0,2}; any fixed order reaches the same head.
constexpr int kI02Scan[6] = {7, 6, 5, 4, 3, 1};

int tau16(int color) {
  switch (color) {
    case 1: return 6;
    case 6: return 1;
    case 3: return 5;
    case 5: return 3;
    default: return color;
  }
}

Row chain_row(int a, int b, int c, int d) {
  const LetterCrystal& L = letters();
  Row r;
  for (int t = 0; t < a; ++t) r.push_back(static_cast<std::uint8_t>(L.seven()));
  for (int t = 0; t < b; ++t) r.push_back(static_cast<std::uint8_t>(L.seven_six()));
  for (int t = 0; t < c; ++t) r.push_back(static_cast<std::uint8_t>(L.seven_one()));
  for (int t = 0; t < d; ++t) r.push_back(static_cast<std::uint8_t>(L.seven_bar()));
  return r;
}

}  // namespace

std::vector<int> mu_of_params(const CompParams& p) {
  return {p.m1, p.m6 - p.m2, p.m2, p.m5 - p.m3, p.m3 + p.m4p,
          p.m7 - p.m4 - p.m5};
}

std::optional<CompParams> params_from_mu(const std::vector<int>& mu, int s) {
  if (mu.size() != 6) throw std::invalid_argument("expected a rank-6 weight");
  const int a1 = mu[0], a2 = mu[1], a3 = mu[2], a4 = mu[3], a5 = mu[4],
            a6 = mu[5];
  const int twice = s - a1 - a2 - 2 * a3 - 2 * a4 - 3 * a5 - a6;
  if (twice % 2 != 0) return std::nullopt;
  const int c = twice / 2;
  CompParams p;
  p.m1 = a1;
  p.m2 = a3;
  p.m6 = a2 + a3;
  p.m4 = std::max(c, 0);
  p.m4p = std::max(-c, 0);
  p.m3 = a5 - p.m4p;
  p.m5 = a4 + a5 - p.m4p;
  p.m7 = a4 + a5 + a6 + c;
  if (!p.valid() || p.s() != s) return std::nullopt;
  if (mu_of_params(p) != mu) return std::nullopt;
  return p;
}

A6Image psi(const Row& b) {
  Row cur = b;
  std::vector<int> record;
  for (bool progressed = true; progressed;) {
    progressed = false;
    for (int color : kI02Scan) {
      if (auto up = row_e(cur, color)) {
        cur = std::move(*up);
        record.push_back(color);
        progressed = true;
        break;
      }
    }
  }
  auto params = classify_i02_highest(cur);
  if (!params)
    throw std::logic_error("raising did not yield a recognizable head");
  Ssyt t = superstandard(mu_of_params(*params));
  // b = f_{c_1} ... f_{c_k}(head) with record = (c_1, ..., c_k) in raising
  // order, so lower the tableau by the record reversed.
  for (auto it = record.rbegin(); it != record.rend(); ++it) {
    auto down = ssyt_f(t, a7_node_of_e7(*it), 7);
    if (!down) throw std::logic_error("tableau transport lost a lowering step");
    t = std::move(*down);
  }
  return {*params, t};
}

Row psi_inv(const A6Image& image, int s) {
  if (image.params.s() != s)
    throw std::invalid_argument("parameters do not sum to the row length");
  Ssyt cur = image.tableau;
  std::vector<int> record;
  for (bool progressed = true; progressed;) {
    progressed = false;
    for (int color = 1; color <= 6; ++color) {
      if (auto up = ssyt_e(cur, color, 7)) {
        cur = std::move(*up);
        record.push_back(color);
        progressed = true;
        break;
      }
    }
  }
  if (!(cur == superstandard(mu_of_params(image.params))))
    throw std::invalid_argument("tableau does not belong to the head's component");
  Row r = row_of_params(image.params);
  for (auto it = record.rbegin(); it != record.rend(); ++it) {
    auto down = row_f(r, e7_node_of_a7(*it));
    if (!down) throw std::logic_error("row transport lost a lowering step");
    r = std::move(*down);
  }
  return r;
}

namespace {

std::optional<Row> affine_op(const Row& b, bool lower) {
  const int s = static_cast<int>(b.size());
  const A6Image image = psi(b);
  Ssyt padded = pad_even_columns(image.tableau, 8);
  if (!padded.is_valid(8))
    throw std::logic_error("padding produced an invalid tableau");
  auto moved = lower ? ssyt_f(padded, 7, 8) : ssyt_e(padded, 7, 8);
  if (!moved) return std::nullopt;
  const Ssyt stripped = strip_entry(*moved, 8);
  auto params = params_from_mu(shape_to_weight(stripped.shape(), 6), s);
  if (!params)
    throw std::logic_error("affine step left the component family");
  return psi_inv({*params, stripped}, s);
}

}  // namespace

std::optional<Row> affine_f0(const Row& b) { return affine_op(b, true); }
std::optional<Row> affine_e0(const Row& b) { return affine_op(b, false); }

int affine_eps0(const Row& b) {
  int k = 0;
  Row cur = b;
  while (auto up = affine_e0(cur)) {
    cur = std::move(*up);
    ++k;
  }
  return k;
}

int affine_phi0(const Row& b) {
  int k = 0;
  Row cur = b;
  while (auto down = affine_f0(cur)) {
    cur = std::move(*down);
    ++k;
  }
  return k;
}

namespace {

std::filesystem::path cache_file(const KrOptions& options, int s) {
  char name[32];
  std::snprintf(name, sizeof name, "kr_s%02d.json", s);
  return options.cache_dir / name;
}

Row row_from_key(const std::string& key) {
  Row r;
  r.reserve(key.size());
  for (char ch : key) r.push_back(static_cast<std::uint8_t>(ch - 'A'));
  return r;
}

KrCrystal kr_from_rows(int s, std::vector<Row> rows,
                       std::vector<std::vector<std::int32_t>> f_edges) {
  KrCrystal out;
  out.s = s;
  out.nodes = std::move(rows);
  const int n = static_cast<int>(out.nodes.size());
  CrystalGraph& g = out.graph;
  g.colors = index_set_affine();
  g.weight_nodes = index_set_affine();
  for (int i : g.colors) {
    const AffineWeight alpha = simple_root_affine(i);
    g.alpha.emplace_back(alpha.begin(), alpha.end());
  }
  g.keys.resize(n);
  g.labels.resize(n);
  g.weights.resize(n);
  for (int v = 0; v < n; ++v) {
    g.keys[v] = row_key(out.nodes[v]);
    g.labels[v] = row_label(out.nodes[v]);
    const AffineWeight w = affinize(row_weight(out.nodes[v]));
    g.weights[v].assign(w.begin(), w.end());
  }
  g.f_edge = std::move(f_edges);
  g.e_edge.assign(8, std::vector<std::int32_t>(n, -1));
  for (int c = 0; c < 8; ++c)
    for (int v = 0; v < n; ++v)
      if (g.f_edge[c][v] >= 0) g.e_edge[c][g.f_edge[c][v]] = v;
  return out;
}

std::optional<KrCrystal> load_cached_kr(const KrOptions& options, int s) {
  namespace fs = std::filesystem;
  const fs::path file = cache_file(options, s);
  std::error_code ec;
  if (!fs::exists(file, ec)) return std::nullopt;
  try {
    return kr_from_cache_text(read_file(file), s);
  } catch (const std::exception&) {
    return std::nullopt;  // treat unreadable caches as absent
  }
}

}  // namespace

std::string kr_cache_text(const KrCrystal& kr) {
  nlohmann::ordered_json j;
  j["format"] = "kr-cache-v1";
  j["s"] = kr.s;
  j["keys"] = kr.graph.keys;
  j["f"] = kr.graph.f_edge;
  return j.dump() + "\n";
}

KrCrystal kr_from_cache_text(const std::string& text, int expected_s) {
  nlohmann::ordered_json j;
  std::vector<std::string> keys;
  std::vector<std::vector<std::int32_t>> f_edges;
  try {
    j = nlohmann::ordered_json::parse(text);
    if (j.at("format").get<std::string>() != "kr-cache-v1")
      throw std::invalid_argument("unknown cache format");
    if (j.at("s").get<int>() != expected_s)
      throw std::invalid_argument("cached crystal has a different length");
    keys = j.at("keys").get<std::vector<std::string>>();
    f_edges = j.at("f").get<std::vector<std::vector<std::int32_t>>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed cache: ") + e.what());
  }
  if (f_edges.size() != 8)
    throw std::invalid_argument("cache must carry eight edge families");
  std::vector<Row> rows;
  rows.reserve(keys.size());
  for (const std::string& key : keys) {
    rows.push_back(row_from_key(key));
    if (static_cast<int>(rows.back().size()) != expected_s ||
        !is_multichain(rows.back()))
      throw std::invalid_argument("cache contains a malformed row");
  }
  for (const auto& edges : f_edges) {
    if (edges.size() != keys.size())
      throw std::invalid_argument("cache edge family has the wrong size");
    for (std::int32_t t : edges)
      if (t < -1 || t >= static_cast<std::int32_t>(keys.size()))
        throw std::invalid_argument("cache edge target out of range");
  }
  return kr_from_rows(expected_s, std::move(rows), std::move(f_edges));
}

KrCrystal build_kr(int s, const KrOptions& options) {
  if (s < 0) throw std::domain_error("length must be nonnegative");
  if (!options.cache_dir.empty()) {
    if (auto cached = load_cached_kr(options, s)) return std::move(*cached);
  }

  // Classical part: the connected graph through the highest multichain.
  CompParams top;
  top.m1 = s;
  auto gen =
      generate_crystal(RowDomain{}, {row_of_params(top)}, options.max_nodes);
  const CrystalGraph& G = gen.graph;
  const int n = G.size();

  // A6 components and the tableau picture of each.
  int ncomp = 0;
  const std::vector<int> comp = component_ids(G, index_set_i02(), &ncomp);
  std::vector<const Generated<SsytDomain>*> crystal_of(ncomp, nullptr);
  std::vector<int> tab_of(n, -1);
  std::vector<std::vector<int>> row_of(ncomp);  // tableau id -> row node
  std::map<std::vector<int>, int> comp_by_mu;

  std::map<int, int> dict;
  for (int i : index_set_i02()) dict[i] = a7_node_of_e7(i);
  for (int head : highest_weight_nodes(G, index_set_i02())) {
    const int c = comp[head];
    auto params = classify_i02_highest(gen.nodes[head]);
    if (!params)
      throw std::logic_error("component head is not of the expected form");
    const std::vector<int> mu = mu_of_params(*params);
    if (!comp_by_mu.emplace(mu, c).second)
      throw std::logic_error("A6 branching is not multiplicity free");
    const auto& B = tableau_crystal(mu, 6);
    crystal_of[c] = &B;
    const int target = B.graph.node_by_key(ssyt_key(superstandard(mu)));
    const std::vector<int> image =
        match_isomorphism(G, head, index_set_i02(), B.graph, target, dict);
    row_of[c].assign(B.graph.size(), -1);
    for (int v = 0; v < n; ++v) {
      if (image[v] < 0) continue;
      if (comp[v] != c || tab_of[v] >= 0)
        throw std::logic_error("component images overlap");
      tab_of[v] = image[v];
      row_of[c][image[v]] = v;
    }
  }
  for (int v = 0; v < n; ++v)
    if (tab_of[v] < 0)
      throw std::logic_error("a row was missed by every component head");

  // Color-0 lowering per node, via pad / lower / strip in the tableau picture.
  std::vector<std::int32_t> f0(n, -1);
  auto sweep = [&](int begin, int end) {
    for (int v = begin; v < end; ++v) {
      const Ssyt& t = crystal_of[comp[v]]->nodes[tab_of[v]];
      Ssyt padded = pad_even_columns(t, 8);
      auto down = ssyt_f(padded, 7, 8);
      if (!down) continue;
      const Ssyt stripped = strip_entry(*down, 8);
      auto params = params_from_mu(shape_to_weight(stripped.shape(), 6), s);
      if (!params)
        throw std::logic_error("color-0 step left the component family");
      const int c2 = comp_by_mu.at(mu_of_params(*params));
      const int t2 = crystal_of[c2]->graph.node_by_key(ssyt_key(stripped));
      if (t2 < 0) throw std::logic_error("stripped tableau not in its crystal");
      f0[v] = row_of[c2][t2];
    }
  };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1 || n < 1024) {
    sweep(0, n);
  } else {
    std::vector<std::thread> workers;
    const int chunk = (n + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      const int begin = j * chunk, end = std::min(n, begin + chunk);
      if (begin < end) workers.emplace_back(sweep, begin, end);
    }
    for (auto& w : workers) w.join();
  }

  std::vector<std::vector<std::int32_t>> f_edges(8);
  f_edges[0] = std::move(f0);
  for (int i = 1; i <= 7; ++i) f_edges[i] = G.f_edge[i - 1];
  KrCrystal out = kr_from_rows(s, std::move(gen.nodes), std::move(f_edges));

  if (!options.cache_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(options.cache_dir, ec);
    atomic_write_file(cache_file(options, s), kr_cache_text(out));
  }
  return out;
}

std::vector<std::vector<int>> a7_components(int s) {
  std::vector<std::vector<int>> out;
  for (int m4 = 0; m4 <= s; ++m4)
    for (int m5 = 0; m4 + m5 <= s; ++m5)
      for (int m6 = 0; m4 + m5 + m6 <= s; ++m6) {
        const int m7 = s - m4 - m5 - m6;
        if (m4 + m5 > m7) continue;
        out.push_back({0, m6, 0, m5, 0, m7 - m4 - m5, 0});
      }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::logic_error("A7 component weights collide");
  return out;
}

E6Decomposition e6_decomposition(int s) {
  if (s < 0) throw std::domain_error("length must be nonnegative");
  E6Decomposition out;
  out.s = s;
  std::map<std::pair<int, int>, int> mult;
  for (int a = 0; a <= s; ++a)
    for (int b = 0; a + b <= s; ++b)
      for (int c = 0; a + b + c <= s; ++c) {
        ++mult[{b, c}];
        ++out.head_count;
      }
  for (const auto& [bc, m] : mult) {
    if (m != s - bc.first - bc.second + 1)
      throw std::logic_error("head multiplicity mismatch");
    out.components.push_back({bc.first, bc.second, m});
  }
  return out;
}

Row chain_twist(const Row& b) {
  const LetterCrystal& L = letters();
  Row cur = b;
  std::vector<int> record;
  for (bool progressed = true; progressed;) {
    progressed = false;
    for (int color = 1; color <= 6; ++color) {
      if (auto up = row_e(cur, color)) {
        cur = std::move(*up);
        record.push_back(color);
        progressed = true;
        break;
      }
    }
  }
  int counts[4] = {0, 0, 0, 0};
  for (std::uint8_t id : cur) {
    if (id == L.seven()) ++counts[0];
    else if (id == L.seven_six()) ++counts[1];
    else if (id == L.seven_one()) ++counts[2];
    else if (id == L.seven_bar()) ++counts[3];
    else throw std::logic_error("head is not a chain multichain");
  }
  Row out = chain_row(counts[3], counts[2], counts[1], counts[0]);
  for (auto it = record.rbegin(); it != record.rend(); ++it) {
    auto down = row_f(out, tau16(*it));
    if (!down) throw std::logic_error("twist transport lost a lowering step");
    out = std::move(*down);
  }
  return out;
}

ChainTwistHeadReport chain_twist_head_report(int s) {
  ChainTwistHeadReport report;
  report.s = s;
  report.closed_form_matches = true;
  report.reversal_matches = true;
  std::string detail;
  for (int a = 0; a <= s; ++a)
    for (int b = 0; a + b <= s; ++b)
      for (int c = 0; a + b + c <= s; ++c) {
        const int d = s - a - b - c;
        const Row head = chain_row(a, b, c, d);
        // Intrinsic target: the unique chain head whose colors-{1..6} weight
        // is the (1<->6, 3<->5)-twist of this one's and whose color-7 and
        // color-0 pairings are swapped.
        const ClassicalWeight w = row_weight(head);
        const int p7 = w[6];
        const int p0 = -classical_level(w);
        int found = 0;
        int fa = -1, fb = -1, fc = -1, fd = -1;
        for (int a2 = 0; a2 <= s; ++a2)
          for (int b2 = 0; a2 + b2 <= s; ++b2)
            for (int c2 = 0; a2 + b2 + c2 <= s; ++c2) {
              const int d2 = s - a2 - b2 - c2;
              const ClassicalWeight w2 = row_weight(chain_row(a2, b2, c2, d2));
              bool twisted = true;
              const int swap[6] = {6, 2, 5, 4, 3, 1};  // node i -> tau(i)
              for (int i = 1; i <= 6; ++i)
                if (w2[i - 1] != w[swap[i - 1] - 1]) twisted = false;
              if (!twisted) continue;
              if (w2[6] != p0 || -classical_level(w2) != p7) continue;
              ++found;
              fa = a2; fb = b2; fc = c2; fd = d2;
            }
        if (found != 1) {
          report.reversal_matches = false;
          detail += "no unique intrinsic image for (" + std::to_string(a) +
                    "," + std::to_string(b) + "," + std::to_string(c) + "," +
                    std::to_string(d) + ")\n";
          continue;
        }
        if (!(fa == d && fb == c && fc == b && fd == a)) {
          report.reversal_matches = false;
          detail += "intrinsic image of (" + std::to_string(a) + "," +
                    std::to_string(b) + "," + std::to_string(c) + "," +
                    std::to_string(d) + ") is not the reversal\n";
        }
        // Closed-form guess (b+c+d, c, b, a+b+c).
        const int g1 = b + c + d, g2 = c, g3 = b, g4 = a + b + c;
        if (!(g1 == fa && g2 == fb && g3 == fc && g4 == fd)) {
          if (report.closed_form_matches) {
            detail += "closed form first fails at (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + "," +
                      std::to_string(d) + "): gives (" + std::to_string(g1) +
                      "," + std::to_string(g2) + "," + std::to_string(g3) +
                      "," + std::to_string(g4) + "), total " +
                      std::to_string(g1 + g2 + g3 + g4) + " instead of " +
                      std::to_string(s) + "\n";
          }
          report.closed_form_matches = false;
        }
      }
  report.detail = std::move(detail);
  return report;
}

}  // namespace e7kr
