// The signature rule and the generic generation engine, exercised on small
// hand-checkable domains.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "e7kr/crystal.hpp"

using namespace e7kr;

namespace {

SignatureResult scan(const std::vector<std::pair<int, int>>& factors) {
  return signature_scan(static_cast<int>(factors.size()),
                        [&](int i) { return factors[i]; });
}

// A one-color string crystal of length top+1 (sl2 with highest weight `top`),
// elements 0..top, weight 2k - ... stored as the single coefficient.
struct StringDomain {
  using Element = int;
  int top = 2;
  std::vector<std::string> keys = {"a", "b", "c", "d", "e"};
  std::vector<int> colors() const { return {1}; }
  std::vector<int> weight_nodes() const { return {1}; }
  std::vector<int> alpha(int) const { return {2}; }
  std::string key(int k) const { return keys.at(k); }
  std::string label(int k) const { return keys.at(k); }
  std::vector<int> weight(int k) const { return {top - 2 * k}; }
  std::optional<int> f(int k, int) const {
    return k < top ? std::optional<int>(k + 1) : std::nullopt;
  }
  std::optional<int> e(int k, int) const {
    return k > 0 ? std::optional<int>(k - 1) : std::nullopt;
  }
};

}  // namespace

TEST_CASE("signature rule on hand-worked words") {
  // Single factor: phi minuses then eps pluses, nothing cancels.
  auto r = scan({{2, 1}});
  CHECK(r.phi == 2);
  CHECK(r.eps == 1);
  CHECK(r.f_pos == 0);
  CHECK(r.e_pos == 0);

  // "- +": a minus followed by a plus does not cancel.
  r = scan({{1, 0}, {0, 1}});
  CHECK(r.phi == 1);
  CHECK(r.eps == 1);
  CHECK(r.f_pos == 0);
  CHECK(r.e_pos == 1);

  // "+ -": cancels completely.
  r = scan({{0, 1}, {1, 0}});
  CHECK(r.phi == 0);
  CHECK(r.eps == 0);
  CHECK(r.f_pos == -1);
  CHECK(r.e_pos == -1);

  // "-+-+": the middle pair cancels, leaving the outer minus and plus.
  r = scan({{1, 1}, {1, 1}});
  CHECK(r.phi == 1);
  CHECK(r.eps == 1);
  CHECK(r.f_pos == 0);
  CHECK(r.e_pos == 1);

  // "++--": both pluses close against both minuses.
  r = scan({{0, 2}, {1, 0}, {1, 0}});
  CHECK(r.phi == 0);
  CHECK(r.eps == 0);

  // "--": f acts on the rightmost surviving minus.
  r = scan({{1, 0}, {1, 0}});
  CHECK(r.phi == 2);
  CHECK(r.f_pos == 1);
  CHECK(r.eps == 0);

  // "++": e acts on the leftmost surviving plus.
  r = scan({{0, 1}, {0, 1}});
  CHECK(r.eps == 2);
  CHECK(r.e_pos == 0);
  CHECK(r.phi == 0);

  // "-+-": the plus cancels the second minus, leaving only the first.
  r = scan({{1, 1}, {1, 0}});
  CHECK(r.phi == 1);
  CHECK(r.eps == 0);
  CHECK(r.f_pos == 0);
  CHECK(r.e_pos == -1);

  // Empty word.
  r = scan({});
  CHECK(r.phi == 0);
  CHECK(r.eps == 0);
}

TEST_CASE("generation, canonical order and axioms on a string crystal") {
  StringDomain dom;
  auto gen = generate_crystal(dom, {0});
  REQUIRE(gen.graph.size() == 3);
  // Canonical order sorts by key, here already a,b,c.
  CHECK(gen.graph.keys == std::vector<std::string>{"a", "b", "c"});
  CHECK(gen.graph.weights[0] == std::vector<int>{2});
  CHECK(gen.graph.weights[2] == std::vector<int>{-2});
  CHECK(gen.graph.f(0, 1) == 1);
  CHECK(gen.graph.f(2, 1) == -1);
  CHECK(gen.graph.e(0, 1) == -1);
  CHECK(gen.graph.e(1, 1) == 0);
  CHECK(gen.graph.phi(0, 1) == 2);
  CHECK(gen.graph.eps(0, 1) == 0);
  CHECK(gen.graph.eps(2, 1) == 2);
  CHECK(check_crystal_axioms(gen.graph).empty());
  CHECK(gen.graph.node_by_key("b") == 1);
  CHECK(gen.graph.node_by_key("zz") == -1);

  // Generating from the middle or bottom element reaches the same crystal.
  CHECK(generate_crystal(dom, {1}).graph.keys == gen.graph.keys);
  CHECK(generate_crystal(dom, {2}).graph.keys == gen.graph.keys);
}

TEST_CASE("generation respects the node budget") {
  StringDomain dom;
  dom.top = 4;
  CHECK_THROWS_AS(generate_crystal(dom, {0}, 3), ResourceLimitError);
  CHECK(generate_crystal(dom, {0}, 5).graph.size() == 5);
}

TEST_CASE("whole-graph queries") {
  StringDomain dom;
  auto gen = generate_crystal(dom, {0});
  CHECK(highest_weight_nodes(gen.graph, {1}) == std::vector<int>{0});
  CHECK(is_connected(gen.graph, {1}));
  int count = 0;
  auto comp = component_ids(gen.graph, {1}, &count);
  CHECK(count == 1);
  CHECK(comp == std::vector<int>{0, 0, 0});
  // With no colors at all, every node is its own component.
  comp = component_ids(gen.graph, {}, &count);
  CHECK(count == 3);
}

TEST_CASE("match_isomorphism follows edges and translates colors") {
  StringDomain dom;
  auto g1 = generate_crystal(dom, {0});

  // Same crystal with reversed keys, so the canonical numbering flips.
  StringDomain rev;
  rev.keys = {"c", "b", "a"};
  auto g2 = generate_crystal(rev, {0});
  CHECK(g2.graph.keys == std::vector<std::string>{"a", "b", "c"});
  // In g2, key "a" is the lowest element (domain element 2 relabeled).
  CHECK(g2.graph.weights[0] == std::vector<int>{-2});

  std::map<int, int> ident{{1, 1}};
  auto img = match_isomorphism(g1.graph, 0, {1}, g2.graph, 2, ident);
  CHECK(img == std::vector<int>{2, 1, 0});

  // Mapping top to a non-highest node cannot extend to an isomorphism.
  CHECK_THROWS_AS(match_isomorphism(g1.graph, 0, {1}, g2.graph, 1, ident),
                  std::logic_error);
}
