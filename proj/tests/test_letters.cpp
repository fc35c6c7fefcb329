// The 56-letter minuscule crystal: size and grading, labels, the letter
// order, the distinguished letters, and tensor words.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "e7kr/cartan.hpp"
#include "e7kr/letters.hpp"
#include "e7kr/weyl.hpp"

using namespace e7kr;

namespace {
const std::string kBar = "\xCC\x84";  // combining macron
std::string bar(const std::string& s) {
  std::string out;
  for (char c : s) {
    out += c;
    out += kBar;
  }
  return out;
}
}  // namespace

TEST_CASE("the letter crystal is the Weyl orbit of the minuscule weight") {
  const auto& L = letters();
  REQUIRE(L.size() == 56);
  CHECK(check_crystal_axioms(L.graph()).empty());

  auto orbit = weyl_orbit_e7({0, 0, 0, 0, 0, 0, 1});
  std::set<ClassicalWeight> expect(orbit.begin(), orbit.end());
  std::set<ClassicalWeight> got;
  for (int v = 0; v < 56; ++v) got.insert(L.weight(v));
  CHECK(got == expect);
}

TEST_CASE("unique source and sink, graded by depth") {
  const auto& L = letters();
  int sources = 0, sinks = 0;
  for (int v = 0; v < 56; ++v) {
    bool has_e = false, has_f = false;
    for (int i = 1; i <= 7; ++i) {
      has_e = has_e || L.e(v, i) >= 0;
      has_f = has_f || L.f(v, i) >= 0;
    }
    if (!has_e) {
      ++sources;
      CHECK(v == L.x1());
      CHECK(L.weight(v) == ClassicalWeight{0, 0, 0, 0, 0, 0, 1});
    }
    if (!has_f) {
      ++sinks;
      CHECK(v == L.seven_bar());
      CHECK(L.weight(v) == ClassicalWeight{0, 0, 0, 0, 0, 0, -1});
    }
    for (int i = 1; i <= 7; ++i)
      if (L.f(v, i) >= 0) CHECK(L.depth(L.f(v, i)) == L.depth(v) + 1);
  }
  CHECK(sources == 1);
  CHECK(sinks == 1);
  // Minuscule: every operator either acts once or not at all.
  for (int v = 0; v < 56; ++v)
    for (int i = 1; i <= 7; ++i) {
      CHECK(L.phi(v, i) == (L.weight(v)[i - 1] > 0 ? 1 : 0));
      CHECK(L.eps(v, i) == (L.weight(v)[i - 1] < 0 ? 1 : 0));
    }
  // The longest lowering path: depth of the sink.
  CHECK(L.depth(L.seven_bar()) == 27);
}

TEST_CASE("labels") {
  const auto& L = letters();
  CHECK(L.label(L.x1()) == "7");
  CHECK(L.label(L.x2()) == bar("6") + "5");
  CHECK(L.label(L.x3()) == bar("4") + "23");
  CHECK(L.label(L.x4()) == bar("1") + "2");
  CHECK(L.label(L.x4p()) == bar("2") + "3");
  CHECK(L.label(L.x5()) == bar("12") + "4");
  CHECK(L.label(L.x6()) == bar("2") + "6");
  CHECK(L.label(L.x7()) == bar("2") + "1");
  CHECK(L.label(L.seven()) == "7");
  CHECK(L.label(L.seven_six()) == bar("7") + "6");
  CHECK(L.label(L.seven_one()) == bar("7") + "1");
  CHECK(L.label(L.seven_bar()) == bar("7"));
  CHECK(L.seven() == L.x1());

  // Labels are unique and id_by_label inverts them.
  std::set<std::string> labels;
  for (int v = 0; v < 56; ++v) {
    labels.insert(L.label(v));
    CHECK(L.id_by_label(L.label(v)) == v);
    CHECK(L.id_by_weight(L.weight(v)) == v);
  }
  CHECK(labels.size() == 56);
  CHECK_THROWS_AS(letters().id_by_label("nope"), std::invalid_argument);

  // First lowering step from the top.
  CHECK(L.f(L.seven(), 7) == L.seven_six());
  CHECK(L.f(L.seven(), 6) == -1);
}

TEST_CASE("letter order: reachability by lowering") {
  const auto& L = letters();
  // Reflexive, antisymmetric, transitive; ids form a linear extension.
  long long comparable = 0;
  for (int a = 0; a < 56; ++a) {
    CHECK(L.le(a, a));
    for (int b = 0; b < 56; ++b) {
      if (L.le(a, b)) {
        ++comparable;
        if (a != b) {
          CHECK(a < b);
          CHECK_FALSE(L.le(b, a));
        }
      }
      for (int c = 0; c < 56; ++c)
        if (L.le(a, b) && L.le(b, c)) CHECK(L.le(a, c));
    }
  }
  // Ordered comparable pairs = length-2 multichains = dim V(2 varpi_7).
  CHECK(comparable == 1463);

  // Source below everything, sink above everything.
  for (int b = 0; b < 56; ++b) {
    CHECK(L.le(L.x1(), b));
    CHECK(L.le(b, L.seven_bar()));
  }

  // x4 and x4' are incomparable; the other distinguished letters fall in
  // the chains x1 < x2 < x3 < {x4, x4'} < x5 < x6 < x7.
  CHECK_FALSE(L.le(L.x4(), L.x4p()));
  CHECK_FALSE(L.le(L.x4p(), L.x4()));
  int chain[] = {L.x1(), L.x2(), L.x3(), L.x4(), L.x5(), L.x6(), L.x7()};
  for (int i = 0; i + 1 < 7; ++i) CHECK(L.le(chain[i], chain[i + 1]));
  CHECK(L.le(L.x3(), L.x4p()));
  CHECK(L.le(L.x4p(), L.x5()));
  // The four I_{0,7}-highest letters form a chain.
  CHECK(L.le(L.seven(), L.seven_six()));
  CHECK(L.le(L.seven_six(), L.seven_one()));
  CHECK(L.le(L.seven_one(), L.seven_bar()));
}

TEST_CASE("twelve letters admit f_7") {
  const auto& L = letters();
  int n = 0;
  for (int v = 0; v < 56; ++v)
    if (L.f(v, 7) >= 0) ++n;
  CHECK(n == 12);
}

TEST_CASE("words follow the signature rule") {
  const auto& L = letters();
  // [7, 7] lowers on the right, then on the left.
  Word w{static_cast<std::uint8_t>(L.seven()), static_cast<std::uint8_t>(L.seven())};
  auto w1 = word_f(w, 7);
  REQUIRE(w1.has_value());
  CHECK((*w1)[0] == L.seven());
  CHECK((*w1)[1] == L.seven_six());
  auto w2 = word_f(*w1, 7);
  REQUIRE(w2.has_value());
  CHECK((*w2)[0] == L.seven_six());
  CHECK((*w2)[1] == L.seven_six());
  CHECK_FALSE(word_f(*w2, 7).has_value());
  // e inverts f.
  CHECK(word_e(*w2, 7) == w1);
  CHECK(word_e(*w1, 7) == w);
  CHECK_FALSE(word_e(w, 7).has_value());
  // phi/eps along that string.
  CHECK(word_phi(w, 7) == 2);
  CHECK(word_eps(w, 7) == 0);
  CHECK(word_phi(*w1, 7) == 1);
  CHECK(word_eps(*w1, 7) == 1);
  // Weight adds up.
  ClassicalWeight two_top{0, 0, 0, 0, 0, 0, 2};
  CHECK(word_weight(w) == two_top);

  // A length-1 word generates the letter crystal again.
  WordDomain dom;
  auto gen = generate_crystal(dom, {Word{static_cast<std::uint8_t>(L.x5())}});
  CHECK(gen.graph.size() == 56);
  CHECK(check_crystal_axioms(gen.graph).empty());

  // Key ordering is id order for single letters.
  CHECK(word_key(Word{0}) < word_key(Word{1}));
  CHECK(word_label(w) == std::string("7") + "\xE2\x8A\x97" + "7");
}
