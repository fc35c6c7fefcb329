// The 56-element minuscule E7 crystal B(varpi_7) ("letters"), its partial
// order, and tensor words of letters.
//
// Every weight in this crystal has all fundamental-weight coefficients in
// {-1, 0, 1}, and the weights are exactly the Weyl orbit of varpi_7.  A
// letter is displayed by listing the nodes with coefficient -1 in ascending
// order, each with a combining macron, followed by the nodes with
// coefficient +1 in ascending order: the highest letter is "7", below it
// sits "6̄5" (coefficient -1 on node 6 and +1 on node 5), and the lowest is
// "7̄".
//
// Letters are numbered 0..55 in a canonical order: primarily by depth (the
// number of lowering steps from the highest letter, well defined because the
// crystal is minuscule and hence graded) and secondarily by weight vector,
// lexicographically.  The letter order le(a, b) holds when b is reachable
// from a by lowering operators; ids form a linear extension of it.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "e7kr/cartan.hpp"
#include "e7kr/crystal.hpp"

namespace e7kr {

class LetterCrystal {
 public:
  static const LetterCrystal& instance();

  int size() const { return 56; }
  const CrystalGraph& graph() const { return graph_; }

  const ClassicalWeight& weight(int id) const { return weights_[id]; }
  const std::string& label(int id) const { return graph_.labels[id]; }
  int depth(int id) const { return depth_[id]; }

  int f(int id, int color) const;  // -1 when undefined
  int e(int id, int color) const;
  int phi(int id, int color) const;  // 0 or 1 (minuscule)
  int eps(int id, int color) const;

  // Letter order: le(a, b) iff b is reachable from a by lowering steps.
  bool le(int a, int b) const {
    return (reach_down_[a] >> static_cast<unsigned>(b)) & 1u;
  }

  int id_by_label(const std::string& label) const;    // throws if unknown
  int id_by_weight(const ClassicalWeight& w) const;   // throws if unknown

  // Distinguished letters.  x1..x7 and x4p are the eight letters whose
  // multichains are the I_{0,2}-highest rows; seven, seven_six, seven_one and
  // seven_bar ("7", "7̄6", "7̄1", "7̄") form the chain of I_{0,7}-highest
  // letters.
  int x1() const { return x_[0]; }
  int x2() const { return x_[1]; }
  int x3() const { return x_[2]; }
  int x4() const { return x_[3]; }
  int x4p() const { return x_[4]; }
  int x5() const { return x_[5]; }
  int x6() const { return x_[6]; }
  int x7() const { return x_[7]; }
  int seven() const { return chain_[0]; }
  int seven_six() const { return chain_[1]; }
  int seven_one() const { return chain_[2]; }
  int seven_bar() const { return chain_[3]; }

 private:
  LetterCrystal();

  CrystalGraph graph_;
  std::vector<ClassicalWeight> weights_;
  std::vector<int> depth_;
  std::vector<std::uint64_t> reach_down_;
  int x_[8];
  int chain_[4];
};

inline const LetterCrystal& letters() { return LetterCrystal::instance(); }

// Renders a weight with coefficients in {-1, 0, 1} in letter notation.
std::string letter_style_label(const ClassicalWeight& w);

// --- Tensor words of letters -------------------------------------------------
//
// A word is a sequence of letter ids, leftmost written factor first.  The
// operators follow the signature rule described in crystal.hpp with each
// letter contributing phi_i then eps_i.

using Word = std::vector<std::uint8_t>;

std::optional<Word> word_f(const Word& w, int color);
std::optional<Word> word_e(const Word& w, int color);
int word_phi(const Word& w, int color);
int word_eps(const Word& w, int color);
ClassicalWeight word_weight(const Word& w);
std::string word_key(const Word& w);
std::string word_label(const Word& w);

// Domain over fixed-length words for generate_crystal, using the seven
// classical colors.
struct WordDomain {
  using Element = Word;
  std::vector<int> colors() const { return index_set_classical(); }
  std::vector<int> weight_nodes() const { return index_set_classical(); }
  std::vector<int> alpha(int color) const;
  std::string key(const Word& w) const { return word_key(w); }
  std::string label(const Word& w) const { return word_label(w); }
  std::vector<int> weight(const Word& w) const;
  std::optional<Word> f(const Word& w, int color) const { return word_f(w, color); }
  std::optional<Word> e(const Word& w, int color) const { return word_e(w, color); }
};

}  // namespace e7kr
