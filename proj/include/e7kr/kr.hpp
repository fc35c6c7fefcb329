// The Kirillov-Reshetikhin crystal structure on length-s multichains: the
// classical operators come from row.hpp, and the affine pair e_0 / f_0 is
// synthesized through the order-reversing embedding of the A7 subdiagram
// (affine nodes {0,1,3,4,5,6,7} read as the A7 path 1..7).
//
// The construction, stepwise:
//  * psi identifies a row b with a pair (head parameters, A6 tableau): raise
//    b to the I_{0,2}-highest element of its component (colors {1,3,4,5,6,7})
//    and transport the lowering string to the superstandard tableau of the
//    matching A6 weight, translating colors through the A7 dictionary.
//  * pad_even_columns with filler 8 turns that A6 tableau (entries 1..7)
//    into an A7 tableau whose shape has even columns; e_0/f_0 act there as
//    the A7 operators e_7/f_7 (entry 7 <-> 8), and stripping the 8s returns
//    to an A6 tableau whose component parameters are recovered with
//    params_from_mu.
//  * psi_inv reverses psi.
// affine_f0/affine_e0 package the whole round trip for a single row;
// build_kr builds the full graph once per component instead.
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "e7kr/cartan.hpp"
#include "e7kr/crystal.hpp"
#include "e7kr/row.hpp"
#include "e7kr/ssyt.hpp"

namespace e7kr {

// A6 weight (coefficients on the A6 fundamental weights) of the component
// with the given head parameters:
//   (m1, m6 - m2, m2, m5 - m3, m3 + m4', m7 - m4 - m5).
std::vector<int> mu_of_params(const CompParams& p);

// Inverse of mu_of_params at a fixed total length s: the unique parameter
// vector with that A6 weight, if one exists.  (The components of B(s varpi_7)
// under the A6 Levi are multiplicity-free, which is what makes this
// single-valued; tests verify it.)
std::optional<CompParams> params_from_mu(const std::vector<int>& mu, int s);

struct A6Image {
  CompParams params;  // head of the component
  Ssyt tableau;       // position inside B_{A6}(mu_of_params(params))
};

A6Image psi(const Row& b);
Row psi_inv(const A6Image& image, int s);

std::optional<Row> affine_f0(const Row& b);
std::optional<Row> affine_e0(const Row& b);

// String lengths for color 0, computed by walking affine_e0 / affine_f0.
int affine_eps0(const Row& b);
int affine_phi0(const Row& b);

// --- Whole-crystal construction ---------------------------------------------

struct KrOptions {
  std::size_t max_nodes = 50'000'000;
  int jobs = 1;  // worker threads for the color-0 sweep
  std::filesystem::path cache_dir;  // empty: no caching
};

struct KrCrystal {
  int s = 0;
  CrystalGraph graph;      // colors 0..7, affine weights on Lambda_0..Lambda_7
  std::vector<Row> nodes;  // aligned with graph ids
};

// Builds B^{7,s}.  Classical edges come from the row operators; color-0
// edges are computed per A6 component via the tableau picture (one tableau
// crystal and one transport per component, then a batch pad / lower / strip
// sweep).  With a cache directory set, the graph is loaded from / saved to
// kr_s<NN>.json inside it.
KrCrystal build_kr(int s, const KrOptions& options = {});

// Cache format: a small JSON object carrying the node keys and lowering
// edges; everything else (weights, labels, inverse edges) is recomputed on
// load.  kr_from_cache_text throws std::invalid_argument on malformed input
// or a length mismatch.
std::string kr_cache_text(const KrCrystal& kr);
KrCrystal kr_from_cache_text(const std::string& text, int expected_s);

// Dominant A7 weights of the components of B(s varpi_7) viewed through the
// A7 dictionary and even-column padding:
//   mu_hat = m6 fwA2 + m5 fwA4 + (m7 - m4 - m5) fwA6
// over m4 + m5 + m6 + m7 = s with m4 + m5 <= m7, sorted; multiplicity-free.
std::vector<std::vector<int>> a7_components(int s);

// --- The I_{0,7} (E6) side ----------------------------------------------------

// Components of the restriction to colors {1..6}: the I_{0,7}-highest rows
// are the multichains over the chain 7 < 7̄6 < 7̄1 < 7̄ with multiplicities
// (a, b, c, d); the component weight depends only on (b, c) and appears with
// multiplicity s - b - c + 1.
struct E6Component {
  int b = 0, c = 0;        // weight b varpi_6 + c varpi_1 on the E6 side
  int multiplicity = 0;    // observed number of heads, s - b - c + 1
};

struct E6Decomposition {
  int s = 0;
  std::vector<E6Component> components;
  long long head_count = 0;  // (s+1)(s+2)(s+3)/6 compositions
};

E6Decomposition e6_decomposition(int s);

// The promotion-like twist of B^{7,s}: the unique bijection sending the
// I_{0,7}-highest row with chain multiplicities (a, b, c, d) to the one with
// (d, c, b, a) and intertwining f_i with f_{tau(i)} for i in {1..6}, where
// tau swaps 1<->6 and 3<->5.  It exchanges the color-7 and color-0 string
// data, which is how e_0/f_0 can be read off the classical crystal.
Row chain_twist(const Row& b);

// Report comparing the head map of chain_twist against a closed-form guess
// (b+c+d, c, b, a+b+c) for the image multiplicities; kept because the guess
// fails length preservation, while the observed map is (a,b,c,d)->(d,c,b,a).
struct ChainTwistHeadReport {
  int s = 0;
  bool closed_form_matches = false;  // the (b+c+d, c, b, a+b+c) guess
  bool reversal_matches = false;     // the (d, c, b, a) map
  std::string detail;
};

ChainTwistHeadReport chain_twist_head_report(int s);

}  // namespace e7kr
