// Static Dynkin-diagram data for affine E7 and its classical subalgebra,
// plus the type-A diagrams used for Levi branching.
//
// Node conventions:
//   affine E7:   nodes 0..7 arranged as the path 0-1-3-4-5-6-7 with node 2
//                attached to node 4.
//   classical E7: nodes 1..7 (the affine diagram with node 0 removed).
//   A_n:          nodes 1..n arranged as a path.
//
// Weights are stored as integer coefficient vectors on the fundamental
// weights.  ClassicalWeight is indexed by nodes 1..7 (position i-1),
// AffineWeight by nodes 0..7 (position i).  The null-root direction delta is
// not tracked; affine weights of level zero are represented by their
// classical part together with the Lambda_0 coefficient -level(classical).
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace e7kr {

using ClassicalWeight = std::array<int, 7>;  // coefficients on varpi_1..varpi_7
using AffineWeight = std::array<int, 8>;     // coefficients on Lambda_0..Lambda_7

// Entry <alpha_i^vee, alpha_j> of the affine E7 Cartan matrix, i, j in 0..7.
// Throws std::domain_error for out-of-range nodes.
int cartan_entry(int i, int j);

// Entry of the classical E7 Cartan matrix, i, j in 1..7.
int cartan_entry_classical(int i, int j);

// Entry of the A_n Cartan matrix, i, j in 1..n.
int cartan_entry_a(int n, int i, int j);

// Dual marks (a_0^vee, ..., a_7^vee) = (1, 2, 2, 3, 4, 3, 2, 1).  These give
// the level form: level(Lambda_i) = a_i^vee.
const std::array<int, 8>& dual_marks();

// level of a classical weight, sum_i a_i^vee c_i over i = 1..7.
int classical_level(const ClassicalWeight& w);

// level of an affine weight, sum over all eight coefficients.
int level(const AffineWeight& w);

// Level-zero affinization: copy the classical coefficients and set the
// Lambda_0 coefficient to -classical_level(w).
AffineWeight affinize(const ClassicalWeight& w);

// Simple root alpha_i as a column of the relevant Cartan matrix.
ClassicalWeight simple_root_classical(int i);  // i in 1..7
AffineWeight simple_root_affine(int i);        // i in 0..7
std::vector<int> simple_root_a(int n, int i);  // i in 1..n, rank-n vector

// Standard index sets.
std::vector<int> index_set_affine();     // I      = {0..7}
std::vector<int> index_set_classical();  // I_0    = {1..7}
std::vector<int> index_set_i2();         // I_2    = I  minus {2}
std::vector<int> index_set_i02();        // I_{0,2} = I_0 minus {2}
std::vector<int> index_set_i07();        // I_{0,7} = I_0 minus {7}

// Dictionary between the A7 subdiagram (affine E7 with node 2 removed) and
// A7 path nodes 1..7.  The order-reversing identification sends E7 node 7 to
// A7 node 1, node 6 to 2, 5 to 3, 4 to 4, 3 to 5, 1 to 6, and node 0 to 7.
int a7_node_of_e7(int i);  // i in I_2
int e7_node_of_a7(int a);  // a in 1..7

// All dominant affine weights of the given level (coefficient vectors on
// Lambda_0..Lambda_7 with nonnegative entries), sorted lexicographically.
std::vector<AffineWeight> enumerate_level_weights(int ell);

// Thrown when a computation would exceed a user-supplied resource budget.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace e7kr
