// Root-system utilities: positive roots, the Weyl dimension formula with
// exact integer arithmetic, and Weyl-group orbits of weights.
//
// A root system is described abstractly by its Cartan matrix; roots and
// weights are integer vectors in the fundamental-weight basis, so the
// pairing <alpha^vee, w> of a coroot with a weight is the dot product of the
// root's simple-coroot coordinates with the weight's coefficient vector.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <vector>

#include "e7kr/cartan.hpp"

namespace e7kr {

using BigInt = boost::multiprecision::cpp_int;

struct RootSystem {
  int rank = 0;
  // cartan[i][j] = <alpha_i^vee, alpha_j>, 0-based.
  std::vector<std::vector<int>> cartan;
  // Positive roots in simple-root coordinates, found by closing the simple
  // roots under root addition (height by height).
  std::vector<std::vector<int>> positive_roots;
};

RootSystem root_system_from_cartan(std::vector<std::vector<int>> cartan);
RootSystem root_system_e7();
RootSystem root_system_e6();  // classical nodes 1..6 of the E7 diagram
RootSystem root_system_a(int n);

// dim V(lambda) by the Weyl dimension formula,
//   prod_{alpha > 0} <lambda + rho, alpha^vee> / <rho, alpha^vee>,
// evaluated exactly.  lambda is given in fundamental-weight coefficients
// (0-based, length = rank); for simply laced systems <w, alpha^vee> is the
// sum of the simple-coroot coordinates of alpha weighted by w's coefficients.
BigInt weyl_dimension(const RootSystem& rs, const std::vector<int>& lambda);

// Orbit of a classical E7 weight under the Weyl group, computed by closing
// under the simple reflections s_i(w) = w - <alpha_i^vee, w> alpha_i.
std::vector<ClassicalWeight> weyl_orbit_e7(const ClassicalWeight& w);

}  // namespace e7kr
