#pragma once

#include "toric/fan.hpp"
#include "toric/gwps.hpp"

namespace toric::corpus {

/// Fan of P^n: rays e_1..e_n and -(1,..,1), maximal cones all
/// n-subsets in lexicographic order.
Fan projective_space(std::size_t n);

Fan p1xp1();

/// The three-dimensional quotient with four rays
/// (1,0,0), (0,1,0), (1,-3,5), (-2,2,-5).
Fan example2();

/// The four-dimensional quotient P^4 / (Z/3): five rays summing to
/// zero, class group Z (+) Z/3.
Fan example3();

/// Superlattice generator (1/3)(1,1,2,2) behind example3.
std::vector<std::vector<Rat>> example3_gens();

/// Superlattice generator (1/p)(1, 2, ..., p-1) realizing the diagonal
/// Z/p action on P^{p-1}.
std::vector<std::vector<Rat>> example4_gens(unsigned p);

/// P^{p-1} read in the refined lattice: the quotient by the diagonal
/// Z/p action.
Fan example4(unsigned p);

}  // namespace toric::corpus
