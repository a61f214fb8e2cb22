#pragma once

#include <vector>

#include "toric/fan.hpp"

namespace toric::reference {

/// Serial reference for simplex_interior_points: walks the bounding
/// box one point at a time and decides membership with a rational
/// row-reduction of the defining system (no Gram/adjugate shortcut).
std::vector<std::vector<Int>> simplex_lattice_points(const IntMatrix& gens,
                                                     std::uint64_t max_candidates);

/// Serial reference for sample_membership: same point stream, but each
/// membership test performs a fresh exact solve.
CoverageStats membership_stats(const Fan& fan, std::size_t n_points,
                               std::uint64_t seed);

/// Basis-extension test via the gcd of all maximal minors; the
/// independent route against the Smith-form smoothness test.
bool smooth_via_minor_gcd(const IntMatrix& gens);

}  // namespace toric::reference
