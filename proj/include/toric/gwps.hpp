#pragma once

#include <string>
#include <vector>

#include "toric/coxcl.hpp"
#include "toric/fan.hpp"

namespace toric {

/// Positive weights a_0..a_N with gcd 1.
struct WeightSystem {
  std::vector<Int> weights;

  explicit WeightSystem(std::vector<Int> w);
  std::size_t size() const { return weights.size(); }
  std::size_t dim() const { return weights.size() - 1; }
  bool operator==(const WeightSystem&) const = default;

  std::string wps_name() const;  // "P^2" or "P(1,1,2)"
};

/// Ray count N+1 on an N-dimensional fan.
bool is_gwps(const Fan& fan);

/// The unique positive primitive relation among the rays.  Rejects
/// fans whose relation has mixed signs or zero coefficients (the rays
/// then do not positively span, contradicting completeness).
WeightSystem weights_of(const Fan& fan);

enum class GwpsKind { weighted_projective_space, quotient };

struct GwpsClassification {
  GwpsKind kind = GwpsKind::weighted_projective_space;
  WeightSystem weights;
  std::vector<Int> quotient_group;  // cyclic orders, empty iff kind is WPS

  std::string describe() const;
};

/// Weighted projective space, or a finite quotient of one; decided by
/// the torsion of the class group.
GwpsClassification classify(const Fan& fan);

/// Every leave-one-out gcd equals 1.
bool weights_well_formed(const WeightSystem& w);

/// Images of the standard basis of Z^{N+1} in Z^{N+1} / Z*(a_0..a_N),
/// written in the canonical basis from the Smith right transform; one
/// row per weight, not primitivized.  The rows are all primitive
/// exactly when the weights are well formed.
IntMatrix wps_ray_images(const WeightSystem& w);

/// The fan of P(a_0..a_N): ray images as above, maximal cones all
/// N-subsets.  Requires well-formed weights.
Fan fan_from_weights(const WeightSystem& w);

/// Re-reads the fan in the finite-index superlattice generated by Z^N
/// and the given rational vectors; rays are re-expressed in a
/// canonical (Hermite) basis and re-primitivized.  Realizes finite
/// abelian quotients of the variety.
Fan refine_lattice(const Fan& fan, const std::vector<std::vector<Rat>>& gens);

/// Index of Z^rank inside the superlattice spanned by it and the gens.
Int superlattice_index(std::size_t rank, const std::vector<std::vector<Rat>>& gens);

/// Equality of fans up to relabeling rays and a unimodular change of
/// lattice basis (column-Hermite canonical forms compared over ray
/// permutations; intended for small fans).
bool lattice_isomorphic(const Fan& a, const Fan& b);

}  // namespace toric
