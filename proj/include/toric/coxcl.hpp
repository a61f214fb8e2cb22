#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

/// Element of Cl(Y) in the canonical coordinates fixed by class_group:
/// a free part of length free_rank and one residue in [0, d) per
/// torsion factor d.
struct DivisorClass {
  std::vector<Int> free_part;
  std::vector<Int> torsion_part;
  bool operator==(const DivisorClass&) const = default;
};

/// Cl(Y) together with the grading map ray -> class.  The projection
/// rows come from the Smith witnesses of the ray matrix; the free rows
/// are re-based to the Hermite-canonical kernel basis so the output is
/// reproducible run to run.
struct ClassGroupData {
  std::vector<Int> torsion_factors;  // > 1, increasing divisibility chain
  IntMatrix free_rows;               // free_rank x b
  IntMatrix torsion_rows;            // torsion count x b

  std::size_t free_rank() const { return free_rows.rows(); }
  std::size_t ray_count() const { return free_rows.cols(); }
  const std::vector<Int>& torsion() const { return torsion_factors; }

  DivisorClass zero_class() const;
  /// Class of the invariant divisor sum c_i D_i.
  DivisorClass divisor_class(std::span<const Int> coeffs) const;
  /// The grading: class of the prime divisor D_i.
  DivisorClass ray_class(std::size_t i) const;

  DivisorClass add(const DivisorClass& a, const DivisorClass& b) const;
  DivisorClass subtract(const DivisorClass& a, const DivisorClass& b) const;
  DivisorClass scale(const Int& k, const DivisorClass& a) const;

  std::string describe_group() const;                    // e.g. "Z (+) Z/5"
  std::string describe_class(const DivisorClass&) const;
};

ClassGroupData class_group(const Fan& fan);

/// Hom(Cl(Y), C^*): a torus times a finite abelian group.
struct GroupD {
  std::size_t torus_rank = 0;
  std::vector<Int> finite_part;
  bool connected() const { return finite_part.empty(); }
  std::string describe() const;  // e.g. "C* x Z/5"
};

GroupD group_D(const ClassGroupData& cl);

/// The locus removed before taking the quotient.  `generators` are the
/// minimal monomial supports (complements of the maximal cones);
/// `components` are its irreducible components, each the vanishing set
/// of the listed coordinates (minimal transversals of the generators).
/// Components are computed only for ray counts <= 20.
struct IrrelevantLocus {
  std::vector<ConeIndexSet> generators;
  std::vector<ConeIndexSet> components;
  bool is_origin(std::size_t ray_count) const;
};

IrrelevantLocus irrelevant_locus(const Fan& fan);

/// Class of a monomial with the given exponents (length b, entries >= 0).
DivisorClass degree_of_monomial(const ClassGroupData& cl,
                                std::span<const Int> exponents);

struct Homogeneity {
  std::optional<DivisorClass> degree;  // set iff all monomials share it
  struct Mismatch {
    std::size_t first = 0, second = 0;
    DivisorClass first_degree, second_degree;
  };
  std::optional<Mismatch> mismatch;
  bool homogeneous() const { return degree.has_value(); }
};

Homogeneity is_homogeneous(const ClassGroupData& cl,
                           const std::vector<std::vector<Int>>& monomials);

/// Strict convexity of the support function of the invariant divisor
/// sum c_i D_i, which must represent `cls` (checked).  Exact rational
/// comparisons throughout.
bool is_ample(const Fan& fan, const ClassGroupData& cl, const DivisorClass& cls,
              std::span<const Int> witness_coeffs);

/// Invariant-divisor witness for a class, implemented for rank-one
/// torsion-free Cl only.
std::optional<std::vector<Int>> lift_rank_one(const ClassGroupData& cl,
                                              const DivisorClass& cls);

}  // namespace toric
