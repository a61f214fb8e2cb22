#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toric/exactmat.hpp"
#include "toric/parallel.hpp"

namespace toric {

using ConeIndexSet = std::vector<std::size_t>;  // sorted ascending

/// Rational simplicial fan: primitive rays (one per row) and maximal
/// cones as index sets into the ray list.
struct Fan {
  std::size_t lattice_rank = 0;
  IntMatrix rays;
  std::vector<ConeIndexSet> max_cones;

  std::size_t ray_count() const { return rays.rows(); }
  IntMatrix cone_rays(std::span<const std::size_t> cone) const {
    return rays.select_rows(cone);
  }

  bool operator==(const Fan&) const = default;
};

struct Violation {
  std::string message;
  std::vector<std::size_t> ray_indices;
  std::vector<std::size_t> cone_indices;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

struct CompletenessOptions {
  std::size_t sample_points = 1024;
  std::uint64_t seed = 0x746f726963ULL;
};

/// Checks every structural invariant (primitive distinct rays,
/// simplicial full-dimensional cones, pairwise intersection in common
/// faces) plus completeness; violations are collected, not thrown.
ValidationReport validate(const Fan& fan, Exec exec = Exec::parallel,
                          const CompletenessOptions& copts = {});

/// Ridge regularity (every ridge in exactly two maximal cones) plus
/// dual-graph connectivity, cross-checked by random membership
/// sampling of the support.
bool is_complete(const Fan& fan, const CompletenessOptions& opts = {},
                 Exec exec = Exec::parallel);

/// True iff the cone's rays extend to a Z-basis of the lattice.
bool cone_is_smooth(const Fan& fan, std::span<const std::size_t> cone);

struct EnumerationBudget {
  std::uint64_t max_candidates = 1'000'000;
};

/// True iff conv{0, rays of the cone} contains no lattice point other
/// than 0 and the ray generators.  Scans the bounding box of the
/// simplex; a box larger than the budget raises BudgetError rather
/// than guessing.
bool cone_is_terminal(const Fan& fan, std::span<const std::size_t> cone,
                      const EnumerationBudget& budget = {},
                      Exec exec = Exec::parallel);

/// Lattice points of conv{0, rows of gens} minus {0, generators}.
/// The terminality witness list; empty means terminal.
std::vector<std::vector<Int>> simplex_interior_points(
    const IntMatrix& gens, const EnumerationBudget& budget = {},
    Exec exec = Exec::parallel);

struct SingularityReport {
  struct ConeStatus {
    ConeIndexSet cone;
    bool smooth = false;
  };
  std::vector<ConeStatus> cones;              // every distinct face, dim >= 1
  std::optional<std::size_t> singular_codim;  // nullopt <=> variety smooth
  bool isolated = false;  // all singular cones full-dimensional
  std::optional<bool> terminal;

  bool smooth() const { return !singular_codim.has_value(); }
};

SingularityReport singularity_report(const Fan& fan, bool check_terminal = false,
                                     const EnumerationBudget& budget = {},
                                     Exec exec = Exec::parallel);

struct CoverageStats {
  std::size_t points = 0;
  std::size_t uncovered = 0;         // in no maximal cone
  std::size_t interior_overlap = 0;  // interior of two or more cones
  bool consistent() const { return uncovered == 0 && interior_overlap == 0; }
};

/// Random-point membership statistics over the maximal cones; the
/// sample is generated once from the seed, so serial and parallel runs
/// agree exactly.
CoverageStats sample_membership(const Fan& fan, std::size_t n_points,
                                std::uint64_t seed, Exec exec = Exec::parallel);

/// All distinct nonempty faces of the maximal cones (subsets of each
/// index set), sorted by dimension then lexicographically.
std::vector<ConeIndexSet> distinct_faces(const Fan& fan);

}  // namespace toric
