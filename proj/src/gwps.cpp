#include "toric/gwps.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace toric {

WeightSystem::WeightSystem(std::vector<Int> w) : weights(std::move(w)) {
  if (weights.size() < 2) throw InputError("weight system needs at least two weights");
  Int g = 0;
  for (const Int& a : weights) {
    if (a < 1) throw InputError("weights must be positive");
    g = gcd(g, a);
  }
  if (g != 1)
    throw InputError("weights have common factor " + g.get_str() +
                     "; divide it out first");
}

std::string WeightSystem::wps_name() const {
  bool all_one = std::all_of(weights.begin(), weights.end(),
                             [](const Int& a) { return a == 1; });
  std::ostringstream os;
  if (all_one) {
    os << "P^" << dim();
  } else {
    os << "P(";
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (i) os << ",";
      os << weights[i].get_str();
    }
    os << ")";
  }
  return os.str();
}

bool is_gwps(const Fan& fan) {
  return fan.ray_count() == fan.lattice_rank + 1;
}

WeightSystem weights_of(const Fan& fan) {
  IntMatrix k = kernel_basis(fan.rays);
  if (k.rows() != 1)
    throw InputError("weights_of: ray relation space has rank " +
                     std::to_string(k.rows()) + ", expected 1");
  std::vector<Int> w = k.row(0);
  for (const Int& a : w)
    if (a <= 0)
      throw InputError(
          "weights_of: ray relation has mixed signs or zero entries; the rays "
          "do not positively span");
  return WeightSystem(std::move(w));
}

std::string GwpsClassification::describe() const {
  if (kind == GwpsKind::weighted_projective_space) return weights.wps_name();
  std::ostringstream os;
  os << weights.wps_name() << " quotient by ";
  for (std::size_t i = 0; i < quotient_group.size(); ++i) {
    if (i) os << " x ";
    os << "Z/" << quotient_group[i].get_str();
  }
  return os.str();
}

GwpsClassification classify(const Fan& fan) {
  if (!is_gwps(fan))
    throw InputError("classify: fan has " + std::to_string(fan.ray_count()) +
                     " rays on rank " + std::to_string(fan.lattice_rank) +
                     ", not a generalized weighted projective space");
  ClassGroupData cl = class_group(fan);
  GwpsClassification out{cl.torsion().empty() ? GwpsKind::weighted_projective_space
                                              : GwpsKind::quotient,
                         weights_of(fan), cl.torsion()};
  return out;
}

bool weights_well_formed(const WeightSystem& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    Int g = 0;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (j != i) g = gcd(g, w.weights[j]);
    if (g != 1) return false;
  }
  return true;
}

IntMatrix wps_ray_images(const WeightSystem& w) {
  const std::size_t b = w.size();
  IntMatrix row(1, b);
  for (std::size_t i = 0; i < b; ++i) row(0, i) = w.weights[i];
  SmithForm s = smith_normal_form(row);
  // left is 1x1 = (+-1); arrange w * right = (1, 0, ..., 0)
  IntMatrix right = s.right;
  if (s.left(0, 0) == -1)
    for (std::size_t i = 0; i < b; ++i) right(i, 0) = -right(i, 0);
  // quotient coordinates: drop the first column
  IntMatrix rays(b, b - 1);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 1; j < b; ++j) rays(i, j - 1) = right(i, j);
  return rays;
}

Fan fan_from_weights(const WeightSystem& w) {
  if (!weights_well_formed(w))
    throw InputError("fan_from_weights: weights " + w.wps_name() +
                     " are not well formed; ray images would not be primitive");
  IntMatrix raw = wps_ray_images(w);
  std::vector<std::vector<Int>> rows;
  for (std::size_t i = 0; i < raw.rows(); ++i) rows.push_back(primitive(raw.row(i)));
  Fan fan;
  fan.lattice_rank = w.dim();
  fan.rays = IntMatrix::from_rows(rows);
  // descending omission yields the cones in lexicographic order
  for (std::size_t skip = w.size(); skip-- > 0;) {
    ConeIndexSet cone;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (i != skip) cone.push_back(i);
    fan.max_cones.push_back(std::move(cone));
  }
  return fan;
}

namespace {

// Hermite basis (rows) of the lattice q*Z^rank + sum Z*(q*g), together
// with the scale q.
std::pair<IntMatrix, Int> scaled_superlattice_basis(
    std::size_t rank, const std::vector<std::vector<Rat>>& gens) {
  Int q = 1;
  for (const auto& g : gens) {
    if (g.size() != rank)
      throw InputError("superlattice generator has wrong length");
    for (const Rat& x : g) q = lcm(q, Int(x.get_den()));
  }
  std::vector<std::vector<Int>> rows;
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<Int> r(rank, Int(0));
    r[i] = q;
    rows.push_back(std::move(r));
  }
  for (const auto& g : gens) {
    std::vector<Int> r(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      Rat scaled = Rat(q) * g[i];
      if (scaled.get_den() != 1)
        throw Error("scaled_superlattice_basis: lcm scaling failed");
      r[i] = scaled.get_num();
    }
    rows.push_back(std::move(r));
  }
  HermiteForm hf = hermite_normal_form(IntMatrix::from_rows(rows));
  IntMatrix basis(rank, rank);
  for (std::size_t i = 0; i < rank; ++i) {
    if (hf.h.is_zero_row(i))
      throw InputError("superlattice generators do not span a finite-index lattice");
    for (std::size_t j = 0; j < rank; ++j) basis(i, j) = hf.h(i, j);
  }
  return {std::move(basis), q};
}

}  // namespace

Int superlattice_index(std::size_t rank, const std::vector<std::vector<Rat>>& gens) {
  if (gens.empty()) return 1;
  auto [basis, q] = scaled_superlattice_basis(rank, gens);
  Int det = determinant(basis);
  Int qn = 1;
  for (std::size_t i = 0; i < rank; ++i) qn *= q;
  if (det == 0 || qn % det != 0)
    throw Error("superlattice_index: inconsistent basis determinant");
  return qn / det;
}

Fan refine_lattice(const Fan& fan, const std::vector<std::vector<Rat>>& gens) {
  if (gens.empty()) return fan;
  auto [basis, q] = scaled_superlattice_basis(fan.lattice_rank, gens);
  IntMatrix bt = basis.transposed();

  std::vector<std::vector<Int>> new_rays;
  for (std::size_t i = 0; i < fan.ray_count(); ++i) {
    std::vector<Int> rhs = fan.rays.row(i);
    for (Int& x : rhs) x *= q;
    auto sol = solve(bt, std::span<const Int>(rhs));
    if (!sol) throw Error("refine_lattice: superlattice basis is singular");
    std::vector<Int> coords(fan.lattice_rank);
    for (std::size_t j = 0; j < fan.lattice_rank; ++j) {
      if ((*sol)[j].get_den() != 1)
        throw Error("refine_lattice: ray left the lattice");
      coords[j] = (*sol)[j].get_num();
    }
    new_rays.push_back(primitive(coords));
  }

  Fan out;
  out.lattice_rank = fan.lattice_rank;
  out.rays = IntMatrix::from_rows(new_rays);
  out.max_cones = fan.max_cones;
  return out;
}

namespace {

IntMatrix column_hnf(const IntMatrix& a) {
  return hermite_normal_form(a.transposed()).h.transposed();
}

}  // namespace

bool lattice_isomorphic(const Fan& a, const Fan& b) {
  if (a.lattice_rank != b.lattice_rank) return false;
  if (a.ray_count() != b.ray_count()) return false;
  if (a.max_cones.size() != b.max_cones.size()) return false;
  const std::size_t n = a.ray_count();
  if (n > 9) throw InputError("lattice_isomorphic: too many rays for permutation search");

  IntMatrix canon_a = column_hnf(a.rays);
  std::set<ConeIndexSet> cones_b(b.max_cones.begin(), b.max_cones.end());

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // candidate matching: ray i of `a` corresponds to ray perm[i] of `b`
    IntMatrix p = b.rays.select_rows(perm);
    if (column_hnf(p) != canon_a) continue;
    bool cones_match = true;
    for (const auto& cone : a.max_cones) {
      ConeIndexSet image;
      for (std::size_t i : cone) image.push_back(perm[i]);
      std::sort(image.begin(), image.end());
      if (!cones_b.count(image)) {
        cones_match = false;
        break;
      }
    }
    if (cones_match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace toric
