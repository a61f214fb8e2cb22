#include "toric/coxcl.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace toric {

namespace {

Int reduce_mod(const Int& x, const Int& d) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return r;
}

}  // namespace

DivisorClass ClassGroupData::zero_class() const {
  DivisorClass c;
  c.free_part.assign(free_rank(), Int(0));
  c.torsion_part.assign(torsion_factors.size(), Int(0));
  return c;
}

DivisorClass ClassGroupData::divisor_class(std::span<const Int> coeffs) const {
  if (coeffs.size() != ray_count())
    throw InputError("divisor_class: coefficient vector has wrong length");
  DivisorClass c;
  c.free_part = mat_vec(free_rows, coeffs);
  c.torsion_part.resize(torsion_factors.size());
  for (std::size_t j = 0; j < torsion_factors.size(); ++j) {
    Int s = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) s += torsion_rows(j, i) * coeffs[i];
    c.torsion_part[j] = reduce_mod(s, torsion_factors[j]);
  }
  return c;
}

DivisorClass ClassGroupData::ray_class(std::size_t i) const {
  if (i >= ray_count()) throw InputError("ray_class: index out of range");
  std::vector<Int> e(ray_count(), Int(0));
  e[i] = 1;
  return divisor_class(e);
}

DivisorClass ClassGroupData::add(const DivisorClass& a, const DivisorClass& b) const {
  DivisorClass c;
  c.free_part.resize(free_rank());
  for (std::size_t i = 0; i < free_rank(); ++i)
    c.free_part[i] = a.free_part[i] + b.free_part[i];
  c.torsion_part.resize(torsion_factors.size());
  for (std::size_t j = 0; j < torsion_factors.size(); ++j)
    c.torsion_part[j] =
        reduce_mod(a.torsion_part[j] + b.torsion_part[j], torsion_factors[j]);
  return c;
}

DivisorClass ClassGroupData::subtract(const DivisorClass& a,
                                      const DivisorClass& b) const {
  DivisorClass c;
  c.free_part.resize(free_rank());
  for (std::size_t i = 0; i < free_rank(); ++i)
    c.free_part[i] = a.free_part[i] - b.free_part[i];
  c.torsion_part.resize(torsion_factors.size());
  for (std::size_t j = 0; j < torsion_factors.size(); ++j)
    c.torsion_part[j] =
        reduce_mod(a.torsion_part[j] - b.torsion_part[j], torsion_factors[j]);
  return c;
}

DivisorClass ClassGroupData::scale(const Int& k, const DivisorClass& a) const {
  DivisorClass c;
  c.free_part.resize(free_rank());
  for (std::size_t i = 0; i < free_rank(); ++i) c.free_part[i] = k * a.free_part[i];
  c.torsion_part.resize(torsion_factors.size());
  for (std::size_t j = 0; j < torsion_factors.size(); ++j)
    c.torsion_part[j] = reduce_mod(k * a.torsion_part[j], torsion_factors[j]);
  return c;
}

std::string ClassGroupData::describe_group() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank() == 1) {
    os << "Z";
    first = false;
  } else if (free_rank() > 1) {
    os << "Z^" << free_rank();
    first = false;
  }
  for (const Int& d : torsion_factors) {
    if (!first) os << " (+) ";
    os << "Z/" << d.get_str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string ClassGroupData::describe_class(const DivisorClass& c) const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.free_part.size(); ++i) {
    if (i) os << ",";
    os << c.free_part[i].get_str();
  }
  for (std::size_t j = 0; j < c.torsion_part.size(); ++j) {
    if (j || !c.free_part.empty()) os << ",";
    os << c.torsion_part[j].get_str() << " mod " << torsion_factors[j].get_str();
  }
  os << ")";
  return os.str();
}

ClassGroupData class_group(const Fan& fan) {
  const IntMatrix& b = fan.rays;
  SmithForm s = smith_normal_form(b);
  const std::size_t r = s.rank();

  // rows of `left` below the rank span the saturated left kernel;
  // swap in the canonical kernel basis so the grading is reproducible
  IntMatrix kernel = kernel_basis(b);
  if (kernel.rows() != b.rows() - r)
    throw Error("class_group: kernel rank mismatch");

  ClassGroupData cl;
  cl.free_rows = kernel.rows() ? kernel : IntMatrix(0, b.rows());
  std::vector<std::vector<Int>> trows;
  for (std::size_t i = 0; i < r; ++i)
    if (s.invariant_factors[i] > 1) {
      trows.push_back(s.left.row(i));
      cl.torsion_factors.push_back(s.invariant_factors[i]);
    }
  cl.torsion_rows = IntMatrix::from_rows(trows, b.rows());
  return cl;
}

GroupD group_D(const ClassGroupData& cl) {
  GroupD d;
  d.torus_rank = cl.free_rank();
  d.finite_part = cl.torsion_factors;
  return d;
}

std::string GroupD::describe() const {
  std::ostringstream os;
  bool first = true;
  if (torus_rank == 1) {
    os << "C*";
    first = false;
  } else if (torus_rank > 1) {
    os << "(C*)^" << torus_rank;
    first = false;
  }
  for (const Int& d : finite_part) {
    if (!first) os << " x ";
    os << "Z/" << d.get_str();
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

bool IrrelevantLocus::is_origin(std::size_t ray_count) const {
  if (generators.size() != ray_count) return false;
  for (const auto& g : generators)
    if (g.size() != 1) return false;
  return true;
}

IrrelevantLocus irrelevant_locus(const Fan& fan) {
  const std::size_t b = fan.ray_count();
  std::set<ConeIndexSet> complements;
  for (const auto& cone : fan.max_cones) {
    ConeIndexSet c;
    std::size_t k = 0;
    for (std::size_t i = 0; i < b; ++i) {
      while (k < cone.size() && cone[k] < i) ++k;
      if (k == cone.size() || cone[k] != i) c.push_back(i);
    }
    complements.insert(std::move(c));
  }

  IrrelevantLocus out;
  if (complements.count(ConeIndexSet{})) {
    // some cone uses every ray: the monomial ideal is the unit ideal
    out.generators = {ConeIndexSet{}};
    return out;
  }

  // minimal generators: drop proper supersets
  for (const auto& c : complements) {
    bool minimal = true;
    for (const auto& d : complements) {
      if (d.size() < c.size() &&
          std::includes(c.begin(), c.end(), d.begin(), d.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.generators.push_back(c);
  }
  std::sort(out.generators.begin(), out.generators.end());

  // irreducible components = minimal transversals of the generators
  if (b <= 20) {
    std::vector<std::uint32_t> gen_masks;
    for (const auto& g : out.generators) {
      std::uint32_t m = 0;
      for (std::size_t i : g) m |= 1u << i;
      gen_masks.push_back(m);
    }
    std::vector<std::uint32_t> kept;
    // by popcount, so supersets of kept transversals are never minimal
    std::vector<std::uint32_t> order((1u << b) - 1);
    for (std::uint32_t m = 1; m < (1u << b); ++m) order[m - 1] = m;
    std::stable_sort(order.begin(), order.end(),
                     [](std::uint32_t x, std::uint32_t y) {
                       return __builtin_popcount(x) < __builtin_popcount(y);
                     });
    for (std::uint32_t t : order) {
      bool hits_all = true;
      for (std::uint32_t g : gen_masks)
        if ((t & g) == 0) {
          hits_all = false;
          break;
        }
      if (!hits_all) continue;
      bool has_smaller = false;
      for (std::uint32_t k : kept)
        if ((k & t) == k) {
          has_smaller = true;
          break;
        }
      if (!has_smaller) kept.push_back(t);
    }
    for (std::uint32_t t : kept) {
      ConeIndexSet comp;
      for (std::size_t i = 0; i < b; ++i)
        if (t & (1u << i)) comp.push_back(i);
      out.components.push_back(std::move(comp));
    }
    std::sort(out.components.begin(), out.components.end());
  }
  return out;
}

DivisorClass degree_of_monomial(const ClassGroupData& cl,
                                std::span<const Int> exponents) {
  if (exponents.size() != cl.ray_count())
    throw InputError("degree_of_monomial: exponent vector has wrong length");
  for (const Int& e : exponents)
    if (e < 0) throw InputError("degree_of_monomial: negative exponent");
  return cl.divisor_class(exponents);
}

Homogeneity is_homogeneous(const ClassGroupData& cl,
                           const std::vector<std::vector<Int>>& monomials) {
  if (monomials.empty()) throw InputError("is_homogeneous: no monomials");
  Homogeneity h;
  DivisorClass first = degree_of_monomial(cl, monomials.front());
  for (std::size_t j = 1; j < monomials.size(); ++j) {
    DivisorClass d = degree_of_monomial(cl, monomials[j]);
    if (!(d == first)) {
      h.mismatch = Homogeneity::Mismatch{0, j, first, d};
      return h;
    }
  }
  h.degree = std::move(first);
  return h;
}

bool is_ample(const Fan& fan, const ClassGroupData& cl, const DivisorClass& cls,
              std::span<const Int> witness_coeffs) {
  if (witness_coeffs.size() != fan.ray_count())
    throw InputError("is_ample: witness has wrong length");
  if (!(cl.divisor_class(witness_coeffs) == cls))
    throw InputError("is_ample: witness does not represent the class");

  for (const auto& cone : fan.max_cones) {
    IntMatrix v = fan.cone_rays(cone);
    std::vector<Rat> rhs(cone.size());
    for (std::size_t i = 0; i < cone.size(); ++i)
      rhs[i] = Rat(-witness_coeffs[cone[i]]);
    auto m = solve(v, std::span<const Rat>(rhs));
    if (!m) throw InputError("is_ample: degenerate maximal cone");
    // strict convexity across every wall: <m, v_j> > -c_j off the cone
    std::vector<bool> in_cone(fan.ray_count(), false);
    for (std::size_t i : cone) in_cone[i] = true;
    for (std::size_t j = 0; j < fan.ray_count(); ++j) {
      if (in_cone[j]) continue;
      Rat lhs = 0;
      for (std::size_t k = 0; k < fan.lattice_rank; ++k)
        lhs += (*m)[k] * Rat(fan.rays(j, k));
      if (!(lhs > Rat(-witness_coeffs[j]))) return false;
    }
  }
  return true;
}

std::optional<std::vector<Int>> lift_rank_one(const ClassGroupData& cl,
                                              const DivisorClass& cls) {
  if (cl.free_rank() != 1 || !cl.torsion_factors.empty()) return std::nullopt;
  const std::size_t b = cl.ray_count();
  // running extended gcd over the grading row
  std::vector<Int> coeff(b, Int(0));
  Int g = 0;
  for (std::size_t i = 0; i < b; ++i) {
    const Int wi = cl.free_rows(0, i);
    if (wi == 0) continue;
    if (g == 0) {
      g = abs(wi);
      coeff.assign(b, Int(0));
      coeff[i] = wi > 0 ? 1 : -1;
      continue;
    }
    Int u, v, g2;
    mpz_gcdext(g2.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t(),
               wi.get_mpz_t());
    for (auto& c : coeff) c *= u;
    coeff[i] += v;
    g = g2;
  }
  if (g == 0) return std::nullopt;
  const Int& target = cls.free_part[0];
  if (target % g != 0) return std::nullopt;
  Int k = target / g;
  for (auto& c : coeff) c *= k;
  return coeff;
}

}  // namespace toric
