#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace toric {

std::string ValidationReport::summary() const {
  if (violations.empty()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].message;
  }
  return os.str();
}

namespace {

std::string index_list(std::span<const std::size_t> v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << "}";
  return os.str();
}

// Inward facet normals of a full-dimensional simplicial cone, one per
// generator: <n_i, v_j> = |det| * delta_ij, primitivized.
std::vector<std::vector<Int>> facet_normals(const IntMatrix& cone_rays) {
  auto adj = adjugate(cone_rays);
  if (!adj) throw InputError("facet_normals: degenerate cone");
  const std::size_t n = cone_rays.rows();
  const bool flip = adj->det < 0;
  std::vector<std::vector<Int>> normals(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Int> col(n);
    for (std::size_t k = 0; k < n; ++k)
      col[k] = flip ? Int(-adj->adj(k, i)) : adj->adj(k, i);
    normals[i] = primitive(col);
  }
  return normals;
}

ConeIndexSet common_indices(const ConeIndexSet& a, const ConeIndexSet& b) {
  ConeIndexSet c;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(c));
  return c;
}

// Exact test that cone(a) and cone(b) intersect exactly in the face
// spanned by their common rays.  Candidate extreme rays of the
// intersection arise as kernels of (N-1)-subsets of the joint facet
// normals; each must expand over the common rays with nonnegative
// coefficients.
bool intersect_in_common_face(const Fan& fan, const ConeIndexSet& a,
                              const ConeIndexSet& b) {
  const std::size_t n = fan.lattice_rank;
  if (n == 1) return true;  // distinct rays on a line meet in {0}

  IntMatrix va = fan.cone_rays(a);
  auto na = facet_normals(va);
  auto nb = facet_normals(fan.cone_rays(b));
  std::vector<std::vector<Int>> normals;
  normals.insert(normals.end(), na.begin(), na.end());
  normals.insert(normals.end(), nb.begin(), nb.end());

  ConeIndexSet common = common_indices(a, b);
  // positions within cone a of the common rays
  std::vector<bool> pos_common(a.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i)
    pos_common[i] = std::binary_search(common.begin(), common.end(), a[i]);

  IntMatrix vat = va.transposed();

  const std::size_t total = normals.size();
  std::vector<std::size_t> pick(n - 1);
  // enumerate (n-1)-subsets of the normals
  std::vector<std::size_t> stack;
  stack.reserve(n);
  std::vector<std::size_t> subset;

  // iterative subset enumeration
  std::vector<std::size_t> idx(n - 1);
  for (std::size_t i = 0; i < n - 1; ++i) idx[i] = i;
  if (n - 1 > total) return true;
  for (;;) {
    IntMatrix m(n - 1, n);
    for (std::size_t r = 0; r < n - 1; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = normals[idx[r]][c];
    IntMatrix ker = kernel_basis(m.transposed());
    if (ker.rows() == 1) {
      for (int sign = 0; sign < 2; ++sign) {
        std::vector<Int> ray = ker.row(0);
        if (sign) for (auto& x : ray) x = -x;
        bool inside = true;
        for (const auto& nrm : normals) {
          if (dot(nrm, ray) < 0) {
            inside = false;
            break;
          }
        }
        if (!inside) continue;
        // extreme ray of the intersection; must lie in cone(common)
        auto t = solve(vat, std::span<const Int>(ray));
        if (!t) return false;
        for (std::size_t i = 0; i < a.size(); ++i) {
          if ((*t)[i] < 0) return false;
          if (!pos_common[i] && (*t)[i] != 0) return false;
        }
      }
    }
    // next subset
    std::size_t k = n - 1;
    while (k > 0) {
      --k;
      if (idx[k] != k + total - (n - 1)) break;
    }
    if (idx[k] == k + total - (n - 1)) break;
    ++idx[k];
    for (std::size_t j = k + 1; j < n - 1; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

std::map<ConeIndexSet, std::vector<std::size_t>> ridge_incidence(const Fan& fan) {
  std::map<ConeIndexSet, std::vector<std::size_t>> ridges;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& cone = fan.max_cones[c];
    for (std::size_t skip = 0; skip < cone.size(); ++skip) {
      ConeIndexSet ridge;
      for (std::size_t i = 0; i < cone.size(); ++i)
        if (i != skip) ridge.push_back(cone[i]);
      ridges[ridge].push_back(c);
    }
    if (cone.empty()) ridges[{}].push_back(c);
  }
  return ridges;
}

}  // namespace

ValidationReport validate(const Fan& fan, Exec exec,
                          const CompletenessOptions& copts) {
  ValidationReport rep;
  auto add = [&](std::string msg, std::vector<std::size_t> rays = {},
                 std::vector<std::size_t> cones = {}) {
    rep.violations.push_back({std::move(msg), std::move(rays), std::move(cones)});
  };

  if (fan.lattice_rank == 0) {
    add("lattice rank must be positive");
    return rep;
  }
  if (fan.rays.rows() == 0) {
    add("fan has no rays");
    return rep;
  }
  if (fan.rays.cols() != fan.lattice_rank) {
    add("ray coordinate count differs from lattice rank");
    return rep;
  }

  const std::size_t b = fan.ray_count();
  for (std::size_t i = 0; i < b; ++i) {
    auto r = fan.rays.row(i);
    bool zero = std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
    if (zero)
      add("ray " + std::to_string(i) + " is zero", {i});
    else if (!is_primitive(r))
      add("ray " + std::to_string(i) + " is not primitive", {i});
  }
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = i + 1; j < b; ++j)
      if (fan.rays.row(i) == fan.rays.row(j))
        add("rays " + std::to_string(i) + " and " + std::to_string(j) +
                " coincide",
            {i, j});

  if (fan.max_cones.empty()) add("fan has no maximal cones");

  bool cones_structural_ok = true;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& cone = fan.max_cones[c];
    bool sorted_unique = std::is_sorted(cone.begin(), cone.end()) &&
                         std::adjacent_find(cone.begin(), cone.end()) == cone.end();
    if (!sorted_unique) {
      add("cone " + std::to_string(c) + " indices not strictly increasing", {},
          {c});
      cones_structural_ok = false;
      continue;
    }
    if (!cone.empty() && cone.back() >= b) {
      add("cone " + std::to_string(c) + " references a missing ray", {}, {c});
      cones_structural_ok = false;
      continue;
    }
    if (cone.size() != fan.lattice_rank) {
      add("cone " + index_list(cone) + " is not full-dimensional", {}, {c});
      cones_structural_ok = false;
      continue;
    }
    if (determinant(fan.cone_rays(cone)) == 0) {
      add("cone " + index_list(cone) + " is not simplicial (dependent rays)",
          {}, {c});
      cones_structural_ok = false;
    }
  }
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c)
    for (std::size_t d = c + 1; d < fan.max_cones.size(); ++d)
      if (fan.max_cones[c] == fan.max_cones[d])
        add("cones " + std::to_string(c) + " and " + std::to_string(d) +
                " coincide",
            {}, {c, d});

  if (!rep.ok() || !cones_structural_ok) return rep;

  // pairwise face condition
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c)
    for (std::size_t d = c + 1; d < fan.max_cones.size(); ++d)
      pairs.emplace_back(c, d);
  std::vector<std::uint8_t> bad(pairs.size(), 0);
  for_each_index(pairs.size(), exec, [&](std::size_t k) {
    auto [c, d] = pairs[k];
    if (!intersect_in_common_face(fan, fan.max_cones[c], fan.max_cones[d]))
      bad[k] = 1;
  });
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (bad[k])
      add("cones " + index_list(fan.max_cones[pairs[k].first]) + " and " +
              index_list(fan.max_cones[pairs[k].second]) +
              " do not intersect in a common face",
          {}, {pairs[k].first, pairs[k].second});

  if (!rep.ok()) return rep;

  if (!is_complete(fan, copts, exec)) add("fan is not complete");
  return rep;
}

bool is_complete(const Fan& fan, const CompletenessOptions& opts, Exec exec) {
  if (fan.max_cones.empty()) return false;
  for (const auto& cone : fan.max_cones)
    if (cone.size() != fan.lattice_rank) return false;

  auto ridges = ridge_incidence(fan);
  for (const auto& [ridge, cones] : ridges)
    if (cones.size() != 2) return false;

  // dual graph connectivity
  const std::size_t nc = fan.max_cones.size();
  std::vector<std::vector<std::size_t>> adj(nc);
  for (const auto& [ridge, cones] : ridges) {
    adj[cones[0]].push_back(cones[1]);
    adj[cones[1]].push_back(cones[0]);
  }
  std::vector<bool> seen(nc, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t c = stack.back();
    stack.pop_back();
    for (std::size_t d : adj[c])
      if (!seen[d]) {
        seen[d] = true;
        stack.push_back(d);
      }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool s) { return s; })) return false;

  return sample_membership(fan, opts.sample_points, opts.seed, exec).consistent();
}

bool cone_is_smooth(const Fan& fan, std::span<const std::size_t> cone) {
  if (cone.empty()) return true;
  return rows_extend_to_basis(fan.cone_rays(cone));
}

std::vector<std::vector<Int>> simplex_interior_points(const IntMatrix& gens,
                                                      const EnumerationBudget& budget,
                                                      Exec exec) {
  const std::size_t d = gens.rows();
  if (d == 0) return {};
  const std::size_t n = gens.cols();

  IntMatrix gram = gens * gens.transposed();
  auto adjg = adjugate(gram);
  if (!adjg) throw InputError("simplex_interior_points: dependent generators");

  std::vector<Int> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      lo[j] = std::min(lo[j], gens(i, j));
      hi[j] = std::max(hi[j], gens(i, j));
    }
  }
  Int total = 1;
  for (std::size_t j = 0; j < n; ++j) total *= hi[j] - lo[j] + 1;
  if (total > Int(static_cast<unsigned long>(budget.max_candidates)))
    throw BudgetError("lattice point enumeration needs " + total.get_str() +
                      " candidates, budget is " +
                      std::to_string(budget.max_candidates));
  const std::uint64_t count = total.get_ui();

  std::vector<std::uint64_t> width(n);
  for (std::size_t j = 0; j < n; ++j)
    width[j] = Int(hi[j] - lo[j] + 1).get_ui();

  // known lattice points of the simplex: the origin and the generators
  std::set<std::vector<Int>> known;
  known.insert(std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < d; ++i) known.insert(gens.row(i));

  std::vector<std::uint8_t> hit(count, 0);
  for_each_index(count, exec, [&](std::size_t k) {
    std::vector<Int> x(n);
    std::uint64_t rest = k;
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = lo[j] + Int(static_cast<unsigned long>(rest % width[j]));
      rest /= width[j];
    }
    // x = sum t_i g_i with t = adj(G) * (gens x) / det(G); membership
    // means t >= 0, sum t <= 1, and the solve is exact.
    std::vector<Int> gx = mat_vec(gens, x);
    std::vector<Int> tnum = mat_vec(adjg->adj, gx);
    Int sum = 0;
    for (const Int& t : tnum) {
      if (t < 0) return;
      sum += t;
    }
    if (sum > adjg->det) return;
    // exactness: gens^T tnum == det * x  (also rules out x outside the span)
    for (std::size_t j = 0; j < n; ++j) {
      Int lhs = 0;
      for (std::size_t i = 0; i < d; ++i) lhs += gens(i, j) * tnum[i];
      if (lhs != adjg->det * x[j]) return;
    }
    if (known.count(x)) return;
    hit[k] = 1;
  });

  std::vector<std::vector<Int>> points;
  for (std::uint64_t k = 0; k < count; ++k) {
    if (!hit[k]) continue;
    std::vector<Int> x(n);
    std::uint64_t rest = k;
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = lo[j] + Int(static_cast<unsigned long>(rest % width[j]));
      rest /= width[j];
    }
    points.push_back(std::move(x));
  }
  return points;
}

bool cone_is_terminal(const Fan& fan, std::span<const std::size_t> cone,
                      const EnumerationBudget& budget, Exec exec) {
  if (cone.empty()) return true;
  IntMatrix gens = fan.cone_rays(cone);
  if (rows_extend_to_basis(gens)) return true;  // smooth cones are terminal
  return simplex_interior_points(gens, budget, exec).empty();
}

std::vector<ConeIndexSet> distinct_faces(const Fan& fan) {
  std::set<ConeIndexSet> faces;
  for (const auto& cone : fan.max_cones) {
    const std::size_t sz = cone.size();
    for (std::size_t mask = 1; mask < (1ULL << sz); ++mask) {
      ConeIndexSet f;
      for (std::size_t i = 0; i < sz; ++i)
        if (mask & (1ULL << i)) f.push_back(cone[i]);
      faces.insert(std::move(f));
    }
  }
  std::vector<ConeIndexSet> out(faces.begin(), faces.end());
  std::sort(out.begin(), out.end(), [](const ConeIndexSet& a, const ConeIndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

SingularityReport singularity_report(const Fan& fan, bool check_terminal,
                                     const EnumerationBudget& budget, Exec exec) {
  SingularityReport rep;
  auto faces = distinct_faces(fan);
  rep.cones.resize(faces.size());
  std::vector<std::uint8_t> smooth(faces.size(), 0);
  for_each_index(faces.size(), exec, [&](std::size_t i) {
    smooth[i] = cone_is_smooth(fan, faces[i]) ? 1 : 0;
  });
  rep.isolated = true;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    rep.cones[i].cone = faces[i];
    rep.cones[i].smooth = smooth[i] != 0;
    if (!smooth[i]) {
      // the orbit closure of a cone has codimension equal to its dimension
      std::size_t codim = faces[i].size();
      if (!rep.singular_codim || codim < *rep.singular_codim)
        rep.singular_codim = codim;
      if (faces[i].size() != fan.lattice_rank) rep.isolated = false;
    }
  }
  if (check_terminal) {
    // faces of terminal cones are terminal, so the maximal cones decide
    bool all = true;
    for (const auto& cone : fan.max_cones)
      if (!cone_is_terminal(fan, cone, budget, exec)) {
        all = false;
        break;
      }
    rep.terminal = all;
  }
  return rep;
}

CoverageStats sample_membership(const Fan& fan, std::size_t n_points,
                                std::uint64_t seed, Exec exec) {
  CoverageStats stats;
  stats.points = n_points;
  if (fan.max_cones.empty() || n_points == 0) {
    stats.uncovered = n_points;
    return stats;
  }

  std::vector<RatMatrix> inv(fan.max_cones.size());
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    auto m = inverse(fan.cone_rays(fan.max_cones[c]).transposed());
    if (!m) throw InputError("sample_membership: degenerate maximal cone");
    inv[c] = std::move(*m);
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-999, 999);
  std::vector<std::vector<Int>> points(n_points);
  for (auto& p : points) {
    do {
      p.assign(fan.lattice_rank, Int(0));
      for (auto& x : p) x = dist(rng);
    } while (std::all_of(p.begin(), p.end(), [](const Int& x) { return x == 0; }));
  }

  std::vector<std::uint8_t> covered(n_points, 0);
  std::vector<std::uint8_t> overlap(n_points, 0);
  for_each_index(n_points, exec, [&](std::size_t k) {
    std::size_t members = 0, interiors = 0;
    for (const auto& m : inv) {
      auto t = mat_vec(m, std::span<const Int>(points[k]));
      bool member = true, interior = true;
      for (const Rat& c : t) {
        if (c < 0) {
          member = false;
          interior = false;
          break;
        }
        if (c == 0) interior = false;
      }
      if (member) ++members;
      if (interior) ++interiors;
    }
    covered[k] = members > 0;
    overlap[k] = interiors > 1;
  });
  for (std::size_t k = 0; k < n_points; ++k) {
    if (!covered[k]) ++stats.uncovered;
    if (overlap[k]) ++stats.interior_overlap;
  }
  return stats;
}

}  // namespace toric
