#include "toric/reference.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace toric::reference {

namespace {

// Solves gens^T t = x exactly over the rationals (n equations, d
// unknowns, full column rank).  Returns nullopt when inconsistent.
std::optional<std::vector<Rat>> expand_in_generators(const IntMatrix& gens,
                                                     const std::vector<Int>& x) {
  const std::size_t d = gens.rows(), n = gens.cols();
  // augmented system, one row per coordinate
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(d + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < d; ++c) m[r][c] = Rat(gens(c, r));
    m[r][d] = Rat(x[r]);
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_row(d, n);
  for (std::size_t col = 0; col < d && row < n; ++col) {
    std::size_t p = row;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[row]);
    Rat inv = 1 / m[row][col];
    for (auto& e : m[row]) e *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (std::size_t c = col; c <= d; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_row[col] = row;
    ++row;
  }
  for (std::size_t r = row; r < n; ++r)
    if (m[r][d] != 0) return std::nullopt;
  std::vector<Rat> t(d);
  for (std::size_t col = 0; col < d; ++col) {
    if (pivot_row[col] == n) return std::nullopt;  // dependent generators
    t[col] = m[pivot_row[col]][d];
  }
  return t;
}

}  // namespace

std::vector<std::vector<Int>> simplex_lattice_points(const IntMatrix& gens,
                                                     std::uint64_t max_candidates) {
  const std::size_t d = gens.rows();
  if (d == 0) return {};
  const std::size_t n = gens.cols();

  std::vector<Int> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < d; ++i) {
      lo[j] = std::min(lo[j], gens(i, j));
      hi[j] = std::max(hi[j], gens(i, j));
    }
  Int total = 1;
  for (std::size_t j = 0; j < n; ++j) total *= hi[j] - lo[j] + 1;
  if (total > Int(static_cast<unsigned long>(max_candidates)))
    throw BudgetError("reference enumeration over budget");

  std::set<std::vector<Int>> known;
  known.insert(std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < d; ++i) known.insert(gens.row(i));

  std::vector<std::vector<Int>> out;
  std::vector<Int> x(lo);
  for (;;) {
    auto t = expand_in_generators(gens, x);
    if (t) {
      bool member = true;
      Rat sum = 0;
      for (const Rat& c : *t) {
        if (c < 0) {
          member = false;
          break;
        }
        sum += c;
      }
      if (member && sum <= 1 && !known.count(x)) out.push_back(x);
    }
    std::size_t j = 0;
    while (j < n) {
      x[j] += 1;
      if (x[j] <= hi[j]) break;
      x[j] = lo[j];
      ++j;
    }
    if (j == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

CoverageStats membership_stats(const Fan& fan, std::size_t n_points,
                               std::uint64_t seed) {
  CoverageStats stats;
  stats.points = n_points;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-999, 999);
  for (std::size_t k = 0; k < n_points; ++k) {
    std::vector<Int> p;
    do {
      p.assign(fan.lattice_rank, Int(0));
      for (auto& x : p) x = dist(rng);
    } while (std::all_of(p.begin(), p.end(), [](const Int& x) { return x == 0; }));

    std::size_t members = 0, interiors = 0;
    for (const auto& cone : fan.max_cones) {
      auto t = solve(fan.cone_rays(cone).transposed(), std::span<const Int>(p));
      if (!t) continue;
      bool member = true, interior = true;
      for (const Rat& c : *t) {
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
    if (members == 0) ++stats.uncovered;
    if (interiors > 1) ++stats.interior_overlap;
  }
  return stats;
}

bool smooth_via_minor_gcd(const IntMatrix& gens) {
  const std::size_t d = gens.rows(), n = gens.cols();
  if (d == 0) return true;
  if (d > n) return false;
  // gcd over all d x d minors
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  Int g = 0;
  for (;;) {
    IntMatrix sub(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) sub(r, c) = gens(r, idx[c]);
    g = gcd(g, determinant(sub));
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (idx[k] != k + n - d) break;
    }
    if (idx[k] == k + n - d) break;
    ++idx[k];
    for (std::size_t j = k + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return g == 1;
}

}  // namespace toric::reference
