// Times the OpenMP kernels against their serial twins and the
// independent reference implementations on synthetic workloads.
#include <chrono>
#include <iostream>
#include <random>

#include "toric/corpus.hpp"
#include "toric/fan.hpp"
#include "toric/reference.hpp"

using namespace toric;
namespace chrono = std::chrono;

namespace {

template <class Fn>
double ms(Fn&& fn) {
  auto t0 = chrono::steady_clock::now();
  fn();
  auto t1 = chrono::steady_clock::now();
  return chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const std::string& name, double serial, double parallel) {
  std::cout << name;
  for (std::size_t i = name.size(); i < 38; ++i) std::cout << ' ';
  std::cout << "serial " << serial << " ms,  parallel " << parallel
            << " ms,  speedup " << (parallel > 0 ? serial / parallel : 0.0)
            << "x\n";
}

}  // namespace

int main() {
  std::cout << "kernel benchmark (results are checked for agreement)\n\n";

  // 1. terminality box scan on a cone with a large fundamental box
  {
    IntMatrix gens{{97, 0, 1}, {1, 89, 2}, {3, 5, 101}};
    EnumerationBudget budget{4'000'000};
    std::size_t n_serial = 0, n_parallel = 0;
    double ts = ms([&] {
      n_serial = simplex_interior_points(gens, budget, Exec::serial).size();
    });
    double tp = ms([&] {
      n_parallel = simplex_interior_points(gens, budget, Exec::parallel).size();
    });
    row("simplex lattice scan (~900k candidates)", ts, tp);
    if (n_serial != n_parallel) {
      std::cout << "MISMATCH between serial and parallel scans\n";
      return 1;
    }
    std::cout << "  interior points found: " << n_serial << "\n";

    IntMatrix small{{7, 0, 1}, {1, 9, 2}, {3, 5, 11}};
    auto kernel = simplex_interior_points(small, budget, Exec::parallel);
    auto ref = reference::simplex_lattice_points(small, 4'000'000);
    std::sort(kernel.begin(), kernel.end());
    std::cout << "  reference cross-check (small cone): kernel " << kernel.size()
              << " pts, reference " << ref.size() << " pts, "
              << (kernel == ref ? "agree" : "DISAGREE") << "\n\n";
    if (kernel != ref) return 1;
  }

  // 2. membership sampling on the bundled quotient fan
  {
    Fan fan = corpus::example2();
    const std::size_t n = 200'000;
    CoverageStats s1, s2;
    double ts = ms([&] { s1 = sample_membership(fan, n, 7, Exec::serial); });
    double tp = ms([&] { s2 = sample_membership(fan, n, 7, Exec::parallel); });
    row("membership sampling (200k points)", ts, tp);
    if (s1.uncovered != s2.uncovered || s1.interior_overlap != s2.interior_overlap) {
      std::cout << "MISMATCH between serial and parallel sampling\n";
      return 1;
    }
    auto ref = reference::membership_stats(fan, 2'000, 7);
    std::cout << "  uncovered " << s1.uncovered << ", interior overlaps "
              << s1.interior_overlap << "; reference (2k points): uncovered "
              << ref.uncovered << ", overlaps " << ref.interior_overlap << "\n\n";
  }

  // 3. batch smoothness over random cones
  {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-9, 9);
    std::vector<IntMatrix> cones;
    while (cones.size() < 20'000) {
      IntMatrix m(3, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = dist(rng);
      if (determinant(m) != 0) cones.push_back(std::move(m));
    }
    std::vector<std::uint8_t> a(cones.size()), b(cones.size());
    double ts = ms([&] {
      for_each_index(cones.size(), Exec::serial,
                     [&](std::size_t i) { a[i] = rows_extend_to_basis(cones[i]); });
    });
    double tp = ms([&] {
      for_each_index(cones.size(), Exec::parallel,
                     [&](std::size_t i) { b[i] = rows_extend_to_basis(cones[i]); });
    });
    row("batch cone smoothness (20k cones)", ts, tp);
    if (a != b) {
      std::cout << "MISMATCH between serial and parallel smoothness\n";
      return 1;
    }
    std::size_t agree = 0;
    for (std::size_t i = 0; i < 2'000; ++i)
      if (a[i] == (reference::smooth_via_minor_gcd(cones[i]) ? 1 : 0)) ++agree;
    std::cout << "  minor-gcd reference agreement on 2k cones: " << agree
              << "/2000\n";
    if (agree != 2'000) return 1;
  }

  std::cout << "\nall kernels agree with their serial and reference twins\n";
  return 0;
}
