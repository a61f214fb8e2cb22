#include "toric/corpus.hpp"

namespace toric::corpus {

namespace {

std::vector<ConeIndexSet> all_n_subsets(std::size_t b) {
  // omit one index each; descending omission gives lexicographic cones
  std::vector<ConeIndexSet> cones;
  for (std::size_t skip = b; skip-- > 0;) {
    ConeIndexSet cone;
    for (std::size_t i = 0; i < b; ++i)
      if (i != skip) cone.push_back(i);
    cones.push_back(std::move(cone));
  }
  return cones;
}

}  // namespace

Fan projective_space(std::size_t n) {
  if (n == 0) throw InputError("projective_space: dimension must be positive");
  Fan fan;
  fan.lattice_rank = n;
  fan.rays = IntMatrix(n + 1, n);
  for (std::size_t i = 0; i < n; ++i) fan.rays(i, i) = 1;
  for (std::size_t j = 0; j < n; ++j) fan.rays(n, j) = -1;
  fan.max_cones = all_n_subsets(n + 1);
  return fan;
}

Fan p1xp1() {
  Fan fan;
  fan.lattice_rank = 2;
  fan.rays = IntMatrix{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  fan.max_cones = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  return fan;
}

Fan example2() {
  Fan fan;
  fan.lattice_rank = 3;
  fan.rays = IntMatrix{{1, 0, 0}, {0, 1, 0}, {1, -3, 5}, {-2, 2, -5}};
  fan.max_cones = all_n_subsets(4);
  return fan;
}

Fan example3() {
  // P^4 read in the index-3 superlattice Z^4 + Z*(1/3)(1,1,2,2); the
  // five rays below are the frozen images, summing to zero.
  Fan fan;
  fan.lattice_rank = 4;
  fan.rays = IntMatrix{{3, -1, -2, -2},
                       {0, 1, 0, 0},
                       {0, 0, 1, 0},
                       {0, 0, 0, 1},
                       {-3, 0, 1, 1}};
  fan.max_cones = all_n_subsets(5);
  return fan;
}

std::vector<std::vector<Rat>> example3_gens() {
  std::vector<Rat> gen{Rat(1, 3), Rat(1, 3), Rat(2, 3), Rat(2, 3)};
  return {gen};
}

std::vector<std::vector<Rat>> example4_gens(unsigned p) {
  if (p < 2) throw InputError("example4: p must be at least 2");
  std::vector<Rat> gen(p - 1);
  for (unsigned i = 0; i + 1 < p; ++i) {
    gen[i] = Rat(Int(static_cast<unsigned long>(i + 1)),
                 Int(static_cast<unsigned long>(p)));
    gen[i].canonicalize();
  }
  return {gen};
}

Fan example4(unsigned p) {
  return refine_lattice(projective_space(p - 1), example4_gens(p));
}

}  // namespace toric::corpus
