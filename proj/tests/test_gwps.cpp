#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "toric/corpus.hpp"
#include "toric/gwps.hpp"

using namespace toric;

namespace {

std::vector<Int> iv(std::initializer_list<long> xs) {
  return std::vector<Int>(xs.begin(), xs.end());
}

WeightSystem ws(std::initializer_list<long> xs) { return WeightSystem(iv(xs)); }

Int torsion_order(const Fan& fan) {
  Int prod = 1;
  for (const Int& d : class_group(fan).torsion()) prod *= d;
  return prod;
}

}  // namespace

TEST_CASE("gwps detection counts rays against the rank") {
  CHECK(is_gwps(corpus::projective_space(2)));
  CHECK_FALSE(is_gwps(corpus::p1xp1()));
  CHECK(is_gwps(corpus::example2()));
}

TEST_CASE("weight extraction") {
  CHECK(weights_of(corpus::projective_space(2)).weights == iv({1, 1, 1}));
  CHECK(weights_of(corpus::example3()).weights == iv({1, 1, 1, 1, 1}));
  CHECK(weights_of(corpus::example2()).weights == iv({1, 1, 1, 1}));

  SUBCASE("mixed-sign relations are structural errors") {
    Fan fan;
    fan.lattice_rank = 2;
    fan.rays = IntMatrix{{1, 0}, {0, 1}, {-1, 1}};
    fan.max_cones = {{0, 1}, {1, 2}};  // not complete; weights_of still runs
    CHECK_THROWS_AS((void)weights_of(fan), InputError);
  }
  SUBCASE("relation rank != 1 is rejected") {
    CHECK_THROWS_AS((void)weights_of(corpus::p1xp1()), InputError);
  }
}

TEST_CASE("classification") {
  GwpsClassification p2 = classify(corpus::projective_space(2));
  CHECK(p2.kind == GwpsKind::weighted_projective_space);
  CHECK(p2.weights.weights == iv({1, 1, 1}));
  CHECK(p2.quotient_group.empty());
  CHECK(p2.describe() == "P^2");

  GwpsClassification ex2 = classify(corpus::example2());
  CHECK(ex2.kind == GwpsKind::quotient);
  CHECK(ex2.weights.weights == iv({1, 1, 1, 1}));
  CHECK(ex2.quotient_group == iv({5}));
  CHECK(ex2.describe() == "P^3 quotient by Z/5");

  GwpsClassification ex3 = classify(corpus::example3());
  CHECK(ex3.kind == GwpsKind::quotient);
  CHECK(ex3.weights.weights == iv({1, 1, 1, 1, 1}));
  CHECK(ex3.quotient_group == iv({3}));

  SUBCASE("kind matches torsion across the gwps corpus") {
    for (const Fan& fan : {corpus::projective_space(3), corpus::example2(),
                           corpus::example3(), corpus::example4(7)}) {
      GwpsClassification c = classify(fan);
      CHECK((c.kind == GwpsKind::weighted_projective_space) ==
            class_group(fan).torsion().empty());
    }
  }
  SUBCASE("non-gwps input is rejected") {
    CHECK_THROWS_AS((void)classify(corpus::p1xp1()), InputError);
  }
}

TEST_CASE("weight system validation and well-formedness") {
  CHECK(weights_well_formed(ws({1, 2, 2, 3})));
  CHECK_FALSE(weights_well_formed(ws({1, 2, 2})));
  CHECK(weights_well_formed(ws({1, 1, 1, 1})));
  CHECK_THROWS_AS(ws({2, 4}), InputError);   // common factor
  CHECK_THROWS_AS(ws({0, 1}), InputError);   // nonpositive weight
  CHECK_THROWS_AS(ws({3}), InputError);      // too short
}

TEST_CASE("fan construction from weights") {
  SUBCASE("unit weights give projective space") {
    Fan fan = fan_from_weights(ws({1, 1, 1}));
    CHECK(lattice_isomorphic(fan, corpus::projective_space(2)));
    Fan p4 = fan_from_weights(ws({1, 1, 1, 1, 1}));
    for (const auto& cone : p4.max_cones) CHECK(cone_is_smooth(p4, cone));
    CHECK(lattice_isomorphic(p4, corpus::projective_space(4)));
  }
  SUBCASE("P(1,1,2) carries its weights as the grading") {
    Fan fan = fan_from_weights(ws({1, 1, 2}));
    ClassGroupData cl = class_group(fan);
    CHECK(cl.free_rank() == 1);
    CHECK(cl.torsion().empty());
    std::vector<Int> grading;
    for (std::size_t i = 0; i < 3; ++i)
      grading.push_back(cl.ray_class(i).free_part[0]);
    CHECK(grading == iv({1, 1, 2}));
  }
  SUBCASE("non-well-formed weights are rejected") {
    CHECK_THROWS_AS((void)fan_from_weights(ws({1, 2, 2})), InputError);
    CHECK_THROWS_AS((void)fan_from_weights(ws({1, 2})), InputError);
  }
  SUBCASE("raw images are primitive exactly for well-formed systems") {
    for (auto weights :
         {ws({1, 1, 2}), ws({1, 2, 2}), ws({1, 2, 3}), ws({1, 2, 2, 3}),
          ws({1, 1, 4, 6}), ws({1, 6, 10, 15})}) {
      IntMatrix raw = wps_ray_images(weights);
      bool all_primitive = true;
      for (std::size_t i = 0; i < raw.rows(); ++i)
        if (!is_primitive(raw.row(i))) all_primitive = false;
      CHECK(all_primitive == weights_well_formed(weights));
    }
  }
  SUBCASE("round trips on a sample") {
    for (auto weights : {ws({1, 1, 1}), ws({1, 1, 2}), ws({1, 2, 3}),
                         ws({1, 1, 2, 3}), ws({2, 3, 5})}) {
      Fan fan = fan_from_weights(weights);
      CHECK(weights_of(fan) == weights);
      CHECK(classify(fan).kind == GwpsKind::weighted_projective_space);
    }
  }
}

TEST_CASE("lattice refinement") {
  SUBCASE("the diagonal fifth on P^4") {
    Fan refined = corpus::example4(5);
    ClassGroupData cl = class_group(refined);
    CHECK(cl.free_rank() == 1);
    CHECK(cl.torsion() == iv({5}));
    GwpsClassification c = classify(refined);
    CHECK(c.kind == GwpsKind::quotient);
    CHECK(c.weights.weights == iv({1, 1, 1, 1, 1}));
    CHECK(c.quotient_group == iv({5}));
  }
  SUBCASE("integral generators change nothing") {
    Fan p3 = corpus::projective_space(3);
    std::vector<std::vector<Rat>> gens{{Rat(1), Rat(0), Rat(2)}};
    CHECK(superlattice_index(3, gens) == 1);
    CHECK(refine_lattice(p3, gens) == p3);
  }
  SUBCASE("the Z/5 quotient arises from P^3 by the (1/5)(1,2,3) generator") {
    Fan p3 = corpus::projective_space(3);
    std::vector<std::vector<Rat>> gens{{Rat(1, 5), Rat(2, 5), Rat(3, 5)}};
    for (auto& g : gens)
      for (auto& x : g) x.canonicalize();
    CHECK(superlattice_index(3, gens) == 5);
    Fan refined = refine_lattice(p3, gens);
    CHECK(class_group(refined).torsion() == iv({5}));
    CHECK(lattice_isomorphic(refined, corpus::example2()));
  }
  SUBCASE("example3 is the frozen (1/3)(1,1,2,2) refinement") {
    Fan built = refine_lattice(corpus::projective_space(4), corpus::example3_gens());
    CHECK(built == corpus::example3());
  }
  SUBCASE("torsion growth divides the index") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> num(0, 5);
    std::uniform_int_distribution<long> den(2, 4);
    for (const Fan& base : {corpus::projective_space(2), corpus::projective_space(3),
                            corpus::example2()}) {
      Int base_order = torsion_order(base);
      for (int trial = 0; trial < 12; ++trial) {
        std::vector<Rat> gen(base.lattice_rank);
        long q = den(rng);
        bool nonzero = false;
        for (auto& x : gen) {
          long n = num(rng) % q;
          if (n != 0) nonzero = true;
          x = Rat(n, q);
          x.canonicalize();
        }
        if (!nonzero) continue;
        std::vector<std::vector<Rat>> gens{gen};
        Int index = superlattice_index(base.lattice_rank, gens);
        Fan refined = refine_lattice(base, gens);
        Int refined_order = torsion_order(refined);
        CHECK(refined_order % base_order == 0);
        CHECK(index % (refined_order / base_order) == 0);
      }
    }
  }
}

TEST_CASE("lattice isomorphism testing") {
  Fan p3 = corpus::projective_space(3);
  SUBCASE("invariant under relabeling and unimodular base change") {
    Fan shuffled;
    shuffled.lattice_rank = 3;
    // rays permuted and rewritten in another basis
    IntMatrix u{{1, 0, 1}, {0, 1, 1}, {0, 0, 1}};  // unimodular
    IntMatrix permuted(4, 3);
    std::vector<std::size_t> perm{2, 0, 3, 1};
    for (std::size_t i = 0; i < 4; ++i) {
      auto row = p3.rays.row(perm[i]);
      auto moved = vec_mat(row, u);
      for (std::size_t j = 0; j < 3; ++j) permuted(i, j) = moved[j];
    }
    shuffled.rays = permuted;
    for (const auto& cone : p3.max_cones) {
      ConeIndexSet image;
      for (std::size_t i : cone)
        image.push_back(std::find(perm.begin(), perm.end(), i) - perm.begin());
      std::sort(image.begin(), image.end());
      shuffled.max_cones.push_back(image);
    }
    CHECK(lattice_isomorphic(p3, shuffled));
  }
  SUBCASE("distinguishes genuinely different fans") {
    CHECK_FALSE(lattice_isomorphic(p3, corpus::example4(5)));
    CHECK_FALSE(lattice_isomorphic(corpus::projective_space(2), corpus::example4(3)));
    CHECK_FALSE(
        lattice_isomorphic(fan_from_weights(ws({1, 1, 2})), corpus::projective_space(2)));
  }
}
