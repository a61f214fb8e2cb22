#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "toric/corpus.hpp"
#include "toric/fan.hpp"
#include "toric/reference.hpp"

using namespace toric;

namespace {

Fan p2() { return corpus::projective_space(2); }

std::vector<Fan> corpus_fans() {
  return {corpus::projective_space(2), corpus::projective_space(3),
          corpus::projective_space(4), corpus::p1xp1(), corpus::example2(),
          corpus::example3(), corpus::example4(3), corpus::example4(5)};
}

}  // namespace

TEST_CASE("validate accepts the bundled fans") {
  for (const Fan& fan : corpus_fans()) {
    ValidationReport rep = validate(fan);
    CAPTURE(rep.summary());
    CHECK(rep.ok());
  }
}

TEST_CASE("validate reports the offending data") {
  SUBCASE("missing cone leaves the fan incomplete") {
    Fan fan = p2();
    fan.max_cones = {{0, 1}, {1, 2}};
    ValidationReport rep = validate(fan);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.summary().find("not complete") != std::string::npos);
  }
  SUBCASE("duplicated ray") {
    Fan fan = p2();
    fan.rays = IntMatrix{{1, 0}, {0, 1}, {1, 0}};
    ValidationReport rep = validate(fan);
    REQUIRE_FALSE(rep.ok());
    bool found = false;
    for (const auto& v : rep.violations)
      if (v.message.find("coincide") != std::string::npos &&
          v.ray_indices == std::vector<std::size_t>{0, 2})
        found = true;
    CHECK(found);
  }
  SUBCASE("dependent rays are not simplicial") {
    Fan fan;
    fan.lattice_rank = 2;
    fan.rays = IntMatrix{{1, 0}, {-1, 0}, {0, 1}};
    fan.max_cones = {{0, 1}, {1, 2}, {0, 2}};
    ValidationReport rep = validate(fan);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.summary().find("simplicial") != std::string::npos);
  }
  SUBCASE("non-full-dimensional maximal cone") {
    Fan fan = p2();
    fan.max_cones.push_back({0});
    ValidationReport rep = validate(fan);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.summary().find("full-dimensional") != std::string::npos);
  }
  SUBCASE("non-primitive ray") {
    Fan fan = p2();
    fan.rays = IntMatrix{{2, 0}, {0, 1}, {-1, -1}};
    ValidationReport rep = validate(fan);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.summary().find("primitive") != std::string::npos);
  }
  SUBCASE("overlapping cones fail the face condition") {
    Fan fan;
    fan.lattice_rank = 2;
    fan.rays = IntMatrix{{1, 0}, {0, 1}, {1, 1}, {-1, -1}};
    // cone {0,1} contains cone {0,2}'s interior direction (1,1)
    fan.max_cones = {{0, 1}, {2, 3}};
    ValidationReport rep = validate(fan);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.summary().find("common face") != std::string::npos);
  }
}

TEST_CASE("completeness") {
  CHECK(is_complete(p2()));
  SUBCASE("two cones covering a half-plane are not complete") {
    Fan fan;
    fan.lattice_rank = 2;
    fan.rays = IntMatrix{{1, 0}, {0, 1}, {-1, 0}};
    fan.max_cones = {{0, 1}, {1, 2}};
    CHECK_FALSE(is_complete(fan));
  }
  SUBCASE("ridge-count oracle agrees on the quotient fan") {
    Fan fan = corpus::example2();
    // each of the 6 ridges (= ray pairs) must sit in exactly 2 cones
    std::map<ConeIndexSet, int> count;
    for (const auto& cone : fan.max_cones)
      for (std::size_t skip = 0; skip < cone.size(); ++skip) {
        ConeIndexSet ridge;
        for (std::size_t i = 0; i < cone.size(); ++i)
          if (i != skip) ridge.push_back(cone[i]);
        count[ridge] += 1;
      }
    CHECK(count.size() == 6);
    for (const auto& [ridge, c] : count) CHECK(c == 2);
    CHECK(is_complete(fan));
  }
  SUBCASE("a one-dimensional complete fan") {
    Fan fan;
    fan.lattice_rank = 1;
    fan.rays = IntMatrix{{1}, {-1}};
    fan.max_cones = {{0}, {1}};
    CHECK(is_complete(fan));
    fan.max_cones = {{0}};
    CHECK_FALSE(is_complete(fan));
  }
}

TEST_CASE("cone smoothness") {
  Fan fan;
  fan.lattice_rank = 2;
  fan.rays = IntMatrix{{1, 0}, {0, 1}, {1, 2}};
  fan.max_cones = {{0, 1}};
  CHECK(cone_is_smooth(fan, ConeIndexSet{0, 1}));
  CHECK_FALSE(cone_is_smooth(fan, ConeIndexSet{0, 2}));  // index-2 sublattice

  SUBCASE("every ray triple of the Z/5 quotient example") {
    Fan ex2 = corpus::example2();
    for (const auto& cone : ex2.max_cones) CHECK_FALSE(cone_is_smooth(ex2, cone));
  }
  SUBCASE("minor-gcd oracle agreement on random cones") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coord(-5, 5);
    std::uniform_int_distribution<std::size_t> dims(1, 3);
    int done = 0;
    while (done < 400) {
      std::size_t d = dims(rng);
      IntMatrix m(d, 3);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = coord(rng);
      if (rank(m) != d) continue;
      CHECK(rows_extend_to_basis(m) == reference::smooth_via_minor_gcd(m));
      ++done;
    }
  }
}

TEST_CASE("terminality") {
  SUBCASE("smooth cones are terminal") {
    Fan fan = p2();
    for (const auto& cone : fan.max_cones) CHECK(cone_is_terminal(fan, cone));
  }
  SUBCASE("the half(1,1,1) quotient cone is terminal") {
    // the lattice-point oracle finds nothing inside conv{0, v_i}: the
    // candidate (1,1,1) sits at coefficient sum 3/2, outside the hull
    IntMatrix gens{{1, 0, 0}, {0, 1, 0}, {1, 1, 2}};
    CHECK(simplex_interior_points(gens).empty());
    CHECK(reference::simplex_lattice_points(gens, 1000).empty());
    Fan fan;
    fan.lattice_rank = 3;
    fan.rays = gens;
    fan.max_cones = {{0, 1, 2}};
    CHECK(cone_is_terminal(fan, ConeIndexSet{0, 1, 2}));
  }
  SUBCASE("the third(1,1,1) quotient cone is not terminal") {
    IntMatrix gens{{1, 0, 0}, {0, 1, 0}, {-1, -1, 3}};
    auto pts = simplex_interior_points(gens);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0] == std::vector<Int>{0, 0, 1});
    CHECK(reference::simplex_lattice_points(gens, 1000) == pts);
    Fan fan;
    fan.lattice_rank = 3;
    fan.rays = gens;
    fan.max_cones = {{0, 1, 2}};
    CHECK_FALSE(cone_is_terminal(fan, ConeIndexSet{0, 1, 2}));
  }
  SUBCASE("all cones of the Z/5 quotient are terminal") {
    Fan ex2 = corpus::example2();
    for (const auto& face : distinct_faces(ex2)) CHECK(cone_is_terminal(ex2, face));
  }
  SUBCASE("terminality is monotone under faces on the corpus") {
    for (const Fan& fan : {corpus::example2(), corpus::example3()}) {
      std::map<ConeIndexSet, bool> terminal;
      for (const auto& face : distinct_faces(fan))
        terminal[face] = cone_is_terminal(fan, face);
      for (const auto& [face, t] : terminal) {
        if (!t) continue;
        // every subface of a terminal face is terminal
        for (const auto& [sub, st] : terminal) {
          if (sub.size() >= face.size()) continue;
          if (std::includes(face.begin(), face.end(), sub.begin(), sub.end()))
            CHECK(st);
        }
      }
    }
  }
  SUBCASE("budget violations raise instead of guessing") {
    IntMatrix gens{{120, 0, 1}, {1, 130, 2}, {3, 5, 140}};
    CHECK_THROWS_AS((void)simplex_interior_points(gens, EnumerationBudget{1000}),
                    BudgetError);
  }
  SUBCASE("serial and parallel scans agree with the reference") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> coord(-4, 6);
    int done = 0;
    while (done < 40) {
      IntMatrix gens(3, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) gens(i, j) = coord(rng);
      if (determinant(gens) == 0) continue;
      auto serial = simplex_interior_points(gens, {}, Exec::serial);
      auto parallel = simplex_interior_points(gens, {}, Exec::parallel);
      CHECK(serial == parallel);
      auto sorted = serial;
      std::sort(sorted.begin(), sorted.end());
      CHECK(sorted == reference::simplex_lattice_points(gens, 1'000'000));
      ++done;
    }
  }
}

TEST_CASE("singularity report") {
  SUBCASE("the projective plane is smooth") {
    SingularityReport rep = singularity_report(p2());
    CHECK(rep.smooth());
    CHECK(rep.isolated);  // vacuously
    CHECK_FALSE(rep.singular_codim.has_value());
  }
  SUBCASE("the Z/5 quotient has isolated singularities") {
    SingularityReport rep = singularity_report(corpus::example2(), true);
    CHECK(rep.cones.size() == 14);  // 4 + 6 + 4 faces
    CHECK_FALSE(rep.smooth());
    CHECK(rep.isolated);
    CHECK(rep.singular_codim == 3);
    REQUIRE(rep.terminal.has_value());
    CHECK(*rep.terminal);
    // exactly the four maximal cones are singular
    for (const auto& c : rep.cones)
      CHECK(c.smooth == (c.cone.size() < 3));
  }
  SUBCASE("the Z/3 quotient is singular along curves") {
    SingularityReport rep = singularity_report(corpus::example3());
    CHECK_FALSE(rep.smooth());
    CHECK_FALSE(rep.isolated);
    CHECK(rep.singular_codim == 3);
    std::set<ConeIndexSet> singular_triples;
    for (const auto& c : rep.cones)
      if (!c.smooth && c.cone.size() == 3) singular_triples.insert(c.cone);
    CHECK(singular_triples ==
          std::set<ConeIndexSet>{{0, 1, 4}, {2, 3, 4}});
  }
}

TEST_CASE("membership sampling covers complete fans exactly once") {
  for (const Fan& fan : corpus_fans()) {
    CoverageStats serial = sample_membership(fan, 10'000, 42, Exec::serial);
    CoverageStats parallel = sample_membership(fan, 10'000, 42, Exec::parallel);
    CHECK(serial.uncovered == 0);
    CHECK(serial.interior_overlap == 0);
    CHECK(serial.uncovered == parallel.uncovered);
    CHECK(serial.interior_overlap == parallel.interior_overlap);
  }
  SUBCASE("reference sampler agrees") {
    Fan fan = corpus::example2();
    CoverageStats ref = reference::membership_stats(fan, 500, 42);
    CHECK(ref.uncovered == 0);
    CHECK(ref.interior_overlap == 0);
  }
  SUBCASE("an incomplete fan leaves points uncovered") {
    Fan fan;
    fan.lattice_rank = 2;
    fan.rays = IntMatrix{{1, 0}, {0, 1}};
    fan.max_cones = {{0, 1}};
    CHECK(sample_membership(fan, 2000, 1).uncovered > 0);
  }
}
