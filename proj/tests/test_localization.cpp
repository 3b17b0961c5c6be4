#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "support.hpp"
#include "zk/fixtures.hpp"
#include "zk/localization.hpp"

using namespace zk;

namespace {

SimplicialComplex cone_over(const SimplicialComplex& K) {
  int apex = K.vertex_count() + 1;
  std::vector<VertexSubset> facets;
  for (auto f : K.facets()) {
    VertexSubset g = f;
    g.add(apex);
    facets.push_back(g);
  }
  return SimplicialComplex(apex, facets);
}

SimplicialComplex relabel(const SimplicialComplex& K, const std::vector<int>& perm) {
  std::vector<VertexSubset> facets;
  for (auto f : K.facets()) {
    VertexSubset g;
    for (int v : f.vertices()) g.add(perm[static_cast<std::size_t>(v - 1)]);
    facets.push_back(g);
  }
  return SimplicialComplex(K.vertex_count(), facets);
}

}  // namespace

TEST_CASE("localization deficit values") {
  CHECK(localization_deficit(fixtures::real_projective_plane_6(), 6) == 6);
  CHECK(localization_deficit(fixtures::complete_graph(4), 4) == 3);
  CHECK(localization_deficit(fixtures::complete_graph(6), 6) == 5);
  CHECK(localization_deficit(fixtures::simplex_boundary(2), 3) == 2);
  CHECK_THROWS_AS(localization_deficit(fixtures::simplex(3), 3), SimplexExcludedError);
}

TEST_CASE("sphere wedge prime bound") {
  CHECK(sphere_wedge_prime_bound(9, 4) == Rational{3, 1});
  CHECK(sphere_wedge_prime_bound(4, 4) == Rational{1, 2});
  CHECK(sphere_wedge_prime_bound(6, 3) == Rational{2, 1});
  CHECK_THROWS_AS(sphere_wedge_prime_bound(3, 4), std::invalid_argument);
}

TEST_CASE("threshold identity: bound at the splitting data equals half the deficit") {
  std::vector<SimplicialComplex> complexes = {
      fixtures::real_projective_plane_6(), fixtures::torus_7(),  fixtures::cycle(5),
      fixtures::complete_graph(5),         fixtures::path(4),    fixtures::disjoint_points(6),
      fixtures::undecided_4d(),            fixtures::two_neighbourly_4d()};
  for (const auto& K : complexes) {
    for (VertexSubset I : clique_subsets(K)) {
      Subcomplex sub = full_subcomplex(K, I);
      Neighbourliness nb = neighbourliness(sub.complex);
      if (nb.is_simplex) continue;
      int deficit = localization_deficit(sub.complex, I.size());
      Rational bound = sphere_wedge_prime_bound(1 + I.size() + sub.complex.dimension(),
                                                2 * nb.k + 2);
      CHECK(2 * bound.numerator == static_cast<long long>(deficit) * bound.denominator);
    }
  }
}

TEST_CASE("golod gate") {
  CHECK(golod_status(fixtures::real_projective_plane_6()) == GolodStatus::YesByNeighbourliness);
  CHECK(golod_status(fixtures::complete_graph(5)) == GolodStatus::YesByNeighbourliness);
  CHECK(golod_status(fixtures::simplex(3)) == GolodStatus::YesByNeighbourliness);

  // double cone over the projective plane: 4-dimensional, only 1-neighbourly
  auto double_cone = cone_over(cone_over(fixtures::real_projective_plane_6()));
  CHECK(double_cone.dimension() == 4);
  CHECK(golod_status(double_cone) == GolodStatus::Unknown);
  CHECK(golod_status(double_cone, true) == GolodStatus::AssertedByUser);
}

TEST_CASE("prime exclusion report for the projective plane") {
  auto report = prime_exclusion(fixtures::real_projective_plane_6());
  CHECK(report.max_deficit == 6);
  CHECK(report.threshold_primes == std::set<std::int64_t>{2, 3});
  CHECK(report.torsion_primes == std::set<std::int64_t>{2});
  CHECK(report.excluded_primes() == std::set<std::int64_t>{2, 3});
  CHECK(report.verdict_ok);
  CHECK(report.golod.size() == 63);
}

TEST_CASE("prime exclusion report for the complete graph on four vertices") {
  auto report = prime_exclusion(fixtures::complete_graph(4));
  CHECK(report.max_deficit == 3);
  CHECK(report.threshold_primes.empty());
  CHECK(report.torsion_primes.empty());
  CHECK(report.excluded_primes().empty());
  CHECK(report.verdict_ok);
}

TEST_CASE("prime exclusion report for the full simplex") {
  auto report = prime_exclusion(fixtures::simplex(4));
  CHECK(report.max_deficit == 0);
  CHECK(report.threshold_primes.empty());
  CHECK(report.torsion_primes.empty());
  CHECK(report.verdict_ok);
}

TEST_CASE("prime exclusion flags undecided members") {
  auto report = prime_exclusion(fixtures::undecided_4d());
  CHECK_FALSE(report.verdict_ok);
  int unknowns = 0;
  for (const auto& [bits, status] : report.golod) {
    if (status == GolodStatus::Unknown) ++unknowns;
  }
  CHECK(unknowns > 0);
}

TEST_CASE("user assertions flip undecided members") {
  auto K = fixtures::undecided_4d();
  auto report = prime_exclusion(K);
  std::vector<VertexSubset> assertions;
  for (const auto& [bits, status] : report.golod) {
    if (status == GolodStatus::Unknown) assertions.push_back(VertexSubset(bits));
  }
  REQUIRE_FALSE(assertions.empty());
  auto overridden = prime_exclusion(K, assertions);
  CHECK(overridden.verdict_ok);
  for (VertexSubset s : assertions) {
    CHECK(overridden.golod.at(s.bits) == GolodStatus::AssertedByUser);
  }
}

TEST_CASE("report is invariant under vertex relabeling") {
  std::mt19937_64 rng(97);
  for (int iter = 0; iter < 15; ++iter) {
    auto K = zktest::random_complex(rng, 7);
    std::vector<int> perm(static_cast<std::size_t>(K.vertex_count()));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto a = prime_exclusion(K);
    auto b = prime_exclusion(relabel(K, perm));
    CHECK(a.max_deficit == b.max_deficit);
    CHECK(a.threshold_primes == b.threshold_primes);
    CHECK(a.torsion_primes == b.torsion_primes);
    CHECK(a.verdict_ok == b.verdict_ok);
  }
}

TEST_CASE("coning on an apex never lowers the maximal deficit") {
  std::vector<SimplicialComplex> complexes = {fixtures::real_projective_plane_6(),
                                              fixtures::complete_graph(5),
                                              fixtures::torus_7()};
  for (const auto& K : complexes) {
    auto base = prime_exclusion(K);
    auto coned = prime_exclusion(cone_over(K));
    CHECK(coned.max_deficit >= base.max_deficit);
  }
}
