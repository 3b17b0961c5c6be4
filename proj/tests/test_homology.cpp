#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "snf_oracle.hpp"
#include "support.hpp"
#include "zk/factor.hpp"
#include "zk/fixtures.hpp"
#include "zk/homology.hpp"

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

SimplicialComplex disjoint_union(const SimplicialComplex& A, const SimplicialComplex& B) {
  std::vector<VertexSubset> facets = A.facets();
  for (auto f : B.facets()) {
    VertexSubset g;
    for (int v : f.vertices()) g.add(v + A.vertex_count());
    facets.push_back(g);
  }
  return SimplicialComplex(A.vertex_count() + B.vertex_count(), facets);
}

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      m.at(i, j) = BigInt(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("boundary matrix of a single edge") {
  SimplicialComplex edge(2, {VertexSubset::of({1, 2})});
  auto bs = boundary_matrices(edge);
  REQUIRE(bs.size() == 1);
  CHECK(bs[0].matrix.rows == 2);
  CHECK(bs[0].matrix.cols == 1);
  CHECK(bs[0].matrix.at(0, 0) == BigInt(-1));
  CHECK(bs[0].matrix.at(1, 0) == BigInt(1));
}

TEST_CASE("boundary matrices of the triangle boundary and projective plane") {
  auto tri = boundary_matrices(fixtures::simplex_boundary(2));
  REQUIRE(tri.size() == 1);
  CHECK(tri[0].matrix.rows == 3);
  CHECK(tri[0].matrix.cols == 3);
  CHECK(smith_normal_form(tri[0].matrix).rank == 2);

  auto rp2 = boundary_matrices(fixtures::real_projective_plane_6());
  REQUIRE(rp2.size() == 2);
  CHECK(rp2[1].matrix.rows == 15);
  CHECK(rp2[1].matrix.cols == 10);
}

TEST_CASE("boundary composite vanishes on random complexes") {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 50; ++iter) {
    auto K = zktest::random_complex(rng, 9);
    CHECK_NOTHROW(boundary_matrices(K));
  }
}

TEST_CASE("smith normal form basics") {
  auto id2 = smith_normal_form(from_rows({{1, 0}, {0, 1}}));
  CHECK(id2.rank == 2);
  REQUIRE(id2.invariant_factors.size() == 2);
  CHECK(id2.invariant_factors[0] == BigInt(1));
  CHECK(id2.invariant_factors[1] == BigInt(1));

  auto d24 = smith_normal_form(from_rows({{2, 0}, {0, 4}}));
  REQUIRE(d24.invariant_factors.size() == 2);
  CHECK(d24.invariant_factors[0] == BigInt(2));
  CHECK(d24.invariant_factors[1] == BigInt(4));

  // swapped diagonal still yields the chain
  auto d42 = smith_normal_form(from_rows({{4, 0}, {0, 2}}));
  CHECK(d42.invariant_factors[0] == BigInt(2));
  CHECK(d42.invariant_factors[1] == BigInt(4));

  auto zero = smith_normal_form(from_rows({{0, 0}, {0, 0}}));
  CHECK(zero.rank == 0);
}

TEST_CASE("projective plane degree-2 boundary has a single invariant factor 2") {
  auto bs = boundary_matrices(fixtures::real_projective_plane_6());
  auto mine = smith_normal_form(bs[1].matrix);
  auto reference = zktest::snf_reference(bs[1].matrix);
  REQUIRE(mine.invariant_factors.size() == reference.size());
  for (std::size_t i = 0; i < reference.size(); ++i) {
    CHECK(mine.invariant_factors[i] == reference[i]);
  }
  int twos = 0;
  for (const auto& d : mine.invariant_factors) {
    if (d == BigInt(2)) {
      ++twos;
    } else {
      CHECK(d == BigInt(1));
    }
  }
  CHECK(twos == 1);
}

TEST_CASE("smith normal form matches the reference implementation on random matrices") {
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 120; ++iter) {
    int r = 1 + static_cast<int>(rng() % 7);
    int c = 1 + static_cast<int>(rng() % 7);
    IntMatrix m(r, c);
    for (auto& e : m.data) {
      e = BigInt(static_cast<long long>(rng() % 21) - 10);
    }
    auto mine = smith_normal_form(m);
    auto reference = zktest::snf_reference(m);
    REQUIRE(mine.invariant_factors.size() == reference.size());
    for (std::size_t i = 0; i < reference.size(); ++i) {
      CHECK(mine.invariant_factors[i] == reference[i]);
    }
    for (std::size_t i = 0; i + 1 < mine.invariant_factors.size(); ++i) {
      CHECK((mine.invariant_factors[i + 1] % mine.invariant_factors[i]).is_zero());
    }
  }
}

TEST_CASE("smith normal form is invariant under row and column permutations") {
  std::mt19937_64 rng(47);
  for (int iter = 0; iter < 40; ++iter) {
    int r = 2 + static_cast<int>(rng() % 5);
    int c = 2 + static_cast<int>(rng() % 5);
    IntMatrix m(r, c);
    for (auto& e : m.data) e = BigInt(static_cast<long long>(rng() % 9) - 4);
    auto base = smith_normal_form(m);

    std::vector<int> rp(static_cast<std::size_t>(r)), cp(static_cast<std::size_t>(c));
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    IntMatrix p(r, c);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < c; ++j) {
        p.at(i, j) = m.at(rp[static_cast<std::size_t>(i)], cp[static_cast<std::size_t>(j)]);
      }
    }
    auto permuted = smith_normal_form(p);
    CHECK(base.rank == permuted.rank);
    CHECK(base.invariant_factors == permuted.invariant_factors);
  }
}

TEST_CASE("reduced homology of spheres, points, and the projective plane") {
  auto sphere2 = reduced_homology(fixtures::simplex_boundary(3));
  REQUIRE(sphere2.groups().size() == 1);
  CHECK(sphere2.betti(2) == 1);
  CHECK(sphere2.torsion_free());

  auto rp2 = reduced_homology(fixtures::real_projective_plane_6());
  CHECK(rp2.betti(0) == 0);
  CHECK(rp2.betti(1) == 0);
  CHECK(rp2.betti(2) == 0);
  REQUIRE(rp2.torsion(1) != nullptr);
  REQUIRE(rp2.torsion(1)->size() == 1);
  CHECK((*rp2.torsion(1))[0] == TorsionEntry{2, 1});
  CHECK(rp2.torsion(2) == nullptr);

  auto pts = reduced_homology(fixtures::disjoint_points(5));
  CHECK(pts.betti(0) == 4);
  CHECK(pts.groups().size() == 1);
}

TEST_CASE("7-vertex torus homology") {
  auto t = reduced_homology(fixtures::torus_7());
  CHECK(t.betti(1) == 2);
  CHECK(t.betti(2) == 1);
  CHECK(t.betti(0) == 0);
  CHECK(t.torsion_free());
}

TEST_CASE("cones are acyclic") {
  CHECK(reduced_homology(cone_over(fixtures::real_projective_plane_6())).trivial());
  CHECK(reduced_homology(cone_over(fixtures::cycle(5))).trivial());
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 20; ++iter) {
    CHECK(reduced_homology(cone_over(zktest::random_complex(rng, 7))).trivial());
  }
}

TEST_CASE("disjoint unions add homology plus one extra degree-zero class") {
  std::mt19937_64 rng(59);
  for (int iter = 0; iter < 20; ++iter) {
    auto A = zktest::random_complex(rng, 6);
    auto B = zktest::random_complex(rng, 6);
    auto combined = reduced_homology(disjoint_union(A, B));
    HomologyProfile expected = reduced_homology(A);
    expected.direct_sum(reduced_homology(B));
    expected.add_betti(0, 1);
    CHECK(combined == expected);
  }
}

TEST_CASE("torsion prime extraction") {
  HomologyProfile p1;
  p1.add_torsion(1, TorsionEntry{2, 1});
  CHECK(torsion_primes({p1}) == std::set<std::int64_t>{2});

  HomologyProfile p2;
  p2.add_torsion(3, TorsionEntry{2, 2});  // Z/4
  p2.add_torsion(3, TorsionEntry{3, 1});  // Z/3
  CHECK(torsion_primes({p2}) == std::set<std::int64_t>{2, 3});

  // all proper full subcomplexes of the projective plane are torsion-free
  auto rp2 = fixtures::real_projective_plane_6();
  std::vector<HomologyProfile> family;
  for (std::uint64_t I = 1; I < 63; ++I) {
    family.push_back(reduced_homology(full_subcomplex(rp2, VertexSubset(I)).complex));
  }
  CHECK(torsion_primes(family).empty());
  family.push_back(reduced_homology(rp2));
  CHECK(torsion_primes(family) == std::set<std::int64_t>{2});
}

TEST_CASE("homology connectivity") {
  CHECK(homology_connectivity(fixtures::simplex_boundary(3)) == 1);
  CHECK(homology_connectivity(cone_over(fixtures::cycle(4))) == kUnboundedConnectivity);
  CHECK(homology_connectivity(fixtures::real_projective_plane_6()) == 0);
  CHECK(homology_connectivity(fixtures::disjoint_points(3)) == -1);
}

TEST_CASE("factorization into prime powers") {
  auto f12 = factor_u64(12);
  CHECK(f12 == std::map<std::uint64_t, int>{{2, 2}, {3, 1}});
  CHECK(factor_u64(1).empty());
  CHECK(factor_u64(97) == std::map<std::uint64_t, int>{{97, 1}});
  CHECK(factor_u64(600851475143ULL) ==
        std::map<std::uint64_t, int>{{71, 1}, {839, 1}, {1471, 1}, {6857, 1}});
  CHECK(is_prime_u64(2147483647ULL));
  CHECK_FALSE(is_prime_u64(2147483647ULL * 2147483647ULL));
}
