#pragma once

// Standard complexes used by the test corpus and shipped as documents:
// simplex boundaries, point sets, paths and cycles, the 6-vertex projective
// plane, the 7-vertex torus, and a 4-dimensional join with an undecided
// verdict.

#include <string>
#include <vector>

#include "zk/simplicial_complex.hpp"

namespace zk::fixtures {

inline SimplicialComplex simplex(int m) {
  return SimplicialComplex(m, {VertexSubset::full(m)});
}

// Boundary of the n-simplex: n+1 vertices, all n-subsets as facets.
inline SimplicialComplex simplex_boundary(int n) {
  std::vector<VertexSubset> facets;
  for_each_subset_of_size(n + 1, n, [&](VertexSubset s) { facets.push_back(s); });
  return SimplicialComplex(n + 1, facets);
}

inline SimplicialComplex disjoint_points(int m) {
  std::vector<VertexSubset> facets;
  for (int v = 1; v <= m; ++v) facets.push_back(VertexSubset::single(v));
  return SimplicialComplex(m, facets);
}

inline SimplicialComplex path(int m) {
  if (m == 1) return disjoint_points(1);
  std::vector<VertexSubset> facets;
  for (int v = 1; v < m; ++v) facets.push_back(VertexSubset::of({v, v + 1}));
  return SimplicialComplex(m, facets);
}

inline SimplicialComplex cycle(int m) {
  std::vector<VertexSubset> facets;
  for (int v = 1; v < m; ++v) facets.push_back(VertexSubset::of({v, v + 1}));
  facets.push_back(VertexSubset::of({m, 1}));
  return SimplicialComplex(m, facets);
}

// 1-skeleton of the (m-1)-simplex.
inline SimplicialComplex complete_graph(int m) {
  std::vector<VertexSubset> facets;
  for_each_subset_of_size(m, 2, [&](VertexSubset s) { facets.push_back(s); });
  return SimplicialComplex(m, facets);
}

// Minimal 6-vertex triangulation of the real projective plane.  Ten
// triangles, every edge in exactly two of them, Euler characteristic 1.
inline SimplicialComplex real_projective_plane_6() {
  std::vector<VertexSubset> facets = {
      VertexSubset::of({1, 2, 5}), VertexSubset::of({1, 2, 6}),
      VertexSubset::of({1, 3, 4}), VertexSubset::of({1, 3, 6}),
      VertexSubset::of({1, 4, 5}), VertexSubset::of({2, 3, 4}),
      VertexSubset::of({2, 3, 5}), VertexSubset::of({2, 4, 6}),
      VertexSubset::of({3, 5, 6}), VertexSubset::of({4, 5, 6})};
  return SimplicialComplex(6, facets);
}

// The 7-vertex (Csaszar) triangulation of the torus: facets {i, i+1, i+3}
// and {i, i+2, i+3} cyclically; complete 1-skeleton.
inline SimplicialComplex torus_7() {
  std::vector<VertexSubset> facets;
  auto wrap = [](int v) { return (v - 1) % 7 + 1; };
  for (int i = 1; i <= 7; ++i) {
    facets.push_back(VertexSubset::of({i, wrap(i + 1), wrap(i + 3)}));
    facets.push_back(VertexSubset::of({i, wrap(i + 2), wrap(i + 3)}));
  }
  return SimplicialComplex(7, facets);
}

// Join of the 6-vertex projective plane with two vertex pairs: a
// 4-dimensional complex whose clique subset on {1..6, 7, 9} is a
// double cone, 1-neighbourly but far from (dim-1)-neighbourly.
inline SimplicialComplex undecided_4d() {
  std::vector<VertexSubset> facets;
  const SimplicialComplex rp2 = real_projective_plane_6();
  for (VertexSubset t : rp2.facets()) {
    for (int a : {7, 8}) {
      for (int c : {9, 10}) {
        VertexSubset f = t;
        f.add(a);
        f.add(c);
        facets.push_back(f);
      }
    }
  }
  return SimplicialComplex(10, facets);
}

// Full 2-skeleton of the 6-simplex with one 4-face glued in: 2-neighbourly,
// 4-dimensional, not 3-neighbourly.  Exercises the localized verdict.
inline SimplicialComplex two_neighbourly_4d() {
  std::vector<VertexSubset> facets;
  VertexSubset top = VertexSubset::of({1, 2, 3, 4, 5});
  facets.push_back(top);
  for_each_subset_of_size(7, 3, [&](VertexSubset s) {
    if (!s.subset_of(top)) facets.push_back(s);
  });
  return SimplicialComplex(7, facets);
}

// Circulant graph C_20(1..5) as a 1-dimensional complex: sparse, clique
// number 6.  The performance fixture for the clique sweep.
inline SimplicialComplex circulant_20() {
  std::vector<VertexSubset> facets;
  for (int v = 1; v <= 20; ++v) {
    for (int d = 1; d <= 5; ++d) {
      int u = (v - 1 + d) % 20 + 1;
      facets.push_back(VertexSubset::of({v, u}));
    }
  }
  return SimplicialComplex(20, facets);
}

}  // namespace zk::fixtures
