#pragma once

// Shared helpers for the test suites: random complex generation and
// brute-force face arithmetic kept deliberately separate from the library's
// own subset machinery.

#include <random>
#include <set>
#include <vector>

#include "zk/simplicial_complex.hpp"

namespace zktest {

inline zk::SimplicialComplex random_complex(std::mt19937_64& rng, int max_m = 10) {
  int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_m));
  int facet_count = 1 + static_cast<int>(rng() % static_cast<unsigned>(2 * m));
  std::vector<zk::VertexSubset> facets;
  for (int i = 0; i < facet_count; ++i) {
    int sz = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(m, 5)));
    zk::VertexSubset f;
    while (f.size() < sz) f.add(1 + static_cast<int>(rng() % static_cast<unsigned>(m)));
    facets.push_back(f);
  }
  zk::VertexSubset covered;
  for (auto f : facets) covered = covered | f;
  for (int v = 1; v <= m; ++v) {
    if (!covered.contains(v)) facets.push_back(zk::VertexSubset::single(v));
  }
  return zk::SimplicialComplex(m, facets);
}

// Every nonempty face of K as a set of bitmasks, found by testing all 2^m
// subsets against the facet list directly.
inline std::set<std::uint64_t> brute_force_faces(const zk::SimplicialComplex& K) {
  std::set<std::uint64_t> out;
  const int m = K.vertex_count();
  for (std::uint64_t bits = 1; bits < (1ULL << m); ++bits) {
    bool contained = false;
    for (auto f : K.facets()) {
      if ((bits & ~f.bits) == 0) {
        contained = true;
        break;
      }
    }
    if (contained) out.insert(bits);
  }
  return out;
}

}  // namespace zktest
