#pragma once

// Rational Betti numbers of the moment-angle complex computed from the
// bigraded Koszul complex of the Stanley-Reisner ring.  This is the
// independent cross-check for the suspension-splitting aggregation: it
// builds different matrices (exterior-algebra components in each squarefree
// multidegree) and does its own exact rank elimination, sharing no linear
// algebra with the Smith normal form route.

#include <cstdint>
#include <map>
#include <vector>

#include "zk/bigint.hpp"
#include "zk/errors.hpp"
#include "zk/simplicial_complex.hpp"

namespace zk {

namespace koszul_detail {

// Fraction-free Gaussian elimination (Bareiss); exact over the integers.
inline int rank_fraction_free(std::vector<std::vector<BigInt>> a) {
  if (a.empty() || a[0].empty()) return 0;
  const int R = static_cast<int>(a.size());
  const int C = static_cast<int>(a[0].size());
  int rank = 0;
  BigInt denom(1);
  for (int col = 0; col < C && rank < R; ++col) {
    int pivot = -1;
    for (int i = rank; i < R; ++i) {
      if (!a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(pivot)]);
    for (int i = rank + 1; i < R; ++i) {
      for (int j = col + 1; j < C; ++j) {
        auto& row_i = a[static_cast<std::size_t>(i)];
        const auto& row_r = a[static_cast<std::size_t>(rank)];
        row_i[static_cast<std::size_t>(j)] = BigInt::divexact(
            row_r[static_cast<std::size_t>(col)] * row_i[static_cast<std::size_t>(j)] -
                row_i[static_cast<std::size_t>(col)] * row_r[static_cast<std::size_t>(j)],
            denom);
      }
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] = BigInt(0);
    }
    denom = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
    ++rank;
  }
  return rank;
}

}  // namespace koszul_detail

// Rational Betti numbers of the moment-angle complex, degree -> dimension,
// up to and including total degree `cutoff`.  Exponential in the vertex
// count; refuses anything past 12 vertices.
inline std::map<int, int> koszul_betti_numbers(const SimplicialComplex& K, int cutoff) {
  const int m = K.vertex_count();
  if (m > 12) {
    throw OracleScaleError("Koszul sweep is exponential; got " + std::to_string(m) +
                           " vertices, limit 12");
  }

  std::map<int, int> betti;
  for (std::uint64_t J = 1; J < (1ULL << m); ++J) {
    VertexSubset Jset(J);
    const int size_j = Jset.size();
    if (size_j > cutoff) continue;  // contributions sit in degrees >= |J|

    // basis in exterior degree i: subsets S of J with |S| = i whose
    // complement J \ S is a face (or empty)
    std::vector<std::vector<VertexSubset>> basis(static_cast<std::size_t>(size_j) + 1);
    std::vector<std::map<std::uint64_t, int>> index(static_cast<std::size_t>(size_j) + 1);
    std::vector<int> verts = Jset.vertices();
    for (std::uint64_t pick = 0; pick < (1ULL << size_j); ++pick) {
      VertexSubset S;
      for (int b = 0; b < size_j; ++b) {
        if ((pick >> b) & 1ULL) S.add(verts[static_cast<std::size_t>(b)]);
      }
      VertexSubset rest = Jset.minus(S);
      if (rest.empty() || K.is_face(rest)) {
        auto& level = basis[static_cast<std::size_t>(S.size())];
        index[static_cast<std::size_t>(S.size())][S.bits] = static_cast<int>(level.size());
        level.push_back(S);
      }
    }

    // differentials d_i : level i -> level i-1, d(u_S) = sum of signed
    // u_{S minus l} over l with (J \ S) + l still a face
    std::vector<int> rank(static_cast<std::size_t>(size_j) + 2, 0);
    for (int i = 1; i <= size_j; ++i) {
      const auto& from = basis[static_cast<std::size_t>(i)];
      const auto& to_index = index[static_cast<std::size_t>(i) - 1];
      if (from.empty() || to_index.empty()) continue;
      std::vector<std::vector<BigInt>> matrix(
          basis[static_cast<std::size_t>(i) - 1].size(),
          std::vector<BigInt>(from.size()));
      for (std::size_t cidx = 0; cidx < from.size(); ++cidx) {
        std::vector<int> sv = from[cidx].vertices();
        for (std::size_t pos = 0; pos < sv.size(); ++pos) {
          VertexSubset smaller = from[cidx];
          smaller.remove(sv[pos]);
          VertexSubset support = Jset.minus(smaller);  // (J \ S) + l
          if (!K.is_face(support)) continue;
          auto it = to_index.find(smaller.bits);
          if (it == to_index.end()) continue;
          matrix[static_cast<std::size_t>(it->second)][cidx] =
              BigInt(pos % 2 == 0 ? 1 : -1);
        }
      }
      rank[static_cast<std::size_t>(i)] = koszul_detail::rank_fraction_free(std::move(matrix));
    }

    for (int i = 0; i <= size_j; ++i) {
      int level_dim = static_cast<int>(basis[static_cast<std::size_t>(i)].size());
      if (level_dim == 0) continue;
      int homology = level_dim - rank[static_cast<std::size_t>(i)] -
                     rank[static_cast<std::size_t>(i) + 1];
      int total_degree = 2 * size_j - i;
      if (homology != 0 && total_degree <= cutoff && total_degree > 0) {
        betti[total_degree] += homology;
      }
    }
  }
  return betti;
}

}  // namespace zk
