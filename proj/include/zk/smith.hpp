#pragma once

// Smith normal form over the integers.  Dense matrices with BigInt entries:
// chain complexes at desk scale stay small, so a GCD-elimination pass with
// careful pivoting is all that is needed.  Exact by construction.

#include <utility>
#include <vector>

#include "zk/bigint.hpp"

namespace zk {

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> data;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

  BigInt& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  const BigInt& at(int r, int c) const {
    return data[static_cast<std::size_t>(r) * cols + c];
  }
};

struct SmithResult {
  std::vector<BigInt> invariant_factors;  // positive, d1 | d2 | ... | dr
  int rank = 0;
};

// Diagonalize by row/column GCD elimination.  Pivots prefer small magnitude
// (units clear a line in one sweep), then low fill-in.
inline SmithResult smith_normal_form(IntMatrix M) {
  const int R = M.rows;
  const int C = M.cols;
  std::vector<BigInt> diag;

  for (int t = 0; t < std::min(R, C); ++t) {
    // pivot search over the trailing submatrix
    int pr = -1, pc = -1;
    BigInt best_abs;
    long best_fill = 0;
    std::vector<int> row_nnz(static_cast<std::size_t>(R), 0);
    std::vector<int> col_nnz(static_cast<std::size_t>(C), 0);
    for (int i = t; i < R; ++i) {
      for (int j = t; j < C; ++j) {
        if (!M.at(i, j).is_zero()) {
          ++row_nnz[static_cast<std::size_t>(i)];
          ++col_nnz[static_cast<std::size_t>(j)];
        }
      }
    }
    for (int i = t; i < R; ++i) {
      for (int j = t; j < C; ++j) {
        if (M.at(i, j).is_zero()) continue;
        BigInt a = M.at(i, j).abs();
        long fill = static_cast<long>(row_nnz[static_cast<std::size_t>(i)] - 1) *
                    (col_nnz[static_cast<std::size_t>(j)] - 1);
        if (pr < 0 || a < best_abs || (a == best_abs && fill < best_fill)) {
          pr = i;
          pc = j;
          best_abs = std::move(a);
          best_fill = fill;
        }
      }
    }
    if (pr < 0) break;  // trailing submatrix is zero

    for (int j = 0; j < C; ++j) std::swap(M.at(t, j), M.at(pr, j));
    for (int i = 0; i < R; ++i) std::swap(M.at(i, t), M.at(i, pc));

    // Euclidean descent: shrink the pivot until it divides its whole row
    // and column.  Every pass swaps a strictly smaller remainder into the
    // pivot slot, so this terminates.
    while (true) {
      bool swapped = false;
      for (int i = t + 1; i < R && !swapped; ++i) {
        if (M.at(i, t).is_zero() || (M.at(i, t) % M.at(t, t)).is_zero()) continue;
        BigInt q = M.at(i, t) / M.at(t, t);
        for (int j = t; j < C; ++j) M.at(i, j) -= q * M.at(t, j);
        for (int j = t; j < C; ++j) std::swap(M.at(i, j), M.at(t, j));
        swapped = true;
      }
      if (swapped) continue;
      for (int j = t + 1; j < C && !swapped; ++j) {
        if (M.at(t, j).is_zero() || (M.at(t, j) % M.at(t, t)).is_zero()) continue;
        BigInt q = M.at(t, j) / M.at(t, t);
        for (int i = t; i < R; ++i) M.at(i, j) -= q * M.at(i, t);
        for (int i = t; i < R; ++i) std::swap(M.at(i, j), M.at(i, t));
        swapped = true;
      }
      if (!swapped) break;
    }

    // exact elimination; neither pass can reintroduce entries in the other
    for (int i = t + 1; i < R; ++i) {
      if (M.at(i, t).is_zero()) continue;
      BigInt q = BigInt::divexact(M.at(i, t), M.at(t, t));
      for (int j = t; j < C; ++j) M.at(i, j) -= q * M.at(t, j);
    }
    for (int j = t + 1; j < C; ++j) {
      if (M.at(t, j).is_zero()) continue;
      BigInt q = BigInt::divexact(M.at(t, j), M.at(t, t));
      for (int i = t; i < R; ++i) M.at(i, j) -= q * M.at(i, t);
    }
    diag.push_back(M.at(t, t).abs());
  }

  // repair the divisibility chain: diag(a,b) ~ diag(gcd, lcm)
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < diag.size(); ++i) {
      for (std::size_t j = i + 1; j < diag.size(); ++j) {
        if ((diag[j] % diag[i]).is_zero()) continue;
        BigInt g = BigInt::gcd(diag[i], diag[j]);
        BigInt l = BigInt::divexact(diag[i], g) * diag[j];
        diag[i] = std::move(g);
        diag[j] = std::move(l);
        changed = true;
      }
    }
  }

  SmithResult out;
  out.rank = static_cast<int>(diag.size());
  out.invariant_factors = std::move(diag);
  return out;
}

}  // namespace zk
