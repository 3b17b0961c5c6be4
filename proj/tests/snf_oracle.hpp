#pragma once

// Reference Smith normal form used only by tests: global minimum pivot,
// Euclidean row/column descent, and in-pass divisibility enforcement on the
// trailing submatrix.  Deliberately a different algorithm from the library's
// Markowitz-guided elimination with post-hoc chain repair.

#include <vector>

#include "zk/bigint.hpp"
#include "zk/smith.hpp"

namespace zktest {

inline std::vector<zk::BigInt> snf_reference(zk::IntMatrix a) {
  using zk::BigInt;
  const int R = a.rows;
  const int C = a.cols;
  std::vector<BigInt> diag;
  int t = 0;
  while (t < std::min(R, C)) {
    int pr = -1, pc = -1;
    for (int i = t; i < R; ++i) {
      for (int j = t; j < C; ++j) {
        if (a.at(i, j).is_zero()) continue;
        if (pr < 0 || a.at(i, j).abs() < a.at(pr, pc).abs()) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) break;
    for (int j = 0; j < C; ++j) std::swap(a.at(t, j), a.at(pr, j));
    for (int i = 0; i < R; ++i) std::swap(a.at(i, t), a.at(i, pc));

    bool restart = false;
    for (int i = t + 1; i < R && !restart; ++i) {
      if (a.at(i, t).is_zero()) continue;
      BigInt q = a.at(i, t) / a.at(t, t);
      for (int j = t; j < C; ++j) a.at(i, j) -= q * a.at(t, j);
      if (!a.at(i, t).is_zero()) restart = true;  // smaller remainder exists
    }
    if (restart) continue;
    for (int j = t + 1; j < C && !restart; ++j) {
      if (a.at(t, j).is_zero()) continue;
      BigInt q = a.at(t, j) / a.at(t, t);
      for (int i = t; i < R; ++i) a.at(i, j) -= q * a.at(i, t);
      if (!a.at(t, j).is_zero()) restart = true;
    }
    if (restart) continue;

    // pivot must divide the whole trailing submatrix
    bool fixed = false;
    for (int i = t + 1; i < R && !fixed; ++i) {
      for (int j = t + 1; j < C && !fixed; ++j) {
        if (!(a.at(i, j) % a.at(t, t)).is_zero()) {
          for (int jj = t; jj < C; ++jj) a.at(t, jj) += a.at(i, jj);
          fixed = true;
        }
      }
    }
    if (fixed) continue;

    diag.push_back(a.at(t, t).abs());
    ++t;
  }
  return diag;
}

}  // namespace zktest
