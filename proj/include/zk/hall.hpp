#pragma once

// Hall bases of the free ungraded Lie algebra on weighted letters, and the
// generalized Witt counts that grade them.  The basis order is classical:
// elements sorted by weighted degree, ties broken by construction order; a
// bracket [u, v] is basic when u < v and v is a letter or v = [v1, v2] with
// v1 <= u.

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "zk/bigint.hpp"
#include "zk/factor.hpp"

namespace zk {

struct HallBracket {
  int degree = 0;           // weighted degree
  int letter = 0;           // 1-based letter for leaves, 0 for brackets
  int left = -1;            // indices into HallBasis::elements
  int right = -1;
  std::vector<int> weight_vector;  // occurrences of each letter

  bool is_letter() const { return letter != 0; }
};

struct HallBasis {
  std::vector<int> letter_weights;
  int degree_cutoff = 0;
  std::vector<HallBracket> elements;  // basis order == index order

  std::map<int, long long> counts_by_degree() const {
    std::map<int, long long> out;
    for (const auto& e : elements) ++out[e.degree];
    return out;
  }

  std::string render(int index) const {
    const HallBracket& e = elements[static_cast<std::size_t>(index)];
    if (e.is_letter()) return "x" + std::to_string(e.letter);
    return "[" + render(e.left) + "," + render(e.right) + "]";
  }
};

namespace hall_detail {

inline void check_cutoff(int cutoff) {
  if (cutoff < 1 || cutoff > 64) {
    throw std::invalid_argument("degree cutoff must be in [1,64], got " +
                                std::to_string(cutoff));
  }
}

inline void check_letter_count(std::size_t letters) {
  if (letters < 1 || letters > 16) {
    throw std::invalid_argument("letter count must be in [1,16], got " +
                                std::to_string(letters));
  }
}

}  // namespace hall_detail

// All Hall basis elements of weighted degree <= degree_cutoff, materialized.
// Callers wanting only multiplicities should use the Witt counts below; the
// explicit basis grows like the free Lie algebra it spans.
inline HallBasis hall_basis(const std::vector<int>& letter_weights, int degree_cutoff) {
  hall_detail::check_letter_count(letter_weights.size());
  hall_detail::check_cutoff(degree_cutoff);
  for (int w : letter_weights) {
    if (w < 1) throw std::invalid_argument("letter weights must be positive");
  }
  const int l = static_cast<int>(letter_weights.size());

  HallBasis basis;
  basis.letter_weights = letter_weights;
  basis.degree_cutoff = degree_cutoff;

  std::vector<std::vector<int>> by_degree(static_cast<std::size_t>(degree_cutoff) + 1);
  for (int d = 1; d <= degree_cutoff; ++d) {
    // letters of this weight come first, in letter order
    for (int i = 0; i < l; ++i) {
      if (letter_weights[static_cast<std::size_t>(i)] != d) continue;
      HallBracket leaf;
      leaf.degree = d;
      leaf.letter = i + 1;
      leaf.weight_vector.assign(static_cast<std::size_t>(l), 0);
      leaf.weight_vector[static_cast<std::size_t>(i)] = 1;
      by_degree[static_cast<std::size_t>(d)].push_back(static_cast<int>(basis.elements.size()));
      basis.elements.push_back(std::move(leaf));
    }
    // brackets [u, v] with deg u + deg v = d; both factors have lower degree
    for (int dv = 1; dv < d; ++dv) {
      int du = d - dv;
      for (int v : by_degree[static_cast<std::size_t>(dv)]) {
        const HallBracket& vb = basis.elements[static_cast<std::size_t>(v)];
        for (int u : by_degree[static_cast<std::size_t>(du)]) {
          if (u >= v) continue;
          if (!vb.is_letter() && vb.left > u) continue;
          HallBracket node;
          node.degree = d;
          node.left = u;
          node.right = v;
          node.weight_vector = basis.elements[static_cast<std::size_t>(u)].weight_vector;
          for (int i = 0; i < l; ++i) {
            node.weight_vector[static_cast<std::size_t>(i)] +=
                vb.weight_vector[static_cast<std::size_t>(i)];
          }
          by_degree[static_cast<std::size_t>(d)].push_back(
              static_cast<int>(basis.elements.size()));
          basis.elements.push_back(std::move(node));
        }
      }
    }
  }
  return basis;
}

inline int mobius(std::uint64_t n) {
  if (n == 1) return 1;
  int sign = 1;
  for (const auto& [p, r] : factor_u64(n)) {
    if (r > 1) return 0;
    sign = -sign;
  }
  return sign;
}

// Number of Hall basis elements with the given letter multiplicities: the
// necklace count (1/n) sum over d | gcd(b) of mu(d) (n/d)! / prod (b_i/d)!.
inline BigInt witt_count(const std::vector<int>& multidegree) {
  long long n = 0;
  std::uint64_t g = 0;
  for (int b : multidegree) {
    if (b < 0) throw std::invalid_argument("negative multiplicity");
    n += b;
    g = std::gcd(g, static_cast<std::uint64_t>(b));
  }
  if (n == 0) return BigInt(0);
  BigInt acc;
  for (std::uint64_t d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    BigInt term = factorial(static_cast<int>(n / static_cast<long long>(d)));
    for (int b : multidegree) {
      if (b != 0) term = BigInt::divexact(term, factorial(b / static_cast<int>(d)));
    }
    acc += mu > 0 ? term : -term;
  }
  return BigInt::divexact(acc, BigInt(n));
}

// Visits every nonzero multidegree with weighted degree <= cutoff.  The
// letter count is not capped: multidegree aggregation stays cheap even for
// wedges with dozens of summands.
inline void for_each_multidegree(
    const std::vector<int>& letter_weights, int cutoff,
    const std::function<void(const std::vector<int>&, int)>& fn) {
  hall_detail::check_cutoff(cutoff);
  if (letter_weights.empty()) throw std::invalid_argument("no letters");
  for (int w : letter_weights) {
    if (w < 1) throw std::invalid_argument("letter weights must be positive");
  }
  std::vector<int> b(letter_weights.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
    if (i == b.size()) {
      if (used > 0) fn(b, used);
      return;
    }
    for (int count = 0;; ++count) {
      int degree = used + count * letter_weights[i];
      if (degree > cutoff) break;
      b[i] = count;
      rec(i + 1, degree);
    }
    b[i] = 0;
  };
  rec(0, 0);
}

// Witt counts per weighted degree, by the necklace formula; the independent
// route to the hall_basis tallies.
inline std::map<int, BigInt> witt_counts_by_degree(const std::vector<int>& letter_weights,
                                                   int cutoff) {
  std::map<int, BigInt> out;
  for_each_multidegree(letter_weights, cutoff, [&](const std::vector<int>& b, int degree) {
    BigInt c = witt_count(b);
    if (!c.is_zero()) out[degree] += c;
  });
  return out;
}

}  // namespace zk
