#pragma once

// Localization bookkeeping: the neighbourliness deficit of each clique
// subset, the prime threshold for sphere-wedge splittings, a sufficiency
// gate for rational Golodness, and the excluded-prime report that together
// license a localized product-of-spheres decomposition of the loop space.

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "zk/homology.hpp"
#include "zk/simplicial_complex.hpp"

namespace zk {

// |I| + dim(K_I) - 2 k_I.  Simplices carry contractible moment-angle
// complexes and are excluded from the maximum.
inline int localization_deficit(const SimplicialComplex& K_I, int subset_size) {
  Neighbourliness nb = neighbourliness(K_I);
  if (nb.is_simplex) {
    throw SimplexExcludedError("simplex member contributes no deficit");
  }
  return subset_size + K_I.dimension() - 2 * nb.k;
}

struct Rational {
  long long numerator = 0;
  long long denominator = 1;

  bool operator==(const Rational&) const = default;
};

// Threshold for the p-local wedge splitting of a simply connected complex
// of dimension d and connectivity s: primes strictly greater than
// (d - s + 1)/2 are admissible.
inline Rational sphere_wedge_prime_bound(int dimension, int connectivity) {
  if (dimension < connectivity || connectivity < 0) {
    throw std::invalid_argument("need dimension >= connectivity >= 0");
  }
  long long num = dimension - connectivity + 1;
  if (num % 2 == 0) return Rational{num / 2, 1};
  return Rational{num, 2};
}

enum class GolodStatus { YesByNeighbourliness, AssertedByUser, Unknown };

inline const char* to_string(GolodStatus s) {
  switch (s) {
    case GolodStatus::YesByNeighbourliness: return "yes-by-neighbourliness";
    case GolodStatus::AssertedByUser: return "asserted-by-user";
    default: return "unknown";
  }
}

// Sufficient conditions only: ceil(dim/2)-neighbourly complexes split as
// wedges (hence are Golod over any ring), simplices are trivially fine, and
// graphs with complete 1-skeleton split as wedges of spheres.  No Massey
// product computation happens here; a user assertion is recorded as such.
inline GolodStatus golod_status(const SimplicialComplex& K_I, bool user_asserted = false) {
  Neighbourliness nb = neighbourliness(K_I);
  if (nb.is_simplex || nb.k >= (K_I.dimension() + 1) / 2) {
    return GolodStatus::YesByNeighbourliness;
  }
  if (K_I.dimension() <= 1 && K_I.has_complete_one_skeleton()) {
    return GolodStatus::YesByNeighbourliness;
  }
  return user_asserted ? GolodStatus::AssertedByUser : GolodStatus::Unknown;
}

struct PrimeExclusionReport {
  int max_deficit = 0;  // maximum of |I| + dim(K_I) - 2 k_I over non-simplex members
  std::set<std::int64_t> threshold_primes;  // primes p with 2p <= max_deficit
  std::set<std::int64_t> torsion_primes;    // over all clique subsets
  std::map<std::uint64_t, GolodStatus> golod;  // keyed by subset bitmask
  bool verdict_ok = false;

  std::set<std::int64_t> excluded_primes() const {
    std::set<std::int64_t> out = threshold_primes;
    out.insert(torsion_primes.begin(), torsion_primes.end());
    return out;
  }
};

// The full excluded-prime sweep over the clique subsets of K.  When
// verdict_ok holds, localizing away from excluded_primes() leaves the loop
// space a product of spheres and loops on spheres.
inline PrimeExclusionReport prime_exclusion(
    const SimplicialComplex& K, const std::vector<VertexSubset>& golod_assertions = {}) {
  PrimeExclusionReport report;
  report.verdict_ok = true;

  std::set<std::uint64_t> asserted;
  for (VertexSubset s : golod_assertions) asserted.insert(s.bits);

  for (VertexSubset I : clique_subsets(K)) {
    Subcomplex sub = full_subcomplex(K, I);
    Neighbourliness nb = neighbourliness(sub.complex);
    if (!nb.is_simplex) {
      int deficit = localization_deficit(sub.complex, I.size());
      report.max_deficit = std::max(report.max_deficit, deficit);
      auto primes = reduced_homology(sub.complex).torsion_primes();
      report.torsion_primes.insert(primes.begin(), primes.end());
    }
    GolodStatus status = golod_status(sub.complex, asserted.count(I.bits) != 0);
    report.golod[I.bits] = status;
    if (status == GolodStatus::Unknown) report.verdict_ok = false;
  }

  for (std::int64_t p = 2; 2 * p <= report.max_deficit; ++p) {
    if (is_prime_u64(static_cast<std::uint64_t>(p))) report.threshold_primes.insert(p);
  }
  return report;
}

}  // namespace zk
