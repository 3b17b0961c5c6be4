#pragma once

// Wedge splittings of a moment-angle complex: the suspension splitting over
// non-face full subcomplexes, its homology aggregation, the neighbourly
// unstable variant, and the conversion of summand homology into explicit
// spheres and Moore spaces when it is concentrated low enough.

#include <cassert>
#include <cmath>
#include <cstdint>
#include <variant>
#include <vector>

#include "zk/homology.hpp"
#include "zk/simplicial_complex.hpp"

namespace zk {

struct StableSummand {
  VertexSubset subset;      // a non-face I
  int shift = 0;            // suspension degree applied to |K_I|
  HomologyProfile profile;  // reduced homology of K_I
};

// One summand per non-face I, suspension shift 2 + |I|.  Faces contribute
// contractible full subcomplexes; that is asserted, not assumed.
inline std::vector<StableSummand> stable_summands(const SimplicialComplex& K) {
  std::vector<StableSummand> out;
  const int m = K.vertex_count();
  for (std::uint64_t bits = 1; bits < (1ULL << m); ++bits) {
    VertexSubset I(bits);
    Subcomplex sub = full_subcomplex(K, I);
    if (K.is_face(I)) {
      if (!sub.complex.is_simplex()) {
        throw std::logic_error("face " + I.to_string() + " has a non-simplex full subcomplex");
      }
      continue;
    }
    out.push_back(StableSummand{I, 2 + I.size(), reduced_homology(sub.complex)});
  }
  std::sort(out.begin(), out.end(), [](const StableSummand& a, const StableSummand& b) {
    return size_lex_less(a.subset, b.subset);
  });
  return out;
}

// Reduced homology of the moment-angle complex over K: summands shifted by
// |I| + 1, one below the suspension shift.
inline HomologyProfile moment_angle_homology(const SimplicialComplex& K) {
  HomologyProfile out;
  for (const auto& s : stable_summands(K)) {
    out.direct_sum(s.profile.shifted(s.subset.size() + 1));
  }
  return out;
}

// ---------------------------------------------------------------------------
// wedge summand vocabulary
// ---------------------------------------------------------------------------

struct SphereSummand {
  int degree = 0;
  auto operator<=>(const SphereSummand&) const = default;
};

// P^n(p^r): reduced homology Z/p^r in degree n-1.
struct MooreSummand {
  int degree = 0;
  std::int64_t prime = 0;
  int exponent = 1;
  auto operator<=>(const MooreSummand&) const = default;
};

struct UnresolvedSummand {
  int shift = 0;
  VertexSubset subset;
  HomologyProfile profile;
  bool operator==(const UnresolvedSummand&) const = default;
};

using WedgeSummand = std::variant<SphereSummand, MooreSummand, UnresolvedSummand>;

enum class WedgeTarget { SuspensionOfZk, Zk };

struct WedgeDecomposition {
  WedgeTarget target = WedgeTarget::Zk;
  std::vector<WedgeSummand> summands;

  bool fully_resolved() const {
    for (const auto& s : summands) {
      if (std::holds_alternative<UnresolvedSummand>(s)) return false;
    }
    return true;
  }
};

inline bool wedge_summand_less(const WedgeSummand& a, const WedgeSummand& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (std::holds_alternative<SphereSummand>(a)) {
    return std::get<SphereSummand>(a) < std::get<SphereSummand>(b);
  }
  if (std::holds_alternative<MooreSummand>(a)) {
    return std::get<MooreSummand>(a) < std::get<MooreSummand>(b);
  }
  return size_lex_less(std::get<UnresolvedSummand>(a).subset,
                       std::get<UnresolvedSummand>(b).subset);
}

// Converts shifted summand homology into spheres and Moore spaces.  The
// window: nonzero groups in at most two adjacent degrees {d, d+1}, the top
// degree torsion-free, and d >= 2.  Anything outside degrades to a single
// Unresolved summand rather than an error.
inline std::vector<WedgeSummand> homology_to_wedge(int shift, const HomologyProfile& profile,
                                                   VertexSubset subset = VertexSubset()) {
  std::vector<WedgeSummand> out;
  if (profile.trivial()) return out;
  HomologyProfile shifted = profile.shifted(shift);
  int lo = shifted.groups().begin()->first;
  int hi = shifted.groups().rbegin()->first;
  bool convertible = lo >= 2 && hi - lo <= 1;
  if (convertible && hi > lo) {
    const auto* top = shifted.torsion(hi);
    convertible = top == nullptr || top->empty();
  }
  if (!convertible) {
    out.push_back(UnresolvedSummand{shift, subset, profile});
    return out;
  }
  for (const auto& [d, group] : shifted.groups()) {
    for (int i = 0; i < group.betti; ++i) out.push_back(SphereSummand{d});
    for (const auto& t : group.torsion) {
      out.push_back(MooreSummand{d + 1, t.prime, t.exponent});
    }
  }
  std::sort(out.begin(), out.end(), wedge_summand_less);
  return out;
}

// The suspension of a moment-angle complex always splits; summands carry
// shift 2 + |I|.
inline WedgeDecomposition stable_wedge(const SimplicialComplex& K) {
  WedgeDecomposition out;
  out.target = WedgeTarget::SuspensionOfZk;
  for (const auto& s : stable_summands(K)) {
    auto converted = homology_to_wedge(s.shift, s.profile, s.subset);
    out.summands.insert(out.summands.end(), converted.begin(), converted.end());
  }
  std::sort(out.summands.begin(), out.summands.end(), wedge_summand_less);
  return out;
}

// The unstable wedge: when K is ceil(dim/2)-neighbourly the moment-angle
// complex itself splits with shift 1 + |I|.
inline WedgeDecomposition unstable_wedge(const SimplicialComplex& K) {
  Neighbourliness nb = neighbourliness(K);
  int required = (K.dimension() + 1) / 2;  // ceil(dim/2)
  if (!nb.is_simplex && nb.k < required) {
    throw NeighbourlinessHypothesisError(
        "complex is " + std::to_string(nb.k) + "-neighbourly but the wedge needs " +
            std::to_string(required),
        required - nb.k);
  }
  WedgeDecomposition out;
  out.target = WedgeTarget::Zk;
  for (const auto& s : stable_summands(K)) {
    auto converted = homology_to_wedge(s.subset.size() + 1, s.profile, s.subset);
    out.summands.insert(out.summands.end(), converted.begin(), converted.end());
  }
  std::sort(out.summands.begin(), out.summands.end(), wedge_summand_less);
  return out;
}

// Reduced homology of a wedge of summands; the round-trip check for
// homology_to_wedge.
inline HomologyProfile wedge_homology(const std::vector<WedgeSummand>& summands) {
  HomologyProfile out;
  for (const auto& s : summands) {
    if (const auto* sphere = std::get_if<SphereSummand>(&s)) {
      out.add_betti(sphere->degree, 1);
    } else if (const auto* moore = std::get_if<MooreSummand>(&s)) {
      out.add_torsion(moore->degree - 1, TorsionEntry{moore->prime, moore->exponent});
    } else {
      const auto& u = std::get<UnresolvedSummand>(s);
      out.direct_sum(u.profile.shifted(u.shift));
    }
  }
  return out;
}

}  // namespace zk
