#pragma once

// The Hilton-Milnor side of the artifact: sphere and Moore-space atoms,
// smash-word rewriting, loop-factor catalogs of a wedge, and their Poincare
// series over the rationals and prime fields.
//
// Smash rewriting rules: spheres shift degrees; same-prime Moore pairs with
// max(p^r, q^s) > 2 split as P^{n+m}(p^min) v P^{n+m-1}(p^min); distinct
// primes annihilate the word; words stuck with two or more mod-2 atoms of
// exponent one stay symbolic, since their wedge indecomposables are not
// known.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <variant>
#include <vector>

#include "zk/bigint.hpp"
#include "zk/errors.hpp"
#include "zk/factor.hpp"
#include "zk/hall.hpp"
#include "zk/series.hpp"

namespace zk {

struct SphereAtom {
  int degree = 0;  // S^n, n >= 2 for wedge letters
  auto operator<=>(const SphereAtom&) const = default;
};

struct MooreAtom {
  int degree = 0;  // P^n(p^r), n >= 3 for wedge letters
  std::int64_t prime = 0;
  int exponent = 1;
  auto operator<=>(const MooreAtom&) const = default;
};

using SpaceAtom = std::variant<SphereAtom, MooreAtom>;

inline bool atom_less(const SpaceAtom& a, const SpaceAtom& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (std::holds_alternative<SphereAtom>(a)) {
    return std::get<SphereAtom>(a) < std::get<SphereAtom>(b);
  }
  return std::get<MooreAtom>(a) < std::get<MooreAtom>(b);
}

// A smash product of mod-p Moore atoms, kept whole.
struct MooreWord {
  std::vector<MooreAtom> atoms;  // ascending degree
  auto operator<=>(const MooreWord&) const = default;
};

struct SmashReduction {
  enum class Kind { Contractible, Wedge, Mod2Symbolic };
  Kind kind = Kind::Contractible;
  // Wedge: multiset of summand atoms.  Mod2Symbolic: multiset of smash
  // words, each carrying >= 2 exponent-one mod-2 atoms.
  std::vector<std::pair<SpaceAtom, BigInt>> atoms;
  std::vector<std::pair<MooreWord, BigInt>> words;
};

namespace smash_detail {

inline BigInt binomial_big(int n, int k) {
  if (k < 0 || k > n) return BigInt(0);
  return BigInt::divexact(factorial(n), factorial(k) * factorial(n - k));
}

// Core rewriting; accepts sphere degrees >= 1 and Moore degrees >= 2 so the
// loop-factor pipeline can feed desuspended letters through it.
inline SmashReduction reduce_word(const std::vector<SpaceAtom>& word) {
  if (word.empty()) throw std::invalid_argument("empty smash word");

  int sphere_shift = 0;
  std::vector<MooreAtom> moores;
  for (const auto& atom : word) {
    if (const auto* s = std::get_if<SphereAtom>(&atom)) {
      sphere_shift += s->degree;
    } else {
      moores.push_back(std::get<MooreAtom>(atom));
    }
  }

  SmashReduction out;
  if (moores.empty()) {
    out.kind = SmashReduction::Kind::Wedge;
    out.atoms.emplace_back(SphereAtom{sphere_shift}, BigInt(1));
    return out;
  }

  for (const auto& m : moores) {
    if (m.prime != moores[0].prime) {
      out.kind = SmashReduction::Kind::Contractible;
      return out;
    }
  }
  const std::int64_t p = moores[0].prime;
  const int k = static_cast<int>(moores.size());

  int exponent_one_count = 0;
  if (p == 2) {
    for (const auto& m : moores) {
      if (m.exponent == 1) ++exponent_one_count;
    }
  }

  if (exponent_one_count >= 2) {
    // absorb spheres and higher-exponent atoms; each absorption branches on
    // a degree drop of one
    std::vector<int> stuck;  // degrees of the exponent-one atoms
    int absorbed_degree = sphere_shift;
    int absorb_count = 0;
    for (const auto& m : moores) {
      if (m.exponent == 1) {
        stuck.push_back(m.degree);
      } else {
        absorbed_degree += m.degree;
        ++absorb_count;
      }
    }
    std::sort(stuck.begin(), stuck.end());
    out.kind = SmashReduction::Kind::Mod2Symbolic;
    for (int j = 0; j <= absorb_count; ++j) {
      MooreWord w;
      for (std::size_t i = 0; i + 1 < stuck.size(); ++i) {
        w.atoms.push_back(MooreAtom{stuck[i], 2, 1});
      }
      w.atoms.push_back(MooreAtom{stuck.back() + absorbed_degree - j, 2, 1});
      out.words.emplace_back(std::move(w), binomial_big(absorb_count, j));
    }
    return out;
  }

  // fully reducible: exponents collapse to the minimum, degrees telescope
  int min_exponent = moores[0].exponent;
  int total = sphere_shift;
  for (const auto& m : moores) {
    min_exponent = std::min(min_exponent, m.exponent);
    total += m.degree;
  }
  out.kind = SmashReduction::Kind::Wedge;
  for (int j = 0; j <= k - 1; ++j) {
    out.atoms.emplace_back(MooreAtom{total - j, p, min_exponent}, binomial_big(k - 1, j));
  }
  return out;
}

inline void validate_letter(const SpaceAtom& atom) {
  if (const auto* s = std::get_if<SphereAtom>(&atom)) {
    if (s->degree < 2) {
      throw std::invalid_argument("sphere letters must be simply connected (degree >= 2)");
    }
  } else {
    const auto& m = std::get<MooreAtom>(atom);
    if (m.degree < 3 || m.exponent < 1 || !is_prime_u64(static_cast<std::uint64_t>(m.prime))) {
      throw std::invalid_argument("Moore letters need degree >= 3 and a prime power");
    }
  }
}

}  // namespace smash_detail

inline SmashReduction smash_reduce(const std::vector<SpaceAtom>& word) {
  for (const auto& atom : word) smash_detail::validate_letter(atom);
  return smash_detail::reduce_word(word);
}

// ---------------------------------------------------------------------------
// loop factor catalogs
// ---------------------------------------------------------------------------

struct OmegaSphere {
  int degree = 0;  // loops on S^degree
  auto operator<=>(const OmegaSphere&) const = default;
};

// Loops on a finite type wedge of smash words of mod-p Moore spaces,
// reported whole: its indecomposable factors are torsion spaces the
// catalog does not attempt to split.
struct TorsionBlock {
  std::int64_t prime = 0;
  std::vector<std::pair<MooreWord, BigInt>> words;  // wedge summands

  bool operator==(const TorsionBlock&) const = default;
};

using LoopFactor = std::variant<OmegaSphere, TorsionBlock>;

inline bool loop_factor_less(const LoopFactor& a, const LoopFactor& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (std::holds_alternative<OmegaSphere>(a)) {
    return std::get<OmegaSphere>(a) < std::get<OmegaSphere>(b);
  }
  const auto& ta = std::get<TorsionBlock>(a);
  const auto& tb = std::get<TorsionBlock>(b);
  if (ta.prime != tb.prime) return ta.prime < tb.prime;
  auto key = [](const TorsionBlock& t) {
    std::vector<std::pair<MooreWord, std::string>> k;
    k.reserve(t.words.size());
    for (const auto& [w, mult] : t.words) k.emplace_back(w, mult.to_string());
    return k;
  };
  return key(ta) < key(tb);
}

struct LoopFactorCatalog {
  int cutoff = 0;  // factors included up to this bottom homology degree
  std::vector<std::pair<LoopFactor, BigInt>> factors;  // canonical order

  const BigInt* multiplicity(const LoopFactor& f) const {
    for (const auto& [factor, mult] : factors) {
      if (factor.index() == f.index()) {
        if (std::holds_alternative<OmegaSphere>(f) &&
            std::get<OmegaSphere>(factor) == std::get<OmegaSphere>(f)) {
          return &mult;
        }
        if (std::holds_alternative<TorsionBlock>(f) &&
            std::get<TorsionBlock>(factor) == std::get<TorsionBlock>(f)) {
          return &mult;
        }
      }
    }
    return nullptr;
  }
};

// Hilton-Milnor catalog of the loops on a wedge of the given letters,
// truncated at bottom homology degree N.  Brackets are aggregated per
// multidegree through the Witt counts; the factor attached to a bracket
// depends only on its letter multiplicities.
inline LoopFactorCatalog loop_factors_of_wedge(const std::vector<SpaceAtom>& atoms, int N) {
  if (atoms.empty()) throw std::invalid_argument("empty wedge");
  for (const auto& atom : atoms) smash_detail::validate_letter(atom);

  // weight = bottom reduced-homology degree of the desuspended letter; this
  // is what grades the factor attached to a bracket
  std::vector<int> weights;
  weights.reserve(atoms.size());
  for (const auto& atom : atoms) {
    if (const auto* s = std::get_if<SphereAtom>(&atom)) {
      weights.push_back(s->degree - 1);
    } else {
      weights.push_back(std::get<MooreAtom>(atom).degree - 2);
    }
  }

  std::vector<std::pair<LoopFactor, BigInt>> entries;
  for_each_multidegree(weights, N, [&](const std::vector<int>& b, int wdeg) {
    BigInt count = witt_count(b);
    if (count.is_zero()) return;

    // the bracket's factor is loops on the suspension of the smash of its
    // desuspended letters; the suspension rides along as a 1-sphere
    std::vector<SpaceAtom> word;
    word.emplace_back(SphereAtom{1});
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (int c = 0; c < b[i]; ++c) {
        if (const auto* s = std::get_if<SphereAtom>(&atoms[i])) {
          word.emplace_back(SphereAtom{s->degree - 1});
        } else {
          const auto& m = std::get<MooreAtom>(atoms[i]);
          word.emplace_back(MooreAtom{m.degree - 1, m.prime, m.exponent});
        }
      }
    }
    SmashReduction reduced = smash_detail::reduce_word(word);
    switch (reduced.kind) {
      case SmashReduction::Kind::Contractible:
        return;
      case SmashReduction::Kind::Wedge: {
        if (reduced.atoms.size() == 1 &&
            std::holds_alternative<SphereAtom>(reduced.atoms[0].first)) {
          int n = std::get<SphereAtom>(reduced.atoms[0].first).degree;
          entries.emplace_back(OmegaSphere{n}, count);
          return;
        }
        TorsionBlock block;
        block.prime = std::get<MooreAtom>(reduced.atoms[0].first).prime;
        for (const auto& [atom, mult] : reduced.atoms) {
          block.words.emplace_back(MooreWord{{std::get<MooreAtom>(atom)}}, mult);
        }
        entries.emplace_back(std::move(block), count);
        return;
      }
      case SmashReduction::Kind::Mod2Symbolic: {
        TorsionBlock block;
        block.prime = 2;
        block.words = reduced.words;
        entries.emplace_back(std::move(block), count);
        return;
      }
    }
  });

  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return loop_factor_less(a.first, b.first); });
  LoopFactorCatalog catalog;
  catalog.cutoff = N;
  for (auto& [factor, mult] : entries) {
    if (!catalog.factors.empty() && !loop_factor_less(catalog.factors.back().first, factor) &&
        !loop_factor_less(factor, catalog.factors.back().first)) {
      catalog.factors.back().second += mult;
    } else {
      catalog.factors.emplace_back(std::move(factor), std::move(mult));
    }
  }
  return catalog;
}

// ---------------------------------------------------------------------------
// series
// ---------------------------------------------------------------------------

namespace smash_detail {

// reduced mod-p homology of a smash word, as a polynomial
inline TruncatedSeries word_generating_function(const MooreWord& w, int cutoff) {
  TruncatedSeries out = TruncatedSeries::one(cutoff);
  for (const auto& atom : w.atoms) {
    TruncatedSeries factor(cutoff);
    if (atom.degree - 1 <= cutoff) factor[atom.degree - 1] = BigInt(1);
    if (atom.degree <= cutoff) factor[atom.degree] += BigInt(1);
    out = out * factor;
  }
  return out;
}

}  // namespace smash_detail

// Poincare series of the product of catalog factors.  Over the rationals
// torsion blocks are invisible; over F_p the catalog's blocks must all live
// at p, and each factor contributes its tensor-algebra series.
inline PoincareSeries poincare_series(const LoopFactorCatalog& catalog, CoefficientRing ring,
                                      int N) {
  if (N > catalog.cutoff) {
    throw std::invalid_argument("series cutoff exceeds the catalog cutoff");
  }
  if (!ring.is_rational) {
    for (const auto& [factor, mult] : catalog.factors) {
      if (const auto* block = std::get_if<TorsionBlock>(&factor)) {
        if (block->prime != ring.prime) {
          throw MixedPrimeError("catalog has torsion at prime " +
                                std::to_string(block->prime) + ", series requested mod " +
                                std::to_string(ring.prime));
        }
      }
    }
  }

  TruncatedSeries total = TruncatedSeries::one(N);
  for (const auto& [factor, mult] : catalog.factors) {
    if (const auto* sphere = std::get_if<OmegaSphere>(&factor)) {
      TruncatedSeries h(N);
      if (sphere->degree - 1 <= N) h[sphere->degree - 1] = BigInt(1);
      total = total * TruncatedSeries::geometric_inverse(h).pow(mult);
      continue;
    }
    if (ring.is_rational) continue;  // torsion blocks are rationally trivial
    const auto& block = std::get<TorsionBlock>(factor);
    // the block is loops on a suspension: tensor algebra on the
    // desuspended homology of its wedge of words
    TruncatedSeries h(N);
    for (const auto& [word, word_mult] : block.words) {
      TruncatedSeries g = smash_detail::word_generating_function(word, N + 1);
      for (int d = 1; d <= N + 1; ++d) {
        if (d - 1 <= N && !g[d].is_zero()) h[d - 1] += g[d] * word_mult;
      }
      if (!g[0].is_zero()) throw std::logic_error("smash word with unit homology");
    }
    total = total * TruncatedSeries::geometric_inverse(h).pow(mult);
  }
  return make_poincare_series(ring, total);
}

// Independent series oracle: loops on a suspension carry the tensor algebra
// on the desuspended reduced homology of the wedge.
inline PoincareSeries tensor_algebra_series(const std::vector<SpaceAtom>& atoms,
                                            CoefficientRing ring, int N) {
  if (atoms.empty()) throw std::invalid_argument("empty wedge");
  TruncatedSeries g(N);
  for (const auto& atom : atoms) {
    if (const auto* s = std::get_if<SphereAtom>(&atom)) {
      if (s->degree - 1 <= N) g[s->degree - 1] += BigInt(1);
      continue;
    }
    const auto& m = std::get<MooreAtom>(atom);
    if (ring.is_rational) continue;  // Moore summands vanish rationally
    if (m.prime != ring.prime) {
      throw MixedPrimeError("atom at prime " + std::to_string(m.prime) +
                            " is invisible mod " + std::to_string(ring.prime));
    }
    if (m.degree - 2 <= N) g[m.degree - 2] += BigInt(1);
    if (m.degree - 1 <= N) g[m.degree - 1] += BigInt(1);
  }
  return make_poincare_series(ring, TruncatedSeries::geometric_inverse(g));
}

}  // namespace zk
