// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fails.  Oracle values are exact; timing budgets are asserted where stated.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "zk/classifier.hpp"
#include "zk/fixtures.hpp"
#include "zk/homology.hpp"
#include "zk/koszul.hpp"
#include "zk/localization.hpp"
#include "zk/loop_space.hpp"
#include "zk/splitting.hpp"

using namespace zk;

namespace {

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
};

std::vector<NamedComplex> corpus() {
  std::vector<NamedComplex> out;
  for (int n = 1; n <= 6; ++n) {
    out.push_back({"boundary-delta-" + std::to_string(n), fixtures::simplex_boundary(n)});
  }
  for (int m = 2; m <= 8; ++m) {
    out.push_back({"points-" + std::to_string(m), fixtures::disjoint_points(m)});
  }
  out.push_back({"path-3", fixtures::path(3)});
  out.push_back({"path-4", fixtures::path(4)});
  out.push_back({"cycle-4", fixtures::cycle(4)});
  out.push_back({"cycle-5", fixtures::cycle(5)});
  out.push_back({"complete-graph-4", fixtures::complete_graph(4)});
  out.push_back({"rp2-6", fixtures::real_projective_plane_6()});
  out.push_back({"torus-7", fixtures::torus_7()});
  out.push_back({"two-neighbourly-4d", fixtures::two_neighbourly_4d()});
  out.push_back({"undecided-4d", fixtures::undecided_4d()});
  out.push_back({"circulant-20", fixtures::circulant_20()});
  return out;
}

std::map<int, int> betti_map(const HomologyProfile& p) {
  std::map<int, int> out;
  for (const auto& [d, g] : p.groups()) {
    if (g.betti != 0) out[d] = g.betti;
  }
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

SimplicialComplex random_complex(std::mt19937_64& rng, int max_m) {
  int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_m));
  int facet_count = 1 + static_cast<int>(rng() % static_cast<unsigned>(2 * m));
  std::vector<VertexSubset> facets;
  for (int i = 0; i < facet_count; ++i) {
    int sz = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(m, 5)));
    VertexSubset f;
    while (f.size() < sz) f.add(1 + static_cast<int>(rng() % static_cast<unsigned>(m)));
    facets.push_back(f);
  }
  VertexSubset covered;
  for (auto f : facets) covered = covered | f;
  for (int v = 1; v <= m; ++v) {
    if (!covered.contains(v)) facets.push_back(VertexSubset::single(v));
  }
  return SimplicialComplex(m, facets);
}

struct Criterion {
  int number;
  std::string label;
  std::function<bool(std::string&)> run;
};

// 1. exact integral homology of the named fixtures, under a second
bool homology_oracles(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  for (int n = 2; n <= 6; ++n) {
    HomologyProfile p = reduced_homology(fixtures::simplex_boundary(n));
    HomologyProfile expected;
    expected.add_betti(n - 1, 1);
    if (!(p == expected)) {
      detail = "boundary-delta-" + std::to_string(n) + " mismatch";
      return false;
    }
  }
  HomologyProfile rp2 = reduced_homology(fixtures::real_projective_plane_6());
  HomologyProfile rp2_expected;
  rp2_expected.add_torsion(1, TorsionEntry{2, 1});
  if (!(rp2 == rp2_expected)) {
    detail = "rp2-6 mismatch";
    return false;
  }
  HomologyProfile torus = reduced_homology(fixtures::torus_7());
  HomologyProfile torus_expected;
  torus_expected.add_betti(1, 2);
  torus_expected.add_betti(2, 1);
  if (!(torus == torus_expected)) {
    detail = "torus-7 mismatch";
    return false;
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed >= 1.0) {
    detail = "took " + std::to_string(elapsed) + " s (budget 1 s)";
    return false;
  }
  return true;
}

// 2. splitting aggregation equals the Koszul oracle on every fixture with
// at most 8 vertices, within 30 seconds total
bool koszul_cross_validation(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  for (const auto& [name, K] : corpus()) {
    if (K.vertex_count() > 8) continue;
    auto splitting = betti_map(moment_angle_homology(K));
    auto oracle = koszul_betti_numbers(K, 1 + K.vertex_count() + K.dimension());
    if (splitting != oracle) {
      detail = name + ": splitting and Koszul Betti numbers disagree";
      return false;
    }
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed >= 30.0) {
    detail = "took " + std::to_string(elapsed) + " s (budget 30 s)";
    return false;
  }
  return true;
}

// 3. the moment-angle complex of a simplex boundary is an odd sphere
bool sphere_identities(std::string& detail) {
  for (int m = 2; m <= 6; ++m) {
    HomologyProfile p = moment_angle_homology(fixtures::simplex_boundary(m - 1));
    HomologyProfile expected;
    expected.add_betti(2 * m - 1, 1);
    if (!(p == expected)) {
      detail = "m = " + std::to_string(m) + ": not the homology of S^" + std::to_string(2 * m - 1);
      return false;
    }
  }
  return true;
}

// 4. Betti counts for disjoint points
bool disjoint_point_counts(std::string& detail) {
  for (int m = 4; m <= 8; ++m) {
    HomologyProfile p = moment_angle_homology(fixtures::disjoint_points(m));
    if (!p.torsion_free()) {
      detail = "points-" + std::to_string(m) + ": unexpected torsion";
      return false;
    }
    std::map<int, int> expected;
    for (int k = 2; k <= m; ++k) {
      expected[k + 1] += static_cast<int>((k - 1) * binomial(m, k));
    }
    if (betti_map(p) != expected) {
      detail = "points-" + std::to_string(m) + ": Betti numbers mismatch";
      return false;
    }
  }
  return true;
}

// 5. Hilton-Milnor series equals the tensor-algebra oracle on 200 random
// sphere wedges through degree 20, within 10 seconds
bool pbw_witt_identity(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20260808);
  const int N = 20;
  for (int iter = 0; iter < 200; ++iter) {
    int letters = 1 + static_cast<int>(rng() % 4);
    std::vector<SpaceAtom> atoms;
    for (int i = 0; i < letters; ++i) {
      atoms.emplace_back(SphereAtom{2 + static_cast<int>(rng() % 5)});
    }
    auto catalog = loop_factors_of_wedge(atoms, N);
    auto series = poincare_series(catalog, CoefficientRing::rationals(), N);
    auto oracle = tensor_algebra_series(atoms, CoefficientRing::rationals(), N);
    if (!(series == oracle)) {
      detail = "iteration " + std::to_string(iter) + ": series mismatch";
      return false;
    }
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed >= 10.0) {
    detail = "took " + std::to_string(elapsed) + " s (budget 10 s)";
    return false;
  }
  return true;
}

// 6. smash rewriting rules, including generating-function additivity on 500
// random words
bool smash_rewriting(std::string& detail) {
  std::mt19937_64 rng(424243);
  // cross-prime annihilation
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<SpaceAtom> word = {
        MooreAtom{3 + static_cast<int>(rng() % 4), 2, 1 + static_cast<int>(rng() % 2)},
        MooreAtom{3 + static_cast<int>(rng() % 4), 3, 1 + static_cast<int>(rng() % 2)}};
    for (int extra = static_cast<int>(rng() % 3); extra > 0; --extra) {
      word.emplace_back(SphereAtom{2 + static_cast<int>(rng() % 4)});
    }
    std::shuffle(word.begin(), word.end(), rng);
    if (smash_reduce(word).kind != SmashReduction::Kind::Contractible) {
      detail = "cross-prime word failed to annihilate";
      return false;
    }
  }
  // same-prime pair pattern
  for (int iter = 0; iter < 100; ++iter) {
    std::int64_t p = (rng() % 2 == 0) ? 3 : 5;
    int r = 1 + static_cast<int>(rng() % 3);
    int s = 1 + static_cast<int>(rng() % 3);
    int n = 3 + static_cast<int>(rng() % 5);
    int m = 3 + static_cast<int>(rng() % 5);
    auto reduced = smash_reduce({MooreAtom{n, p, r}, MooreAtom{m, p, s}});
    if (reduced.kind != SmashReduction::Kind::Wedge || reduced.atoms.size() != 2) {
      detail = "same-prime pair did not split into two summands";
      return false;
    }
    MooreAtom top = std::get<MooreAtom>(reduced.atoms[0].first);
    MooreAtom bottom = std::get<MooreAtom>(reduced.atoms[1].first);
    int want = std::min(r, s);
    if (top.degree != n + m || bottom.degree != n + m - 1 || top.exponent != want ||
        bottom.exponent != want || top.prime != p || bottom.prime != p ||
        !reduced.atoms[0].second.is_one() || !reduced.atoms[1].second.is_one()) {
      detail = "same-prime pair pattern mismatch";
      return false;
    }
  }
  // degree-generating-function additivity over the word's own prime field
  const int cutoff = 48;
  for (int iter = 0; iter < 500; ++iter) {
    std::int64_t p = (rng() % 2 == 0) ? 2 : 3;
    int len = 1 + static_cast<int>(rng() % 4);
    std::vector<SpaceAtom> word;
    bool has_moore = false;
    for (int i = 0; i < len; ++i) {
      if (rng() % 3 == 0) {
        word.emplace_back(SphereAtom{2 + static_cast<int>(rng() % 3)});
      } else {
        word.emplace_back(
            MooreAtom{3 + static_cast<int>(rng() % 4), p, 1 + static_cast<int>(rng() % 2)});
        has_moore = true;
      }
    }
    if (!has_moore) word.emplace_back(MooreAtom{3, p, 1});
    auto gen_of_atom = [&](const SpaceAtom& a) {
      TruncatedSeries g(cutoff);
      if (const auto* sphere = std::get_if<SphereAtom>(&a)) {
        g[sphere->degree] = BigInt(1);
      } else {
        const auto& moore = std::get<MooreAtom>(a);
        g[moore.degree - 1] += BigInt(1);
        g[moore.degree] += BigInt(1);
      }
      return g;
    };
    TruncatedSeries expected = TruncatedSeries::one(cutoff);
    for (const auto& a : word) expected = expected * gen_of_atom(a);
    auto reduced = smash_reduce(word);
    TruncatedSeries got(cutoff);
    if (reduced.kind == SmashReduction::Kind::Wedge) {
      for (const auto& [atom, mult] : reduced.atoms) {
        TruncatedSeries g = gen_of_atom(atom);
        for (int d = 0; d <= cutoff; ++d) got[d] += g[d] * mult;
      }
    } else if (reduced.kind == SmashReduction::Kind::Mod2Symbolic) {
      for (const auto& [w, mult] : reduced.words) {
        TruncatedSeries g = TruncatedSeries::one(cutoff);
        for (const auto& a : w.atoms) g = g * gen_of_atom(a);
        for (int d = 0; d <= cutoff; ++d) got[d] += g[d] * mult;
      }
    } else {
      detail = "single-prime word reduced to a contractible space";
      return false;
    }
    if (!(got == expected)) {
      detail = "iteration " + std::to_string(iter) + ": generating function not additive";
      return false;
    }
  }
  return true;
}

// 7. the excluded-prime reports of the two localization fixtures
bool localization_fixtures(std::string& detail) {
  auto rp2 = prime_exclusion(fixtures::real_projective_plane_6());
  if (rp2.max_deficit != 6 || rp2.excluded_primes() != std::set<std::int64_t>{2, 3} ||
      !rp2.verdict_ok) {
    detail = "rp2-6 report mismatch";
    return false;
  }
  auto k4 = prime_exclusion(fixtures::complete_graph(4));
  if (k4.max_deficit != 3 || !k4.excluded_primes().empty() || !k4.verdict_ok) {
    detail = "complete-graph-4 report mismatch";
    return false;
  }
  return true;
}

// 8. the prime-bound identity across every fixture's clique subsets
bool threshold_identity(std::string& detail) {
  for (const auto& [name, K] : corpus()) {
    for (VertexSubset I : clique_subsets(K)) {
      Subcomplex sub = full_subcomplex(K, I);
      Neighbourliness nb = neighbourliness(sub.complex);
      if (nb.is_simplex) continue;
      int deficit = localization_deficit(sub.complex, I.size());
      Rational bound =
          sphere_wedge_prime_bound(1 + I.size() + sub.complex.dimension(), 2 * nb.k + 2);
      if (2 * bound.numerator != static_cast<long long>(deficit) * bound.denominator) {
        detail = name + " at " + I.to_string() + ": identity fails";
        return false;
      }
    }
  }
  return true;
}

// 9. certificate round trip on 500 random complexes plus the two tampering
// rejections, within 30 seconds
bool certificate_soundness(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(515253);
  for (int iter = 0; iter < 500; ++iter) {
    auto K = random_complex(rng, 10);
    auto cert = certificate_build(K);
    auto check = certificate_verify(cert);
    if (!check.valid) {
      detail = "iteration " + std::to_string(iter) + ": verification failed";
      return false;
    }
  }
  // dominating chosen vertex
  auto dominating = certificate_build(fixtures::path(3));
  dominating.nodes[0].vertex = 2;
  auto check1 = certificate_verify(dominating);
  bool found1 = false;
  for (const auto& d : check1.diagnostics) {
    found1 = found1 || d.find("DominatingVertex") != std::string::npos;
  }
  if (check1.valid || !found1) {
    detail = "dominating-vertex tampering was not rejected";
    return false;
  }
  // deletion child with a dropped facet
  auto tampered = certificate_build(fixtures::cycle(5));
  auto& child = tampered.nodes[static_cast<std::size_t>(tampered.nodes[0].deletion)];
  std::vector<VertexSubset> facets = child.complex.facets();
  facets.erase(facets.begin() + 1);
  child.complex = SimplicialComplex(child.complex.vertex_count(), facets);
  auto check2 = certificate_verify(tampered);
  bool found2 = false;
  for (const auto& d : check2.diagnostics) {
    found2 = found2 || d.find("UnionMismatch") != std::string::npos;
  }
  if (check2.valid || !found2) {
    detail = "facet-deletion tampering was not rejected";
    return false;
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed >= 30.0) {
    detail = "took " + std::to_string(elapsed) + " s (budget 30 s)";
    return false;
  }
  return true;
}

// 10. classifier rule coverage on the fixture corpus
bool classifier_coverage(std::string& detail) {
  for (const auto& [name, K] : corpus()) {
    if (K.dimension() != 2) continue;
    Verdict v = classify(K);
    bool fired_pt = false;
    for (auto kind : v.fired) fired_pt = fired_pt || kind == VerdictKind::ProductPT;
    if (!fired_pt) {
      detail = name + ": 2-dimensional fixture did not fire the ProductPT rule";
      return false;
    }
  }
  if (classify(fixtures::torus_7()).kind != VerdictKind::ProductP) {
    detail = "torus-7: torsion-free members did not yield ProductP";
    return false;
  }
  if (classify(fixtures::complete_graph(4)).kind != VerdictKind::ProductP) {
    detail = "complete-graph-4: expected ProductP";
    return false;
  }
  Verdict unknown = classify(fixtures::undecided_4d());
  if (unknown.kind != VerdictKind::Unknown || unknown.reasons.empty()) {
    detail = "undecided-4d: expected Unknown with a recorded failed hypothesis";
    return false;
  }
  bool hypothesis_recorded = false;
  for (const auto& r : unknown.reasons) {
    hypothesis_recorded = hypothesis_recorded || r.rule == "neighbourliness";
  }
  if (!hypothesis_recorded) {
    detail = "undecided-4d: no failed-hypothesis reason recorded";
    return false;
  }
  return true;
}

// 11. the clique sweep on the 20-vertex circulant finishes fast
bool clique_sweep_performance(std::string& detail) {
  auto K = fixtures::circulant_20();
  auto start = std::chrono::steady_clock::now();
  auto cliques = clique_subsets(K);
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed >= 5.0) {
    detail = "took " + std::to_string(elapsed) + " s (budget 5 s)";
    return false;
  }
  // sanity on the output: 20 singletons, 100 edges, clique number 6
  int singles = 0, edges = 0, largest = 0;
  for (auto s : cliques) {
    singles += s.size() == 1;
    edges += s.size() == 2;
    largest = std::max(largest, s.size());
  }
  if (singles != 20 || edges != 100 || largest != 6) {
    detail = "clique census mismatch";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "homology oracle suite (simplex boundaries, projective plane, torus)", homology_oracles},
      {2, "splitting vs Koszul Betti cross-validation on all fixtures with m <= 8",
       koszul_cross_validation},
      {3, "moment-angle complexes of simplex boundaries are odd spheres", sphere_identities},
      {4, "disjoint-point Betti counts (k-1) C(m,k) in degree k+1", disjoint_point_counts},
      {5, "Hilton-Milnor vs tensor-algebra series on 200 random sphere wedges", pbw_witt_identity},
      {6, "smash rewriting rules and generating-function additivity", smash_rewriting},
      {7, "excluded-prime reports for rp2-6 and complete-graph-4", localization_fixtures},
      {8, "prime-bound identity over every fixture's clique subsets", threshold_identity},
      {9, "certificate build/verify round trip and tampering rejection", certificate_soundness},
      {10, "classifier rule coverage across the fixture corpus", classifier_coverage},
      {11, "clique-driven subset sweep on the 20-vertex circulant", clique_sweep_performance},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (ok) {
      std::printf("PASS %2d. %s\n", c.number, c.label.c_str());
    } else {
      ++failures;
      std::printf("FAIL %2d. %s%s%s\n", c.number, c.label.c_str(),
                  detail.empty() ? "" : " -- ", detail.c_str());
    }
  }
  if (failures != 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
