#pragma once

// Decision procedure for the loop-space membership theorems.  Each clique
// subset of K is tested for dimension, neighbourliness, and torsion; the
// verdict is the sharpest decomposition those hypotheses license.  The
// pushout certificate realizes the strong-induction reduction to complete
// 1-skeleta, and its verifier re-derives every side condition with separate
// face-set arithmetic.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "zk/homology.hpp"
#include "zk/localization.hpp"
#include "zk/loop_space.hpp"
#include "zk/simplicial_complex.hpp"
#include "zk/splitting.hpp"

namespace zk {

enum class VerdictKind { ProductP, LocalizedProductP, ProductPT, Unknown };

inline const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::ProductP: return "ProductP";
    case VerdictKind::LocalizedProductP: return "LocalizedProductP";
    case VerdictKind::ProductPT: return "ProductPT";
    default: return "Unknown";
  }
}

struct VerdictReason {
  VertexSubset subset;
  std::string rule;
  std::string detail;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::vector<VerdictKind> fired;  // every rule that applied, strongest first
  std::vector<VerdictReason> reasons;
  std::optional<PrimeExclusionReport> exclusion;
};

inline Verdict classify(const SimplicialComplex& K,
                        const std::vector<VertexSubset>& golod_assertions = {}) {
  Verdict verdict;
  auto members = clique_subsets(K);

  bool highly_neighbourly = true;  // every member at least (dim-1)-neighbourly
  bool torsion_free = true;
  for (VertexSubset I : members) {
    Subcomplex sub = full_subcomplex(K, I);
    Neighbourliness nb = neighbourliness(sub.complex);
    if (!nb.is_simplex && nb.k < sub.complex.dimension() - 1) {
      highly_neighbourly = false;
      verdict.reasons.push_back(
          {I, "neighbourliness",
           "member is " + std::to_string(nb.k) + "-neighbourly, needs " +
               std::to_string(sub.complex.dimension() - 1)});
    }
    if (!nb.is_simplex) {
      auto primes = reduced_homology(sub.complex).torsion_primes();
      if (!primes.empty()) {
        torsion_free = false;
        std::string list;
        for (auto p : primes) list += (list.empty() ? "" : ",") + std::to_string(p);
        verdict.reasons.push_back({I, "torsion", "integral homology has torsion at {" + list + "}"});
      }
    }
  }

  if (highly_neighbourly) {
    verdict.fired.push_back(VerdictKind::ProductPT);
    if (torsion_free) {
      verdict.fired.insert(verdict.fired.begin(), VerdictKind::ProductP);
      verdict.kind = VerdictKind::ProductP;
    } else {
      verdict.kind = VerdictKind::ProductPT;
    }
    return verdict;
  }

  PrimeExclusionReport report = prime_exclusion(K, golod_assertions);
  if (report.verdict_ok) {
    verdict.fired.push_back(VerdictKind::LocalizedProductP);
    verdict.kind = VerdictKind::LocalizedProductP;
    verdict.exclusion = std::move(report);
    return verdict;
  }
  for (const auto& [bits, status] : report.golod) {
    if (status == GolodStatus::Unknown) {
      verdict.reasons.push_back(
          {VertexSubset(bits), "golod-gate", "rational Golodness undecided; no override supplied"});
    }
  }
  verdict.kind = VerdictKind::Unknown;
  verdict.exclusion = std::move(report);
  return verdict;
}

// ---------------------------------------------------------------------------
// pushout certificates
// ---------------------------------------------------------------------------

enum class LeafRule { None, CompleteOneSkeleton, Simplex, SingleVertex };

struct CertificateNode {
  std::vector<int> labels;    // root labels of this node's vertices, ascending
  SimplicialComplex complex;  // re-indexed onto {1..labels.size()}
  int vertex = 0;             // chosen vertex as a root label; 0 on leaves
  int link = -1;              // child indices into the node pool; -1 absent
  int star = -1;
  int deletion = -1;
  LeafRule rule = LeafRule::None;

  bool is_leaf() const { return vertex == 0; }
};

struct DecompositionCertificate {
  std::vector<CertificateNode> nodes;  // node 0 is the root; children follow parents
};

namespace certificate_detail {

inline int build_node(DecompositionCertificate& cert, const SimplicialComplex& K,
                      std::vector<int> labels, bool recurse) {
  int index = static_cast<int>(cert.nodes.size());
  cert.nodes.push_back(CertificateNode{std::move(labels), K});
  if (!recurse) return index;

  if (K.vertex_count() == 1) {
    cert.nodes[static_cast<std::size_t>(index)].rule = LeafRule::SingleVertex;
    return index;
  }
  if (K.has_complete_one_skeleton()) {
    cert.nodes[static_cast<std::size_t>(index)].rule =
        K.is_simplex() ? LeafRule::Simplex : LeafRule::CompleteOneSkeleton;
    return index;
  }

  int chosen = 0;
  for (int v = 1; v <= K.vertex_count(); ++v) {
    if (!neighbors(K, v).dominating) {
      chosen = v;
      break;
    }
  }
  PushoutStep step = pushout_step(K, chosen);

  // recursive calls reallocate the node pool; work on a copy of the labels
  const std::vector<int> node_labels = cert.nodes[static_cast<std::size_t>(index)].labels;
  auto compose = [&](const std::vector<int>& local) {
    std::vector<int> out;
    out.reserve(local.size());
    for (int v : local) out.push_back(node_labels[static_cast<std::size_t>(v - 1)]);
    return out;
  };
  cert.nodes[static_cast<std::size_t>(index)].vertex =
      node_labels[static_cast<std::size_t>(chosen - 1)];

  int link = -1;
  if (step.link) {
    link = build_node(cert, step.link->complex, compose(step.link->labels), false);
  }
  int star = build_node(cert, step.star_closure.complex, compose(step.star_closure.labels), true);
  int deletion = build_node(cert, step.deletion.complex, compose(step.deletion.labels), true);
  cert.nodes[static_cast<std::size_t>(index)].link = link;
  cert.nodes[static_cast<std::size_t>(index)].star = star;
  cert.nodes[static_cast<std::size_t>(index)].deletion = deletion;
  return index;
}

}  // namespace certificate_detail

// Strong-induction pushout tree: leaves are complete 1-skeleta, inner nodes
// split at the smallest-index non-dominating vertex.  The link child is
// recorded for verification but the recursion only descends into the star
// closure and the deletion.
inline DecompositionCertificate certificate_build(const SimplicialComplex& K) {
  DecompositionCertificate cert;
  std::vector<int> labels;
  for (int v = 1; v <= K.vertex_count(); ++v) labels.push_back(v);
  certificate_detail::build_node(cert, K, std::move(labels), true);
  return cert;
}

struct CertificateCheck {
  bool valid = true;
  std::vector<std::string> diagnostics;
};

namespace certificate_detail {

// Face sets in root-label space, rebuilt by direct downward closure of the
// node's facets.  This is deliberately not the library's subset machinery.
inline std::set<std::uint64_t> root_face_set(const CertificateNode& node) {
  std::set<std::uint64_t> out;
  for (VertexSubset facet : node.complex.facets()) {
    std::vector<int> verts = facet.vertices();
    const std::size_t n = verts.size();
    for (std::uint64_t pick = 1; pick < (1ULL << n); ++pick) {
      std::uint64_t bits = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if ((pick >> i) & 1ULL) {
          bits |= 1ULL << (node.labels[static_cast<std::size_t>(verts[i] - 1)] - 1);
        }
      }
      out.insert(bits);
    }
  }
  return out;
}

inline std::uint64_t label_mask(const std::vector<int>& labels) {
  std::uint64_t bits = 0;
  for (int v : labels) bits |= 1ULL << (v - 1);
  return bits;
}

}  // namespace certificate_detail

// Re-checks every node of a certificate against the pushout side
// conditions; shares no face arithmetic with certificate_build.
inline CertificateCheck certificate_verify(const DecompositionCertificate& cert) {
  using certificate_detail::label_mask;
  using certificate_detail::root_face_set;

  CertificateCheck check;
  auto fail = [&](int node, const std::string& message) {
    check.valid = false;
    check.diagnostics.push_back("node " + std::to_string(node) + ": " + message);
  };
  if (cert.nodes.empty()) {
    fail(-1, "EmptyCertificate");
    return check;
  }

  // nodes the induction actually descends into: the root and, transitively,
  // star and deletion children (links are side conditions, not steps)
  std::vector<bool> recursion_node(cert.nodes.size(), false);
  recursion_node[0] = true;
  for (std::size_t idx = 0; idx < cert.nodes.size(); ++idx) {
    const CertificateNode& node = cert.nodes[idx];
    if (!recursion_node[idx] || node.is_leaf()) continue;
    auto mark = [&](int child) {
      if (child > static_cast<int>(idx) && child < static_cast<int>(cert.nodes.size())) {
        recursion_node[static_cast<std::size_t>(child)] = true;
      }
    };
    mark(node.star);
    mark(node.deletion);
  }

  for (int idx = 0; idx < static_cast<int>(cert.nodes.size()); ++idx) {
    const CertificateNode& node = cert.nodes[static_cast<std::size_t>(idx)];
    if (static_cast<int>(node.labels.size()) != node.complex.vertex_count()) {
      fail(idx, "LabelArityMismatch");
      continue;
    }
    std::set<std::uint64_t> faces = root_face_set(node);
    std::uint64_t universe = label_mask(node.labels);

    if (node.is_leaf()) {
      if (node.rule == LeafRule::None) {
        if (recursion_node[static_cast<std::size_t>(idx)]) fail(idx, "MissingLeafRule");
        continue;  // link nodes carry no leaf obligation
      }
      if (node.rule == LeafRule::SingleVertex && node.labels.size() != 1) {
        fail(idx, "SingleVertexArity");
      }
      if (node.rule == LeafRule::Simplex && faces.count(universe) == 0) {
        fail(idx, "SimplexRuleMismatch");
      }
      bool complete = true;
      for (std::size_t a = 0; a < node.labels.size() && complete; ++a) {
        for (std::size_t b = a + 1; b < node.labels.size(); ++b) {
          std::uint64_t edge =
              (1ULL << (node.labels[a] - 1)) | (1ULL << (node.labels[b] - 1));
          if (faces.count(edge) == 0) {
            complete = false;
            break;
          }
        }
      }
      if (!complete) fail(idx, "IncompleteLeafSkeleton");
      continue;
    }

    // internal node
    const int v = node.vertex;
    if ((universe & (1ULL << (v - 1))) == 0) {
      fail(idx, "ChosenVertexOutside");
      continue;
    }
    std::uint64_t neighbors_of_v = 0;
    for (int u : node.labels) {
      if (u == v) continue;
      std::uint64_t edge = (1ULL << (v - 1)) | (1ULL << (u - 1));
      if (faces.count(edge) != 0) neighbors_of_v |= 1ULL << (u - 1);
    }
    if (neighbors_of_v == (universe & ~(1ULL << (v - 1)))) {
      fail(idx, "DominatingVertex");
      continue;
    }
    if (node.star < 0 || node.star >= static_cast<int>(cert.nodes.size()) ||
        node.deletion < 0 || node.deletion >= static_cast<int>(cert.nodes.size()) ||
        node.star <= idx || node.deletion <= idx ||
        (node.link >= 0 && node.link <= idx) ||
        node.link >= static_cast<int>(cert.nodes.size())) {
      fail(idx, "ChildIndexInvalid");
      continue;
    }

    const CertificateNode& star = cert.nodes[static_cast<std::size_t>(node.star)];
    const CertificateNode& deletion = cert.nodes[static_cast<std::size_t>(node.deletion)];
    std::uint64_t star_mask = label_mask(star.labels);
    std::uint64_t deletion_mask = label_mask(deletion.labels);
    if (star_mask != (neighbors_of_v | (1ULL << (v - 1)))) fail(idx, "StarVertexSetMismatch");
    if (deletion_mask != (universe & ~(1ULL << (v - 1)))) {
      fail(idx, "DeletionVertexSetMismatch");
    }
    if (static_cast<int>(star.labels.size()) >= static_cast<int>(node.labels.size()) ||
        static_cast<int>(deletion.labels.size()) >= static_cast<int>(node.labels.size())) {
      fail(idx, "ChildNotSmaller");
    }

    std::set<std::uint64_t> star_faces = root_face_set(star);
    std::set<std::uint64_t> deletion_faces = root_face_set(deletion);

    // full subcomplex conditions: children carry exactly the faces of the
    // parent inside their vertex sets
    std::set<std::uint64_t> expected_star, expected_deletion, expected_link;
    for (std::uint64_t f : faces) {
      if ((f & ~star_mask) == 0) expected_star.insert(f);
      if ((f & ~deletion_mask) == 0) expected_deletion.insert(f);
      if ((f & ~neighbors_of_v) == 0) expected_link.insert(f);
    }
    if (star_faces != expected_star) fail(idx, "StarNotFullSubcomplex");
    if (deletion_faces != expected_deletion) fail(idx, "DeletionNotFullSubcomplex");

    std::set<std::uint64_t> link_faces;
    if (node.link >= 0) {
      const CertificateNode& link = cert.nodes[static_cast<std::size_t>(node.link)];
      if (label_mask(link.labels) != neighbors_of_v) fail(idx, "LinkVertexSetMismatch");
      link_faces = root_face_set(link);
      if (link_faces != expected_link) fail(idx, "LinkNotFullSubcomplex");
    } else if (neighbors_of_v != 0) {
      fail(idx, "MissingLink");
    }

    // pushout identities over face sets
    std::set<std::uint64_t> union_faces = star_faces;
    union_faces.insert(deletion_faces.begin(), deletion_faces.end());
    if (union_faces != faces) fail(idx, "UnionMismatch");
    std::set<std::uint64_t> intersection;
    for (std::uint64_t f : star_faces) {
      if (deletion_faces.count(f) != 0) intersection.insert(f);
    }
    if (intersection != link_faces) fail(idx, "IntersectionMismatch");
  }
  return check;
}

// ---------------------------------------------------------------------------
// loop factor catalogs per complex
// ---------------------------------------------------------------------------

struct MemberCatalog {
  VertexSubset subset;
  bool contractible = false;  // simplex member
  bool resolved = false;      // wedge converted into atoms
  std::optional<LoopFactorCatalog> catalog;
};

// Either one catalog for the loops on the whole moment-angle complex (when
// the unstable wedge exists and converts), or per-member catalogs over the
// clique subsets with unresolved markers where conversion fails.  No global
// factor list is invented in the second case.
struct LoopCatalogResult {
  std::optional<LoopFactorCatalog> global;
  std::vector<SpaceAtom> global_atoms;
  std::vector<MemberCatalog> members;
};

namespace catalog_detail {

inline std::optional<std::vector<SpaceAtom>> wedge_atoms(const WedgeDecomposition& wedge) {
  std::vector<SpaceAtom> atoms;
  for (const auto& s : wedge.summands) {
    if (const auto* sphere = std::get_if<SphereSummand>(&s)) {
      atoms.emplace_back(SphereAtom{sphere->degree});
    } else if (const auto* moore = std::get_if<MooreSummand>(&s)) {
      atoms.emplace_back(MooreAtom{moore->degree, moore->prime, moore->exponent});
    } else {
      return std::nullopt;
    }
  }
  return atoms;
}

}  // namespace catalog_detail

inline LoopCatalogResult loop_catalog(const SimplicialComplex& K, int cutoff) {
  LoopCatalogResult out;
  try {
    WedgeDecomposition wedge = unstable_wedge(K);
    if (auto atoms = catalog_detail::wedge_atoms(wedge)) {
      if (atoms->empty()) {
        out.global = LoopFactorCatalog{cutoff, {}};
      } else {
        out.global = loop_factors_of_wedge(*atoms, cutoff);
        out.global_atoms = std::move(*atoms);
      }
      return out;
    }
  } catch (const NeighbourlinessHypothesisError&) {
    // fall through to the per-member route
  }

  for (VertexSubset I : clique_subsets(K)) {
    Subcomplex sub = full_subcomplex(K, I);
    MemberCatalog member;
    member.subset = I;
    if (sub.complex.is_simplex()) {
      member.contractible = true;
      member.resolved = true;
      member.catalog = LoopFactorCatalog{cutoff, {}};
      out.members.push_back(std::move(member));
      continue;
    }
    try {
      WedgeDecomposition wedge = unstable_wedge(sub.complex);
      if (auto atoms = catalog_detail::wedge_atoms(wedge)) {
        member.resolved = true;
        member.catalog = atoms->empty() ? LoopFactorCatalog{cutoff, {}}
                                        : loop_factors_of_wedge(*atoms, cutoff);
      }
    } catch (const NeighbourlinessHypothesisError&) {
      // left unresolved
    }
    out.members.push_back(std::move(member));
  }
  return out;
}

}  // namespace zk
