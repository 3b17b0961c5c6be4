#pragma once

// Finite simplicial complexes on {1..m}, stored by their inclusion-maximal
// faces.  Vertex subsets are bitmasks: bit i holds vertex i+1, so documents
// and reports speak 1-based while the machinery stays 0-based.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "zk/errors.hpp"

namespace zk {

struct VertexSubset {
  std::uint64_t bits = 0;

  VertexSubset() = default;
  explicit VertexSubset(std::uint64_t b) : bits(b) {}

  static VertexSubset of(std::initializer_list<int> vertices) {
    VertexSubset s;
    for (int v : vertices) s.add(v);
    return s;
  }
  static VertexSubset full(int m) {
    return VertexSubset(m == 64 ? ~0ULL : (1ULL << m) - 1);
  }
  static VertexSubset single(int v) { return VertexSubset(1ULL << (v - 1)); }

  bool empty() const { return bits == 0; }
  int size() const { return std::popcount(bits); }
  bool contains(int v) const { return (bits >> (v - 1)) & 1ULL; }
  void add(int v) { bits |= 1ULL << (v - 1); }
  void remove(int v) { bits &= ~(1ULL << (v - 1)); }
  bool subset_of(VertexSubset o) const { return (bits & ~o.bits) == 0; }
  int min_vertex() const { return std::countr_zero(bits) + 1; }  // requires nonempty

  VertexSubset operator|(VertexSubset o) const { return VertexSubset(bits | o.bits); }
  VertexSubset operator&(VertexSubset o) const { return VertexSubset(bits & o.bits); }
  VertexSubset minus(VertexSubset o) const { return VertexSubset(bits & ~o.bits); }
  bool operator==(const VertexSubset&) const = default;

  std::vector<int> vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b) + 1);
    }
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : vertices()) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }
};

// Lexicographic order on the increasing vertex sequences, e.g. {1,4} < {2,3}.
inline bool lex_less(VertexSubset a, VertexSubset b) {
  while (a.bits != 0 && b.bits != 0) {
    int va = std::countr_zero(a.bits);
    int vb = std::countr_zero(b.bits);
    if (va != vb) return va < vb;
    a.bits &= a.bits - 1;
    b.bits &= b.bits - 1;
  }
  return a.bits == 0 && b.bits != 0;
}

inline bool size_lex_less(VertexSubset a, VertexSubset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

// Visits all size-k subsets of {1..m} in lexicographic order.
inline void for_each_subset_of_size(int m, int k,
                                    const std::function<void(VertexSubset)>& fn) {
  if (k < 0 || k > m) return;
  if (k == 0) {
    fn(VertexSubset());
    return;
  }
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    VertexSubset s;
    for (int v : idx) s.add(v);
    fn(s);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - (k - 1 - i)) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

class SimplicialComplex {
 public:
  SimplicialComplex(int vertex_count, std::vector<VertexSubset> facet_list)
      : m_(vertex_count) {
    if (m_ < 1 || m_ > 63) {
      throw std::invalid_argument("vertex count must be in [1,63], got " +
                                  std::to_string(m_));
    }
    VertexSubset universe = VertexSubset::full(m_);
    VertexSubset covered;
    for (VertexSubset f : facet_list) {
      if (f.empty()) throw std::invalid_argument("empty facet");
      if (!f.subset_of(universe)) {
        throw std::invalid_argument("facet " + f.to_string() +
                                    " exceeds vertex range [1," + std::to_string(m_) + "]");
      }
      covered = covered | f;
    }
    if (covered != universe) {
      throw std::invalid_argument(
          "ghost vertices: " + universe.minus(covered).to_string() +
          " appear in no facet");
    }
    // keep inclusion-maximal facets only
    for (VertexSubset f : facet_list) {
      bool maximal = true;
      for (VertexSubset g : facet_list) {
        if (g != f && f.subset_of(g)) {
          maximal = false;
          break;
        }
      }
      if (maximal) facets_.push_back(f);
    }
    std::sort(facets_.begin(), facets_.end(), size_lex_less);
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());

    dim_ = 0;
    for (VertexSubset f : facets_) dim_ = std::max(dim_, f.size() - 1);

    adjacency_.assign(static_cast<std::size_t>(m_) + 1, VertexSubset());
    for (VertexSubset f : facets_) {
      for (int v : f.vertices()) {
        VertexSubset rest = f;
        rest.remove(v);
        adjacency_[static_cast<std::size_t>(v)] =
            adjacency_[static_cast<std::size_t>(v)] | rest;
      }
    }
  }

  int vertex_count() const { return m_; }
  int dimension() const { return dim_; }
  const std::vector<VertexSubset>& facets() const { return facets_; }
  VertexSubset vertex_set() const { return VertexSubset::full(m_); }

  bool is_face(VertexSubset s) const {
    for (VertexSubset f : facets_) {
      if (s.subset_of(f)) return true;
    }
    return false;
  }

  bool is_simplex() const {
    return facets_.size() == 1 && facets_[0] == vertex_set();
  }

  // Neighbors of v in the 1-skeleton.
  VertexSubset adjacency(int v) const {
    if (v < 1 || v > m_) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [1," +
                                  std::to_string(m_) + "]");
    }
    return adjacency_[static_cast<std::size_t>(v)];
  }

  bool has_complete_one_skeleton() const {
    for (int v = 1; v <= m_; ++v) {
      if (adjacency_[static_cast<std::size_t>(v)] != vertex_set().minus(VertexSubset::single(v))) {
        return false;
      }
    }
    return true;
  }

  int face_count(int dim) const {
    int n = 0;
    for_each_face_of_dim(dim, [&](VertexSubset) { ++n; });
    return n;
  }

  // Applies fn to every face of the given dimension, unordered traversal.
  void for_each_face_of_dim(int dim, const std::function<void(VertexSubset)>& fn) const {
    if (dim < 0 || dim > dim_) return;
    std::unordered_set<std::uint64_t> seen;
    for (VertexSubset f : facets_) {
      if (f.size() < dim + 1) continue;
      std::vector<int> verts = f.vertices();
      std::vector<int> pick(static_cast<std::size_t>(dim + 1));
      enumerate_combinations(verts, dim + 1, 0, 0, pick, [&](const std::vector<int>& c) {
        VertexSubset s;
        for (int v : c) s.add(v);
        if (seen.insert(s.bits).second) fn(s);
      });
    }
  }

 private:
  int m_;
  int dim_ = 0;
  std::vector<VertexSubset> facets_;
  std::vector<VertexSubset> adjacency_;

  static void enumerate_combinations(const std::vector<int>& pool, int k, int start,
                                     int depth, std::vector<int>& pick,
                                     const std::function<void(const std::vector<int>&)>& fn) {
    if (depth == k) {
      fn(pick);
      return;
    }
    for (int i = start; i + (k - depth - 1) < static_cast<int>(pool.size()); ++i) {
      pick[static_cast<std::size_t>(depth)] = pool[static_cast<std::size_t>(i)];
      enumerate_combinations(pool, k, i + 1, depth + 1, pick, fn);
    }
  }
};

// --------------------------------------------------------------------------
// operations
// --------------------------------------------------------------------------

// All faces of exactly the requested dimension, lexicographic.  dim == -1
// yields the empty face; out-of-range dimensions yield the empty list.
inline std::vector<VertexSubset> faces(const SimplicialComplex& K, int dim) {
  if (dim == -1) return {VertexSubset()};
  if (dim < -1 || dim > K.dimension()) return {};
  std::vector<VertexSubset> out;
  K.for_each_face_of_dim(dim, [&](VertexSubset s) { out.push_back(s); });
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

// A full subcomplex re-indexed onto {1..|I|}; labels[i] is the original
// label of new vertex i+1.
struct Subcomplex {
  SimplicialComplex complex;
  std::vector<int> labels;

  VertexSubset to_original(VertexSubset local) const {
    VertexSubset s;
    for (int v : local.vertices()) s.add(labels[static_cast<std::size_t>(v - 1)]);
    return s;
  }
};

inline Subcomplex full_subcomplex(const SimplicialComplex& K, VertexSubset I) {
  if (I.empty()) throw EmptySubsetError("full subcomplex of the empty vertex set");
  if (!I.subset_of(K.vertex_set())) {
    throw std::invalid_argument("subset " + I.to_string() + " exceeds the vertex set");
  }
  std::vector<int> labels = I.vertices();
  std::vector<int> position(65, 0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    position[static_cast<std::size_t>(labels[i])] = static_cast<int>(i) + 1;
  }
  std::vector<VertexSubset> restricted;
  for (VertexSubset f : K.facets()) {
    VertexSubset cut = f & I;
    if (!cut.empty()) restricted.push_back(cut);
  }
  // maximal elements of the restriction, re-indexed
  std::vector<VertexSubset> local_facets;
  for (VertexSubset f : restricted) {
    bool maximal = true;
    for (VertexSubset g : restricted) {
      if (g != f && f.subset_of(g)) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      VertexSubset loc;
      for (int v : f.vertices()) loc.add(position[static_cast<std::size_t>(v)]);
      local_facets.push_back(loc);
    }
  }
  return Subcomplex{SimplicialComplex(static_cast<int>(labels.size()), local_facets),
                    std::move(labels)};
}

struct Neighbourliness {
  int k = 0;
  bool is_simplex = false;
};

// Largest k such that every vertex subset of size <= k+1 is a face.  The
// full simplex saturates at k = m-1 and is flagged instead of fed onward.
inline Neighbourliness neighbourliness(const SimplicialComplex& K) {
  const int m = K.vertex_count();
  for (int s = 2; s <= std::min(m, K.dimension() + 2); ++s) {
    bool all_faces = true;
    for_each_subset_of_size(m, s, [&](VertexSubset sub) {
      if (all_faces && !K.is_face(sub)) all_faces = false;
    });
    if (!all_faces) return {s - 2, false};
  }
  if (K.is_simplex()) return {m - 1, true};
  // dimension bound hit: some (dim+2)-subset is automatically a non-face
  return {K.dimension(), false};
}

// All nonempty subsets whose vertices are pairwise adjacent in the
// 1-skeleton (the clique subsets; singletons qualify vacuously).  Driven by
// clique extension on the adjacency masks, never a 2^m sweep.
inline std::vector<VertexSubset> clique_subsets(const SimplicialComplex& K) {
  std::vector<VertexSubset> out;
  const int m = K.vertex_count();
  std::vector<std::pair<VertexSubset, VertexSubset>> stack;  // (clique, candidates)
  for (int v = 1; v <= m; ++v) {
    VertexSubset above(~0ULL << v);  // vertices > v
    stack.emplace_back(VertexSubset::single(v), K.adjacency(v) & above);
    while (!stack.empty()) {
      auto [clique, cand] = stack.back();
      stack.pop_back();
      out.push_back(clique);
      for (std::uint64_t b = cand.bits; b != 0; b &= b - 1) {
        int u = std::countr_zero(b) + 1;
        VertexSubset ext = clique;
        ext.add(u);
        VertexSubset above_u(~0ULL << u);
        stack.emplace_back(ext, cand & K.adjacency(u) & above_u);
      }
    }
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

struct VertexNeighborhood {
  VertexSubset neighbors;
  bool dominating = false;
};

inline VertexNeighborhood neighbors(const SimplicialComplex& K, int v) {
  VertexSubset n = K.adjacency(v);
  return {n, n == K.vertex_set().minus(VertexSubset::single(v))};
}

// One step of the pushout decomposition at a non-dominating vertex v:
// link = K_{N(v)} (absent when v is isolated), star_closure = K_{v u N(v)},
// deletion = K_{V \ v}.
struct PushoutStep {
  int vertex = 0;
  std::optional<Subcomplex> link;
  Subcomplex star_closure;
  Subcomplex deletion;
};

inline PushoutStep pushout_step(const SimplicialComplex& K, int v) {
  VertexNeighborhood nb = neighbors(K, v);
  if (nb.dominating) {
    throw DominatingVertexError("vertex " + std::to_string(v) +
                                " dominates; the pushout would not shrink");
  }
  VertexSubset closed = nb.neighbors;
  closed.add(v);
  std::optional<Subcomplex> link;
  if (!nb.neighbors.empty()) link = full_subcomplex(K, nb.neighbors);
  return PushoutStep{v, std::move(link), full_subcomplex(K, closed),
                     full_subcomplex(K, K.vertex_set().minus(VertexSubset::single(v)))};
}

struct MinimalNonFaces {
  std::vector<VertexSubset> faces;
  bool rationally_elliptic = true;
};

// Inclusion-minimal non-faces; the moment-angle complex is rationally
// elliptic exactly when they are pairwise disjoint.
inline MinimalNonFaces minimal_non_faces(const SimplicialComplex& K) {
  MinimalNonFaces out;
  const int m = K.vertex_count();
  for (int s = 2; s <= std::min(m, K.dimension() + 2); ++s) {
    for_each_subset_of_size(m, s, [&](VertexSubset sub) {
      if (K.is_face(sub)) return;
      for (int v : sub.vertices()) {
        VertexSubset below = sub;
        below.remove(v);
        if (!K.is_face(below)) return;
      }
      out.faces.push_back(sub);
    });
  }
  std::sort(out.faces.begin(), out.faces.end(), size_lex_less);
  for (std::size_t i = 0; i < out.faces.size() && out.rationally_elliptic; ++i) {
    for (std::size_t j = i + 1; j < out.faces.size(); ++j) {
      if (!(out.faces[i] & out.faces[j]).empty()) {
        out.rationally_elliptic = false;
        break;
      }
    }
  }
  return out;
}

}  // namespace zk
