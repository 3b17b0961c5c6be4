#pragma once

// Exact reduced simplicial homology: boundary matrices with the standard
// alternating signs, Smith normal form for ranks and torsion, and the
// derived quantities every splitting theorem consumes (torsion primes,
// homology connectivity).

#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "zk/factor.hpp"
#include "zk/simplicial_complex.hpp"
#include "zk/smith.hpp"

namespace zk {

struct TorsionEntry {
  std::int64_t prime = 0;
  int exponent = 1;

  auto operator<=>(const TorsionEntry&) const = default;
};

struct HomologyGroup {
  int betti = 0;
  std::vector<TorsionEntry> torsion;  // ascending, each a prime power p^r

  bool trivial() const { return betti == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;
};

// Reduced homology, one group per degree; trivial degrees are absent.
class HomologyProfile {
 public:
  void add_betti(int degree, int count) {
    if (count == 0) return;
    groups_[degree].betti += count;
  }

  void add_torsion(int degree, TorsionEntry t) {
    auto& tor = groups_[degree].torsion;
    tor.insert(std::upper_bound(tor.begin(), tor.end(), t), t);
  }

  const std::map<int, HomologyGroup>& groups() const { return groups_; }

  bool trivial() const { return groups_.empty(); }

  bool torsion_free() const {
    for (const auto& [d, g] : groups_) {
      if (!g.torsion.empty()) return false;
    }
    return true;
  }

  int betti(int degree) const {
    auto it = groups_.find(degree);
    return it == groups_.end() ? 0 : it->second.betti;
  }

  const std::vector<TorsionEntry>* torsion(int degree) const {
    auto it = groups_.find(degree);
    return it == groups_.end() ? nullptr : &it->second.torsion;
  }

  HomologyProfile shifted(int offset) const {
    HomologyProfile out;
    for (const auto& [d, g] : groups_) out.groups_[d + offset] = g;
    return out;
  }

  void direct_sum(const HomologyProfile& other) {
    for (const auto& [d, g] : other.groups_) {
      auto& mine = groups_[d];
      mine.betti += g.betti;
      for (const auto& t : g.torsion) {
        mine.torsion.insert(std::upper_bound(mine.torsion.begin(), mine.torsion.end(), t), t);
      }
    }
  }

  std::set<std::int64_t> torsion_primes() const {
    std::set<std::int64_t> out;
    for (const auto& [d, g] : groups_) {
      for (const auto& t : g.torsion) out.insert(t.prime);
    }
    return out;
  }

  bool operator==(const HomologyProfile&) const = default;

 private:
  std::map<int, HomologyGroup> groups_;
};

struct BoundaryMatrix {
  int degree = 0;                  // maps degree-chains to (degree-1)-chains
  std::vector<VertexSubset> rows;  // (degree-1)-faces, lexicographic
  std::vector<VertexSubset> cols;  // degree-faces, lexicographic
  IntMatrix matrix;
};

// Boundary matrices for degrees 1..dim(K); the composite of consecutive
// matrices is checked to vanish.
inline std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& K) {
  std::vector<BoundaryMatrix> out;
  std::vector<std::vector<VertexSubset>> by_dim(static_cast<std::size_t>(K.dimension()) + 1);
  for (int d = 0; d <= K.dimension(); ++d) by_dim[static_cast<std::size_t>(d)] = faces(K, d);

  for (int d = 1; d <= K.dimension(); ++d) {
    const auto& rows = by_dim[static_cast<std::size_t>(d - 1)];
    const auto& cols = by_dim[static_cast<std::size_t>(d)];
    std::map<std::uint64_t, int> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      row_index[rows[i].bits] = static_cast<int>(i);
    }
    BoundaryMatrix B;
    B.degree = d;
    B.rows = rows;
    B.cols = cols;
    B.matrix = IntMatrix(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      std::vector<int> verts = cols[j].vertices();
      for (std::size_t k = 0; k < verts.size(); ++k) {
        VertexSubset face = cols[j];
        face.remove(verts[k]);
        int sign = (k % 2 == 0) ? 1 : -1;
        B.matrix.at(row_index.at(face.bits), static_cast<int>(j)) = BigInt(sign);
      }
    }
    out.push_back(std::move(B));
  }

  // d(d(x)) = 0
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    const IntMatrix& A = out[i].matrix;
    const IntMatrix& B = out[i + 1].matrix;
    for (int r = 0; r < A.rows; ++r) {
      for (int c = 0; c < B.cols; ++c) {
        long long sum = 0;
        for (int k = 0; k < A.cols; ++k) {
          if (!A.at(r, k).is_zero() && !B.at(k, c).is_zero()) {
            sum += A.at(r, k).to_int64() * B.at(k, c).to_int64();
          }
        }
        if (sum != 0) throw std::logic_error("boundary composite is nonzero");
      }
    }
  }
  return out;
}

namespace detail {

inline void append_prime_power_torsion(HomologyProfile& profile, int degree,
                                       const BigInt& divisor) {
  if (!divisor.fits_int64()) {
    throw std::overflow_error("elementary divisor exceeds 64 bits: " + divisor.to_string());
  }
  for (const auto& [p, r] : factor_u64(static_cast<std::uint64_t>(divisor.to_int64()))) {
    profile.add_torsion(degree, TorsionEntry{static_cast<std::int64_t>(p), r});
  }
}

}  // namespace detail

// Reduced integral homology.  Torsion is stored as prime powers, the form
// both the Moore-space conversion and the localization thresholds consume.
inline HomologyProfile reduced_homology(const SimplicialComplex& K) {
  const int dim = K.dimension();
  auto boundaries = boundary_matrices(K);

  std::vector<int> rank(static_cast<std::size_t>(dim) + 2, 0);
  rank[0] = 1;  // augmentation: K is nonempty
  std::vector<SmithResult> smith(static_cast<std::size_t>(dim) + 2);
  for (const auto& B : boundaries) {
    smith[static_cast<std::size_t>(B.degree)] = smith_normal_form(B.matrix);
    rank[static_cast<std::size_t>(B.degree)] =
        smith[static_cast<std::size_t>(B.degree)].rank;
  }

  HomologyProfile profile;
  for (int d = 0; d <= dim; ++d) {
    int n_d = K.face_count(d);
    int betti = n_d - rank[static_cast<std::size_t>(d)] - rank[static_cast<std::size_t>(d) + 1];
    profile.add_betti(d, betti);
    if (d + 1 <= dim) {
      for (const auto& divisor : smith[static_cast<std::size_t>(d) + 1].invariant_factors) {
        if (!divisor.is_one()) detail::append_prime_power_torsion(profile, d, divisor);
      }
    }
  }

  // Euler characteristic: torsion contributes nothing
  long long chi_faces = 0;
  for (int d = 0; d <= dim; ++d) chi_faces += (d % 2 == 0 ? 1 : -1) * K.face_count(d);
  long long chi_betti = 1;
  for (const auto& [d, g] : profile.groups()) {
    chi_betti += (d % 2 == 0 ? 1 : -1) * g.betti;
  }
  if (chi_faces != chi_betti) throw std::logic_error("Euler characteristic mismatch");

  return profile;
}

inline std::set<std::int64_t> torsion_primes(const std::vector<HomologyProfile>& profiles) {
  std::set<std::int64_t> out;
  for (const auto& p : profiles) {
    auto primes = p.torsion_primes();
    out.insert(primes.begin(), primes.end());
  }
  return out;
}

// Sentinel for complexes with vanishing reduced homology in every degree.
inline constexpr int kUnboundedConnectivity = std::numeric_limits<int>::max();

// Largest c with reduced H_d = 0 for all d <= c.  This is homology
// connectivity; genuine connectivity is not computed here.
inline int homology_connectivity(const SimplicialComplex& K) {
  HomologyProfile profile = reduced_homology(K);
  if (profile.trivial()) return kUnboundedConnectivity;
  return profile.groups().begin()->first - 1;
}

}  // namespace zk
