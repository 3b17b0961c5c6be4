#pragma once

// Truncated power series over the integers, plus the Poincare series
// vocabulary shared by the loop-factor catalogs and their tensor-algebra
// oracle.  Coefficients are exact BigInts; every series carries its cutoff.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "zk/bigint.hpp"

namespace zk {

struct CoefficientRing {
  bool is_rational = true;
  std::int64_t prime = 0;

  static CoefficientRing rationals() { return {true, 0}; }
  static CoefficientRing mod(std::int64_t p) { return {false, p}; }
  bool operator==(const CoefficientRing&) const = default;
};

// Polynomial truncated at degree `cutoff` (inclusive).
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int cutoff)
      : cutoff_(cutoff), coeff_(static_cast<std::size_t>(cutoff) + 1) {}

  static TruncatedSeries one(int cutoff) {
    TruncatedSeries s(cutoff);
    s.coeff_[0] = BigInt(1);
    return s;
  }

  int cutoff() const { return cutoff_; }
  const BigInt& operator[](int d) const { return coeff_[static_cast<std::size_t>(d)]; }
  BigInt& operator[](int d) { return coeff_[static_cast<std::size_t>(d)]; }
  const std::vector<BigInt>& coefficients() const { return coeff_; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(a.cutoff_);
    for (int i = 0; i <= a.cutoff_; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= a.cutoff_ && j <= b.cutoff_; ++j) {
        if (b[j].is_zero()) continue;
        out[i + j] += a[i] * b[j];
      }
    }
    return out;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(a.cutoff_);
    for (int i = 0; i <= a.cutoff_; ++i) out[i] = a[i] + (i <= b.cutoff_ ? b[i] : BigInt(0));
    return out;
  }

  bool operator==(const TruncatedSeries&) const = default;

  // 1/(1 - h) for h with zero constant term.
  static TruncatedSeries geometric_inverse(const TruncatedSeries& h) {
    if (!h[0].is_zero()) {
      throw std::invalid_argument("geometric inverse needs a zero constant term");
    }
    TruncatedSeries out(h.cutoff());
    out[0] = BigInt(1);
    for (int n = 1; n <= h.cutoff(); ++n) {
      BigInt acc;
      for (int k = 1; k <= n; ++k) acc += h[k] * out[n - k];
      out[n] = acc;
    }
    return out;
  }

  TruncatedSeries pow(BigInt exponent) const {
    TruncatedSeries base = *this;
    TruncatedSeries out = one(cutoff_);
    while (!exponent.is_zero()) {
      if (!exponent.is_even()) out = out * base;
      exponent = exponent / BigInt(2);
      if (!exponent.is_zero()) base = base * base;
    }
    return out;
  }

 private:
  int cutoff_;
  std::vector<BigInt> coeff_;
};

struct PoincareSeries {
  CoefficientRing ring;
  int cutoff = 0;
  std::vector<BigInt> coefficients;  // degrees 0..cutoff

  bool operator==(const PoincareSeries&) const = default;
};

inline PoincareSeries make_poincare_series(CoefficientRing ring, const TruncatedSeries& s) {
  return PoincareSeries{ring, s.cutoff(), s.coefficients()};
}

}  // namespace zk
