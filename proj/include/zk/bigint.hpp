#pragma once

// Arbitrary-precision signed integers, sized for exact linear algebra on
// small matrices (Smith normal form pivots, Witt counts, series
// coefficients).  Little-endian base-2^32 limbs, sign-magnitude.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zk {

class BigInt {
 public:
  BigInt() = default;

  BigInt(long long v) {  // NOLINT: implicit by design
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid UB on LLONG_MIN
    unsigned long long mag = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                   : static_cast<unsigned long long>(v);
    while (mag != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffULL));
      mag >>= 32;
    }
  }
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}

  static BigInt from_string(std::string_view s) {
    BigInt r;
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
      r.mul_small(10);
      r.add_small(static_cast<std::uint32_t>(s[i] - '0'));
    }
    if (neg && !r.is_zero()) r.sign_ = -1;
    return r;
  }

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }
  int sign() const { return sign_; }
  bool is_even() const { return sign_ == 0 || (limbs_[0] & 1U) == 0; }

  bool fits_int64() const {
    if (limbs_.size() > 2) return false;
    unsigned long long mag = magnitude_u64();
    if (sign_ >= 0) return mag <= 0x7fffffffffffffffULL;
    return mag <= 0x8000000000000000ULL;
  }

  long long to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
    unsigned long long mag = magnitude_u64();
    if (sign_ < 0) return -static_cast<long long>(mag - 1) - 1;
    return static_cast<long long>(mag);
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> tmp = limbs_;
    std::string digits;
    while (!tmp.empty()) {
      // divide magnitude by 10^9, emit 9 decimal digits
      std::uint64_t rem = 0;
      for (std::size_t i = tmp.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | tmp[i];
        tmp[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
        rem = cur % 1000000000ULL;
      }
      while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
      for (int d = 0; d < 9; ++d) {
        digits.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = compare_magnitude(a.limbs_, b.limbs_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
  }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  BigInt operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  BigInt abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.limbs_ = add_magnitude(a.limbs_, b.limbs_);
      r.sign_ = a.sign_;
    } else {
      int c = compare_magnitude(a.limbs_, b.limbs_);
      if (c == 0) return BigInt();
      const BigInt& big = c > 0 ? a : b;
      const BigInt& small = c > 0 ? b : a;
      r.limbs_ = sub_magnitude(big.limbs_, small.limbs_);
      r.sign_ = big.sign_;
    }
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                            r.limbs_[i + j] + carry;
        r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      r.limbs_[i + b.limbs_.size()] += static_cast<std::uint32_t>(carry);
    }
    r.trim();
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  // Truncated division (C semantics): quotient rounds toward zero,
  // remainder carries the dividend's sign.  Returns {quotient, remainder}.
  static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    std::pair<BigInt, BigInt> out;
    int c = compare_magnitude(a.limbs_, b.limbs_);
    if (c < 0) {
      out.second = a;
      return out;
    }
    auto [q, r] = divmod_magnitude(a.limbs_, b.limbs_);
    out.first.limbs_ = std::move(q);
    out.first.trim();
    out.first.sign_ = out.first.limbs_.empty() ? 0 : a.sign_ * b.sign_;
    out.second.limbs_ = std::move(r);
    out.second.trim();
    out.second.sign_ = out.second.limbs_.empty() ? 0 : a.sign_;
    return out;
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
  friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
  BigInt& operator/=(const BigInt& o) { return *this = *this / o; }
  BigInt& operator%=(const BigInt& o) { return *this = *this % o; }

  // Exact division; throws if the divisor does not divide evenly.
  static BigInt divexact(const BigInt& a, const BigInt& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("BigInt: inexact division");
    return q;
  }

  static BigInt gcd(BigInt a, BigInt b) {
    a.sign_ = a.limbs_.empty() ? 0 : 1;
    b.sign_ = b.limbs_.empty() ? 0 : 1;
    while (!b.is_zero()) {
      BigInt r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

 private:
  int sign_ = 0;
  std::vector<std::uint32_t> limbs_;

  unsigned long long magnitude_u64() const {
    unsigned long long mag = 0;
    if (limbs_.size() >= 2) mag = static_cast<unsigned long long>(limbs_[1]) << 32;
    if (!limbs_.empty()) mag |= limbs_[0];
    return mag;
  }

  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
  }

  void mul_small(std::uint32_t f) {
    std::uint64_t carry = 0;
    for (auto& l : limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(l) * f + carry;
      l = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
    trim();
    if (!limbs_.empty() && sign_ == 0) sign_ = 1;
  }

  void add_small(std::uint32_t v) {
    if (v == 0) return;
    std::uint64_t carry = v;
    for (auto& l : limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(l) + carry;
      l = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      if (carry == 0) break;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
    if (sign_ == 0) sign_ = 1;
  }

  static int compare_magnitude(const std::vector<std::uint32_t>& a,
                               const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r(big.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
      std::uint64_t cur = static_cast<std::uint64_t>(big[i]) + carry +
                          (i < small.size() ? small[i] : 0);
      r[i] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    r[big.size()] = static_cast<std::uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
      if (cur < 0) {
        cur += static_cast<std::int64_t>(1) << 32;
        borrow = 1;
      } else {
        borrow = 0;
      }
      r[i] = static_cast<std::uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // Knuth algorithm D on magnitudes; requires |a| >= |b| > 0.
  static std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> divmod_magnitude(
      const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (b.size() == 1) {
      std::vector<std::uint32_t> q(a.size(), 0);
      std::uint64_t rem = 0;
      for (std::size_t i = a.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | a[i];
        q[i] = static_cast<std::uint32_t>(cur / b[0]);
        rem = cur % b[0];
      }
      std::vector<std::uint32_t> r;
      if (rem != 0) r.push_back(static_cast<std::uint32_t>(rem));
      return {std::move(q), std::move(r)};
    }

    // normalize so the divisor's top limb has its high bit set
    int shift = 0;
    for (std::uint32_t top = b.back(); (top & 0x80000000U) == 0; top <<= 1) ++shift;
    std::vector<std::uint32_t> u = shl_bits(a, shift);
    std::vector<std::uint32_t> v = shl_bits(b, shift);
    u.push_back(0);  // room for the virtual top limb
    const std::size_t n = v.size();
    const std::size_t m = u.size() - n - 1;
    std::vector<std::uint32_t> q(m + 1, 0);

    const std::uint64_t base = 1ULL << 32;
    for (std::size_t j = m + 1; j-- > 0;) {
      std::uint64_t num = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
      std::uint64_t qhat = num / v[n - 1];
      std::uint64_t rhat = num % v[n - 1];
      while (qhat >= base ||
             qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
        --qhat;
        rhat += v[n - 1];
        if (rhat >= base) break;
      }
      // multiply-subtract
      std::int64_t borrow = 0;
      std::uint64_t carry = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t p = qhat * v[i] + carry;
        carry = p >> 32;
        std::int64_t t = static_cast<std::int64_t>(u[i + j]) -
                         static_cast<std::int64_t>(p & 0xffffffffULL) - borrow;
        if (t < 0) {
          t += static_cast<std::int64_t>(base);
          borrow = 1;
        } else {
          borrow = 0;
        }
        u[i + j] = static_cast<std::uint32_t>(t);
      }
      std::int64_t t = static_cast<std::int64_t>(u[j + n]) -
                       static_cast<std::int64_t>(carry) - borrow;
      if (t < 0) {
        // qhat was one too large; add back
        t += static_cast<std::int64_t>(base);
        --qhat;
        std::uint64_t c2 = 0;
        for (std::size_t i = 0; i < n; ++i) {
          std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
          u[i + j] = static_cast<std::uint32_t>(s);
          c2 = s >> 32;
        }
        t += static_cast<std::int64_t>(c2);
      }
      u[j + n] = static_cast<std::uint32_t>(t);
      q[j] = static_cast<std::uint32_t>(qhat);
    }

    u.resize(n);
    std::vector<std::uint32_t> r = shr_bits(u, shift);
    while (!q.empty() && q.back() == 0) q.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
    return {std::move(q), std::move(r)};
  }

  static std::vector<std::uint32_t> shl_bits(const std::vector<std::uint32_t>& a, int s) {
    if (s == 0) return a;
    std::vector<std::uint32_t> r(a.size() + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      r[i] |= a[i] << s;
      r[i + 1] = a[i] >> (32 - s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  static std::vector<std::uint32_t> shr_bits(const std::vector<std::uint32_t>& a, int s) {
    if (s == 0) return a;
    std::vector<std::uint32_t> r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      r[i] = a[i] >> s;
      if (i + 1 < a.size()) r[i] |= a[i + 1] << (32 - s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }
};

inline BigInt factorial(int n) {
  BigInt r(1);
  for (int i = 2; i <= n; ++i) r *= BigInt(i);
  return r;
}

}  // namespace zk
