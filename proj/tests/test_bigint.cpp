#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "zk/bigint.hpp"

using zk::BigInt;

namespace {

__int128 to128(const BigInt& v) {
  __int128 r = 0;
  bool neg = v.is_negative();
  for (char c : v.abs().to_string()) r = r * 10 + (c - '0');
  return neg ? -r : r;
}

std::string str128(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  std::string s;
  while (v != 0) {
    int d = static_cast<int>(v % 10);
    s.push_back(static_cast<char>('0' + (d < 0 ? -d : d)));
    v /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("small value round trips") {
  CHECK(BigInt(0).to_string() == "0");
  CHECK(BigInt(-1).to_string() == "-1");
  CHECK(BigInt(123456789).to_string() == "123456789");
  CHECK(BigInt::from_string("-987654321098765432").to_int64() == -987654321098765432LL);
  CHECK(BigInt(0).is_zero());
  CHECK(BigInt(1).is_one());
  CHECK(BigInt(-9223372036854775807LL - 1).to_int64() == -9223372036854775807LL - 1);
}

TEST_CASE("arithmetic agrees with __int128 on random 60-bit operands") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> dist(-(1LL << 60), 1LL << 60);
  for (int iter = 0; iter < 3000; ++iter) {
    long long a = dist(rng), b = dist(rng);
    BigInt A(a), B(b);
    CHECK(to128(A + B) == static_cast<__int128>(a) + b);
    CHECK(to128(A - B) == static_cast<__int128>(a) - b);
    CHECK(to128(A * B) == static_cast<__int128>(a) * b);
    if (b != 0) {
      CHECK(to128(A / B) == static_cast<__int128>(a) / b);
      CHECK(to128(A % B) == static_cast<__int128>(a) % b);
    }
    CHECK((A < B) == (a < b));
  }
}

TEST_CASE("multi-limb divmod identity") {
  std::mt19937_64 rng(11);
  auto random_big = [&](int limbs) {
    BigInt v(0);
    for (int i = 0; i < limbs; ++i) {
      v = v * BigInt::from_string("4294967296") + BigInt(static_cast<long long>(rng() & 0xffffffffULL));
    }
    return rng() & 1 ? v : -v;
  };
  for (int iter = 0; iter < 500; ++iter) {
    BigInt a = random_big(1 + static_cast<int>(rng() % 8));
    BigInt b = random_big(1 + static_cast<int>(rng() % 5));
    if (b.is_zero()) continue;
    auto [q, r] = BigInt::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
    if (!r.is_zero()) CHECK(r.sign() == a.sign());
  }
}

TEST_CASE("known big products and string parsing") {
  BigInt f = zk::factorial(30);
  CHECK(f.to_string() == "265252859812191058636308480000000");
  CHECK(BigInt::divexact(f, zk::factorial(29)) == BigInt(30));
  BigInt p = BigInt::from_string("340282366920938463463374607431768211456");  // 2^128
  CHECK(p == BigInt::from_string("18446744073709551616") * BigInt::from_string("18446744073709551616"));
}

TEST_CASE("gcd") {
  CHECK(BigInt::gcd(BigInt(12), BigInt(-18)) == BigInt(6));
  CHECK(BigInt::gcd(BigInt(0), BigInt(-5)) == BigInt(5));
  CHECK(BigInt::gcd(BigInt(0), BigInt(0)) == BigInt(0));
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 500; ++iter) {
    long long a = static_cast<long long>(rng() % 2000000) - 1000000;
    long long b = static_cast<long long>(rng() % 2000000) - 1000000;
    long long g = std::gcd(a, b);
    CHECK(BigInt::gcd(BigInt(a), BigInt(b)) == BigInt(g));
  }
}

TEST_CASE("string round trip at scale") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 100; ++iter) {
    __int128 v = (static_cast<__int128>(static_cast<long long>(rng())) << 50) ^
                 static_cast<long long>(rng());
    std::string s = str128(v);
    CHECK(BigInt::from_string(s).to_string() == s);
  }
}
