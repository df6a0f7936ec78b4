#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "matcount/arith.hpp"
#include "oracles.hpp"

using namespace matcount;
using arith::Discriminant;
using arith::Factorization;

TEST_CASE("factorize handles the pinned examples") {
  auto f1 = arith::factorize(1);
  CHECK(f1.n == 1);
  CHECK(f1.factors.empty());

  auto f12 = arith::factorize(12);
  REQUIRE(f12.factors.size() == 2);
  CHECK(f12.factors[0] == std::pair<u64, int>{2, 2});
  CHECK(f12.factors[1] == std::pair<u64, int>{3, 1});

  auto fp = arith::factorize(1000000007ULL);
  REQUIRE(fp.factors.size() == 1);
  CHECK(fp.factors[0] == std::pair<u64, int>{1000000007ULL, 1});

  CHECK_THROWS_AS(arith::factorize(0), std::invalid_argument);
}

TEST_CASE("factorize handles large semiprimes and prime powers") {
  // 1000003 is prime and exceeds the trial-division cut, so its square
  // exercises the rho splitter on a perfect square.
  u64 p = 1000003;
  auto sq = arith::factorize(p * p);
  REQUIRE(sq.factors.size() == 1);
  CHECK(sq.factors[0] == std::pair<u64, int>{p, 2});

  auto mersenne = arith::factorize((u64(1) << 61) - 1);
  REQUIRE(mersenne.factors.size() == 1);
  CHECK(mersenne.factors[0].second == 1);

  auto pow2 = arith::factorize(u64(1) << 62);
  REQUIRE(pow2.factors.size() == 1);
  CHECK(pow2.factors[0] == std::pair<u64, int>{2, 62});
}

TEST_CASE("factorize reconstructs random inputs from verified prime factors") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<u64> dist(2, 1000000000000ULL);
  for (int trial = 0; trial < 200; ++trial) {
    u64 n = dist(rng);
    auto f = arith::factorize(n);
    CHECK(f.n == n);
    u64 prod = 1;
    u64 prev = 0;
    for (auto [prime, exp] : f.factors) {
      CHECK(prime > prev);
      prev = prime;
      CHECK(arith::is_prime(prime));
      CHECK(exp >= 1);
      for (int i = 0; i < exp; ++i) prod *= prime;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("is_prime agrees with a sieve and with known hard cases") {
  auto sieve = oracle::prime_sieve(20000);
  for (u64 n = 0; n <= 20000; ++n) CHECK(arith::is_prime(n) == bool(sieve[n]));

  CHECK(arith::is_prime((u64(1) << 61) - 1));
  CHECK(arith::is_prime(9223372036854775783ULL));
  CHECK_FALSE(arith::is_prime(3215031751ULL));  // strong pseudoprime 2,3,5,7
  CHECK_FALSE(arith::is_prime(341));
  CHECK_FALSE(arith::is_prime(561));
  CHECK_FALSE(arith::is_prime(1105));
}

TEST_CASE("kronecker matches the pinned examples") {
  CHECK(arith::kronecker(5, 1) == 1);
  CHECK(arith::kronecker(5, 5) == 0);
  CHECK(arith::kronecker(5, 11) == 1);
  CHECK(arith::kronecker(5, 2) == -1);
}

TEST_CASE("kronecker equals the definitional oracle on a dense grid") {
  for (i64 a = -60; a <= 60; ++a)
    for (i64 n = -60; n <= 60; ++n)
      CHECK(arith::kronecker(a, n) == oracle::kronecker_brute(a, n));

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<i64> adist(-1000000, 1000000);
  std::uniform_int_distribution<i64> ndist(-1000, 1000);
  for (int trial = 0; trial < 500; ++trial) {
    i64 a = adist(rng);
    i64 n = ndist(rng);
    CHECK(arith::kronecker(a, n) == oracle::kronecker_brute(a, n));
  }
}

TEST_CASE("kronecker is completely multiplicative in the bottom argument") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<i64> dist(-1000, 1000);
  int checked = 0;
  while (checked < 2000) {
    i64 a = dist(rng), m = dist(rng), n = dist(rng);
    if (m == 0 || n == 0) continue;
    CHECK(arith::kronecker(a, m * n) ==
          arith::kronecker(a, m) * arith::kronecker(a, n));
    ++checked;
  }
}

TEST_CASE("kronecker restricted to odd primes is the Legendre symbol") {
  auto sieve = oracle::prime_sieve(200);
  for (u64 p = 3; p <= 200; p += 2) {
    if (!sieve[p]) continue;
    for (i64 a = -i64(2 * p); a <= i64(2 * p); ++a)
      CHECK(arith::kronecker(a, i64(p)) == oracle::legendre_brute(a, p));
  }
}

TEST_CASE("is_fundamental_discriminant: pinned values and brute definition") {
  CHECK(arith::is_fundamental_discriminant(5));
  CHECK(arith::is_fundamental_discriminant(8));
  CHECK(arith::is_fundamental_discriminant(12));
  CHECK(arith::is_fundamental_discriminant(13));
  CHECK(arith::is_fundamental_discriminant(17));
  CHECK(arith::is_fundamental_discriminant(21));
  CHECK(arith::is_fundamental_discriminant(24));
  CHECK(arith::is_fundamental_discriminant(44));
  CHECK_FALSE(arith::is_fundamental_discriminant(4));
  CHECK_FALSE(arith::is_fundamental_discriminant(9));
  CHECK_FALSE(arith::is_fundamental_discriminant(20));
  CHECK_FALSE(arith::is_fundamental_discriminant(45));
  CHECK_FALSE(arith::is_fundamental_discriminant(48));
  CHECK_FALSE(arith::is_fundamental_discriminant(0));
  CHECK_FALSE(arith::is_fundamental_discriminant(-3));

  for (i64 d = -10; d <= 3000; ++d)
    CHECK(arith::is_fundamental_discriminant(d) == oracle::fundamental_brute(d));
}

TEST_CASE("Discriminant::make validates and carries the factorization") {
  auto D5 = Discriminant::make(5);
  CHECK(D5.value == 5);
  CHECK(D5.fundamental);
  REQUIRE(D5.factorization.factors.size() == 1);
  CHECK(D5.factorization.factors[0] == std::pair<u64, int>{5, 1});

  auto D12 = Discriminant::make(12);
  CHECK(D12.fundamental);
  CHECK(D12.factorization.factors.size() == 2);

  auto D45 = Discriminant::make(45);
  CHECK_FALSE(D45.fundamental);

  CHECK_THROWS_AS(Discriminant::make(0), std::invalid_argument);
  CHECK_THROWS_AS(Discriminant::make(-4), std::invalid_argument);
}

TEST_CASE("divisors enumerates ascending and matches trial division") {
  auto d12 = arith::divisors(arith::factorize(12));
  CHECK(d12 == std::vector<u64>{1, 2, 3, 4, 6, 12});
  CHECK(arith::divisors(arith::factorize(1)) == std::vector<u64>{1});

  for (u64 n = 1; n <= 5000; ++n)
    CHECK(arith::divisors(arith::factorize(n)) == oracle::divisors_trial(n));

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<u64> dist(1, 1000000);
  for (int trial = 0; trial < 500; ++trial) {
    u64 n = dist(rng);
    CHECK(arith::divisors(arith::factorize(n)) == oracle::divisors_trial(n));
  }
}

TEST_CASE("divisors_in_range: pinned examples and window filtering") {
  CHECK(arith::divisors_in_range(12, 1, 12) ==
        std::vector<u64>{1, 2, 3, 4, 6, 12});
  CHECK(arith::divisors_in_range(12, 5, 11) == std::vector<u64>{6});
  CHECK(arith::divisors_in_range(97, 2, 96).empty());
  CHECK(arith::divisors_in_range(36, 36, 36) == std::vector<u64>{36});
  CHECK(arith::divisors_in_range(36, 20, 10).empty());

  std::mt19937_64 rng(31);
  std::uniform_int_distribution<u64> ndist(1, 1000000);
  for (int trial = 0; trial < 400; ++trial) {
    u64 n = ndist(rng);
    std::uniform_int_distribution<u64> wdist(1, n);
    u64 lo = wdist(rng), hi = wdist(rng);
    auto all = oracle::divisors_trial(n);
    std::vector<u64> expect;
    for (u64 d : all)
      if (d >= lo && d <= hi) expect.push_back(d);
    CHECK(arith::divisors_in_range(n, lo, hi) == expect);
  }
}

TEST_CASE("mul_mod and pow_mod agree with 128-bit arithmetic") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<u64> dist(1, ~u64(0) - 1);
  for (int trial = 0; trial < 1000; ++trial) {
    u64 m = dist(rng);
    u64 a = dist(rng) % m;
    u64 b = dist(rng) % m;
    CHECK(arith::mul_mod(a, b, m) == u64((oracle::u128(a) * b) % m));
  }
  CHECK(arith::pow_mod(2, 10, 1000) == 24);
  CHECK(arith::pow_mod(7, 0, 13) == 1);
  CHECK(arith::pow_mod(0, 5, 13) == 0);
  for (int trial = 0; trial < 200; ++trial) {
    u64 m = dist(rng) % 1000000 + 2;
    u64 a = dist(rng) % m;
    u64 naive = 1 % m;
    for (int e = 0; e <= 12; ++e) {
      CHECK(arith::pow_mod(a, u64(e), m) == naive);
      naive = arith::mul_mod(naive, a, m);
    }
  }
}
