#include "matcount/arith.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace matcount::arith {

namespace {

constexpr u32 kSieveLimit = 1'000'000;

// Trial division beyond this point costs more than rho recovers; everything
// surviving the cut is handled by Miller-Rabin plus Brent's rho.
constexpr u64 kTrialCut = 1024;

std::vector<u32> build_sieve() {
  std::vector<bool> composite(kSieveLimit + 1, false);
  std::vector<u32> primes;
  for (u32 p = 2; p <= kSieveLimit; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (u64 q = u64(p) * p; q <= kSieveLimit; q += p) composite[q] = true;
  }
  return primes;
}

u64 f_rho(u64 x, u64 c, u64 n) {
  u128 v = u128(x) * x + c;
  return u64(v % n);
}

// Brent's cycle variant of Pollard rho with batched gcds. Deterministic:
// the polynomial increment walks 1, 2, 3, ... until a factor splits off.
u64 pollard_brent(u64 n) {
  if ((n & 1) == 0) return 2;
  // When the orbit's cycles modulo every prime factor align exactly, all
  // collisions happen modulo n itself, the zero differences are skipped, and
  // d stays 1 forever. A step budget per c forces a reseed in that case.
  const u64 budget = 4096 + 64 * u64(std::pow(double(n), 0.25));
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1, saved = 2;
    u64 power = 1, lam = 0, q = 1, steps = 0;
    while (d == 1 && steps <= budget) {
      if (lam == power) {
        x = y;
        power <<= 1;
        lam = 0;
        saved = y;
      }
      u64 batch = std::min<u64>(128, power - lam);
      for (u64 i = 0; i < batch; ++i) {
        y = f_rho(y, c, n);
        u64 diff = x > y ? x - y : y - x;
        if (diff) q = mul_mod(q, diff, n);
      }
      lam += batch;
      steps += batch;
      d = std::gcd(q, n);
    }
    if (d == 1) continue;
    if (d != n) return d;
    // Batch overshot the collision; replay one step at a time.
    u64 z = saved;
    for (;;) {
      z = f_rho(z, c, n);
      u64 diff = x > z ? x - z : z - x;
      d = std::gcd(diff, n);
      if (d > 1) break;
    }
    if (d != n) return d;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

bool squarefree(u64 n) {
  for (const auto& [p, e] : factorize(n).factors)
    if (e > 1) return false;
  return true;
}

}  // namespace

const std::vector<u32>& small_primes() {
  static const std::vector<u32> primes = build_sieve();
  return primes;
}

u64 mul_mod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

u64 pow_mod(u64 a, u64 e, u64 m) {
  u64 r = m == 1 ? 0 : 1;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u64 d = n - 1;
  int s = std::countr_zero(d);
  d >>= s;
  // These seven bases decide primality for every n < 2^64.
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull,
                1795265022ull}) {
    u64 x = pow_mod(a % n, d, n);
    if (x <= 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization out;
  out.n = n;
  if (n == 1) return out;
  for (u32 p : small_primes()) {
    if (p > kTrialCut || u64(p) * p > n) break;
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.factors.emplace_back(p, e);
  }
  if (n > 1) {
    if (n <= kTrialCut * kTrialCut) {
      // Cofactor below the square of the cut is prime by construction.
      out.factors.emplace_back(n, 1);
    } else {
      std::vector<u64> rest;
      factor_into(n, rest);
      std::sort(rest.begin(), rest.end());
      for (std::size_t i = 0; i < rest.size();) {
        std::size_t j = i;
        while (j < rest.size() && rest[j] == rest[i]) ++j;
        out.factors.emplace_back(rest[i], int(j - i));
        i = j;
      }
    }
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

int kronecker(i64 a, i64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a & 1) == 0 && (n & 1) == 0) return 0;
  int result = 1;
  u64 m;
  if (n < 0) {
    if (a < 0) result = -result;
    m = u64(-(n + 1)) + 1;
  } else {
    m = u64(n);
  }
  int tz = std::countr_zero(m);
  m >>= tz;
  if (tz & 1) {
    int a8 = int(((a % 8) + 8) % 8);
    if (a8 == 3 || a8 == 5) result = -result;
  }
  // Jacobi stage: m is odd and positive from here on.
  u64 x;
  {
    i64 red = a % i64(m);
    if (red < 0) red += i64(m);
    x = u64(red);
  }
  while (x != 0) {
    int z = std::countr_zero(x);
    x >>= z;
    if ((z & 1) && (m % 8 == 3 || m % 8 == 5)) result = -result;
    if ((x & 3) == 3 && (m & 3) == 3) result = -result;
    std::swap(x, m);
    x %= m;
  }
  return m == 1 ? result : 0;
}

bool is_fundamental_discriminant(i64 d) {
  if (d <= 0) return false;
  switch (d & 3) {
    case 1:
      return squarefree(u64(d));
    case 0: {
      i64 m = d / 4;
      return (m % 4 == 2 || m % 4 == 3) && squarefree(u64(m));
    }
    default:
      return false;
  }
}

Discriminant Discriminant::make(i64 d) {
  if (d <= 0) throw std::invalid_argument("Discriminant: d must be positive");
  Discriminant out;
  out.value = d;
  out.factorization = factorize(u64(d));
  out.fundamental = is_fundamental_discriminant(d);
  return out;
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : f.factors) {
    std::size_t base = out.size();
    u64 pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> divisors_in_range(u64 n, u64 lo, u64 hi) {
  if (n == 0) throw std::invalid_argument("divisors_in_range: n must be positive");
  std::vector<u64> out;
  if (lo > hi) return out;
  for (u64 d : divisors(factorize(n)))
    if (d >= lo && d <= hi) out.push_back(d);
  return out;
}

}  // namespace matcount::arith
