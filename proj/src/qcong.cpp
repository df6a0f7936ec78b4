#include "matcount/qcong.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace matcount::qcong {

namespace {

using arith::kronecker;
using arith::mul_mod;
using arith::pow_mod;

u64 checked_pow(u64 p, int e) {
  u64 r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > UINT64_MAX / p) throw std::overflow_error("prime power overflows");
    r *= p;
  }
  return r;
}

u64 inv_mod(u64 a, u64 m) {
  i64 t = 0, nt = 1;
  i64 r = i64(m), nr = i64(a % m);
  while (nr != 0) {
    i64 q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (t < 0) t += i64(m);
  return u64(t);
}

int valuation(u64 m, u64 p) {
  int v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

// Square root of a mod odd prime p, for a a quadratic residue.
u64 tonelli_shanks(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
  u64 q = p - 1;
  int s = std::countr_zero(q);
  q >>= s;
  u64 z = 2;
  while (kronecker(i64(z), i64(p)) != -1) ++z;
  u64 m = s, c = pow_mod(z, q, p);
  u64 x = pow_mod(a, (q + 1) / 2, p);
  u64 t = pow_mod(a, q, p);
  while (t != 1) {
    u64 tt = t;
    u64 i = 0;
    while (tt != 1) {
      tt = mul_mod(tt, tt, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    x = mul_mod(x, b, p);
    t = mul_mod(t, c, p);
  }
  return x;
}

// Lift x with x^2 = a (mod p^k) to a root mod p^e; requires p odd, p !| 2x.
u64 hensel_lift(u64 x, u64 a_full, u64 p, int e) {
  u64 pk = p;
  for (int k = 1; k < e; ++k) {
    u64 pk1 = pk * p;
    u64 ax = u64((u128(x) * x) % pk1);
    u64 diff = (a_full % pk1 + pk1 - ax) % pk1;
    // diff is divisible by p^k; solve (x + c p^k)^2 = a mod p^{k+1}.
    u64 c = mul_mod(diff / pk, inv_mod(2 * x % p, p), p);
    x += c * pk;
    pk = pk1;
  }
  return x;
}

i64 normalize_mod(i64 D, u64 m) {
  i64 r = D % i64(m);
  if (r < 0) r += i64(m);
  return r;
}

std::vector<u64> two_adic_roots(i64 D, int e) {
  u64 mod = u64(1) << e;
  if (e <= 5) {
    std::vector<u64> out;
    u64 dm = u64(normalize_mod(D, mod));
    for (u64 v = 0; v < mod; ++v)
      if ((v * v) % mod == dm) out.push_back(v);
    return out;
  }
  if (D & 1) {
    if (normalize_mod(D, 8) != 1) return {};
    // One odd root lifts uniquely from mod 8 upward; the full set mod 2^e
    // is {x, 2^{e-1} - x, 2^{e-1} + x, 2^e - x}.
    u64 x = 1;
    for (int k = 3; k < e; ++k) {
      u64 next = u64(1) << (k + 1);
      u64 xx = u64((u128(x) * x) & (next - 1));
      if (xx != u64(normalize_mod(D, next))) x += u64(1) << (k - 1);
    }
    u64 half = u64(1) << (e - 1);
    std::vector<u64> out{x, half - x, half + x, mod - x};
    std::sort(out.begin(), out.end());
    return out;
  }
  if (normalize_mod(D, 4) != 0) return {};  // D = 2 mod 4 has no roots
  std::vector<u64> out;
  for (u64 mu : two_adic_roots(D / 4, e - 2)) {
    out.push_back(2 * mu);
    out.push_back(2 * mu + (u64(1) << (e - 1)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 two_adic_count(i64 D, int e) {
  if (e == 0) return 1;
  if (D & 1) {
    if (e == 1) return 1;
    if (e == 2) return normalize_mod(D, 4) == 1 ? 2 : 0;
    return normalize_mod(D, 8) == 1 ? 4 : 0;
  }
  if (normalize_mod(D, 4) != 0) return e == 1 ? 1 : 0;
  if (e == 1) return 1;
  if (e == 2) return 2;
  return 2 * two_adic_count(D / 4, e - 2);
}

std::vector<u64> odd_prime_power_roots(i64 D, u64 p, int e) {
  u64 pe = checked_pow(p, e);
  u64 mag = D < 0 ? u64(-(D + 1)) + 1 : u64(D);
  int v = D == 0 ? e : std::min(e, valuation(mag, p));
  if (v >= e) {
    // All multiples of p^ceil(e/2).
    u64 step = checked_pow(p, (e + 1) / 2);
    std::vector<u64> out;
    for (u64 x = 0; x < pe; x += step) out.push_back(x);
    return out;
  }
  if (v & 1) return {};
  i64 unit = D;
  for (int i = 0; i < v; ++i) unit /= i64(p);
  if (kronecker(unit, i64(p)) != 1) return {};
  u64 rem = checked_pow(p, e - v);
  u64 a = u64(normalize_mod(unit, rem));
  u64 x0 = tonelli_shanks(a % p, p);
  u64 x = hensel_lift(x0, a, p, e - v);
  u64 scale = checked_pow(p, v / 2);
  u64 stride = scale * rem;
  std::vector<u64> out;
  for (u64 mu : {x, rem - x})
    for (u64 j = scale * mu; j < pe; j += stride) out.push_back(j);
  std::sort(out.begin(), out.end());
  return out;
}

u64 odd_prime_power_count(i64 D, u64 p, int e) {
  u64 mag = D < 0 ? u64(-(D + 1)) + 1 : u64(D);
  int v = D == 0 ? e : std::min(e, valuation(mag, p));
  if (v >= e) return checked_pow(p, e / 2);
  if (v & 1) return 0;
  i64 unit = D;
  for (int i = 0; i < v; ++i) unit /= i64(p);
  if (kronecker(unit, i64(p)) != 1) return 0;
  return 2 * checked_pow(p, v / 2);
}

std::vector<u64> prime_power_roots(i64 D, u64 p, int e) {
  return p == 2 ? two_adic_roots(D, e) : odd_prime_power_roots(D, p, e);
}

RootSet crt_merge(const RootSet& a, const RootSet& b) {
  RootSet out;
  out.modulus = a.modulus * b.modulus;
  u64 inv = inv_mod(a.modulus % b.modulus, b.modulus);
  out.roots.reserve(a.roots.size() * b.roots.size());
  for (u64 ra : a.roots) {
    u64 ra_b = ra % b.modulus;
    for (u64 rb : b.roots) {
      u64 t = mul_mod((rb + b.modulus - ra_b) % b.modulus, inv, b.modulus);
      out.roots.push_back(ra + a.modulus * t);
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

RootSet roots_mod_value(i64 D, u64 k) {
  if (k == 0) throw std::invalid_argument("roots_mod: modulus must be positive");
  RootSet acc;
  acc.modulus = 1;
  acc.roots = {0};
  for (const auto& [p, e] : arith::factorize(k).factors) {
    RootSet part;
    part.modulus = checked_pow(p, e);
    part.roots = prime_power_roots(D, p, e);
    if (part.roots.empty()) return RootSet{k, {}};
    acc = crt_merge(acc, part);
  }
  acc.modulus = k;
  return acc;
}

}  // namespace

RootSet sqrt_roots_prime_power(const arith::Discriminant& D, u64 p, int e) {
  if (e < 1) throw std::invalid_argument("sqrt_roots_prime_power: e must be >= 1");
  if (!arith::is_prime(p)) throw std::invalid_argument("sqrt_roots_prime_power: p must be prime");
  RootSet out;
  out.modulus = checked_pow(p, e);
  out.roots = prime_power_roots(D.value, p, e);
  return out;
}

RootSet roots_mod(const arith::Discriminant& D, u64 k) {
  return roots_mod_value(D.value, k);
}

u64 rho(const arith::Discriminant& D, u64 k) {
  if (k == 0) throw std::invalid_argument("rho: modulus must be positive");
  u64 out = 1;
  for (const auto& [p, e] : arith::factorize(k).factors) {
    u64 c = p == 2 ? two_adic_count(D.value, e)
                   : odd_prime_power_count(D.value, p, e);
    if (c == 0) return 0;
    out *= c;
  }
  return out;
}

RootSet poly_roots_mod(i64 t, i64 r, u64 b) {
  if (t & 1) throw std::invalid_argument("poly_roots_mod: t must be even");
  if (b == 0) throw std::invalid_argument("poly_roots_mod: modulus must be positive");
  i64 half = t / 2;
  i64 D = half * half - r;
  RootSet centered = roots_mod_value(D, b);
  u64 shift = u64(normalize_mod(half, b));
  RootSet out;
  out.modulus = b;
  out.roots.reserve(centered.roots.size());
  for (u64 y : centered.roots) out.roots.push_back((y + shift) % b);
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

std::vector<u64> rho_partial_sums(const arith::Discriminant& D,
                                  const std::vector<u64>& ys) {
  if (ys.empty()) return {};
  u64 ymax = *std::max_element(ys.begin(), ys.end());

  u64 rho2_tab[64];
  for (int e = 0; e < 64; ++e) rho2_tab[e] = two_adic_count(D.value, e);

  std::vector<u32> spf(ymax + 1, 0);
  std::vector<u32> primes;
  for (u64 i = 2; i <= ymax; ++i) {
    if (spf[i] == 0) {
      spf[i] = u32(i);
      primes.push_back(u32(i));
    }
    for (u32 p : primes) {
      if (p > spf[i]) break;
      u64 ip = i * p;
      if (ip > ymax) break;
      spf[ip] = p;
    }
  }

  // Per-prime multiplier: 0 kills the product, 2 doubles it independent of
  // the exponent, 3 marks ramified primes needing the exponent-aware count.
  constexpr std::uint8_t kRamified = 3;
  std::vector<std::uint8_t> mult(ymax + 1, 0);
  for (u32 p : primes) {
    if (p == 2) continue;
    if (D.value % i64(p) == 0)
      mult[p] = kRamified;
    else
      mult[p] = std::uint8_t(1 + kronecker(D.value, i64(p)));
  }

  std::vector<u64> sorted(ys);
  std::sort(sorted.begin(), sorted.end());

  std::vector<u64> at(sorted.size());
  u64 sum = 0;
  std::size_t next = 0;
  while (next < sorted.size() && sorted[next] == 0) at[next++] = 0;
  for (u64 k = 1; k <= ymax; ++k) {
    u64 m = k;
    u64 val = 1;
    if ((m & 1) == 0) {
      int e2 = std::countr_zero(m);
      m >>= e2;
      val = rho2_tab[e2];
    }
    while (val != 0 && m > 1) {
      u64 p = spf[m];
      int e = 0;
      do {
        m /= p;
        ++e;
      } while (m % p == 0);
      std::uint8_t f = mult[p];
      if (f == kRamified)
        val *= odd_prime_power_count(D.value, p, e);
      else if (f == 2)
        val *= 2;
      else
        val = 0;
    }
    sum += val;
    while (next < sorted.size() && sorted[next] == k) at[next++] = sum;
  }

  // Map checkpoint values back to the caller's order.
  std::vector<u64> out(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    std::size_t pos =
        std::lower_bound(sorted.begin(), sorted.end(), ys[i]) - sorted.begin();
    out[i] = at[pos];
  }
  return out;
}

u64 rho_partial_sum(const arith::Discriminant& D, u64 y) {
  return rho_partial_sums(D, {y})[0];
}

}  // namespace matcount::qcong
