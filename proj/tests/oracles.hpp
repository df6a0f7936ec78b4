#pragma once

// Brute-force reference implementations shared by the test suites. Each is
// written from the defining property, independent of the library's
// algorithms, and is only meant for small inputs.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline std::vector<u64> divisors_trial(u64 n) {
  std::vector<u64> low, high;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

inline bool squarefree(i64 n) {
  for (i64 p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

inline bool fundamental_brute(i64 d) {
  if (d <= 0) return false;
  if (d % 4 == 1) return squarefree(d);
  if (d % 4 == 0) {
    i64 m = d / 4;
    return (m % 4 == 2 || m % 4 == 3) && squarefree(m);
  }
  return false;
}

// Legendre symbol for odd prime p by enumerating squares.
inline int legendre_brute(i64 a, u64 p) {
  u64 r = u64(((a % i64(p)) + i64(p)) % i64(p));
  if (r == 0) return 0;
  for (u64 x = 1; x <= p / 2; ++x)
    if (x * x % p == r) return 1;
  return -1;
}

// Kronecker symbol assembled from its definition: peel the sign and the
// 2-part of n, then multiply Legendre symbols over the odd prime factors.
inline int kronecker_brute(i64 a, i64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  u64 m;
  if (n < 0) {
    if (a < 0) result = -result;
    m = u64(-n);
  } else {
    m = u64(n);
  }
  while (m % 2 == 0) {
    m /= 2;
    i64 a8 = ((a % 8) + 8) % 8;
    if (a8 % 2 == 0) return 0;
    if (a8 == 3 || a8 == 5) result = -result;
  }
  for (u64 p = 3; p <= m; p += 2) {
    while (m % p == 0) {
      m /= p;
      int l = legendre_brute(a, p);
      if (l == 0) return 0;
      result *= l;
    }
  }
  return result;
}

// Roots of x^2 = D (mod k) by full enumeration.
inline std::vector<u64> sqrt_roots_brute(i64 D, u64 k) {
  std::vector<u64> out;
  u64 d = u64(((D % i64(k)) + i64(k)) % i64(k));
  for (u64 x = 0; x < k; ++x)
    if (u64((u128(x) * x) % k) == d) out.push_back(x);
  return out;
}

inline u64 rho_brute(i64 D, u64 k) { return sqrt_roots_brute(D, k).size(); }

// Roots of x^2 - t x + r = 0 (mod b) by full enumeration.
inline std::vector<u64> poly_roots_brute(i64 t, i64 r, u64 b) {
  std::vector<u64> out;
  for (u64 x = 0; x < b; ++x) {
    i128 v = (i128(x) * i128(x) - i128(t) * i128(x) + r) % i128(b);
    if (v < 0) v += i128(b);
    if (v == 0) out.push_back(x);
  }
  return out;
}

// Sharp box count by the literal quadruple loop over all entries.
inline long long box_count_brute(i64 t, i64 r, i64 X) {
  long long count = 0;
  for (i64 a = -X; a <= X; ++a)
    for (i64 d = -X; d <= X; ++d) {
      if (a + d != t) continue;
      for (i64 b = -X; b <= X; ++b)
        for (i64 c = -X; c <= X; ++c)
          if (a * d - b * c == r) ++count;
    }
  return count;
}

// Smoothed count by direct divisor enumeration, independent of the library's
// support windowing. Only usable when n = at - a^2 - r stays small.
inline double smoothed_brute(i64 t, i64 r, double X,
                             const std::function<double(double)>& w) {
  double total = 0.0;
  i64 amax = 2 * (i64(std::ceil(X)) + 1) + std::abs(t);
  for (i64 a = -amax; a <= amax; ++a) {
    double wa = w(double(a) / X) * w(double(t - a) / X);
    if (wa == 0.0) continue;
    i64 n = a * (t - a) - r;
    if (n <= 0) continue;
    for (i64 b = 1; b <= n; ++b) {
      if (n % b) continue;
      total += wa * w(double(b) / X) * w(double(n / b) / X);
    }
  }
  return total;
}

inline double trapezoid(const std::function<double(double)>& f, double a,
                        double b, int n) {
  double h = (b - a) / n;
  double s = 0.5 * (f(a) + f(b));
  for (int i = 1; i < n; ++i) s += f(a + i * h);
  return s * h;
}

inline std::vector<char> prime_sieve(u64 limit) {
  std::vector<char> is(limit + 1, 1);
  is[0] = 0;
  if (limit >= 1) is[1] = 0;
  for (u64 p = 2; p * p <= limit; ++p)
    if (is[p])
      for (u64 m = p * p; m <= limit; m += p) is[m] = 0;
  return is;
}

}  // namespace oracle
