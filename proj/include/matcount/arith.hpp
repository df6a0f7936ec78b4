#pragma once

#include <utility>
#include <vector>

#include "matcount/core.hpp"

namespace matcount::arith {

// Prime factorization with primes ascending and exponents >= 1.
// n = 1 carries an empty factor list.
struct Factorization {
  u64 n = 1;
  std::vector<std::pair<u64, int>> factors;
};

// A positive discriminant candidate with its factorization attached, so
// downstream code never refactors the same value.
struct Discriminant {
  i64 value = 0;
  bool fundamental = false;
  Factorization factorization;

  static Discriminant make(i64 d);  // throws std::invalid_argument if d <= 0
};

// Primes up to 1e6, built once on first use, read-only thereafter.
const std::vector<u32>& small_primes();

bool is_prime(u64 n);
Factorization factorize(u64 n);  // throws if n == 0

// Kronecker symbol (a|n), defined for all integer pairs including n <= 0.
int kronecker(i64 a, i64 n);

// True iff d is a fundamental discriminant: d = 1 mod 4 squarefree, or
// d = 4m with m = 2,3 mod 4 squarefree. Nonpositive d is rejected outright.
bool is_fundamental_discriminant(i64 d);

std::vector<u64> divisors(const Factorization& f);  // ascending
std::vector<u64> divisors_in_range(u64 n, u64 lo, u64 hi);

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 a, u64 e, u64 m);

}  // namespace matcount::arith
