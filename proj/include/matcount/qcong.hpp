#pragma once

#include "matcount/arith.hpp"

namespace matcount::qcong {

// Solutions of x^2 = D (mod modulus), sorted, canonical representatives
// in [0, modulus).
struct RootSet {
  u64 modulus = 1;
  std::vector<u64> roots;
};

RootSet sqrt_roots_prime_power(const arith::Discriminant& D, u64 p, int e);
RootSet roots_mod(const arith::Discriminant& D, u64 k);

// rho(k) = #roots of x^2 = D (mod k); multiplicative, computed without
// materializing root sets.
u64 rho(const arith::Discriminant& D, u64 k);

// Roots of x^2 - t x + r = 0 (mod b). Requires even t; completing the
// square recentres this to y^2 = D (mod b) with D = t^2/4 - r.
RootSet poly_roots_mod(i64 t, i64 r, u64 b);

// Sum of rho(k) for k = 1..y via a smallest-prime-factor sieve.
u64 rho_partial_sum(const arith::Discriminant& D, u64 y);

// One sieve pass, checkpointed at each y in ys (ys need not be sorted).
std::vector<u64> rho_partial_sums(const arith::Discriminant& D,
                                  const std::vector<u64>& ys);

}  // namespace matcount::qcong
