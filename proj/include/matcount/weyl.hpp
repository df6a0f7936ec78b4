#pragma once

#include <complex>

#include "matcount/arith.hpp"
#include "matcount/weights.hpp"

namespace matcount::weyl {

struct WeylQuery {
  i64 h = 0;
  arith::Discriminant D;
  u64 q = 1;      // modulus divisibility class: sum over c with q | c
  double Y = 1;   // moduli run over [Y, 2Y]
};

// W_h(D;c) = sum of e(h nu / c) over roots nu^2 = D (mod c); phases are
// reduced mod 1 in integer arithmetic before any floating conversion.
std::complex<double> weyl_single(i64 h, const arith::Discriminant& D, u64 c);

struct AveragedWeyl {
  std::complex<double> value;
  double kappa = 1.0;  // normalization divisor applied to the test function
  u64 terms = 0;       // moduli c visited
};

// W_h(D) = sum over c in [Y, 2Y], q | c, of v(c) W_h(D;c) with the
// normalized test function v below.
AveragedWeyl weyl_averaged(const WeylQuery& query);

// v(y) = w(y/(2Y)) / kappa, kappa = max(1, C3/8): then sup|v| <= 1 and
// Y^3 sup|v'''| <= 1 with margin.
double test_function(double y, double Y);
double test_function_kappa();

// |W_h(D)| / (h^{1/4} (Y + h sqrt(D))^{3/4} D^{1/8 - 1/1331}); requires h >= 1.
double dfi_bound_ratio(const WeylQuery& query);

struct PoissonProfile {
  enum class Kind { gaussian, bump_dilate };
  Kind kind = Kind::gaussian;
  double param = 2.0;  // sigma for gaussian, the dilation X for the bump
};

// |LHS - RHS| of Poisson summation for f over n = alpha (mod q): both the
// n-sum and the dual sum are truncated at `trunc` terms each side of zero.
double poisson_check(const PoissonProfile& profile, i64 alpha, u64 q,
                     u64 trunc);

}  // namespace matcount::weyl
