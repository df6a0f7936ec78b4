#pragma once

#include <vector>

#include "matcount/arith.hpp"
#include "matcount/counting.hpp"
#include "matcount/weights.hpp"

namespace matcount::mainterm {

struct ValueWithError {
  double value = 0.0;
  double error = 0.0;
};

struct GammaDecomposition {
  double K1 = 0.0;
  double M1 = 0.0;
  double zeta2 = 0.0;
  double gamma = 0.0;  // K1 * M1 / zeta2, exactly as computed
  double err_K = 0.0;
  double err_M = 0.0;
};

// Raised when the character series cannot reach the requested tolerance
// within the truncation cap.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double zeta2();  // pi^2/6

// K(1) = (2/3) sum rho(2^n)/2^n, exact via the 2-adic stabilization.
// Rejects non-fundamental D and the degenerate square D = 1.
ValueWithError K1(const arith::Discriminant& D);

// M(1) = sum over odd l of kronecker(D, l)/l, blockwise over complete
// character periods, tail bounded by 2 sqrt(D) log(D) / L.
ValueWithError M1(const arith::Discriminant& D, double tol);

GammaDecomposition gamma1(const arith::Discriminant& D, double tol);

// M(X, D): double integral of (1/y) w(y/X) w(x/X) w((t-x)/X)
// w((xt - x^2 - r)/(yX)) over x in [X/2, X] n [t-X, t-X/2], y in [X/2, X].
double main_term(const counting::CharPolyParams& params,
                 const weights::QuadratureSpec& spec);

// Corollary integral: (1/y) w(y/X) w(x/X) w((x^2 + 2px + q)/(yX)) over
// x, y in [X/2, X]. Requires Delta = p^2 - q positive fundamental.
double corollary_main_term(i64 p, i64 q, double X,
                           const weights::QuadratureSpec& spec);

struct HooleyRow {
  u64 y = 0;
  u64 rho_sum = 0;
  double y_gamma = 0.0;
  double residual = 0.0;   // rho_sum - y*gamma
  double scaled = 0.0;     // residual / y^{3/4}
};

// One row per checkpoint y (ys ascending), all from a single sieve pass.
std::vector<HooleyRow> hooley_residual_scan(const arith::Discriminant& D,
                                            const std::vector<u64>& ys);

}  // namespace matcount::mainterm
