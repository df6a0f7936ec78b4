#pragma once

#include <vector>

#include "matcount/arith.hpp"
#include "matcount/counting.hpp"
#include "matcount/weights.hpp"

namespace matcount::harness {

struct ConvergenceRow {
  double X = 0.0;
  i64 t = 0;
  i64 r = 0;
  i64 D = 0;
  double S_w = 0.0;
  double M = 0.0;
  double gamma = 0.0;
  double main = 0.0;      // gamma * M
  double ratio = 0.0;     // S_w / main, 0 when main is not positive
  double residual = 0.0;  // S_w - main
};

// Theorem-regime parameters: t = nearest even integer to shape*X, D the
// largest fundamental discriminant <= floor(0.55 X^2) (searched within a
// window of 1e4 candidates), r = t^2/4 - D. Verifies by sampling that the
// main-term integrand has nonempty support.
counting::CharPolyParams pick_params(double X, double shape);

struct ScanOptions {
  double gamma_tol = 5e-3;
  // Main-term integrands are products of four bump factors and sit many
  // orders of magnitude below 1, so refinement is driven by relative
  // tolerance alone; an absolute floor would accept a depth-0 estimate.
  weights::QuadratureSpec quad{1e-8, 0.0, 40};
  double cross_check_rel = 1e-9;
};

std::vector<ConvergenceRow> theorem_scan(const std::vector<double>& Xs,
                                         double shape,
                                         const ScanOptions& opts = {});

std::vector<ConvergenceRow> corollary_scan(const arith::Discriminant& Delta,
                                           const std::vector<double>& Xs,
                                           const ScanOptions& opts = {});

}  // namespace matcount::harness
