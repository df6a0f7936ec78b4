#pragma once

#include <array>
#include <functional>
#include <stdexcept>

#include "matcount/core.hpp"

namespace matcount::weights {

// The canonical weight: exp(-1/((u - 1/2)(1 - u))) on (1/2, 1), exactly
// zero elsewhere. All smoothed sums and integrals use this single bump.
double bump_eval(double u);

struct SmoothWeight {
  double operator()(double u) const { return bump_eval(u); }

  // Doubled grid estimates of sup|w^(j)| for j = 0..3 on 20001 points.
  static const std::array<double, 4>& derivative_sup_bounds();
};

struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_depth = 40;
};

struct QuadratureError : std::runtime_error {
  QuadratureError(double a, double b, int depth);
  double a, b;
  int depth;
};

// Adaptive Gauss-Kronrod (G7, K15). Deterministic: panels split and sum in
// a fixed left-to-right order. Throws QuadratureError on depth exhaustion.
double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    const QuadratureSpec& spec);

// Tensorized: adaptive outer pass over y, inner 1-D integrals over x at
// tenfold-tightened tolerance.
double integrate_2d(const std::function<double(double, double)>& f, double x0,
                    double x1, double y0, double y1, const QuadratureSpec& spec);

}  // namespace matcount::weights
