#include "matcount/weights.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace matcount::weights {

double bump_eval(double u) {
  if (u <= 0.5 || u >= 1.0) return 0.0;
  return std::exp(-1.0 / ((u - 0.5) * (1.0 - u)));
}

namespace {

// Central-difference derivative estimates on a uniform grid, doubled.
// The step balances truncation against cancellation in the third stencil.
std::array<double, 4> estimate_sup_bounds() {
  constexpr int kGrid = 20000;
  constexpr double h = 1e-4;
  std::array<double, 4> sup{};
  for (int i = 0; i <= kGrid; ++i) {
    double u = 0.5 + 0.5 * double(i) / kGrid;
    double f0 = bump_eval(u);
    double fp1 = bump_eval(u + h), fm1 = bump_eval(u - h);
    double fp2 = bump_eval(u + 2 * h), fm2 = bump_eval(u - 2 * h);
    double d1 = (fp1 - fm1) / (2 * h);
    double d2 = (fp1 - 2 * f0 + fm1) / (h * h);
    double d3 = (fp2 - 2 * fp1 + 2 * fm1 - fm2) / (2 * h * h * h);
    sup[0] = std::max(sup[0], std::abs(f0));
    sup[1] = std::max(sup[1], std::abs(d1));
    sup[2] = std::max(sup[2], std::abs(d2));
    sup[3] = std::max(sup[3], std::abs(d3));
  }
  for (double& s : sup) s *= 2.0;
  return sup;
}

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1], positive half.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

std::string panel_message(double a, double b, int depth) {
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "quadrature failed on [%.17g, %.17g] at depth %d", a, b, depth);
  return buf;
}

struct PanelEstimate {
  double kronrod;
  double err;
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b) {
  double c = 0.5 * (a + b);
  double h = 0.5 * (b - a);
  double fc = f(c);
  double kron = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    double x = h * kXgk[i];
    double s = f(c - x) + f(c + x);
    kron += kWgk[i] * s;
    if (i & 1) gauss += kWg[i / 2] * s;
  }
  kron *= h;
  gauss *= h;
  return {kron, std::abs(kron - gauss)};
}

struct Adapt {
  const std::function<double(double)>& f;
  const QuadratureSpec& spec;
  double budget_per_width;  // global tolerance divided by total width
  PairwiseSum acc;

  void visit(double a, double b, const PanelEstimate& est, int depth) {
    double width = b - a;
    double local_tol = budget_per_width * width;
    // Evaluation noise: exp(-1/p) has relative rounding error of order
    // |1/p| * eps, up to ~745 * eps at the underflow edge, per bump factor.
    // A panel whose kron/gauss gap sits at that level is converged; without
    // this floor the gap stalls above the width-proportional budget and the
    // panel refines forever.
    double floor = 4096.0 * std::numeric_limits<double>::epsilon() * std::abs(est.kronrod);
    if (est.err <= local_tol || est.err <= floor ||
        width <= 64.0 * std::numeric_limits<double>::epsilon() *
                     (std::abs(a) + std::abs(b))) {
      acc.add(est.kronrod);
      return;
    }
    if (depth >= spec.max_depth) throw QuadratureError(a, b, depth);
    double m = 0.5 * (a + b);
    visit(a, m, gk15(f, a, m), depth + 1);
    visit(m, b, gk15(f, m, b), depth + 1);
  }
};

}  // namespace

const std::array<double, 4>& SmoothWeight::derivative_sup_bounds() {
  static const std::array<double, 4> bounds = estimate_sup_bounds();
  return bounds;
}

QuadratureError::QuadratureError(double a_, double b_, int depth_)
    : std::runtime_error(panel_message(a_, b_, depth_)),
      a(a_),
      b(b_),
      depth(depth_) {}

double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    const QuadratureSpec& spec) {
  if (!(a <= b)) throw std::invalid_argument("integrate_1d: need a <= b");
  if (a == b) return 0.0;
  PanelEstimate whole = gk15(f, a, b);
  double gtol = std::max(spec.abs_tol, spec.rel_tol * std::abs(whole.kronrod));
  Adapt ad{f, spec, gtol / (b - a), {}};
  ad.visit(a, b, whole, 0);
  return ad.acc.value();
}

double integrate_2d(const std::function<double(double, double)>& f, double x0,
                    double x1, double y0, double y1,
                    const QuadratureSpec& spec) {
  if (!(x0 <= x1) || !(y0 <= y1))
    throw std::invalid_argument("integrate_2d: need x0 <= x1 and y0 <= y1");
  if (x0 == x1 || y0 == y1) return 0.0;
  // The inner result is discontinuous in y at inner refinement flips, and the
  // outer panel error from such a jump shrinks with panel width at the same
  // rate as the panel budget. The jump height must therefore sit far below
  // the outer tolerance, not merely one notch below it.
  QuadratureSpec inner{spec.rel_tol * 1e-4, spec.abs_tol * 1e-4,
                       spec.max_depth};
  auto outer = [&](double y) {
    return integrate_1d([&](double x) { return f(x, y); }, x0, x1, inner);
  };
  return integrate_1d(outer, y0, y1, spec);
}

}  // namespace matcount::weights
