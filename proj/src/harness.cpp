#include "matcount/harness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "matcount/mainterm.hpp"
#include "matcount/weights.hpp"

namespace matcount::harness {

namespace {

using weights::bump_eval;

bool integrand_positive_somewhere(const counting::CharPolyParams& p) {
  const double X = p.X;
  const double t = double(p.t), r = double(p.r);
  double x0 = std::max(X / 2, t - X);
  double x1 = std::min(X, t - X / 2);
  if (!(x0 < x1)) return false;
  constexpr int kGrid = 64;
  for (int i = 1; i < kGrid; ++i) {
    double x = x0 + (x1 - x0) * i / kGrid;
    for (int j = 1; j < kGrid; ++j) {
      double y = X / 2 + (X / 2) * j / kGrid;
      double v = bump_eval(y / X) * bump_eval(x / X) * bump_eval((t - x) / X) *
                 bump_eval((x * t - x * x - r) / (y * X));
      if (v > 0.0) return true;
    }
  }
  return false;
}

ConvergenceRow finish_row(ConvergenceRow row) {
  row.main = row.gamma * row.M;
  row.ratio = row.main > 0.0 ? row.S_w / row.main : 0.0;
  row.residual = row.S_w - row.main;
  return row;
}

}  // namespace

counting::CharPolyParams pick_params(double X, double shape) {
  if (!(X >= 10)) throw std::invalid_argument("pick_params: X must be >= 10");
  if (!(shape > 1.0) || !(shape < 2.0))
    throw std::invalid_argument("pick_params: shape must lie in (1, 2)");
  i64 t = 2 * i64(std::llround(shape * X / 2.0));
  i64 quarter = (t / 2) * (t / 2);
  i64 Dmax = i64(std::floor(0.55 * X * X));
  for (i64 j = 0; j < 10'000; ++j) {
    i64 D = Dmax - j;
    if (D < 1) break;
    if (!arith::is_fundamental_discriminant(D)) continue;
    counting::CharPolyParams params =
        counting::CharPolyParams::make(t, quarter - D, X);
    if (!integrand_positive_somewhere(params))
      throw std::runtime_error("pick_params: main-term support is empty");
    return params;
  }
  throw std::runtime_error(
      "pick_params: no fundamental discriminant in the search window");
}

std::vector<ConvergenceRow> theorem_scan(const std::vector<double>& Xs,
                                         double shape,
                                         const ScanOptions& opts) {
  if (!std::is_sorted(Xs.begin(), Xs.end()))
    throw std::invalid_argument("theorem_scan: Xs must be ascending");
  std::vector<ConvergenceRow> rows;
  rows.reserve(Xs.size());
  for (double X : Xs) {
    counting::CharPolyParams params = pick_params(X, shape);
    counting::CountResult cong = counting::count_smoothed_congruence(params);
    counting::CountResult dir = counting::count_smoothed_direct(params);
    double scale = std::max(std::abs(cong.value), 1e-12);
    if (std::abs(dir.value - cong.value) > opts.cross_check_rel * scale ||
        dir.terms != cong.terms)
      throw std::runtime_error("theorem_scan: dual-algorithm mismatch");
    ConvergenceRow row;
    row.X = X;
    row.t = params.t;
    row.r = params.r;
    row.D = params.disc();
    row.S_w = cong.value;
    row.gamma = mainterm::gamma1(arith::Discriminant::make(row.D),
                                 opts.gamma_tol)
                    .gamma;
    row.M = mainterm::main_term(params, opts.quad);
    rows.push_back(finish_row(row));
  }
  return rows;
}

std::vector<ConvergenceRow> corollary_scan(const arith::Discriminant& Delta,
                                           const std::vector<double>& Xs,
                                           const ScanOptions& opts) {
  if (!Delta.fundamental)
    throw std::invalid_argument("corollary_scan: Delta must be fundamental");
  if (!std::is_sorted(Xs.begin(), Xs.end()))
    throw std::invalid_argument("corollary_scan: Xs must be ascending");
  const i64 q = -Delta.value;
  mainterm::GammaDecomposition g = mainterm::gamma1(Delta, opts.gamma_tol);
  std::vector<ConvergenceRow> rows;
  rows.reserve(Xs.size());
  for (double X : Xs) {
    ConvergenceRow row;
    row.X = X;
    row.t = 0;
    row.r = q;
    row.D = Delta.value;
    row.S_w = counting::corollary_sum(0, q, X);
    row.gamma = g.gamma;
    row.M = mainterm::corollary_main_term(0, q, X, opts.quad);
    rows.push_back(finish_row(row));
  }
  return rows;
}

}  // namespace matcount::harness
