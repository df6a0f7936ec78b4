#include "matcount/mainterm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "matcount/qcong.hpp"

namespace matcount::mainterm {

namespace {

using weights::bump_eval;

constexpr u64 kTruncationCap = 1'000'000'000;

void require_fundamental(const arith::Discriminant& D) {
  if (D.value == 1)
    throw std::invalid_argument("D = 1 is a degenerate square, not in domain");
  if (!D.fundamental)
    throw std::invalid_argument("D must be a fundamental discriminant");
}

struct BlockSum {
  double value = 0.0;
  i64 char_total = 0;  // integer sum of chi over the block's odd l
};

BlockSum char_block(i64 D, u64 lo, u64 hi) {
  BlockSum out;
  PairwiseSum acc;
  for (u64 l = lo | 1; l <= hi; l += 2) {
    int chi = arith::kronecker(D, i64(l));
    out.char_total += chi;
    if (chi) acc.add(double(chi) / double(l));
  }
  out.value = acc.value();
  return out;
}

}  // namespace

double zeta2() {
  return std::numbers::pi * std::numbers::pi / 6.0;
}

ValueWithError K1(const arith::Discriminant& D) {
  require_fundamental(D);
  // rho(2^n) stabilizes: odd D gives 4 or 0 from n = 3 on (by D mod 8),
  // even fundamental D dies at n = 4. Terms to n = 5 plus the geometric
  // tail are therefore exact.
  double s = 0.0;
  for (int n = 0; n <= 5; ++n)
    s += double(qcong::rho(D, u64(1) << n)) / double(u64(1) << n);
  if ((D.value & 1) && D.value % 8 == 1) s += 4.0 / 32.0;  // 4 * sum 2^-n, n>5
  return {(2.0 / 3.0) * s, 0.0};
}

ValueWithError M1(const arith::Discriminant& D, double tol) {
  require_fundamental(D);
  if (!(tol > 0)) throw std::invalid_argument("M1: tol must be positive");
  const double bound_scale = 2.0 * std::sqrt(double(D.value)) * std::log(double(D.value));
  u64 L = u64(std::ceil(bound_scale / tol));
  if (L < 16) L = 16;
  if (L > kTruncationCap)
    throw TruncationError("M1: truncation point exceeds 1e9 for requested tol");

  const u64 period = 4 * u64(D.value);
  const i64 Dv = D.value;
  double value;
  if (period <= L) {
    // Round L up to a whole number of periods; each period's character sum
    // over odd l must vanish exactly (orthogonality), asserted per block.
    u64 nblocks = (L + period - 1) / period;
    L = nblocks * period;
    u64 nchunks = std::min<u64>(nblocks, 256);
    struct Part {
      double v;
      bool ok;
    };
    Part total = reduce_chunks<Part>(
        nchunks,
        [&](std::size_t i) {
          u64 first = nblocks * i / nchunks;
          u64 last = nblocks * (i + 1) / nchunks;
          PairwiseSum acc;
          bool ok = true;
          for (u64 b = first; b < last; ++b) {
            BlockSum bs = char_block(Dv, b * period + 1, (b + 1) * period);
            ok = ok && bs.char_total == 0;
            acc.add(bs.value);
          }
          return Part{acc.value(), ok};
        },
        [](const Part& a, const Part& b) {
          return Part{a.v + b.v, a.ok && b.ok};
        },
        Part{0.0, true});
    if (!total.ok)
      throw std::logic_error("M1: character period sum is nonzero");
    value = total.v;
  } else {
    u64 nchunks = 256;
    value = reduce_chunks<double>(
        nchunks,
        [&](std::size_t i) {
          u64 first = 1 + L * i / nchunks;
          u64 last = L * (i + 1) / nchunks;
          return char_block(Dv, first, last).value;
        },
        [](double a, double b) { return a + b; }, 0.0);
  }
  return {value, bound_scale / double(L)};
}

GammaDecomposition gamma1(const arith::Discriminant& D, double tol) {
  ValueWithError k = K1(D);
  ValueWithError m = M1(D, tol);
  GammaDecomposition g;
  g.K1 = k.value;
  g.M1 = m.value;
  g.zeta2 = zeta2();
  g.gamma = g.K1 * g.M1 / g.zeta2;
  g.err_K = k.error;
  g.err_M = m.error;
  return g;
}

double main_term(const counting::CharPolyParams& params,
                 const weights::QuadratureSpec& spec) {
  const double X = params.X;
  const double t = double(params.t);
  const double r = double(params.r);
  double x0 = std::max(X / 2, t - X);
  double x1 = std::min(X, t - X / 2);
  if (!(x0 < x1) || !(X > 0)) return 0.0;
  auto f = [&](double x, double y) {
    double w4 = bump_eval((x * t - x * x - r) / (y * X));
    if (w4 == 0.0) return 0.0;
    return (1.0 / y) * bump_eval(y / X) * bump_eval(x / X) *
           bump_eval((t - x) / X) * w4;
  };
  return weights::integrate_2d(f, x0, x1, X / 2, X, spec);
}

double corollary_main_term(i64 p, i64 q, double X,
                           const weights::QuadratureSpec& spec) {
  i64 delta = p * p - q;
  if (delta <= 0 || !arith::is_fundamental_discriminant(delta))
    throw std::invalid_argument(
        "corollary_main_term: p^2 - q must be positive fundamental");
  if (!(X > 0)) return 0.0;
  const double pd = double(p), qd = double(q);
  auto f = [&](double x, double y) {
    double w3 = bump_eval((x * x + 2 * pd * x + qd) / (y * X));
    if (w3 == 0.0) return 0.0;
    return (1.0 / y) * bump_eval(y / X) * bump_eval(x / X) * w3;
  };
  return weights::integrate_2d(f, X / 2, X, X / 2, X, spec);
}

std::vector<HooleyRow> hooley_residual_scan(const arith::Discriminant& D,
                                            const std::vector<u64>& ys) {
  if (!std::is_sorted(ys.begin(), ys.end()))
    throw std::invalid_argument("hooley_residual_scan: ys must be ascending");
  for (u64 y : ys)
    if (y == 0) throw std::invalid_argument("hooley_residual_scan: y must be positive");
  std::vector<HooleyRow> rows;
  if (ys.empty()) return rows;
  double gamma = gamma1(D, 1e-6).gamma;
  std::vector<u64> sums = qcong::rho_partial_sums(D, ys);
  rows.reserve(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    HooleyRow row;
    row.y = ys[i];
    row.rho_sum = sums[i];
    row.y_gamma = double(ys[i]) * gamma;
    row.residual = double(sums[i]) - row.y_gamma;
    row.scaled = row.residual / std::pow(double(ys[i]), 0.75);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace matcount::mainterm
