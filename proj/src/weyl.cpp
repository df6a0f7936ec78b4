#include "matcount/weyl.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "matcount/qcong.hpp"

namespace matcount::weyl {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> unit_phase(u64 num, u64 den) {
  double arg = kTwoPi * (double(num) / double(den));
  return {std::cos(arg), std::sin(arg)};
}

struct ComplexSum {
  PairwiseSum re, im;
  void add(std::complex<double> z) {
    re.add(z.real());
    im.add(z.imag());
  }
  std::complex<double> value() const { return {re.value(), im.value()}; }
};

}  // namespace

std::complex<double> weyl_single(i64 h, const arith::Discriminant& D, u64 c) {
  if (c == 0) throw std::invalid_argument("weyl_single: c must be positive");
  qcong::RootSet roots = qcong::roots_mod(D, c);
  i64 hr = h % i64(c);
  if (hr < 0) hr += i64(c);
  u64 hm = u64(hr);
  if (hm == 0) return {double(roots.roots.size()), 0.0};
  ComplexSum acc;
  for (u64 nu : roots.roots) acc.add(unit_phase(arith::mul_mod(hm, nu, c), c));
  return acc.value();
}

double test_function_kappa() {
  return std::max(1.0, weights::SmoothWeight::derivative_sup_bounds()[3] / 8.0);
}

double test_function(double y, double Y) {
  return weights::bump_eval(y / (2.0 * Y)) / test_function_kappa();
}

AveragedWeyl weyl_averaged(const WeylQuery& query) {
  if (query.q == 0) throw std::invalid_argument("weyl_averaged: q must be positive");
  if (!std::isfinite(query.Y)) throw std::invalid_argument("weyl_averaged: Y must be finite");
  AveragedWeyl out;
  out.kappa = test_function_kappa();
  if (query.Y < 1) return out;
  u64 q = query.q;
  u64 c_lo = u64(std::ceil(query.Y));
  u64 c_hi = u64(std::floor(2.0 * query.Y));
  u64 first = (c_lo + q - 1) / q;  // first multiple of q at or above c_lo
  u64 last = c_hi / q;
  if (first > last) return out;
  u64 count = last - first + 1;
  out.terms = count;
  u64 nchunks = std::min<u64>(count, 256);
  struct Part {
    std::complex<double> v;
  };
  Part total = reduce_chunks<Part>(
      nchunks,
      [&](std::size_t i) {
        u64 a = first + count * i / nchunks;
        u64 b = first + count * (i + 1) / nchunks;
        ComplexSum acc;
        for (u64 k = a; k < b; ++k) {
          u64 c = k * q;
          double v = test_function(double(c), query.Y);
          if (v != 0.0) acc.add(v * weyl_single(query.h, query.D, c));
        }
        return Part{acc.value()};
      },
      [](const Part& x, const Part& y) { return Part{x.v + y.v}; }, Part{});
  out.value = total.v;
  return out;
}

double dfi_bound_ratio(const WeylQuery& query) {
  if (query.h < 1)
    throw std::invalid_argument("dfi_bound_ratio: h must be >= 1");
  AveragedWeyl avg = weyl_averaged(query);
  double h = double(query.h);
  double D = double(query.D.value);
  double den = std::pow(h, 0.25) *
               std::pow(query.Y + h * std::sqrt(D), 0.75) *
               std::pow(D, 0.125 - 1.0 / 1331.0);
  return std::abs(avg.value) / den;
}

namespace {

std::complex<double> phase_of(i64 num, u64 den) {
  i64 r = num % i64(den);
  if (r < 0) r += i64(den);
  return unit_phase(u64(r), den);
}

// Fourier transform at xi with the e(-x xi) convention.
std::complex<double> gaussian_transform(double sigma, double xi) {
  return {sigma * std::exp(-std::numbers::pi * sigma * sigma * xi * xi), 0.0};
}

std::complex<double> bump_transform(double X, double xi) {
  weights::QuadratureSpec spec{1e-11, 1e-14, 48};
  auto re = [&](double x) {
    return weights::bump_eval(x / X) * std::cos(kTwoPi * x * xi);
  };
  auto im = [&](double x) {
    return -weights::bump_eval(x / X) * std::sin(kTwoPi * x * xi);
  };
  double a = X / 2, b = X;
  return {weights::integrate_1d(re, a, b, spec),
          weights::integrate_1d(im, a, b, spec)};
}

}  // namespace

double poisson_check(const PoissonProfile& profile, i64 alpha, u64 q,
                     u64 trunc) {
  if (q == 0) throw std::invalid_argument("poisson_check: q must be positive");
  if (trunc == 0) throw std::invalid_argument("poisson_check: trunc must be positive");
  const bool gaussian = profile.kind == PoissonProfile::Kind::gaussian;
  const double par = profile.param;
  if (!(par > 0)) throw std::invalid_argument("poisson_check: profile parameter must be positive");

  auto f = [&](double x) {
    if (gaussian) return std::exp(-std::numbers::pi * x * x / (par * par));
    return weights::bump_eval(x / par);
  };

  PairwiseSum lhs;
  i64 K = i64(trunc);
  for (i64 k = -K; k <= K; ++k) lhs.add(f(double(alpha + i64(q) * k)));

  ComplexSum rhs;
  for (i64 m = -K; m <= K; ++m) {
    double xi = double(m) / double(q);
    std::complex<double> ft =
        gaussian ? gaussian_transform(par, xi) : bump_transform(par, xi);
    rhs.add(phase_of(alpha * m, q) * ft);
  }
  std::complex<double> right = rhs.value() / double(q);
  return std::abs(std::complex<double>(lhs.value(), 0.0) - right);
}

}  // namespace matcount::weyl
