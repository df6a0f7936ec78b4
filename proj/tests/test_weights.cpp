#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>

#include "matcount/weights.hpp"
#include "oracles.hpp"

using namespace matcount;
using weights::bump_eval;
using weights::integrate_1d;
using weights::integrate_2d;
using weights::QuadratureSpec;

namespace {

// Analytic derivatives of w = exp(g), g = -1/q, q = (u - 1/2)(1 - u):
// the oracle for the central-difference sup-norm estimates.
std::array<double, 4> bump_derivatives_analytic(double u) {
  double w = bump_eval(u);
  if (w == 0.0) return {0.0, 0.0, 0.0, 0.0};
  double q = (u - 0.5) * (1.0 - u);
  double q1 = -2.0 * u + 1.5;
  double iq = 1.0 / q;
  double g1 = q1 * iq * iq;
  double g2 = -2.0 * iq * iq - 2.0 * q1 * q1 * iq * iq * iq;
  double g3 = 12.0 * q1 * iq * iq * iq + 6.0 * q1 * q1 * q1 * iq * iq * iq * iq;
  return {w, g1 * w, (g2 + g1 * g1) * w, (g3 + 3.0 * g1 * g2 + g1 * g1 * g1) * w};
}

}  // namespace

TEST_CASE("bump: pinned values, exact zeros, symmetry") {
  CHECK(bump_eval(0.75) == std::exp(-16.0));
  CHECK(bump_eval(0.9) == doctest::Approx(std::exp(-25.0)).epsilon(1e-12));

  for (double u : {-1.0, 0.0, 0.4, 0.5, 1.0, 1.5, 7.0})
    CHECK(bump_eval(u) == 0.0);

  for (double u : {0.51, 0.6, 0.75, 0.9, 0.99}) CHECK(bump_eval(u) > 0.0);

  // w(u) = w(3/2 - u): the two quadratic factors swap, so the values are
  // bit-identical.
  for (double u : {0.51, 0.6, 0.733, 0.85, 0.97})
    CHECK(bump_eval(u) == bump_eval(1.5 - u));
}

TEST_CASE("derivative sup bounds match the analytic oracle") {
  const auto& bounds = weights::SmoothWeight::derivative_sup_bounds();

  // The grid hits the peak u = 0.75 exactly.
  CHECK(bounds[0] == doctest::Approx(2.0 * std::exp(-16.0)).epsilon(1e-12));

  std::array<double, 4> analytic{};
  for (int i = 0; i <= 20000; ++i) {
    double u = 0.5 + 0.5 * double(i) / 20000;
    auto d = bump_derivatives_analytic(u);
    for (int j = 0; j < 4; ++j)
      analytic[j] = std::max(analytic[j], std::abs(d[j]));
  }
  for (int j = 0; j < 4; ++j) {
    CHECK(bounds[j] > 0.0);
    CHECK(bounds[j] == doctest::Approx(2.0 * analytic[j]).epsilon(0.01));
  }
}

TEST_CASE("integrate_1d: polynomials, bump vs trapezoid, validation") {
  QuadratureSpec spec;

  CHECK(integrate_1d([](double) { return 1.0; }, 0, 1, spec) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(integrate_1d([](double x) { return x; }, 0, 2, spec) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(integrate_1d([](double x) { return std::pow(x, 6); }, 0, 1, spec) ==
        doctest::Approx(1.0 / 7).epsilon(1e-13));
  CHECK(integrate_1d([](double x) { return std::sin(x); }, 0,
                     std::acos(-1.0), spec) ==
        doctest::Approx(2.0).epsilon(1e-10));

  double quad = integrate_1d([](double u) { return bump_eval(u); }, 0.5, 1.0,
                             QuadratureSpec{1e-10, 0.0, 40});
  double trap = oracle::trapezoid([](double u) { return bump_eval(u); }, 0.5,
                                  1.0, 1000000);
  CHECK(quad > 0.0);
  CHECK(std::abs(quad - trap) <= 1e-8);
  CHECK(std::abs(quad - trap) <= 1e-8 * quad);

  CHECK(integrate_1d([](double) { return 1.0; }, 3, 3, spec) == 0.0);
  CHECK_THROWS_AS(integrate_1d([](double) { return 1.0; }, 1, 0, spec),
                  std::invalid_argument);
}

TEST_CASE("integrate_1d: depth exhaustion raises QuadratureError") {
  auto step = [](double x) { return x < 0.3183098 ? 0.0 : 1.0; };
  CHECK_THROWS_AS(integrate_1d(step, 0, 1, QuadratureSpec{1e-15, 0.0, 6}),
                  weights::QuadratureError);
}

TEST_CASE("integrate_1d: halving tolerances moves the result less than the "
          "coarser tolerance") {
  auto f = [](double x) { return std::exp(x) * std::cos(3 * x); };
  double exact = (std::exp(2.0) * (std::cos(6.0) + 3 * std::sin(6.0)) -
                  (std::cos(0.0) + 3 * std::sin(0.0))) /
                 10.0;
  double coarse = integrate_1d(f, 0, 2, QuadratureSpec{1e-6, 0.0, 40});
  double fine = integrate_1d(f, 0, 2, QuadratureSpec{5e-7, 0.0, 40});
  CHECK(coarse == doctest::Approx(exact).epsilon(1e-5));
  CHECK(std::abs(coarse - fine) <= 1e-6 * std::abs(exact) + 1e-15);
}

TEST_CASE("integrate_2d: constants, products, separability") {
  QuadratureSpec spec;

  CHECK(integrate_2d([](double, double) { return 1.0; }, 0, 1, 0, 1, spec) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(integrate_2d([](double x, double y) { return x * y; }, 0, 1, 0, 1,
                     spec) == doctest::Approx(0.25).epsilon(1e-10));

  QuadratureSpec tight{1e-9, 0.0, 40};
  double one_d = integrate_1d([](double u) { return bump_eval(u); }, 0.5, 1.0,
                              tight);
  double two_d = integrate_2d(
      [](double x, double y) { return bump_eval(x) * bump_eval(y); }, 0.5, 1.0,
      0.5, 1.0, tight);
  CHECK(two_d == doctest::Approx(one_d * one_d).epsilon(1e-6));

  CHECK_THROWS_AS(integrate_2d([](double, double) { return 1.0; }, 1, 0, 0, 1,
                               spec),
                  std::invalid_argument);
}
