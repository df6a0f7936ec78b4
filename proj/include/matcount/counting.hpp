#pragma once

#include <string>

#include "matcount/weights.hpp"

namespace matcount::counting {

// Parameters of the characteristic polynomial x^2 - t x + r and the count
// scale X. D = t^2/4 - r is carried as a derived field; positivity and
// fundamentality are demanded only by theorem-mode callers, since the sharp
// box count is well defined (and tested) at D <= 0 as well.
struct CharPolyParams {
  i64 t = 0;
  i64 r = 0;
  double X = 0.0;

  static CharPolyParams make(i64 t, i64 r, double X);  // t even, X >= 0
  i64 disc() const { return (t / 2) * (t / 2) - r; }
};

struct CountResult {
  double value = 0.0;
  std::string method;
  double elapsed_sec = 0.0;
  u64 terms = 0;
};

// Sharp count S(X): integer matrices (a b; c d) with trace t, determinant r,
// and all four entries bounded by X in absolute value.
i64 count_exact_box(const CharPolyParams& params);  // guards X <= 1e6

// Smoothed count S_w(X), a-major: for each a in the support of
// w(a/X) w((t-a)/X), sum over divisors b of n = at - a^2 - r in [X/2, X].
CountResult count_smoothed_direct(const CharPolyParams& params);

// Same sum, b-major: for each b in [X/2, X], solve a^2 - ta + r = 0 (mod b)
// and sum over the arithmetic progressions of a inside the support.
CountResult count_smoothed_congruence(const CharPolyParams& params);

// Restricted divisor function: sum over n = bc of w(b/X) w(c/X).
double tau_smoothed(u64 n, double X, const weights::SmoothWeight& w = {});

// Left side of the Corollary: sum of w(n/X) tau_{X,w}(g(n)) over integers n,
// g(u) = u^2 + 2pu + q. Requires Delta = p^2 - q positive fundamental.
double corollary_sum(i64 p, i64 q, double X);

}  // namespace matcount::counting
