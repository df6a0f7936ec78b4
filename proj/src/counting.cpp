#include "matcount/counting.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "matcount/arith.hpp"
#include "matcount/qcong.hpp"

namespace matcount::counting {

namespace {

using weights::bump_eval;

struct IntWindow {
  i64 lo = 0, hi = -1;
  bool empty() const { return lo > hi; }
  u64 size() const { return empty() ? 0 : u64(hi - lo + 1); }
};

// Integers a with both a/X and (t-a)/X strictly inside (1/2, 1). Endpoint
// ties carry weight exactly zero, so the open window drops nothing.
IntWindow a_support(i64 t, double X) {
  double lo = std::max(X / 2, double(t) - X);
  double hi = std::min(X, double(t) - X / 2);
  IntWindow w;
  w.lo = i64(std::floor(lo)) + 1;
  w.hi = i64(std::ceil(hi)) - 1;
  return w;
}

// Integers b in the closed bracket [X/2, X], clamped to b >= 1. Both
// smoothed algorithms use this same window so their term sets coincide.
IntWindow b_support(double X) {
  IntWindow w;
  w.lo = std::max<i64>(1, i64(std::ceil(X / 2)));
  w.hi = i64(std::floor(X));
  return w;
}

i64 char_poly_n(i64 t, i64 r, i64 a) {
  i128 n = i128(a) * (t - a) - r;
  if (n > i128(INT64_MAX) || n < -i128(INT64_MAX))
    throw std::overflow_error("n = at - a^2 - r exceeds 64 bits");
  return i64(n);
}

struct ChunkSum {
  double value = 0.0;
  u64 terms = 0;
};

ChunkSum merge_chunks(const ChunkSum& a, const ChunkSum& b) {
  return {a.value + b.value, a.terms + b.terms};
}

// Fixed decomposition of [lo, hi] into at most 256 contiguous chunks; the
// chunk grid depends only on the window, never on the worker count.
std::vector<IntWindow> fixed_chunks(const IntWindow& w) {
  std::vector<IntWindow> out;
  if (w.empty()) return out;
  u64 n = w.size();
  u64 parts = std::min<u64>(256, n);
  for (u64 i = 0; i < parts; ++i) {
    IntWindow c;
    c.lo = w.lo + i64(n * i / parts);
    c.hi = w.lo + i64(n * (i + 1) / parts) - 1;
    out.push_back(c);
  }
  return out;
}

template <class PerChunk>
CountResult run_counted(const char* method, const IntWindow& outer,
                        PerChunk per_chunk) {
  auto start = std::chrono::steady_clock::now();
  std::vector<IntWindow> chunks = fixed_chunks(outer);
  ChunkSum total = reduce_chunks<ChunkSum>(
      chunks.size(), [&](std::size_t i) { return per_chunk(chunks[i]); },
      merge_chunks, ChunkSum{});
  CountResult res;
  res.value = total.value;
  res.terms = total.terms;
  res.method = method;
  res.elapsed_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return res;
}

}  // namespace

CharPolyParams CharPolyParams::make(i64 t, i64 r, double X) {
  if (t % 2 != 0) throw std::invalid_argument("CharPolyParams: t must be even");
  if (!(X >= 0) || !std::isfinite(X))
    throw std::invalid_argument("CharPolyParams: X must be finite and >= 0");
  return CharPolyParams{t, r, X};
}

i64 count_exact_box(const CharPolyParams& params) {
  if (params.X > 1e6)
    throw std::invalid_argument("count_exact_box: X exceeds the 1e6 guard");
  i64 Xi = i64(std::floor(params.X));
  if (Xi < 0) return 0;
  i64 t = params.t, r = params.r;
  // a in the box and d = t - a in the box.
  i64 a_lo = std::max(-Xi, t - Xi);
  i64 a_hi = std::min(Xi, t + Xi);
  i64 total = 0;
  for (i64 a = a_lo; a <= a_hi; ++a) {
    i64 n = char_poly_n(t, r, a);
    if (n == 0) {
      total += 4 * Xi + 1;
      continue;
    }
    u64 m = n > 0 ? u64(n) : u64(-n);
    if (Xi == 0) continue;
    if (u128(m) > u128(Xi) * u128(Xi)) continue;
    for (u64 d : arith::divisors(arith::factorize(m))) {
      if (d > u64(Xi)) break;
      if (u128(m) <= u128(d) * u128(Xi)) total += 2;
    }
  }
  return total;
}

CountResult count_smoothed_direct(const CharPolyParams& params) {
  const double X = params.X;
  const i64 t = params.t, r = params.r;
  const IntWindow aw = a_support(t, X);
  const IntWindow bw = b_support(X);
  if (aw.empty() || bw.empty()) return {0.0, "direct", 0.0, 0};
  return run_counted("direct", aw, [&](const IntWindow& chunk) {
    PairwiseSum acc;
    u64 terms = 0;
    for (i64 a = chunk.lo; a <= chunk.hi; ++a) {
      i64 n = char_poly_n(t, r, a);
      if (n <= 0) continue;
      double wa = bump_eval(double(a) / X) * bump_eval(double(t - a) / X);
      for (u64 b : arith::divisors_in_range(u64(n), u64(bw.lo), u64(bw.hi))) {
        double term = wa * bump_eval(double(b) / X) *
                      bump_eval(double(n) / (double(b) * X));
        acc.add(term);
        ++terms;
      }
    }
    return ChunkSum{acc.value(), terms};
  });
}

CountResult count_smoothed_congruence(const CharPolyParams& params) {
  const double X = params.X;
  const i64 t = params.t, r = params.r;
  const IntWindow aw = a_support(t, X);
  const IntWindow bw = b_support(X);
  if (aw.empty() || bw.empty()) return {0.0, "congruence", 0.0, 0};
  return run_counted("congruence", bw, [&](const IntWindow& chunk) {
    PairwiseSum acc;
    u64 terms = 0;
    std::vector<i64> hits;
    for (i64 b = chunk.lo; b <= chunk.hi; ++b) {
      qcong::RootSet roots = qcong::poly_roots_mod(t, r, u64(b));
      hits.clear();
      for (u64 nu : roots.roots) {
        i64 rem = (aw.lo - i64(nu)) % b;
        if (rem < 0) rem += b;
        i64 a0 = aw.lo + (rem == 0 ? 0 : b - rem);
        for (i64 a = a0; a <= aw.hi; a += b) hits.push_back(a);
      }
      std::sort(hits.begin(), hits.end());
      for (i64 a : hits) {
        i64 n = char_poly_n(t, r, a);
        if (n <= 0) continue;
        double term = bump_eval(double(a) / X) *
                      bump_eval(double(t - a) / X) *
                      bump_eval(double(b) / X) *
                      bump_eval(double(n) / (double(b) * X));
        acc.add(term);
        ++terms;
      }
    }
    return ChunkSum{acc.value(), terms};
  });
}

double tau_smoothed(u64 n, double X, const weights::SmoothWeight& w) {
  if (n == 0) throw std::invalid_argument("tau_smoothed: n must be positive");
  IntWindow bw = b_support(X);
  if (bw.empty()) return 0.0;
  PairwiseSum acc;
  for (u64 b : arith::divisors_in_range(n, u64(bw.lo), u64(bw.hi)))
    acc.add(w(double(b) / X) * w(double(n) / double(b) / X));
  return acc.value();
}

double corollary_sum(i64 p, i64 q, double X) {
  i64 delta = p * p - q;
  if (delta <= 0 || !arith::is_fundamental_discriminant(delta))
    throw std::invalid_argument("corollary_sum: p^2 - q must be positive fundamental");
  IntWindow nw;
  nw.lo = i64(std::floor(X / 2)) + 1;
  nw.hi = i64(std::ceil(X)) - 1;
  if (nw.lo < 1) nw.lo = 1;
  if (nw.empty()) return 0.0;
  std::vector<IntWindow> chunks = fixed_chunks(nw);
  ChunkSum total = reduce_chunks<ChunkSum>(
      chunks.size(),
      [&](std::size_t i) {
        PairwiseSum acc;
        for (i64 n = chunks[i].lo; n <= chunks[i].hi; ++n) {
          i128 g = i128(n + p) * (n + p) - delta;
          if (g <= 0) continue;
          if (g > i128(INT64_MAX))
            throw std::overflow_error("corollary_sum: g(n) exceeds 64 bits");
          acc.add(bump_eval(double(n) / X) * tau_smoothed(u64(g), X));
        }
        return ChunkSum{acc.value(), 0};
      },
      merge_chunks, ChunkSum{});
  return total.value;
}

}  // namespace matcount::counting
