#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace matcount {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u32 = std::uint32_t;
using i128 = __int128;
using u128 = unsigned __int128;

// Global worker count for parallel reductions. 0 means hardware concurrency.
// Affects wall time only; every reduction below is bit-identical for any
// worker count because the reduction tree is fixed by the chunk indices.
void set_worker_count(unsigned n);
unsigned worker_count();

// Binary-counter pairwise summation. Terms pushed in a fixed order always
// produce the same double, and rounding error grows like log(n) rather
// than n.
class PairwiseSum {
 public:
  void add(double x) {
    std::size_t level = 0;
    u64 c = count_;
    while (c & 1) {
      x += slots_[level];
      ++level;
      c >>= 1;
    }
    if (level == slots_.size())
      slots_.push_back(x);
    else
      slots_[level] = x;
    ++count_;
  }

  double value() const {
    double s = 0.0;
    u64 c = count_;
    for (std::size_t level = 0; level < slots_.size(); ++level, c >>= 1)
      if (c & 1) s += slots_[level];
    return s;
  }

  u64 count() const { return count_; }

 private:
  std::vector<double> slots_;
  u64 count_ = 0;
};

namespace detail {

void run_indexed(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace detail

// Evaluates fn(0..n-1) on the worker pool, then folds the per-chunk results
// with a pairwise tree over ascending chunk index. The tree shape depends
// only on n, so the result is independent of how chunks were scheduled.
template <class T, class Fn, class Merge>
T reduce_chunks(std::size_t n, Fn&& fn, Merge&& merge, T zero) {
  if (n == 0) return zero;
  std::vector<T> level(n, zero);
  detail::run_indexed(n, [&](std::size_t i) { level[i] = fn(i); });
  while (level.size() > 1) {
    std::vector<T> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2)
      next.push_back(merge(level[i], level[i + 1]));
    if (level.size() & 1) next.push_back(level.back());
    level = std::move(next);
  }
  return level[0];
}

}  // namespace matcount
