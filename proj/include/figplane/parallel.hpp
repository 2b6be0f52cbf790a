#pragma once

// Deterministic sharding over an index range. Shards are contiguous and
// merged in shard order, so results never depend on the job count.

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace figplane {

/// Calls fn(i) for every i in [0, n). Writes from fn must target disjoint
/// locations.
template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  const std::size_t chunk = (n + jobs - 1) / jobs;
  for (unsigned j = 0; j < jobs; ++j) {
    const std::size_t lo = j * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& w : workers) w.join();
}

/// Collects fn(i) for all i where it yields a value, in index order.
/// fn returns std::optional<T>.
template <class T, class Fn>
std::vector<T> parallel_collect(std::size_t n, unsigned jobs, Fn&& fn) {
  const unsigned shards = std::max(1u, jobs);
  std::vector<std::vector<T>> parts(shards);
  const std::size_t chunk = (n + shards - 1) / shards;
  parallel_for(shards, jobs, [&](std::size_t s) {
    const std::size_t lo = s * chunk, hi = std::min(n, lo + chunk);
    for (std::size_t i = lo; i < hi; ++i)
      if (auto v = fn(i)) parts[s].push_back(std::move(*v));
  });
  std::vector<T> out;
  for (auto& p : parts)
    for (auto& v : p) out.push_back(std::move(v));
  return out;
}

}  // namespace figplane
