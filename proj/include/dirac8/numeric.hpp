#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <thread>
#include <vector>

namespace dirac8 {

/// Pairwise (cascade) summation; deterministic for a given input order.
template <typename T>
T pairwise_sum(std::span<const T> values) {
  if (values.empty()) return T{};
  if (values.size() <= 8) {
    T acc = values[0];
    for (std::size_t i = 1; i < values.size(); ++i) acc = acc + values[i];
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.subspan(0, half)) + pairwise_sum(values.subspan(half));
}

template <typename T>
T pairwise_sum(const std::vector<T>& values) {
  return pairwise_sum(std::span<const T>(values));
}

/// Worker count used by the data-parallel loops; 1 means run inline.
inline std::size_t& worker_threads() {
  static std::size_t n = 1;
  return n;
}

/// Runs body(i) for i in [0, n) over contiguous chunks. Bodies must write disjoint outputs;
/// reductions happen afterwards in a fixed order, so results do not depend on the thread count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(std::max<std::size_t>(worker_threads(), 1), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::jthread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk, end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] {
      for (std::size_t i = begin; i < end; ++i) body(i);
    });
  }
}

}  // namespace dirac8
