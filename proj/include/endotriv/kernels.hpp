#pragma once

// Element-loop kernels shared by the subgroup algorithms. Each parallel
// kernel has a serial twin with identical output; the parallel one falls
// back to the serial path below kSerialThreshold.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <vector>

#include <omp.h>

#include "endotriv/group.hpp"

namespace endotriv::kernels {

inline constexpr std::size_t kSerialThreshold = 2048;
inline constexpr std::size_t kBlock = 1024;

template <class Pred>
std::vector<Index> select_serial(std::size_t n, Pred&& pred) {
  std::vector<Index> out;
  for (std::size_t i = 0; i < n; ++i)
    if (pred(static_cast<Index>(i))) out.push_back(static_cast<Index>(i));
  return out;
}

/// Indices i < n with pred(i), increasing.
template <class Pred>
std::vector<Index> select(std::size_t n, Pred&& pred) {
  if (n < kSerialThreshold || omp_get_max_threads() == 1) return select_serial(n, pred);
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  std::vector<std::vector<Index>> parts(blocks);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t hi = std::min(n, (b + 1) * kBlock);
    for (std::size_t i = b * kBlock; i < hi; ++i)
      if (pred(static_cast<Index>(i))) parts[b].push_back(static_cast<Index>(i));
  }
  std::vector<Index> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

template <class Pred>
Index find_first_serial(std::size_t n, Pred&& pred) {
  for (std::size_t i = 0; i < n; ++i)
    if (pred(static_cast<Index>(i))) return static_cast<Index>(i);
  return kNoIndex;
}

/// Smallest i < n with pred(i), or kNoIndex.
template <class Pred>
Index find_first(std::size_t n, Pred&& pred) {
  if (n < kSerialThreshold || omp_get_max_threads() == 1) return find_first_serial(n, pred);
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  std::atomic<std::size_t> best{n};
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t b = 0; b < blocks; ++b) {
    if (b * kBlock >= best.load(std::memory_order_relaxed)) continue;
    const std::size_t hi = std::min(n, (b + 1) * kBlock);
    for (std::size_t i = b * kBlock; i < hi; ++i) {
      if (i >= best.load(std::memory_order_relaxed)) break;
      if (pred(static_cast<Index>(i))) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        break;
      }
    }
  }
  return best.load() == n ? kNoIndex : static_cast<Index>(best.load());
}

template <class Pred>
std::size_t count_serial(std::size_t n, Pred&& pred) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += pred(static_cast<Index>(i)) ? 1 : 0;
  return c;
}

template <class Pred>
std::size_t count(std::size_t n, Pred&& pred) {
  if (n < kSerialThreshold || omp_get_max_threads() == 1) return count_serial(n, pred);
  std::size_t c = 0;
#pragma omp parallel for schedule(dynamic, kBlock) reduction(+ : c)
  for (std::size_t i = 0; i < n; ++i) c += pred(static_cast<Index>(i)) ? 1 : 0;
  return c;
}

}  // namespace endotriv::kernels
