#pragma once

#include <atomic>

namespace gee {

/// Lock-free `*target += delta`: a compare-exchange retry loop on the 64-bit
/// pattern. The increment is never lost under concurrent writers to the same
/// address; there is no ordering between distinct addresses.
inline void write_add(double* target, double delta) noexcept {
  static_assert(std::atomic_ref<double>::is_always_lock_free);
  std::atomic_ref<double> cell(*target);
  double expected = cell.load(std::memory_order_relaxed);
  while (!cell.compare_exchange_weak(expected, expected + delta, std::memory_order_relaxed,
                                     std::memory_order_relaxed)) {
  }
}

/// Separate load and store, no read-modify-write. Concurrent writers to the
/// same address can lose updates; only for measuring the cost of write_add.
inline void unsafe_add(double* target, double delta) noexcept {
  std::atomic_ref<double> cell(*target);
  cell.store(cell.load(std::memory_order_relaxed) + delta, std::memory_order_relaxed);
}

}  // namespace gee
