#pragma once

/// @file parallel.hpp
/// @brief Index-parallel loop with deterministic result placement, plus the
/// resource guard shared by all heavy computations.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace idealpower {

/// Limits on problem size; exceeding them is reported, never silently
/// truncated.
struct ResourceGuard {
  std::uint64_t max_basis = 200000;
  std::uint64_t max_entries = 50000000;
};

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void check_basis_guard(std::uint64_t size, const ResourceGuard& guard, const std::string& what) {
  if (size > guard.max_basis)
    throw GuardExceeded(what + ": basis size " + std::to_string(size) + " exceeds guard " +
                        std::to_string(guard.max_basis));
}

/// Runs fn(i) for i in [0, count) on up to `workers` threads. Callers write
/// results into slot i, so output order never depends on scheduling. The
/// exception of the lowest failing index is rethrown.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  {
    std::vector<std::jthread> pool;
    const unsigned n = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    for (unsigned t = 0; t < n; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace idealpower
