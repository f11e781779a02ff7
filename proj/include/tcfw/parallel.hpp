#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace tcfw {

// Serial paths are the reference implementations; the parallel ones must
// produce identical results.
enum class Execution { serial, parallel };

/// Calls body(i) for i in [0, n). Under Execution::parallel iterations run on
/// an OpenMP team; the first exception thrown by any iteration is rethrown
/// after the loop. Bodies must only write to per-index storage.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex guard;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(guard);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace tcfw
