#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <type_traits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace indcover {

/// How a data-parallel kernel runs. Serial execution is the reference path the parallel
/// path is tested against; both return identical results.
struct Execution {
  int threads = 1;  ///< 1 = serial; 0 = OpenMP default; otherwise an explicit team size

  static constexpr Execution serial() { return {1}; }
  static constexpr Execution parallel(int threads = 0) { return {threads}; }
  constexpr bool is_serial() const { return threads == 1; }
};

namespace detail {

class ExceptionSlot {
 public:
  void capture() {
    std::lock_guard lock(mutex_);
    if (!error_) error_ = std::current_exception();
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

inline int team_size(Execution exec) {
#ifdef _OPENMP
  return exec.threads > 0 ? exec.threads : omp_get_max_threads();
#else
  (void)exec;
  return 1;
#endif
}

inline int thread_index() {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

}  // namespace detail

/// Lowest index i in [0, count) with pred(i), or nullopt. The parallel path skips indices
/// above the best hit found so far, so the answer equals the serial scan's.
template <typename Pred>
std::optional<std::uint64_t> first_index_where(std::uint64_t count, Pred&& pred, Execution exec) {
  if (exec.is_serial()) {
    for (std::uint64_t i = 0; i < count; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }
  std::atomic<std::uint64_t> best{count};
  detail::ExceptionSlot errors;
  const auto signed_count = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 16) num_threads(detail::team_size(exec))
  for (std::int64_t i = 0; i < signed_count; ++i) {
    const auto index = static_cast<std::uint64_t>(i);
    if (index >= best.load(std::memory_order_relaxed)) continue;
    try {
      if (pred(index)) {
        std::uint64_t seen = best.load();
        while (index < seen && !best.compare_exchange_weak(seen, index)) {
        }
      }
    } catch (...) {
      errors.capture();
    }
  }
  errors.rethrow();
  const std::uint64_t hit = best.load();
  if (hit == count) return std::nullopt;
  return hit;
}

/// results[i] = fn(i), in index order regardless of completion order.
template <typename Fn>
auto map_indexed(std::size_t count, Fn&& fn, Execution exec)
    -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  using Result = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<std::optional<Result>> slots(count);
  if (exec.is_serial()) {
    for (std::size_t i = 0; i < count; ++i) slots[i].emplace(fn(i));
  } else {
    detail::ExceptionSlot errors;
    const auto signed_count = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(detail::team_size(exec))
    for (std::int64_t i = 0; i < signed_count; ++i) {
      try {
        slots[static_cast<std::size_t>(i)].emplace(fn(static_cast<std::size_t>(i)));
      } catch (...) {
        errors.capture();
      }
    }
    errors.rethrow();
  }
  std::vector<Result> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace indcover
