#pragma once

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "critline/numerics.hpp"

namespace critline {

/// Execution policy for the data-parallel kernels. kSerial is the reference
/// path; kParallel must produce bit-identical results.
enum class Exec { kSerial, kParallel };

/// Thread count resolution: CRITLINE_THREADS beats the flag, the flag beats
/// the machine default. Values below 1 are rejected.
int resolve_thread_count(std::optional<int> flag);
void set_thread_count(int threads);
int thread_count();

/// Fixed block length of blocked_sum. Reduction order depends only on this,
/// never on the number of threads.
inline constexpr std::int64_t kSumBlock = 4096;

template <typename Fn>
void for_each_index(Exec exec, std::int64_t count, Fn&& fn) {
  if (exec == Exec::kSerial || count < 2) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) fn(i);
}

/// Compensated sum of term(n) for n in [first, last].
template <typename Term>
Complex blocked_sum(Exec exec, std::int64_t first, std::int64_t last, Term&& term) {
  if (last < first) return 0.0;
  const std::int64_t count = last - first + 1;
  const std::int64_t blocks = (count + kSumBlock - 1) / kSumBlock;
  std::vector<Complex> partial(static_cast<std::size_t>(blocks));
  for_each_index(exec, blocks, [&](std::int64_t b) {
    const std::int64_t lo = first + b * kSumBlock;
    const std::int64_t hi = std::min(last, lo + kSumBlock - 1);
    CompensatedSum acc;
    for (std::int64_t n = lo; n <= hi; ++n) acc.add(term(n));
    partial[static_cast<std::size_t>(b)] = acc.value();
  });
  CompensatedSum total;
  for (const Complex& p : partial) total.add(p);
  return total.value();
}

}  // namespace critline
