#include "critline/parallel.hpp"

#include <cstdlib>
#include <string>

#include "critline/error.hpp"

namespace critline {

int resolve_thread_count(std::optional<int> flag) {
  if (const char* env = std::getenv("CRITLINE_THREADS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "CRITLINE_THREADS must be a positive integer, got '" +
                      std::string(env) + "'");
    }
    return static_cast<int>(v);
  }
  if (flag) {
    if (*flag < 1) {
      throw Error(ErrorCode::kInvalidArgument, "thread count must be >= 1");
    }
    return *flag;
  }
  return std::max(1, omp_get_num_procs());
}

void set_thread_count(int threads) { omp_set_num_threads(std::max(1, threads)); }

int thread_count() { return omp_get_max_threads(); }

}  // namespace critline
