#include "lpp/replicas.hpp"

#include <exception>

#include <omp.h>

namespace lpp {

void for_each_replica(Execution exec, std::int64_t reps,
                      const std::function<void(std::int64_t)>& body) {
  if (exec == Execution::Serial) {
    for (std::int64_t r = 0; r < reps; ++r) body(r);
    return;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t r = 0; r < reps; ++r) {
    try {
      body(r);
    } catch (...) {
#pragma omp critical(lpp_replica_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

void set_thread_count(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

int max_thread_count() { return omp_get_max_threads(); }

}  // namespace lpp
