#pragma once

#include <cstdint>
#include <functional>

namespace lpp {

/// How independent Monte Carlo replicas are scheduled.
///
/// Serial is the reference implementation. Parallel runs the same per-replica
/// body under OpenMP. Every estimator writes one record per replica and
/// reduces the records in replica order afterwards, so both policies and any
/// thread count produce bit-identical results.
enum class Execution { Serial, Parallel };

/// Calls body(r) for r = 0..reps-1. The first exception thrown by any
/// replica is rethrown on the calling thread after the loop.
void for_each_replica(Execution exec, std::int64_t reps,
                      const std::function<void(std::int64_t)>& body);

/// Sets the OpenMP thread count used by Execution::Parallel (<= 0 keeps the
/// runtime default).
void set_thread_count(int threads);

int max_thread_count();

}  // namespace lpp
