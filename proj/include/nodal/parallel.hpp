#ifndef NODAL_PARALLEL_HPP
#define NODAL_PARALLEL_HPP

#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace nodal {

// Global worker count.  Resolution order: set_thread_count() override,
// then NODAL_LAB_THREADS, then hardware concurrency.
int thread_count();
void set_thread_count(int n);

// True while inside a parallel_for worker; nested calls run sequentially.
bool in_parallel_region();

// Runs fn(i) for i in [0,n).  Work is split into contiguous blocks, one per
// worker, so results written to slot i never race.  Any reduction over the
// results must be done by the caller in index order.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

} // namespace nodal

#endif
