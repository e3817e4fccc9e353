#include "nodal/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

namespace nodal {

namespace {

std::atomic<int> g_thread_count{0};
thread_local bool t_in_parallel = false;

int default_thread_count() {
    if (const char* env = std::getenv("NODAL_LAB_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

} // namespace

int thread_count() {
    const int n = g_thread_count.load(std::memory_order_relaxed);
    return n >= 1 ? n : default_thread_count();
}

void set_thread_count(int n) { g_thread_count.store(n, std::memory_order_relaxed); }

bool in_parallel_region() { return t_in_parallel; }

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn) {
    if (n <= 0) return;
    const int workers = std::min<std::int64_t>(thread_count(), n);
    if (workers <= 1 || t_in_parallel) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }

    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::atomic<bool> failed{false};
    std::atomic<int> error_guard{0};

    for (int w = 0; w < workers; ++w) {
        const std::int64_t lo = n * w / workers;
        const std::int64_t hi = n * (w + 1) / workers;
        pool.emplace_back([&, lo, hi]() {
            t_in_parallel = true;
            try {
                for (std::int64_t i = lo; i < hi && !failed.load(std::memory_order_relaxed); ++i)
                    fn(i);
            } catch (...) {
                if (error_guard.fetch_add(1) == 0) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
            t_in_parallel = false;
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace nodal
