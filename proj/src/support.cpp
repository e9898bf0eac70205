#include "support.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

namespace holopack {

namespace {
std::atomic<int> g_worker_cap{0};
}

void set_worker_cap(int n) { g_worker_cap.store(n < 0 ? 0 : n); }

int worker_cap() {
    int cap = g_worker_cap.load();
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (cap <= 0 || cap > hw) cap = hw;
    return cap;
}

void run_chunks(std::size_t n_chunks, const std::function<void(std::size_t)>& chunk_fn) {
    if (n_chunks == 0) return;
    std::size_t n_threads = std::min<std::size_t>(worker_cap(), n_chunks);
    if (n_threads <= 1) {
        for (std::size_t i = 0; i < n_chunks; ++i) chunk_fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (std::size_t t = 0; t < n_threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n_chunks || failed.load()) return;
                try {
                    chunk_fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

double parallel_sum(std::size_t n, std::size_t chunk_size, const std::function<double(std::size_t)>& term) {
    if (n == 0) return 0.0;
    if (chunk_size == 0) chunk_size = 1;
    std::size_t n_chunks = (n + chunk_size - 1) / chunk_size;
    std::vector<double> partial(n_chunks, 0.0);
    run_chunks(n_chunks, [&](std::size_t c) {
        CompensatedSum<double> acc;
        std::size_t lo = c * chunk_size;
        std::size_t hi = std::min(n, lo + chunk_size);
        for (std::size_t i = lo; i < hi; ++i) acc.add(term(i));
        partial[c] = acc.value();
    });
    CompensatedSum<double> total;
    for (double p : partial) total.add(p);
    return total.value();
}

} // namespace holopack
