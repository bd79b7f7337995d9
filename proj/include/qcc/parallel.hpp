#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qcc::detail {

// Worker count: explicit request, else QCC_THREADS, else hardware concurrency.
uint32_t resolve_workers(uint32_t requested);

// Runs f(chunk_index, begin, end) over [0, total) split into fixed-size
// chunks. Chunk boundaries depend only on (total, chunk_size), never on the
// worker count, so order-sensitive reductions done per chunk and folded in
// chunk order give bit-identical results for any number of workers.
template <typename F>
void parallel_chunks(uint64_t total, uint64_t chunk_size, uint32_t workers, F&& f) {
    const uint64_t n_chunks = (total + chunk_size - 1) / chunk_size;
    workers = resolve_workers(workers);
    if (workers <= 1 || n_chunks <= 1) {
        for (uint64_t c = 0; c < n_chunks; ++c)
            f(c, c * chunk_size, std::min(total, (c + 1) * chunk_size));
        return;
    }
    std::atomic<uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
            if (c >= n_chunks) return;
            try {
                f(c, c * chunk_size, std::min(total, (c + 1) * chunk_size));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const uint32_t spawn = static_cast<uint32_t>(
        std::min<uint64_t>(workers, n_chunks));
    pool.reserve(spawn);
    for (uint32_t t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace qcc::detail
