#include "rpmsim/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rpmsim {

void parallel_for(const std::size_t count, const unsigned workers,
                  const std::function<void(std::size_t)>& body) {
    if (count == 0) return;
    if (workers <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto drain = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
                next.store(count, std::memory_order_relaxed);
                return;
            }
        }
    };
    const std::size_t thread_count =
        std::min<std::size_t>(workers, count);
    std::vector<std::thread> pool;
    pool.reserve(thread_count - 1);
    for (std::size_t t = 0; t + 1 < thread_count; ++t) pool.emplace_back(drain);
    drain();
    for (std::thread& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace rpmsim
