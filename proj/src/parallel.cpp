#include "ghg/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

namespace ghg {

unsigned worker_count(std::size_t n_tasks) {
    unsigned w = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("GHG_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) w = static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(w, n_tasks)));
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
    if (n == 0) return;
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned w = worker_count(n);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < w; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace ghg
