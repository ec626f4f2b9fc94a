#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <vector>

namespace ghg {

// Worker count: GHG_THREADS if set to a positive integer, else the hardware
// concurrency, never more than n_tasks.
unsigned worker_count(std::size_t n_tasks);

// Runs f(0..n-1) on up to worker_count(n) threads. Results keep index order;
// the exception of the lowest failing index is rethrown after all tasks end.
template <class R>
std::vector<R> parallel_map(std::size_t n, const std::function<R(std::size_t)>& f);

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

template <class R>
std::vector<R> parallel_map(std::size_t n, const std::function<R(std::size_t)>& f) {
    std::vector<std::optional<R>> slots(n);
    parallel_for(n, [&](std::size_t i) { slots[i].emplace(f(i)); });
    std::vector<R> out;
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace ghg
