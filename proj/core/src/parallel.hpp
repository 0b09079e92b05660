#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace dicke::detail {

// Runs body(i) for i in [0, n) on up to `jobs` threads with a static
// interleaved partition. If any call throws, the exception of the smallest
// failing index is rethrown after all workers finish.
template <typename Body>
void parallel_for(std::size_t n, int jobs, Body&& body) {
    const std::size_t workers =
        std::min<std::size_t>(n, static_cast<std::size_t>(std::max(jobs, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }

    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::size_t> error_index(workers, n);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < n; i += workers) {
                    try {
                        body(i);
                    } catch (...) {
                        errors[w] = std::current_exception();
                        error_index[w] = i;
                        return;
                    }
                }
            });
        }
    }

    std::size_t first = workers;
    for (std::size_t w = 0; w < workers; ++w) {
        if (errors[w] && (first == workers || error_index[w] < error_index[first])) first = w;
    }
    if (first != workers) std::rethrow_exception(errors[first]);
}

}  // namespace dicke::detail
