#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace mbslab::detail {

// Runs fn(begin, end) over contiguous chunks of [0, count) on up to `workers`
// threads (0 = hardware concurrency). fn must only touch its own chunk.
template <typename Fn>
void parallel_chunks(std::size_t count, unsigned workers, Fn&& fn) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t threads = std::min<std::size_t>(workers, std::max<std::size_t>(count, 1));
    if (threads <= 1) {
        fn(std::size_t{0}, count);
        return;
    }
    const std::size_t chunk = (count + threads - 1) / threads;
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t begin = 0; begin < count; begin += chunk) {
        const std::size_t end = std::min(count, begin + chunk);
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
}

}  // namespace mbslab::detail
