#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace qtree::detail {

/// Runs fn(begin, end) over contiguous slices of [0, total). Each slice is
/// handled by exactly one worker, so callers may write disjoint output
/// ranges without synchronization.
template <typename Fn>
void for_each_chunk(std::uint64_t total, unsigned threads, Fn&& fn) {
    threads = std::max(1u, threads);
    if (threads == 1 || total < 2 * threads) {
        fn(std::uint64_t{0}, total);
        return;
    }
    const std::uint64_t step = (total + threads - 1) / threads;
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (std::uint64_t begin = 0; begin < total; begin += step) {
        const std::uint64_t end = std::min(total, begin + step);
        workers.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
}

/// Sum of fn(begin, end) over the chunks; integer addition is associative,
/// so the result does not depend on `threads`.
template <typename Fn>
std::uint64_t sum_chunks(std::uint64_t total, unsigned threads, Fn&& fn) {
    threads = std::max(1u, threads);
    if (threads == 1 || total < 2 * threads) return fn(std::uint64_t{0}, total);
    const std::uint64_t step = (total + threads - 1) / threads;
    std::vector<std::uint64_t> partial((total + step - 1) / step, 0);
    {
        std::vector<std::jthread> workers;
        for (std::uint64_t c = 0; c < partial.size(); ++c) {
            const std::uint64_t begin = c * step;
            const std::uint64_t end = std::min(total, begin + step);
            workers.emplace_back([&, c, begin, end] { partial[c] = fn(begin, end); });
        }
    }
    std::uint64_t sum = 0;
    for (auto v : partial) sum += v;
    return sum;
}

}  // namespace qtree::detail
