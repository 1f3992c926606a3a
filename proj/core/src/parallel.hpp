#pragma once

// Internal helper: run fn(begin, end) over contiguous chunks of [0, count)
// on `threads` std::threads. Chunk boundaries depend only on (count,
// threads), and callers write to disjoint preallocated slots, so results
// are identical for every thread count.

#include <cstdint>
#include <thread>
#include <vector>

namespace ppdiag::detail {

inline unsigned resolve_threads(unsigned threads) {
    if (threads != 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

template <class Fn>
void parallel_chunks(uint64_t count, unsigned threads, Fn&& fn) {
    threads = resolve_threads(threads);
    if (threads > count) threads = static_cast<unsigned>(count ? count : 1);
    if (threads <= 1 || count == 0) {
        fn(uint64_t{0}, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    uint64_t chunk = count / threads;
    uint64_t rem = count % threads;
    uint64_t begin = 0;
    for (unsigned t = 0; t < threads; ++t) {
        uint64_t end = begin + chunk + (t < rem ? 1 : 0);
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
        begin = end;
    }
    for (auto& th : pool) th.join();
}

} // namespace ppdiag::detail
