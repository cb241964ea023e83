#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace goldbct {

/// 0 means one worker per hardware thread.
inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Split [0, count) into contiguous chunks and run `body(begin, end, acc)` for
/// each on its own thread, every chunk starting from a copy of `init`.
///
/// Returns the accumulators in chunk order. Chunk boundaries depend only on
/// `count` and `threads`; callers merge by summation so the result is the
/// same for any worker count. The first exception thrown by a worker is
/// rethrown after all workers join.
template <class Acc, class Body>
std::vector<Acc> parallel_chunks(std::uint64_t count, unsigned threads, const Acc& init, Body body) {
    const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_threads(threads), count));
    std::vector<Acc> accs(workers, init);
    if (workers == 1) {
        body(std::uint64_t{0}, count, accs[0]);
        return accs;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t begin = count * w / workers;
        const std::uint64_t end = count * (w + 1) / workers;
        pool.emplace_back([&, w, begin, end] {
            try {
                body(begin, end, accs[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return accs;
}

}  // namespace goldbct
