#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace qlink {

/// Thread count resolution: explicit request, else the QLINK_THREADS
/// environment variable, else 1.
inline int resolve_threads(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("QLINK_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 1;
}

/// Splits [0, count) into contiguous chunks, runs `work(begin, end,
/// slot)` on each in parallel, then folds the per-chunk results in slot
/// order.  Exact scalar types make the fold independent of the thread
/// count, so results are bit-identical for any parallelism.
template <typename R, typename Work, typename Fold>
R parallel_chunks(unsigned long long count, int threads, R init, Work&& work, Fold&& fold) {
    threads = resolve_threads(threads);
    if (count == 0) return init;
    if (static_cast<unsigned long long>(threads) > count)
        threads = static_cast<int>(count);
    std::vector<R> partial(threads, init);
    std::vector<std::thread> pool;
    const unsigned long long chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        unsigned long long b = t * chunk;
        unsigned long long e = std::min(count, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&, b, e, t]() { partial[t] = work(b, e, t); });
    }
    for (auto& th : pool) th.join();
    R acc = std::move(init);
    for (int t = 0; t < threads; ++t) acc = fold(std::move(acc), std::move(partial[t]));
    return acc;
}

} // namespace qlink
