#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace casim {

/// Runs body(acc, i) for i in [0, n) split into contiguous blocks across
/// `threads` workers, then merges the per-worker accumulators in worker
/// order with merge(total, acc). Results are independent of the thread
/// count as long as the merge operation is commutative-associative and
/// body derives all randomness from the index i.
template <class Acc, class Body, class Merge>
Acc parallel_accumulate(std::uint64_t n, unsigned threads, Body body, Merge merge) {
    if (threads < 1) threads = 1;
    if (threads == 1 || n < 2) {
        Acc acc{};
        for (std::uint64_t i = 0; i < n; ++i) body(acc, i);
        return acc;
    }
    if (threads > n) threads = static_cast<unsigned>(n);
    std::vector<Acc> accs(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        const std::uint64_t lo = n * w / threads;
        const std::uint64_t hi = n * (w + 1) / threads;
        pool.emplace_back([&, w, lo, hi] {
            for (std::uint64_t i = lo; i < hi; ++i) body(accs[w], i);
        });
    }
    for (auto& t : pool) t.join();
    Acc total{};
    for (auto& a : accs) merge(total, a);
    return total;
}

}  // namespace casim
