#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace collatz {

inline unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Folds fn over {begin, begin+stride, ...} < end in parallel, one State per
// chunk, merged in chunk order so results are deterministic.
template <typename State, typename Fn, typename Merge>
State parallel_scan(std::uint64_t begin, std::uint64_t end, std::uint64_t stride,
                    unsigned threads, Fn fn, Merge merge) {
    threads = resolve_threads(threads);
    if (begin >= end) return State{};
    const std::uint64_t items = (end - begin + stride - 1) / stride;
    if (threads > items) threads = static_cast<unsigned>(items);

    std::vector<State> partials(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::uint64_t per_chunk = items / threads;
    const std::uint64_t extra = items % threads;

    std::uint64_t item_lo = 0;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t item_hi = item_lo + per_chunk + (t < extra ? 1 : 0);
        const std::uint64_t lo = begin + item_lo * stride;
        const std::uint64_t hi = begin + item_hi * stride;
        pool.emplace_back([&, t, lo, hi, stride] {
            State local{};
            for (std::uint64_t v = lo; v < hi && v >= lo; v += stride) {
                if (v >= end) break;
                fn(local, v);
            }
            partials[t] = std::move(local);
        });
        item_lo = item_hi;
    }
    for (auto& th : pool) th.join();

    State result = std::move(partials[0]);
    for (unsigned t = 1; t < threads; ++t) merge(result, partials[t]);
    return result;
}

}  // namespace collatz
