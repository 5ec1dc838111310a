#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace paley {

/// Resolves a requested worker count: 0 means PALEY_THREADS if set, else the
/// hardware concurrency.
unsigned resolve_workers(unsigned requested);

/// Splits [0, count) into contiguous chunks, runs `body(state, begin, end)` on
/// each chunk with a fresh copy of `init`, and folds the per-chunk states left
/// to right with `merge(into, from)`. The chunk layout depends on the worker
/// count, so `merge` must be associative and commutative up to a total-order
/// tie-break for results to be independent of it.
template <class State, class Body, class Merge>
State parallel_reduce(std::uint64_t count, unsigned workers, const State& init, Body body,
                      Merge merge) {
    workers = resolve_workers(workers);
    const std::uint64_t chunks =
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, count));
    std::vector<State> partial(chunks, init);
    auto run = [&](std::uint64_t c) {
        const std::uint64_t begin = count * c / chunks;
        const std::uint64_t end = count * (c + 1) / chunks;
        body(partial[c], begin, end);
    };
    if (chunks == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(chunks);
        for (std::uint64_t c = 0; c < chunks; ++c) pool.emplace_back(run, c);
    }
    State result = std::move(partial[0]);
    for (std::uint64_t c = 1; c < chunks; ++c) merge(result, partial[c]);
    return result;
}

} // namespace paley
