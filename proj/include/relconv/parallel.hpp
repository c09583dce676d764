#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <optional>
#include <vector>

#include "relconv/error.hpp"

namespace relconv {

/// Smallest i in [0, count) with pred(i) true, or `count` if there is none.
///
/// Work is handed out in contiguous blocks; a worker abandons blocks that
/// start beyond the best index found so far. Every index below the returned
/// one has been evaluated, so the answer does not depend on `jobs`.
template <class Pred>
std::uint64_t parallel_find_first(std::uint64_t count, unsigned jobs, Pred&& pred) {
    if (count == 0) return 0;
    if (jobs <= 1 || count == 1) {
        for (std::uint64_t i = 0; i < count; ++i)
            if (pred(i)) return i;
        return count;
    }
    const std::uint64_t block = std::max<std::uint64_t>(1, count / (std::uint64_t{jobs} * 16));
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{count};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        try {
            for (;;) {
                const std::uint64_t start = next.fetch_add(block);
                if (start >= count || start >= best.load()) return;
                const std::uint64_t stop = std::min(count, start + block);
                for (std::uint64_t i = start; i < stop && i < best.load(); ++i) {
                    if (pred(i)) {
                        std::uint64_t current = best.load();
                        while (i < current && !best.compare_exchange_weak(current, i)) {
                        }
                        break;
                    }
                }
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            best.store(0);
        }
    };
    {
        std::vector<std::jthread> pool;
        const unsigned n = static_cast<unsigned>(std::min<std::uint64_t>(jobs, count));
        pool.reserve(n);
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
    return best.load();
}

/// Sum of fn(i) over [0, count); the result is independent of `jobs`.
template <class Fn>
std::uint64_t parallel_sum(std::uint64_t count, unsigned jobs, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        std::uint64_t total = 0;
        for (std::uint64_t i = 0; i < count; ++i) total += fn(i);
        return total;
    }
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> total{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        try {
            std::uint64_t local = 0;
            for (std::uint64_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) local += fn(i);
            total.fetch_add(local);
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next.store(count);
        }
    };
    {
        std::vector<std::jthread> pool;
        const unsigned n = static_cast<unsigned>(std::min<std::uint64_t>(jobs, count));
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
    return total.load();
}

/// Runs fn(i) for every i in [0, count); results must be written to
/// per-index slots by the caller.
template <class Fn>
void parallel_for(std::uint64_t count, unsigned jobs, Fn&& fn) {
    parallel_sum(count, jobs, [&](std::uint64_t i) -> std::uint64_t {
        fn(i);
        return 0;
    });
}

/// Ordered backtracking over independent subtrees [0, count).
///
/// run(i, budget) explores subtree i alone and returns an outcome with
/// `found`, `aborted` (its own node count passed `budget`) and `nodes`.
/// Node counts are summed in subtree order up to the first success, so the
/// returned outcome and the BudgetExceeded decision match a sequential run.
template <class Outcome, class Run>
std::optional<Outcome> ordered_subtree_search(std::uint64_t count, unsigned jobs, std::uint64_t budget,
                                              std::uint64_t& nodes, Run&& run) {
    constexpr std::uint64_t window = 1024;
    nodes = 0;
    for (std::uint64_t start = 0; start < count; start += window) {
        const std::uint64_t size = std::min(window, count - start);
        std::vector<Outcome> outcomes(size);
        const std::uint64_t stop = parallel_find_first(size, jobs, [&](std::uint64_t i) {
            outcomes[i] = run(start + i, budget);
            return outcomes[i].found || outcomes[i].aborted;
        });
        for (std::uint64_t i = 0; i < std::min(stop + 1, size); ++i) {
            nodes += outcomes[i].nodes;
            if (nodes > budget) throw BudgetExceeded("search budget of " + std::to_string(budget) + " nodes exhausted");
            if (outcomes[i].found) return std::move(outcomes[i]);
        }
    }
    return std::nullopt;
}

}  // namespace relconv
