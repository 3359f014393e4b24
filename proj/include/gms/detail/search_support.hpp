#pragma once

// Shared plumbing for the search-based solvers.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

#include "gms/element.hpp"
#include "gms/solve.hpp"

namespace gms::detail {

struct LayerSetKey {
    std::size_t layer;
    ElementSet set;

    bool operator==(const LayerSetKey&) const = default;
};

struct LayerSetHash {
    std::size_t operator()(const LayerSetKey& key) const noexcept {
        std::size_t h = std::hash<std::size_t>{}(key.layer);
        for (const Element& e : key.set) {
            std::size_t x = (static_cast<std::size_t>(e.kind) << 62) ^ (static_cast<std::size_t>(e.u) << 32) ^
                            (static_cast<std::size_t>(e.v) << 1) ^ static_cast<std::size_t>(e.op);
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

/// Stop conditions polled by a search: external cancel flag, deadline, and a task limit
/// (a lower-indexed task already succeeded).
class StopToken {
public:
    StopToken(const SolveOptions& opt, const std::atomic<std::size_t>* best, std::size_t task)
        : opt_(opt), best_(best), task_(task) {}

    bool stop() {
        if (stopped_)
            return true;
        if (best_ && best_->load(std::memory_order_relaxed) < task_)
            return stopped_ = true;
        if (opt_.cancel && opt_.cancel->load(std::memory_order_relaxed))
            return timed_out_ = stopped_ = true;
        if (opt_.deadline && (++polls_ & 0xff) == 0 && Clock::now() >= *opt_.deadline)
            return timed_out_ = stopped_ = true;
        return false;
    }

    bool timed_out() const { return timed_out_; }

private:
    const SolveOptions& opt_;
    const std::atomic<std::size_t>* best_;
    std::size_t task_;
    unsigned polls_ = 0;
    bool stopped_ = false;
    bool timed_out_ = false;
};

/// Runs run_task(i, best) for i = 0..count-1 on `threads` workers. Tasks are claimed in index
/// order; once task j reports success, tasks above j are skipped and `best` tells running ones
/// to stop. Returns the lowest successful index, or count when none succeeded.
inline std::size_t run_first_success(std::size_t count, unsigned threads,
                                     const std::function<bool(std::size_t, const std::atomic<std::size_t>&)>& run_task) {
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{count};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count || i > best.load())
                return;
            if (run_task(i, best)) {
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    return best.load();
}

} // namespace gms::detail
