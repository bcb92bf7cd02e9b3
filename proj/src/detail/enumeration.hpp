#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace fpcodes::detail {

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSaturated / b) return kSaturated;
    return a * b;
}

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return (a > kSaturated - b) ? kSaturated : a + b;
}

// C(n, k), saturating.
inline std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // r * (n - k + i) / i is integral at every step
        const std::uint64_t factor = n - k + i;
        if (r > kSaturated / factor) return kSaturated;
        r = r * factor / i;
    }
    return r;
}

// Σ_{j=1..min(t,n)} C(n, j): non-empty subsets of size at most t, saturating.
inline std::uint64_t subset_count(std::uint64_t n, unsigned t) {
    std::uint64_t total = 0;
    const std::uint64_t kmax = std::min<std::uint64_t>(t, n);
    for (std::uint64_t k = 1; k <= kmax; ++k) total = sat_add(total, binom(n, k));
    return total;
}

// Lexicographically rank-th k-combination of {0, ..., n-1}.
inline void unrank_combination(std::uint64_t n, unsigned k, std::uint64_t rank,
                               std::vector<std::size_t>& out) {
    out.clear();
    std::uint64_t x = 0;
    for (unsigned slot = k; slot >= 1; --slot) {
        while (true) {
            const std::uint64_t remaining = binom(n - x - 1, slot - 1);
            if (rank < remaining) break;
            rank -= remaining;
            ++x;
        }
        out.push_back(static_cast<std::size_t>(x));
        ++x;
    }
}

// Subsets ordered by ascending size, then lexicographic; rank ∈ [0, subset_count(n, t)).
inline void unrank_subset(std::uint64_t n, unsigned t, std::uint64_t rank,
                          std::vector<std::size_t>& out) {
    const std::uint64_t kmax = std::min<std::uint64_t>(t, n);
    for (std::uint64_t k = 1; k <= kmax; ++k) {
        const std::uint64_t block = binom(n, k);
        if (rank < block) {
            unrank_combination(n, static_cast<unsigned>(k), rank, out);
            return;
        }
        rank -= block;
    }
    out.clear(); // rank out of range; callers stay within subset_count
}

// Evaluates fn(i) for i in [0, count) and returns the violation with the
// smallest index, if any. fn must be safe to call concurrently; with jobs ≤ 1
// the scan is sequential with early exit. Deterministic: parallel runs return
// the same (index, value) as the sequential scan.
template <typename W, typename Fn>
std::optional<std::pair<std::uint64_t, W>> scan_first(std::uint64_t count, unsigned jobs, Fn&& fn) {
    if (count == 0) return std::nullopt;
    if (jobs <= 1 || count < 256) {
        for (std::uint64_t i = 0; i < count; ++i) {
            if (auto w = fn(i)) return std::make_pair(i, std::move(*w));
        }
        return std::nullopt;
    }

    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{kSaturated};
    std::mutex mu;
    std::optional<std::pair<std::uint64_t, W>> result;

    const std::uint64_t chunk =
        std::max<std::uint64_t>(1, count / (std::uint64_t{jobs} * 64));

    auto worker = [&] {
        for (;;) {
            const std::uint64_t start = next.fetch_add(chunk);
            if (start >= count || start >= best.load(std::memory_order_acquire)) return;
            const std::uint64_t end = std::min(count, start + chunk);
            for (std::uint64_t i = start;
                 i < end && i < best.load(std::memory_order_acquire); ++i) {
                if (auto w = fn(i)) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!result || i < result->first) {
                        result = std::make_pair(i, std::move(*w));
                        best.store(i, std::memory_order_release);
                    }
                    break; // the rest of this chunk has larger indices
                }
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(jobs - 1);
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return result;
}

} // namespace fpcodes::detail
