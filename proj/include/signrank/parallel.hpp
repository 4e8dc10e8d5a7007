#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace signrank {

// candidate value at an index; argmin ties break toward the smaller index
struct MinHit {
    int value;
    std::size_t index;

    bool better_than(const MinHit& o) const {
        return value < o.value || (value == o.value && index < o.index);
    }
};

inline constexpr std::size_t kScanChunk = 2048;

// argmin of f over [0, n) where f(i) -> optional<int> (nullopt = no candidate).
// Both modes scan whole chunks and stop once the best value so far is <= stop_at,
// so the serial reference and the OpenMP kernel return identical results.
template <class F>
std::optional<MinHit> argmin_indexed(std::size_t n, int stop_at, bool parallel, F&& f) {
    std::optional<MinHit> best;
    for (std::size_t chunk = 0; chunk < n; chunk += kScanChunk) {
        std::size_t end = std::min(n, chunk + kScanChunk);
        if (parallel) {
#ifdef _OPENMP
#pragma omp parallel
            {
                std::optional<MinHit> local;
#pragma omp for nowait
                for (long long i = static_cast<long long>(chunk);
                     i < static_cast<long long>(end); ++i) {
                    auto v = f(static_cast<std::size_t>(i));
                    if (!v) continue;
                    MinHit hit{*v, static_cast<std::size_t>(i)};
                    if (!local || hit.better_than(*local)) local = hit;
                }
#pragma omp critical
                if (local && (!best || local->better_than(*best))) best = local;
            }
#else
            parallel = false;
#endif
        }
        if (!parallel) {
            for (std::size_t i = chunk; i < end; ++i) {
                auto v = f(i);
                if (!v) continue;
                MinHit hit{*v, i};
                if (!best || hit.better_than(*best)) best = hit;
            }
        }
        if (best && best->value <= stop_at) break;
    }
    return best;
}

// runs g(i) for every i in [0, n); g writes only to its own slot
template <class G>
void for_each_index(std::size_t n, bool parallel, G&& g) {
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            g(static_cast<std::size_t>(i));
        return;
#endif
    }
    for (std::size_t i = 0; i < n; ++i) g(i);
}

}  // namespace signrank
