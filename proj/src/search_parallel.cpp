#include "gla/search_kernel.hpp"

#include <atomic>
#include <limits>

namespace gla::search {

// Same enumeration as scan_serial, with (frame, valuation) items spread over
// threads. Items past the best hit so far are skipped; every item before it
// still runs, so the least hit wins no matter the schedule.
ScanResult scan_parallel(const Problem& p, int worlds, Clock::time_point deadline)
{
    ScanResult out;
    const auto& fs = frames(worlds);
    const int bits = static_cast<int>(p.letters.size()) * worlds;
    if (bits > 40) {
        out.budget_exceeded = true;
        return out;
    }
    const std::uint64_t valuations = std::uint64_t{1} << bits;
    const std::int64_t items = static_cast<std::int64_t>(fs.size() * valuations);

    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
    std::atomic<bool> late{false};
    Hit best_hit;
    std::uint64_t models = 0;

#pragma omp parallel reduction(+ : models)
    {
        std::vector<Mask> scratch;
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t i = 0; i < items; ++i) {
            const auto item = static_cast<std::uint64_t>(i);
            if (item > best.load(std::memory_order_relaxed) || late.load(std::memory_order_relaxed))
                continue;
            if ((item & 255u) == 0 && Clock::now() > deadline) {
                late = true;
                continue;
            }
            const std::size_t f = item / valuations;
            const std::uint64_t v = item % valuations;
            for (std::size_t s = 0; s < p.seeds.size(); ++s) {
                ++models;
                if (Mask fail = evaluate(p, fs[f], v, p.seeds[s], scratch)) {
#pragma omp critical(gla_best_hit)
                    {
                        if (item < best.load()) {
                            best = item;
                            best_hit = Hit{f, v, s, fail};
                        }
                    }
                    break;
                }
            }
        }
    }

    out.models = models;
    out.budget_exceeded = late.load();
    if (best.load() != std::numeric_limits<std::uint64_t>::max())
        out.hit = best_hit;
    return out;
}

} // namespace gla::search
