#include "gla/search_kernel.hpp"

namespace gla::search {

namespace {

// letters*n valuation bits; past this the space is out of reach anyway
constexpr int max_valuation_bits = 40;

} // namespace

ScanResult scan_serial(const Problem& p, int worlds, Clock::time_point deadline)
{
    ScanResult out;
    const auto& fs = frames(worlds);
    const int bits = static_cast<int>(p.letters.size()) * worlds;
    if (bits > max_valuation_bits) {
        out.budget_exceeded = true;
        return out;
    }
    const std::uint64_t valuations = std::uint64_t{1} << bits;
    std::vector<Mask> scratch;
    std::uint64_t item = 0;
    for (std::size_t f = 0; f < fs.size(); ++f) {
        for (std::uint64_t v = 0; v < valuations; ++v, ++item) {
            if ((item & 255u) == 0 && Clock::now() > deadline) {
                out.budget_exceeded = true;
                return out;
            }
            for (std::size_t s = 0; s < p.seeds.size(); ++s) {
                ++out.models;
                if (Mask fail = evaluate(p, fs[f], v, p.seeds[s], scratch)) {
                    out.hit = Hit{f, v, s, fail};
                    return out;
                }
            }
        }
    }
    return out;
}

} // namespace gla::search
