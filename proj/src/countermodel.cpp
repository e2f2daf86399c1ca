#include "gla/search_kernel.hpp"

#include <bit>
#include <stdexcept>

namespace gla {

SearchResult countermodel_search(const Formula& f, const ConstantSpecification& cs, const SearchConfig& cfg)
{
    cfg.validate();
    if (auto r = validate_cs(cs); !r.ok)
        throw std::invalid_argument("invalid constant specification: " + r.first_error->second);

    const auto deadline = search::Clock::now() + cfg.time_budget;
    const search::Problem p = search::compile(f, cs, cfg.eval_mode, cfg.max_seed);

    SearchResult out;
    out.seeds_truncated = p.seeds_truncated;
    for (int n = 1; n <= cfg.max_worlds; ++n) {
        search::ScanResult r = cfg.parallel ? search::scan_parallel(p, n, deadline) : search::scan_serial(p, n, deadline);
        out.models_examined += r.models;
        out.budget_exceeded = r.budget_exceeded;
        if (r.hit) {
            const auto& fr = search::frames(n)[r.hit->frame];
            KripkeModel m = search::build_model(p, fr, r.hit->valuation, p.seeds[r.hit->seed]);
            const int w = std::countr_zero(static_cast<unsigned>(r.hit->failing));
            out.failing_world = m.worlds[w];

            // the reference evaluator has to agree with the kernel
            std::vector<Formula> sound_for{f};
            for (const auto& e : cs)
                sound_for.push_back(e.assertion());
            const SoundnessReport report = validate_model(m, sound_for, cs);
            if (!report.ok() || failing_world(m, f, cfg.eval_mode) != out.failing_world)
                throw std::logic_error("search kernel and model checker disagree on " + print_formula(f));
            out.model = std::move(m);
            return out;
        }
        if (r.budget_exceeded)
            break;
    }
    return out;
}

} // namespace gla
