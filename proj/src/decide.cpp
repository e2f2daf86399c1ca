#include "gla/decide.hpp"

#include <stdexcept>

namespace gla {

Verdict decide(const Formula& f, const ConstantSpecification& cs, const SearchConfig& cfg)
{
    cfg.validate();
    if (auto r = validate_cs(cs); !r.ok)
        throw std::invalid_argument("invalid constant specification: " + r.first_error->second);

    // GL theorems hold in every model, sound or not, so no search can refute
    // them.
    if (!mentions_proofs(f))
        if (auto v = decide_gl(f); std::holds_alternative<Theorem>(v))
            return v;

    SearchResult search;
    bool too_wide = false;
    try {
        search = countermodel_search(f, cs, cfg);
    } catch (const std::length_error&) {
        too_wide = true;
    }
    if (search.model)
        return NonTheorem{std::move(*search.model), search.failing_world};

    if (!cfg.corpus_dir.empty())
        if (auto hit = find_in_corpus(f, cs, cfg.corpus_dir))
            return Theorem{"fixture:" + hit->name, std::move(hit->derivation)};

    if (auto d = saturate(f, cs, cfg.saturation_depth))
        return Theorem{"saturation", std::move(d)};

    std::string bound;
    if (too_wide)
        bound = "proof assertions";
    else if (search.budget_exceeded)
        bound = "time_budget";
    else if (search.seeds_truncated)
        bound = "max_seed=" + std::to_string(cfg.max_seed);
    else
        bound = "max_worlds=" + std::to_string(cfg.max_worlds);
    return Unknown{bound + ", saturation_depth=" + std::to_string(cfg.saturation_depth)};
}

} // namespace gla
