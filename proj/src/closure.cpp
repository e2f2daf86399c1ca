#include "gla/decide.hpp"

#include <stdexcept>

namespace gla {

ClosureSet closure_set(const Formula& f, const ConstantSpecification& cs)
{
    ClosureSet out;
    auto add = [&](const Formula& g) {
        Closure c = subformula_closure(g);
        out.formulas.insert(c.formulas.begin(), c.formulas.end());
    };
    std::vector<Formula> roots{f};
    for (const auto& e : cs)
        roots.push_back(e.assertion());
    for (const Formula& r : roots) {
        add(r);
        // the members of H(r) only add the implication itself
        for (const Formula& h : h_set(r))
            add(h);
    }
    for (const Formula& g : out.formulas) {
        if (g.kind() == Formula::Kind::Proof)
            out.proof_pairs.insert({g.term(), g.body()});
        else if (g.kind() == Formula::Kind::Atom)
            out.letters.insert(g.name());
    }
    return out;
}

void SearchConfig::validate() const
{
    if (max_worlds < 1 || max_worlds > 6)
        throw std::invalid_argument("max_worlds must be between 1 and 6");
    if (max_seed < 1 || max_seed > 64)
        throw std::invalid_argument("max_seed must be between 1 and 64");
    if (saturation_depth < 1)
        throw std::invalid_argument("saturation_depth must be positive");
    if (time_budget.count() <= 0)
        throw std::invalid_argument("time_budget must be positive");
}

} // namespace gla
