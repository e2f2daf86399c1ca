#include "gla/calculus.hpp"

namespace gla {

std::set<Formula> proof_table(const Derivation& k, const ConstantSpecification& cs)
{
    if (!k.hypotheses.empty())
        throw InvalidProofCode("proof codes must be hypothesis-free");
    CheckReport report = check_derivation(k, cs);
    if (!report.ok)
        throw InvalidProofCode("step " + std::to_string(report.first_error->first) + ": "
                               + report.first_error->second);
    std::set<Formula> table;
    for (const Step& s : k.steps)
        table.insert(s.formula);
    return table;
}

Derivation conjoin(const Derivation& k, const Derivation& l)
{
    Derivation n;
    n.mode = k.mode == l.mode ? k.mode : LogicMode::GLA;
    n.hypotheses = k.hypotheses;
    n.hypotheses.insert(n.hypotheses.end(), l.hypotheses.begin(), l.hypotheses.end());
    n.steps = k.steps;
    const std::size_t offset = k.steps.size();
    for (Step s : l.steps) {
        for (std::size_t& r : s.just.refs)
            r += offset;
        if (s.just.rule == Rule::Hyp)
            s.just.hypothesis += k.hypotheses.size();
        n.steps.push_back(std::move(s));
    }
    return n;
}

Derivation substitute(const Derivation& d, const PropositionMap& props, const VariableMap& vars)
{
    Derivation out;
    out.mode = d.mode;
    for (const Formula& h : d.hypotheses)
        out.hypotheses.push_back(substitute(h, props, vars));
    for (const Step& s : d.steps)
        out.steps.push_back({substitute(s.formula, props, vars), s.just});
    return out;
}

ConstantSpecification substitute(const ConstantSpecification& cs, const PropositionMap& props, const VariableMap& vars)
{
    ConstantSpecification out;
    for (const auto& e : cs)
        out.add(e.constant, substitute(e.axiom, props, vars));
    return out;
}

} // namespace gla
