#include "gla/semantics.hpp"

namespace gla {

EvidenceRelation::EvidenceRelation(const std::set<ProofPair>& seed)
{
    for (const auto& [t, f] : seed)
        seed_[t].insert(f);
}

const std::set<Formula>& EvidenceRelation::evidenced(const ProofTerm& t)
{
    if (auto it = memo_.find(t); it != memo_.end())
        return it->second;

    std::set<Formula> out;
    if (auto it = seed_.find(t); it != seed_.end())
        out = it->second;

    switch (t.kind()) {
    case ProofTerm::Kind::App: {
        const std::set<Formula>& fun = evidenced(t.left());
        const std::set<Formula>& arg = evidenced(t.right());
        for (const Formula& f : fun)
            if (f.kind() == Formula::Kind::Imp && arg.count(f.left()))
                out.insert(f.right());
        break;
    }
    case ProofTerm::Kind::Sum: {
        const std::set<Formula>& l = evidenced(t.left());
        const std::set<Formula>& r = evidenced(t.right());
        out.insert(l.begin(), l.end());
        out.insert(r.begin(), r.end());
        break;
    }
    case ProofTerm::Kind::Bang:
        for (const Formula& f : evidenced(t.inner()))
            out.insert(Formula::proof(t.inner(), f));
        break;
    default:
        break;
    }
    return memo_.emplace(t, std::move(out)).first->second;
}

bool evidence_holds(const std::set<ProofPair>& seed, const ProofTerm& t, const Formula& f)
{
    return EvidenceRelation(seed).holds(t, f);
}

} // namespace gla
