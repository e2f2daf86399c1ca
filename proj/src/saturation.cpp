#include "gla/decide.hpp"

#include <algorithm>

namespace gla {

namespace {

class Saturator {
public:
    explicit Saturator(const ConstantSpecification& cs) : b_(LogicMode::GLA)
    {
        for (const auto& e : cs)
            note(b_.cs(e.constant, e.axiom));
    }

    void axiom(const Formula& f, SchemaId id)
    {
        if (!b_.find(f))
            note(b_.axiom(f, id));
    }

    bool derived(const Formula& f) const { return b_.find(f).has_value(); }

    bool entails(const Formula& f) const { return propositionally_entails(premises_, f); }

    std::size_t taut(const Formula& f)
    {
        if (auto line = b_.find(f))
            return *line;
        return note(b_.taut(f, lines_));
    }

    std::size_t nec(std::size_t line) { return note(b_.nec(line)); }
    std::size_t refl(std::size_t line) { return note(b_.refl(line)); }

    const Formula& formula(std::size_t line) const { return b_.formula(line); }
    std::vector<std::size_t> lines() const { return lines_; }
    Derivation take() { return b_.take(); }

private:
    std::size_t note(std::size_t line)
    {
        if (std::find(lines_.begin(), lines_.end(), line) == lines_.end()) {
            lines_.push_back(line);
            premises_.push_back(b_.formula(line));
        }
        return line;
    }

    DerivationBuilder b_;
    std::vector<std::size_t> lines_;
    std::vector<Formula> premises_;
};

} // namespace

std::optional<Derivation> saturate(const Formula& goal, const ConstantSpecification& cs, int depth)
{
    using K = Formula::Kind;
    const ClosureSet cl = closure_set(goal, cs);

    // closure pairs plus one layer of ! and *
    std::set<ProofPair> pairs = cl.proof_pairs;
    for (const auto& [t, a] : cl.proof_pairs)
        pairs.insert({ProofTerm::bang(t), Formula::proof(t, a)});
    for (const auto& [s, ab] : cl.proof_pairs)
        if (ab.kind() == K::Imp)
            for (const auto& [t, a] : cl.proof_pairs)
                if (a == ab.left())
                    pairs.insert({ProofTerm::app(s, t), ab.right()});

    Saturator sat(cs);
    for (const Formula& f : cl.formulas) {
        if (f.kind() != K::Box)
            continue;
        const Formula& x = f.body();
        sat.axiom(Formula::imp(f, Formula::box(f)), SchemaId::GL2);
        if (x.kind() == K::Imp) {
            sat.axiom(Formula::imp(f, Formula::imp(Formula::box(x.left()), Formula::box(x.right()))), SchemaId::GL1);
            if (x.left().kind() == K::Box && x.left().body() == x.right())
                sat.axiom(Formula::imp(f, x.left()), SchemaId::GL3);
        }
    }
    for (const auto& [t, a] : pairs) {
        const Formula ta = Formula::proof(t, a);
        sat.axiom(Formula::imp(ta, Formula::proof(ProofTerm::bang(t), ta)), SchemaId::LP2);
        sat.axiom(Formula::imp(ta, a), SchemaId::LP4);
        sat.axiom(Formula::imp(ta, Formula::box(a)), SchemaId::C1);
        sat.axiom(Formula::imp(Formula::neg(ta), Formula::box(Formula::neg(ta))), SchemaId::C2);
        if (a.kind() == K::Box)
            sat.axiom(Formula::imp(ta, a.body()), SchemaId::C3);
        if (t.kind() == ProofTerm::Kind::Sum) {
            sat.axiom(Formula::imp(Formula::proof(t.left(), a), ta), SchemaId::LP3);
            sat.axiom(Formula::imp(Formula::proof(t.right(), a), ta), SchemaId::LP3);
        }
        if (a.kind() == K::Imp)
            for (const auto& [u, b] : pairs)
                if (b == a.left())
                    sat.axiom(Formula::imp(ta, Formula::imp(Formula::proof(u, b),
                                                            Formula::proof(ProofTerm::app(t, u), a.right()))),
                              SchemaId::LP1);
    }

    auto finish = [&](const Formula& f) -> std::optional<Derivation> {
        sat.taut(f);
        Derivation d = sat.take();
        // the goal has to be the last line
        while (d.steps.back().formula != f)
            d.steps.pop_back();
        if (!check_derivation(d, cs, {.allow_taut = true}).ok)
            return std::nullopt;
        return d;
    };

    for (int round = 0; round < depth; ++round) {
        if (sat.entails(goal))
            return finish(goal);
        bool grew = false;
        for (const Formula& f : cl.formulas) {
            if (f.kind() != K::Box)
                continue;
            // Nec towards []X, Refl towards X
            if (!sat.derived(f) && sat.entails(f.body())) {
                sat.nec(sat.taut(f.body()));
                grew = true;
            }
            if (!sat.derived(f.body()) && sat.entails(f)) {
                sat.refl(sat.taut(f));
                grew = true;
            }
        }
        if (!grew)
            break;
    }
    if (sat.entails(goal))
        return finish(goal);
    return std::nullopt;
}

} // namespace gla
