#include "gla/internalize.hpp"

#include <map>

namespace gla {

FreshNames::FreshNames(std::string prefix, std::size_t next)
    : prefix_(std::move(prefix)), next_(next)
{
    // the prefix has to produce constant names
    ProofTerm::constant(prefix_ + "1");
}

void FreshNames::reserve(const ProofTerm& t)
{
    switch (t.kind()) {
    case ProofTerm::Kind::Var:
        break;
    case ProofTerm::Kind::Const:
        taken_.insert(t.name());
        break;
    case ProofTerm::Kind::Bang:
        reserve(t.inner());
        break;
    default:
        reserve(t.left());
        reserve(t.right());
        break;
    }
}

void FreshNames::reserve(const Formula& f)
{
    switch (f.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Falsum:
        break;
    case Formula::Kind::Proof:
        reserve(f.term());
        reserve(f.body());
        break;
    case Formula::Kind::Neg:
    case Formula::Kind::Box:
        reserve(f.body());
        break;
    default:
        reserve(f.left());
        reserve(f.right());
        break;
    }
}

void FreshNames::reserve(const ConstantSpecification& cs)
{
    for (const auto& e : cs) {
        taken_.insert(e.constant);
        reserve(e.axiom);
    }
}

void FreshNames::reserve(const Derivation& d)
{
    for (const auto& h : d.hypotheses)
        reserve(h);
    for (const auto& s : d.steps)
        reserve(s.formula);
}

std::string FreshNames::next()
{
    for (;;) {
        std::string name = prefix_ + std::to_string(next_++);
        if (taken_.insert(name).second)
            return name;
    }
}

namespace {

class Lifter {
public:
    Lifter(const ConstantSpecification& cs, FreshNames& names) : cs_(cs), names_(names) { names_.reserve(cs); }

    // Constant for an axiom instance, shared within this lift.
    std::string specify(const Formula& axiom)
    {
        if (auto it = assigned_.find(axiom); it != assigned_.end())
            return it->second;
        std::string c = names_.next();
        cs_.add(c, axiom);
        assigned_.emplace(axiom, c);
        return c;
    }

    // Line "p:F -> (a*!p):[]F" (or with C3, "p:[]F -> (b*!p):F"). The
    // connection axiom goes into the cs; LP2 makes !p:p:G out of p:G, and LP1
    // applies the constant to it.
    std::pair<ProofTerm, std::size_t> internalized_rule(const ProofTerm& p, const Formula& premise, const Formula& goal,
                                                        SchemaId connection)
    {
        const Formula p_premise = Formula::proof(p, premise);
        const Formula axiom = Formula::imp(p_premise, goal);
        b_.axiom(axiom, connection);
        const std::string a = specify(axiom);
        std::size_t l2 = b_.cs(a, axiom);
        const ProofTerm checked = ProofTerm::bang(p);
        const Formula checked_claim = Formula::proof(checked, p_premise);
        std::size_t l3 = b_.axiom(Formula::imp(p_premise, checked_claim), SchemaId::LP2);
        const ProofTerm t = ProofTerm::app(ProofTerm::constant(a), checked);
        std::size_t lp1 = b_.axiom(Formula::imp(Formula::proof(ProofTerm::constant(a), axiom),
                                                Formula::imp(checked_claim, Formula::proof(t, goal))),
                                   SchemaId::LP1);
        std::size_t l4 = b_.mp(lp1, l2);
        return {t, b_.syllogism(l3, l4)};
    }

    std::pair<ProofTerm, std::size_t> nec(const ProofTerm& p, const Formula& f)
    {
        return internalized_rule(p, f, Formula::box(f), SchemaId::C1);
    }

    std::pair<ProofTerm, std::size_t> refl(const ProofTerm& p, const Formula& f)
    {
        return internalized_rule(p, Formula::box(f), f, SchemaId::C3);
    }

    // From line "p:(F -> G)" and line "q:F", line "(p*q):G".
    std::pair<ProofTerm, std::size_t> apply(const ProofTerm& p, std::size_t pline, const ProofTerm& q, std::size_t qline)
    {
        const Formula& fg = b_.formula(pline).body();
        const Formula& f = b_.formula(qline).body();
        const ProofTerm pq = ProofTerm::app(p, q);
        std::size_t lp1 = b_.axiom(Formula::imp(b_.formula(pline),
                                                Formula::imp(Formula::proof(q, f), Formula::proof(pq, fg.right()))),
                                   SchemaId::LP1);
        return {pq, b_.mp(b_.mp(lp1, pline), qline)};
    }

    std::pair<ProofTerm, std::size_t> lift_steps(const Derivation& d)
    {
        if (!d.hypotheses.empty())
            throw LiftError("cannot lift a derivation with hypotheses");
        if (d.steps.empty())
            throw LiftError("cannot lift an empty derivation");
        std::vector<std::pair<ProofTerm, std::size_t>> lifted;
        lifted.reserve(d.steps.size());
        for (std::size_t i = 0; i < d.steps.size(); ++i) {
            const Step& s = d.steps[i];
            const auto& refs = s.just.refs;
            auto ref = [&](std::size_t k) -> const std::pair<ProofTerm, std::size_t>& {
                if (refs.size() <= k || refs[k] == 0 || refs[k] > i)
                    throw LiftError("step " + std::to_string(i + 1) + " has a bad reference");
                return lifted[refs[k] - 1];
            };
            switch (s.just.rule) {
            case Rule::Axiom: {
                const std::string c = specify(s.formula);
                lifted.push_back({ProofTerm::constant(c), b_.cs(c, s.formula)});
                break;
            }
            case Rule::CS: {
                // c:A -> !c:c:A
                const ProofTerm c = s.formula.term();
                std::size_t line = b_.cs(c.name(), s.formula.body());
                const ProofTerm bc = ProofTerm::bang(c);
                std::size_t lp2 = b_.axiom(Formula::imp(s.formula, Formula::proof(bc, s.formula)), SchemaId::LP2);
                lifted.push_back({bc, b_.mp(lp2, line)});
                break;
            }
            case Rule::MP: {
                const auto& [p, pl] = ref(0);
                const auto& [q, ql] = ref(1);
                lifted.push_back(apply(p, pl, q, ql));
                break;
            }
            case Rule::Nec: {
                const auto& [p, pl] = ref(0);
                auto [t, impl] = nec(p, d.steps[refs[0] - 1].formula);
                lifted.push_back({t, b_.mp(impl, pl)});
                break;
            }
            case Rule::Refl: {
                const auto& [p, pl] = ref(0);
                auto [t, impl] = refl(p, s.formula);
                lifted.push_back({t, b_.mp(impl, pl)});
                break;
            }
            case Rule::Hyp:
                throw LiftError("step " + std::to_string(i + 1) + " is a hypothesis");
            case Rule::Taut:
                throw LiftError("step " + std::to_string(i + 1) + " is a tautology step; expand it before lifting");
            }
        }
        return lifted.back();
    }

    DerivationBuilder& builder() { return b_; }

    LiftResult finish(ProofTerm term, std::size_t line)
    {
        // Line sharing can leave the conclusion earlier than the last line.
        // Everything it depends on precedes it, so the tail can go.
        Derivation witness = b_.take();
        witness.steps.erase(witness.steps.begin() + static_cast<std::ptrdiff_t>(line), witness.steps.end());
        return {std::move(term), std::move(cs_), std::move(witness)};
    }

private:
    ConstantSpecification cs_;
    FreshNames& names_;
    DerivationBuilder b_;
    std::map<Formula, std::string> assigned_;
};

} // namespace

LiftResult nec_term(const ProofTerm& p, const Formula& f, const ConstantSpecification& cs, FreshNames& names)
{
    names.reserve(p);
    names.reserve(f);
    Lifter l(cs, names);
    auto [t, line] = l.nec(p, f);
    return l.finish(t, line);
}

LiftResult nec_term(const ProofTerm& p, const Formula& f, const ConstantSpecification& cs)
{
    FreshNames names;
    return nec_term(p, f, cs, names);
}

LiftResult refl_term(const ProofTerm& p, const Formula& f, const ConstantSpecification& cs, FreshNames& names)
{
    names.reserve(p);
    names.reserve(f);
    Lifter l(cs, names);
    auto [t, line] = l.refl(p, f);
    return l.finish(t, line);
}

LiftResult refl_term(const ProofTerm& p, const Formula& f, const ConstantSpecification& cs)
{
    FreshNames names;
    return refl_term(p, f, cs, names);
}

LiftResult lift(const Derivation& d, const ConstantSpecification& cs, FreshNames& names)
{
    names.reserve(d);
    Lifter l(cs, names);
    auto [t, line] = l.lift_steps(d);
    return l.finish(t, line);
}

LiftResult lift(const Derivation& d, const ConstantSpecification& cs)
{
    FreshNames names;
    return lift(d, cs, names);
}

LiftResult explicit_lob(const Formula& f, const ProofTerm& x, const ConstantSpecification& cs, FreshNames& names)
{
    names.reserve(x);
    names.reserve(f);
    Lifter l(cs, names);
    DerivationBuilder& b = l.builder();

    const Formula reflect = Formula::imp(Formula::box(f), f);           // []F -> F
    const Formula lob = Formula::imp(Formula::box(reflect), Formula::box(f));

    // x:([]F -> F) -> t:[]([]F -> F)
    auto [t, nec_line] = l.nec(x, reflect);
    // c:([]([]F -> F) -> []F), then LP1 gives t:[]([]F -> F) -> (c*t):[]F
    b.axiom(lob, SchemaId::GL3);
    const std::string c = l.specify(lob);
    std::size_t c_line = b.cs(c, lob);
    const ProofTerm ct = ProofTerm::app(ProofTerm::constant(c), t);
    std::size_t lp1 = b.axiom(Formula::imp(Formula::proof(ProofTerm::constant(c), lob),
                                           Formula::imp(Formula::proof(t, Formula::box(reflect)),
                                                        Formula::proof(ct, Formula::box(f)))),
                              SchemaId::LP1);
    std::size_t applied = b.mp(lp1, c_line);
    // (c*t):[]F -> s(c*t):F
    auto [s, refl_line] = l.refl(ct, f);
    std::size_t line = b.syllogism(b.syllogism(nec_line, applied), refl_line);
    return l.finish(s, line);
}

LiftResult explicit_lob(const Formula& f, const ProofTerm& x, const ConstantSpecification& cs)
{
    FreshNames names;
    return explicit_lob(f, x, cs, names);
}

} // namespace gla
