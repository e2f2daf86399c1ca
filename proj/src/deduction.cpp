#include "gla/calculus.hpp"

#include <map>

namespace gla {

// ---------------------------------------------------------------------------
// DerivationBuilder

std::size_t DerivationBuilder::push(Formula f, Justification j, bool dependent)
{
    if (!dependent)
        if (auto existing = find(f))
            return *existing;
    derivation_.steps.push_back({std::move(f), std::move(j)});
    dependent_.push_back(dependent);
    return derivation_.steps.size();
}

std::optional<std::size_t> DerivationBuilder::find(const Formula& f) const
{
    for (std::size_t i = 0; i < derivation_.steps.size(); ++i)
        if (!dependent_[i] && derivation_.steps[i].formula == f)
            return i + 1;
    return std::nullopt;
}

std::size_t DerivationBuilder::declare_hypothesis(const Formula& f)
{
    derivation_.hypotheses.push_back(f);
    return derivation_.hypotheses.size();
}

std::size_t DerivationBuilder::hypothesis(const Formula& f)
{
    auto& hyps = derivation_.hypotheses;
    std::size_t k = 0;
    for (std::size_t i = 0; i < hyps.size(); ++i)
        if (hyps[i] == f)
            k = i + 1;
    if (k == 0) {
        hyps.push_back(f);
        k = hyps.size();
    }
    return push(f, Justification::hyp(k), true);
}

std::size_t DerivationBuilder::hypothesis_step(std::size_t k)
{
    return push(derivation_.hypotheses.at(k - 1), Justification::hyp(k), true);
}

std::size_t DerivationBuilder::axiom(const Formula& f)
{
    auto m = match_axiom(f, derivation_.mode);
    if (!m)
        throw std::invalid_argument("not an axiom instance: " + print_formula(f));
    return axiom(f, m->schema);
}

std::size_t DerivationBuilder::axiom(const Formula& f, SchemaId id)
{
    if (!is_instance_of(f, id))
        throw std::invalid_argument(print_formula(f) + " is not an instance of " + std::string(to_string(id)));
    return push(f, Justification::axiom(id), false);
}

std::size_t DerivationBuilder::cs(const std::string& constant, const Formula& axiom)
{
    return push(Formula::proof(ProofTerm::constant(constant), axiom), Justification::cs(constant), false);
}

std::size_t DerivationBuilder::mp(std::size_t implication, std::size_t minor)
{
    const Formula& imp = formula(implication);
    if (imp.kind() != Formula::Kind::Imp || imp.left() != formula(minor))
        throw std::invalid_argument("modus ponens mismatch: " + print_formula(imp) + " vs "
                                    + print_formula(formula(minor)));
    bool dep = dependent_[implication - 1] || dependent_[minor - 1];
    return push(imp.right(), Justification::mp(implication, minor), dep);
}

std::size_t DerivationBuilder::nec(std::size_t premise)
{
    if (dependent_[premise - 1])
        throw std::invalid_argument("necessitation over a hypothesis-dependent line");
    return push(Formula::box(formula(premise)), Justification::nec(premise), false);
}

std::size_t DerivationBuilder::refl(std::size_t premise)
{
    const Formula& boxed = formula(premise);
    if (boxed.kind() != Formula::Kind::Box)
        throw std::invalid_argument("reflection needs a boxed line: " + print_formula(boxed));
    if (dependent_[premise - 1])
        throw std::invalid_argument("reflection over a hypothesis-dependent line");
    return push(boxed.body(), Justification::refl(premise), false);
}

std::size_t DerivationBuilder::taut(const Formula& f, std::vector<std::size_t> premises)
{
    bool dep = false;
    for (std::size_t p : premises)
        dep = dep || dependent_[p - 1];
    return push(f, Justification::taut(std::move(premises)), dep);
}

std::size_t DerivationBuilder::include(const Derivation& sub)
{
    if (!sub.hypotheses.empty())
        throw std::invalid_argument("only hypothesis-free derivations can be spliced");
    std::vector<std::size_t> remap(sub.steps.size() + 1, 0);
    for (std::size_t i = 1; i <= sub.steps.size(); ++i) {
        const Step& s = sub.steps[i - 1];
        std::vector<std::size_t> refs;
        for (std::size_t r : s.just.refs)
            refs.push_back(remap[r]);
        switch (s.just.rule) {
        case Rule::Axiom: remap[i] = axiom(s.formula, s.just.schema); break;
        case Rule::CS: remap[i] = push(s.formula, Justification::cs(s.formula.term().name()), false); break;
        case Rule::MP: remap[i] = mp(refs[0], refs[1]); break;
        case Rule::Nec: remap[i] = nec(refs[0]); break;
        case Rule::Refl: remap[i] = refl(refs[0]); break;
        case Rule::Taut: remap[i] = taut(s.formula, refs); break;
        case Rule::Hyp: throw std::invalid_argument("hypothesis step in a hypothesis-free derivation");
        }
    }
    return remap[sub.steps.size()];
}

std::size_t DerivationBuilder::weaken(std::size_t a, const Formula& b)
{
    const Formula& fa = formula(a);
    std::size_t ax = axiom(Formula::imp(fa, Formula::imp(b, fa)), SchemaId::P1);
    return mp(ax, a);
}

std::size_t DerivationBuilder::syllogism(std::size_t ab, std::size_t bc)
{
    const Formula a = formula(ab).left();
    const Formula b = formula(ab).right();
    const Formula c = formula(bc).right();
    std::size_t a_bc = weaken(bc, a);
    std::size_t p2 = axiom(Formula::imp(Formula::imp(a, b),
                                        Formula::imp(Formula::imp(a, Formula::imp(b, c)), Formula::imp(a, c))),
                           SchemaId::P2);
    return mp(mp(p2, ab), a_bc);
}

// ---------------------------------------------------------------------------
// Deduction theorem

namespace {

Derivation discharge_last(const Derivation& d);

} // namespace

Derivation deduction_transform(const Derivation& d)
{
    try {
        return discharge_last(d);
    } catch (const std::invalid_argument& e) {
        throw TransformError(e.what());
    }
}

namespace {

Derivation discharge_last(const Derivation& d)
{
    if (d.hypotheses.empty())
        throw TransformError("no hypothesis to discharge");
    if (d.steps.empty())
        throw TransformError("empty derivation");

    const std::size_t discharged = d.hypotheses.size();
    const Formula a = d.hypotheses.back();

    DerivationBuilder b(d.mode);
    std::vector<Formula> kept(d.hypotheses.begin(), d.hypotheses.end() - 1);
    for (const Formula& h : kept)
        b.declare_hypothesis(h);

    const std::size_t n = d.steps.size();
    std::vector<bool> uses_a(n + 1, false);
    std::vector<std::size_t> plain(n + 1, 0);   // index of G_i, when G_i does not use A
    std::vector<std::size_t> implied(n + 1, 0); // index of A -> G_i

    auto imp_of = [&](std::size_t i) {
        if (implied[i] == 0)
            implied[i] = b.weaken(plain[i], a);
        return implied[i];
    };

    for (std::size_t i = 1; i <= n; ++i) {
        const Step& s = d.steps[i - 1];
        const Justification& j = s.just;
        for (std::size_t r : j.refs)
            if (r == 0 || r >= i)
                throw TransformError("step " + std::to_string(i) + " cites a later step");

        switch (j.rule) {
        case Rule::Hyp:
            if (j.hypothesis == discharged) {
                uses_a[i] = true;
                implied[i] = b.include(lemmas::identity(a));
            } else {
                plain[i] = b.hypothesis_step(j.hypothesis);
            }
            break;
        case Rule::Axiom:
            plain[i] = b.axiom(s.formula, j.schema);
            break;
        case Rule::CS:
            plain[i] = b.cs(s.formula.term().name(), s.formula.body());
            break;
        case Rule::Nec:
        case Rule::Refl:
            if (uses_a[j.refs[0]])
                throw TransformError("step " + std::to_string(i) + " applies " + std::string(to_string(j.rule))
                                     + " to a line depending on the discharged hypothesis");
            plain[i] = j.rule == Rule::Nec ? b.nec(plain[j.refs[0]]) : b.refl(plain[j.refs[0]]);
            break;
        case Rule::MP: {
            std::size_t major = j.refs[0], minor = j.refs[1];
            uses_a[i] = uses_a[major] || uses_a[minor];
            if (!uses_a[i]) {
                plain[i] = b.mp(plain[major], plain[minor]);
                break;
            }
            // (A->G_minor) -> ((A->(G_minor->G_i)) -> (A->G_i))
            const Formula& g_minor = d.steps[minor - 1].formula;
            Formula p2 = Formula::imp(Formula::imp(a, g_minor),
                                      Formula::imp(Formula::imp(a, Formula::imp(g_minor, s.formula)),
                                                   Formula::imp(a, s.formula)));
            std::size_t ax = b.axiom(p2, SchemaId::P2);
            implied[i] = b.mp(b.mp(ax, imp_of(minor)), imp_of(major));
            break;
        }
        case Rule::Taut: {
            for (std::size_t r : j.refs)
                uses_a[i] = uses_a[i] || uses_a[r];
            if (!uses_a[i]) {
                std::vector<std::size_t> refs;
                for (std::size_t r : j.refs)
                    refs.push_back(plain[r]);
                plain[i] = b.taut(s.formula, refs);
                break;
            }
            std::vector<std::size_t> refs;
            for (std::size_t r : j.refs)
                refs.push_back(uses_a[r] ? imp_of(r) : plain[r]);
            implied[i] = b.taut(Formula::imp(a, s.formula), refs);
            break;
        }
        }
    }
    std::size_t last = imp_of(n);
    Derivation out = b.take();
    // Line sharing may have placed A -> G earlier; the conclusion must be last.
    if (last != out.steps.size())
        out.steps.push_back(out.steps[last - 1]);
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Propositional lemmas

namespace lemmas {

Derivation identity(const Formula& a)
{
    DerivationBuilder b;
    Formula aa = Formula::imp(a, a);
    std::size_t p1 = b.axiom(Formula::imp(a, Formula::imp(aa, a)), SchemaId::P1);
    std::size_t p2 = b.axiom(
        Formula::imp(Formula::imp(a, aa), Formula::imp(Formula::imp(a, Formula::imp(aa, a)), aa)), SchemaId::P2);
    std::size_t p1b = b.axiom(Formula::imp(a, aa), SchemaId::P1);
    b.mp(b.mp(p2, p1b), p1);
    return b.take();
}

Derivation explosion(const Formula& a, const Formula& c)
{
    DerivationBuilder b;
    Formula na = Formula::neg(a), nc = Formula::neg(c);
    std::size_t h_na = b.hypothesis(na);
    std::size_t h_a = b.hypothesis(a);
    std::size_t nc_a = b.weaken(h_a, nc);
    std::size_t nc_na = b.weaken(h_na, nc);
    std::size_t p9 = b.axiom(Formula::imp(Formula::imp(nc, a),
                                          Formula::imp(Formula::imp(nc, na), Formula::neg(nc))),
                             SchemaId::P9);
    std::size_t nnc = b.mp(b.mp(p9, nc_a), nc_na);
    std::size_t p10 = b.axiom(Formula::imp(Formula::neg(nc), c), SchemaId::P10);
    b.mp(p10, nnc);
    return deduction_transform(deduction_transform(b.take()));
}

Derivation excluded_middle(const Formula& a)
{
    const Formula na = Formula::neg(a);
    const Formula e = Formula::disj(a, na);
    const Formula ne = Formula::neg(e);

    DerivationBuilder inner;
    std::size_t h = inner.hypothesis(ne);
    std::size_t p6 = inner.axiom(Formula::imp(a, e), SchemaId::P6);
    std::size_t a_ne = inner.weaken(h, a);
    std::size_t p9 = inner.axiom(Formula::imp(Formula::imp(a, e), Formula::imp(Formula::imp(a, ne), na)),
                                 SchemaId::P9);
    std::size_t not_a = inner.mp(inner.mp(p9, p6), a_ne);
    std::size_t p7 = inner.axiom(Formula::imp(na, e), SchemaId::P7);
    inner.mp(p7, not_a);
    Derivation ne_e = deduction_transform(inner.take());

    DerivationBuilder b;
    std::size_t s1 = b.include(ne_e);
    std::size_t s2 = b.include(identity(ne));
    std::size_t p9_outer = b.axiom(Formula::imp(Formula::imp(ne, e), Formula::imp(Formula::imp(ne, ne), Formula::neg(ne))),
                                   SchemaId::P9);
    std::size_t nne = b.mp(b.mp(p9_outer, s1), s2);
    std::size_t p10 = b.axiom(Formula::imp(Formula::neg(ne), e), SchemaId::P10);
    b.mp(p10, nne);
    return b.take();
}

Derivation contraposition(const Derivation& ab)
{
    const Formula& f = ab.conclusion();
    if (f.kind() != Formula::Kind::Imp)
        throw std::invalid_argument("contraposition needs an implication");
    const Formula a = f.left(), c = f.right();
    const Formula nc = Formula::neg(c);
    DerivationBuilder b(ab.mode);
    std::size_t h = b.hypothesis(nc);
    std::size_t imp = b.include(ab);
    std::size_t a_nc = b.weaken(h, a);
    std::size_t p9 = b.axiom(Formula::imp(Formula::imp(a, c), Formula::imp(Formula::imp(a, nc), Formula::neg(a))),
                             SchemaId::P9);
    b.mp(b.mp(p9, imp), a_nc);
    return deduction_transform(b.take());
}

Derivation cases(const Derivation& ac, const Derivation& nac)
{
    const Formula& f = ac.conclusion();
    const Formula a = f.left(), c = f.right();
    const Formula na = Formula::neg(a);
    if (nac.conclusion() != Formula::imp(na, c))
        throw std::invalid_argument("case split needs A->C and ~A->C");
    DerivationBuilder b(ac.mode);
    std::size_t s1 = b.include(ac);
    std::size_t s2 = b.include(nac);
    Formula split = Formula::disj(a, na);
    std::size_t p8 = b.axiom(Formula::imp(Formula::imp(a, c),
                                          Formula::imp(Formula::imp(na, c), Formula::imp(split, c))),
                             SchemaId::P8);
    std::size_t em = b.include(excluded_middle(a));
    b.mp(b.mp(b.mp(p8, s1), s2), em);
    return b.take();
}

} // namespace lemmas

} // namespace gla
