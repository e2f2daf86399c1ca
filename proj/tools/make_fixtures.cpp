// Regenerates the derivation fixtures. Usage: make_fixtures [DIR]

#include "gla/internalize.hpp"
#include "gla/io.hpp"

#include <iostream>
#include <map>

using namespace gla;

namespace {

using Names = std::map<std::string, std::string>;

ProofTerm rename(const ProofTerm& t, const Names& names)
{
    switch (t.kind()) {
    case ProofTerm::Kind::Var:
        return t;
    case ProofTerm::Kind::Const: {
        auto it = names.find(t.name());
        return it == names.end() ? t : ProofTerm::constant(it->second);
    }
    case ProofTerm::Kind::Bang:
        return ProofTerm::bang(rename(t.inner(), names));
    case ProofTerm::Kind::App:
        return ProofTerm::app(rename(t.left(), names), rename(t.right(), names));
    case ProofTerm::Kind::Sum:
        return ProofTerm::sum(rename(t.left(), names), rename(t.right(), names));
    }
    return t;
}

Formula rename(const Formula& f, const Names& names)
{
    switch (f.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Falsum:
        return f;
    case Formula::Kind::Neg:
        return Formula::neg(rename(f.body(), names));
    case Formula::Kind::Box:
        return Formula::box(rename(f.body(), names));
    case Formula::Kind::Proof:
        return Formula::proof(rename(f.term(), names), rename(f.body(), names));
    case Formula::Kind::And:
        return Formula::conj(rename(f.left(), names), rename(f.right(), names));
    case Formula::Kind::Or:
        return Formula::disj(rename(f.left(), names), rename(f.right(), names));
    case Formula::Kind::Imp:
        return Formula::imp(rename(f.left(), names), rename(f.right(), names));
    }
    return f;
}

// Generated constants k1, k2, ... become the names used in cs.json.
Derivation rename(Derivation d, const Names& names)
{
    for (Step& s : d.steps) {
        s.formula = rename(s.formula, names);
        if (s.just.rule == Rule::CS)
            s.just.constant = s.formula.term().name();
    }
    return d;
}

const Formula P = Formula::atom("P");
const ProofTerm x = ProofTerm::var("x");

// x:P -> []x:P
Derivation positive_introspection()
{
    DerivationBuilder b;
    const Formula xp = Formula::proof(x, P);
    const Formula checked = Formula::proof(ProofTerm::bang(x), xp);
    std::size_t lp2 = b.axiom(Formula::imp(xp, checked), SchemaId::LP2);
    std::size_t c1 = b.axiom(Formula::imp(checked, Formula::box(xp)), SchemaId::C1);
    b.syllogism(lp2, c1);
    return b.take();
}

// []x:P | []~x:P
Derivation stability()
{
    const Formula xp = Formula::proof(x, P);
    const Formula goal = Formula::disj(Formula::box(xp), Formula::box(Formula::neg(xp)));

    DerivationBuilder pos;
    std::size_t intro = pos.include(positive_introspection());
    std::size_t left = pos.axiom(Formula::imp(Formula::box(xp), goal), SchemaId::P6);
    pos.syllogism(intro, left);

    DerivationBuilder neg;
    std::size_t c2 = neg.axiom(Formula::imp(Formula::neg(xp), Formula::box(Formula::neg(xp))), SchemaId::C2);
    std::size_t right = neg.axiom(Formula::imp(Formula::box(Formula::neg(xp)), goal), SchemaId::P7);
    neg.syllogism(c2, right);

    return lemmas::cases(pos.take(), neg.take());
}

// x:[]P -> P without C3: both []P and ~[]P give [](x:[]P -> P), then Refl.
Derivation c3_without_c3()
{
    const Formula bp = Formula::box(P);
    const Formula xb = Formula::proof(x, bp);
    const Formula target = Formula::imp(xb, P);

    DerivationBuilder no;
    DerivationBuilder lp4;
    lp4.axiom(Formula::imp(xb, bp), SchemaId::LP4);
    std::size_t contra = no.include(lemmas::contraposition(lp4.take()));   // ~[]P -> ~x:[]P
    std::size_t c2 = no.axiom(Formula::imp(Formula::neg(xb), Formula::box(Formula::neg(xb))), SchemaId::C2);
    std::size_t ex = no.include(lemmas::explosion(xb, P));                  // ~x:[]P -> (x:[]P -> P)
    std::size_t gl1 = no.axiom(Formula::imp(Formula::box(Formula::imp(Formula::neg(xb), target)),
                                            Formula::imp(Formula::box(Formula::neg(xb)), Formula::box(target))),
                               SchemaId::GL1);
    std::size_t boxed = no.mp(gl1, no.nec(ex));                             // []~x:[]P -> [](x:[]P -> P)
    no.syllogism(no.syllogism(contra, c2), boxed);

    DerivationBuilder yes;
    std::size_t p1 = yes.axiom(Formula::imp(P, target), SchemaId::P1);
    std::size_t gl1b = yes.axiom(Formula::imp(Formula::box(Formula::imp(P, target)), Formula::imp(bp, Formula::box(target))),
                                 SchemaId::GL1);
    yes.mp(gl1b, yes.nec(p1));

    DerivationBuilder b;
    b.refl(b.include(lemmas::cases(yes.take(), no.take())));
    return b.take();
}

bool write(const std::filesystem::path& dir, const char* name, const Derivation& d, const ConstantSpecification& cs)
{
    if (auto r = check_derivation(d, cs); !r.ok) {
        std::cerr << name << ": step " << r.first_error->first << ": " << r.first_error->second << '\n';
        return false;
    }
    io::write_json(dir / name, io::to_json(d));
    std::cout << name << ": " << d.steps.size() << " steps, " << print_formula(d.conclusion()) << '\n';
    return true;
}

} // namespace

int main(int argc, char** argv)
{
    const std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
    std::filesystem::create_directories(dir);

    const ConstantSpecification empty;
    const LiftResult nec = nec_term(x, P, empty);
    const LiftResult refl = refl_term(x, P, empty);
    const LiftResult lob = explicit_lob(P, x, empty);

    const Names nec_names{{"k1", "a"}};
    const Names refl_names{{"k1", "b"}};
    const Names lob_names{{"k1", "a"}, {"k2", "c"}, {"k3", "b"}};

    ConstantSpecification cs;
    const std::vector<std::pair<const LiftResult*, const Names*>> parts{
        {&nec, &nec_names}, {&refl, &refl_names}, {&lob, &lob_names}};
    for (const auto& [result, names] : parts)
        for (const auto& e : result->cs)
            cs.add(names->at(e.constant), rename(e.axiom, *names));
    io::write_json(dir / "cs.json", io::to_json(cs));
    io::write_json(dir / "empty_cs.json", io::to_json(empty));

    bool ok = true;
    ok = write(dir, "pos_introspection.json", positive_introspection(), cs) && ok;
    ok = write(dir, "stability.json", stability(), cs) && ok;
    ok = write(dir, "explicit_lob.json", rename(lob.witness, lob_names), cs) && ok;
    ok = write(dir, "c3_derived.json", c3_without_c3(), empty) && ok;
    ok = write(dir, "internalize_nec.json", rename(nec.witness, nec_names), cs) && ok;
    ok = write(dir, "internalize_refl.json", rename(refl.witness, refl_names), cs) && ok;

    KripkeModel ier;
    ier.worlds = {"1", "2"};
    ier.root = "1";
    ier.rel = {{"1", "2"}};
    io::write_json(dir / "ier_model.json", io::to_json(ier));
    return ok ? 0 : 1;
}
