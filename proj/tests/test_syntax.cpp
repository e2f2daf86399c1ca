#include "generators.hpp"

#include <doctest.h>

#include <algorithm>

using namespace gla;

namespace {

const ProofTerm x = ProofTerm::var("x");
const Formula P = Formula::atom("P");
const Formula Q = Formula::atom("Q");

std::set<Formula> formulas(std::initializer_list<const char*> texts)
{
    std::set<Formula> out;
    for (const char* t : texts)
        out.insert(parse_formula(t));
    return out;
}

// Structural recursion written out here so substitution is checked against
// something other than itself.
Formula rebuild(const Formula& f, const PropositionMap& props, const VariableMap& vars)
{
    using K = Formula::Kind;
    switch (f.kind()) {
    case K::Atom: {
        auto it = props.find(f.name());
        return it == props.end() ? f : it->second;
    }
    case K::Falsum: return f;
    case K::Neg: return Formula::neg(substitute(f.body(), props, vars));
    case K::Box: return Formula::box(substitute(f.body(), props, vars));
    case K::Proof: return Formula::proof(substitute(f.term(), vars), substitute(f.body(), props, vars));
    case K::And: return Formula::conj(substitute(f.left(), props, vars), substitute(f.right(), props, vars));
    case K::Or: return Formula::disj(substitute(f.left(), props, vars), substitute(f.right(), props, vars));
    case K::Imp: return Formula::imp(substitute(f.left(), props, vars), substitute(f.right(), props, vars));
    }
    return f;
}

} // namespace

TEST_CASE("parse_formula reads the grammar")
{
    CHECK(parse_formula("x:P -> []P") == Formula::imp(Formula::proof(x, P), Formula::box(P)));
    const Formula lob = Formula::imp(Formula::box(Formula::imp(Formula::box(P), P)), Formula::box(P));
    CHECK(parse_formula("[]([]P -> P) -> []P") == lob);
    CHECK(parse_formula("x:P -> Q") == Formula::imp(Formula::proof(x, P), Q));
    CHECK(parse_formula("x:P -> Q") != Formula::proof(x, Formula::imp(P, Q)));
    CHECK(parse_formula("true") == Formula::neg(Formula::falsum()));
    CHECK(parse_formula("  P->Q->P ") == Formula::imp(P, Formula::imp(Q, P)));
    CHECK(parse_formula("P & Q & P") == Formula::conj(Formula::conj(P, Q), P));
    CHECK(parse_formula("P | Q & P") == Formula::disj(P, Formula::conj(Q, P)));
    CHECK(parse_formula("~[]x:P") == Formula::neg(Formula::box(Formula::proof(x, P))));
}

TEST_CASE("parse_term precedence")
{
    const ProofTerm a = ProofTerm::constant("a");
    const ProofTerm y = ProofTerm::var("y");
    const ProofTerm z = ProofTerm::var("z");
    CHECK(parse_term("a*!x") == ProofTerm::app(a, ProofTerm::bang(x)));
    CHECK(parse_term("!x+y") == ProofTerm::sum(ProofTerm::bang(x), y));
    CHECK(parse_term("x*(y+z)") == ProofTerm::app(x, ProofTerm::sum(y, z)));
    CHECK(parse_term("x*y*z") == ProofTerm::app(ProofTerm::app(x, y), z));
    CHECK(parse_term("k1").kind() == ProofTerm::Kind::Const);
    CHECK(parse_term("u").kind() == ProofTerm::Kind::Var);
    CHECK(parse_term("!!w") == ProofTerm::bang(ProofTerm::bang(ProofTerm::var("w"))));
}

TEST_CASE("parse errors carry a position")
{
    for (const char* bad : {"", "P ->", "(P", "P Q", "x:", "[]", "p", "P & & Q", "x:P)"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_formula(bad), ParseError);
    }
    try {
        parse_formula("P -> ");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() >= 4);
        CHECK_FALSE(e.expected().empty());
    }
    CHECK_THROWS_AS(parse_term("x+"), ParseError);
    CHECK_THROWS_AS(parse_term("P"), ParseError);
}

TEST_CASE("print_formula")
{
    CHECK(print_formula(Formula::box(Formula::falsum())) == "[]false");
    const ProofTerm t = ProofTerm::app(ProofTerm::constant("a"), ProofTerm::bang(x));
    CHECK(print_formula(Formula::proof(t, Formula::box(P))) == "(a*!x):[]P");
    CHECK(print_formula(Formula::imp(P, P)) == "P -> P");
}

TEST_CASE("round trip on generated formulas")
{
    testgen::Gen gen(20261018);
    for (int i = 0; i < 1000; ++i) {
        const Formula f = gen.formula(7);
        const std::string text = print_formula(f);
        CAPTURE(text);
        REQUIRE(parse_formula(text) == f);
        const ProofTerm t = gen.term(4);
        REQUIRE(parse_term(print_term(t)) == t);
    }
}

TEST_CASE("subformula_closure examples")
{
    Closure c = subformula_closure(parse_formula("x:P -> []P"));
    CHECK(c.formulas == formulas({"x:P -> []P", "x:P", "P", "[]P"}));
    CHECK(c.terms == std::set<ProofTerm>{x});

    c = subformula_closure(parse_formula("[]x:P"));
    CHECK(c.formulas == formulas({"[]x:P", "x:P", "P"}));

    c = subformula_closure(parse_formula("!x:(x:P)"));
    CHECK(c.formulas == formulas({"!x:(x:P)", "x:P", "P"}));
    CHECK(c.terms == std::set<ProofTerm>{ProofTerm::bang(x), x});
}

TEST_CASE("subformula_closure is idempotent and monotone")
{
    testgen::Gen gen(7);
    for (int i = 0; i < 300; ++i) {
        const Formula f = gen.formula(6);
        const Closure c = subformula_closure(f);
        REQUIRE(c.formulas.count(f) == 1);
        for (const Formula& g : c.formulas) {
            const Closure inner = subformula_closure(g);
            REQUIRE(std::includes(c.formulas.begin(), c.formulas.end(), inner.formulas.begin(), inner.formulas.end()));
            REQUIRE(std::includes(c.terms.begin(), c.terms.end(), inner.terms.begin(), inner.terms.end()));
        }
        std::set<Formula> again;
        for (const Formula& g : c.formulas) {
            const Closure inner = subformula_closure(g);
            again.insert(inner.formulas.begin(), inner.formulas.end());
        }
        REQUIRE(again == c.formulas);
    }
}

TEST_CASE("substitute examples")
{
    CHECK(substitute(parse_formula("x:P"), {{"P", parse_formula("Q&R")}}, {}) == parse_formula("x:(Q&R)"));
    CHECK(substitute(parse_formula("x:(u:false -> false)"), {}, {{"x", ProofTerm::constant("c")}}) ==
          parse_formula("c:(u:false -> false)"));
    CHECK(substitute(P, {}, {{"x", ProofTerm::var("y")}}) == P);
    // simultaneous, not sequential
    CHECK(substitute(parse_formula("P -> Q"), {{"P", Q}, {"Q", P}}, {}) == parse_formula("Q -> P"));
}

TEST_CASE("substitute: identity and distribution over generated formulas")
{
    testgen::Gen gen(99);
    for (int i = 0; i < 1000; ++i) {
        const Formula f = gen.formula(7);
        REQUIRE(substitute(f, {}, {}) == f);
        const PropositionMap props{{"P", gen.formula(2)}, {"R", gen.formula(2)}};
        const VariableMap vars{{"x", gen.term(2)}, {"z", gen.term(2)}};
        REQUIRE(substitute(f, props, vars) == rebuild(f, props, vars));
    }
}
