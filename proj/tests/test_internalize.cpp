#include "gla/internalize.hpp"

#include <doctest.h>

using namespace gla;

namespace {

Formula F(const char* text) { return parse_formula(text); }
ProofTerm T(const char* text) { return parse_term(text); }

void check_witness(const LiftResult& r, const ConstantSpecification& input)
{
    CHECK(r.cs.includes(input));
    CHECK(validate_cs(r.cs).ok);
    CHECK(r.witness.hypotheses.empty());
    const CheckReport report = check_derivation(r.witness, r.cs);
    CHECK_MESSAGE(report.ok, (report.first_error ? report.first_error->second : std::string()));
}

} // namespace

TEST_CASE("nec_term")
{
    LiftResult r = nec_term(T("x"), F("P"), {});
    CHECK(r.term == T("k1*!x"));
    CHECK(r.cs == ConstantSpecification{{"k1", F("x:P -> []P")}});
    CHECK(r.witness.conclusion() == F("x:P -> (k1*!x):[]P"));
    CHECK(r.witness.steps.size() <= 10);
    check_witness(r, {});

    r = nec_term(T("c"), Formula::falsum(), {});
    CHECK(r.term == T("k1*!c"));
    CHECK(r.cs == ConstantSpecification{{"k1", F("c:false -> []false")}});
    check_witness(r, {});
}

TEST_CASE("refl_term")
{
    LiftResult r = refl_term(T("x"), F("P"), {});
    CHECK(r.term == T("k1*!x"));
    CHECK(r.cs == ConstantSpecification{{"k1", F("x:[]P -> P")}});
    CHECK(r.witness.conclusion() == F("x:[]P -> (k1*!x):P"));
    check_witness(r, {});

    r = refl_term(T("y"), Formula::falsum(), {});
    CHECK(r.cs == ConstantSpecification{{"k1", F("y:[]false -> false")}});
    check_witness(r, {});
}

TEST_CASE("fresh constants avoid names already in use")
{
    const ConstantSpecification cs{{"k1", F("[]([]P->P)->[]P")}};
    const LiftResult r = nec_term(T("x"), F("P"), cs);
    CHECK(r.term == T("k2*!x"));
    check_witness(r, cs);

    FreshNames names("m");
    const LiftResult other = nec_term(T("x"), F("P"), {}, names);
    CHECK(other.term == T("m1*!x"));
    CHECK(names.counter() == 2);
}

TEST_CASE("lift")
{
    SUBCASE("single axiom")
    {
        Derivation d;
        d.steps = {{F("x:P -> []P"), Justification::axiom(SchemaId::C1)}};
        const LiftResult r = lift(d, {});
        CHECK(r.term == T("k1"));
        CHECK(r.cs == ConstantSpecification{{"k1", F("x:P -> []P")}});
        CHECK(r.witness.conclusion() == F("k1:(x:P -> []P)"));
        check_witness(r, {});
    }
    SUBCASE("axiom then Nec")
    {
        Derivation d;
        d.steps = {{F("P -> P|Q"), Justification::axiom(SchemaId::P6)}, {F("[](P -> P|Q)"), Justification::nec(1)}};
        const LiftResult r = lift(d, {});
        CHECK(r.term == T("k2*!k1"));
        CHECK(r.cs.contains("k1", F("P -> P|Q")));
        CHECK(r.cs.contains("k2", F("k1:(P -> P|Q) -> [](P -> P|Q)")));
        CHECK(r.witness.conclusion() == F("(k2*!k1):[](P -> P|Q)"));
        check_witness(r, {});
    }
    SUBCASE("modus ponens")
    {
        Derivation d;
        d.hypotheses = {};
        d.steps = {{F("[]P -> ([]([]P->P) -> []P)"), Justification::axiom(SchemaId::P1)},
                   {F("[]([]P->P) -> []P"), Justification::axiom(SchemaId::GL3)}};
        d.steps.push_back({F("x:P -> []P"), Justification::axiom(SchemaId::C1)});
        d.steps.push_back({F("P -> (Q -> P)"), Justification::axiom(SchemaId::P1)});
        d.steps.push_back({F("(P -> (Q -> P)) -> (R -> (P -> (Q -> P)))"), Justification::axiom(SchemaId::P1)});
        d.steps.push_back({F("R -> (P -> (Q -> P))"), Justification::mp(5, 4)});
        REQUIRE(check_derivation(d, {}).ok);
        const LiftResult r = lift(d, {});
        REQUIRE(r.term.kind() == ProofTerm::Kind::App);
        CHECK(r.witness.conclusion() == Formula::proof(r.term, F("R -> (P -> (Q -> P))")));
        check_witness(r, {});
    }
    SUBCASE("CS steps go through the proof checker")
    {
        const ConstantSpecification cs{{"c", F("[]([]P->P)->[]P")}};
        Derivation d;
        d.steps = {{F("c:([]([]P->P)->[]P)"), Justification::cs("c")}};
        const LiftResult r = lift(d, cs);
        CHECK(r.term == T("!c"));
        CHECK(r.cs == cs);
        check_witness(r, cs);
    }
    SUBCASE("hypotheses are refused")
    {
        Derivation d;
        d.hypotheses = {F("P")};
        d.steps = {{F("P"), Justification::hyp(1)}};
        CHECK_THROWS_AS(lift(d, {}), LiftError);
    }
}

TEST_CASE("explicit_lob")
{
    LiftResult r = explicit_lob(F("P"), T("x"), {});
    CHECK(r.term == T("k3*!(k2*(k1*!x))"));
    CHECK(r.cs.contains("k1", F("x:([]P -> P) -> []([]P -> P)")));
    CHECK(r.cs.contains("k2", F("[]([]P -> P) -> []P")));
    CHECK(r.cs.contains("k3", F("(k2*(k1*!x)):[]P -> P")));
    CHECK(r.witness.conclusion() == F("x:([]P -> P) -> (k3*!(k2*(k1*!x))):P"));
    check_witness(r, {});

    r = explicit_lob(Formula::falsum(), T("x"), {});
    CHECK(r.term == T("k3*!(k2*(k1*!x))"));
    CHECK(r.witness.conclusion() == F("x:([]false -> false) -> (k3*!(k2*(k1*!x))):false"));
    check_witness(r, {});
}

TEST_CASE("lift on random derivations")
{
    const ConstantSpecification cs{{"c", F("[]([]P->P)->[]P")}, {"a", F("x:P -> []P")}};
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        CAPTURE(seed);
        const Derivation d = random_derivation(seed, 4, cs);
        REQUIRE(check_derivation(d, cs).ok);
        const LiftResult r = lift(d, cs);
        REQUIRE(r.witness.conclusion() == Formula::proof(r.term, d.conclusion()));
        REQUIRE(r.cs.includes(cs));
        REQUIRE(validate_cs(r.cs).ok);
        REQUIRE(check_derivation(r.witness, r.cs).ok);

        const LiftResult again = lift(d, cs);
        REQUIRE(again.term == r.term);
        REQUIRE(again.cs == r.cs);
        REQUIRE(again.witness == r.witness);

        // the witness grows at most linearly with the derivation
        REQUIRE(r.witness.steps.size() <= 12 * d.steps.size() + 12);
    }
}
