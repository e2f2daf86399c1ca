#include "generators.hpp"

#include "gla/io.hpp"
#include "gla/semantics.hpp"

#include <doctest.h>

using namespace gla;

namespace {

Formula F(const char* text) { return parse_formula(text); }
ProofTerm T(const char* text) { return parse_term(text); }

KripkeModel ier_model() { return io::load_model(std::filesystem::path(GLA_FIXTURE_DIR) / "ier_model.json"); }

// Random rooted model on n worlds: root "1" sees everything, the rest is a
// random strict order (edges only upward in label order, then closed).
KripkeModel random_model(testgen::Gen& gen, int n, const std::vector<ProofPair>& pairs)
{
    KripkeModel m;
    for (int i = 1; i <= n; ++i)
        m.worlds.push_back(std::to_string(i));
    m.root = "1";
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (int j = 1; j < n; ++j)
        r[0][j] = true;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            r[i][j] = gen.coin();
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (r[i][k] && r[k][j])
                    r[i][j] = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (r[i][j])
                m.rel.insert({m.worlds[i], m.worlds[j]});
    for (const char* letter : {"P", "Q", "R"})
        for (const auto& w : m.worlds)
            if (gen.coin())
                m.valuation[letter].insert(w);
    for (const auto& p : pairs)
        if (gen.below(3) == 0)
            m.evidence.insert(p);
    return m;
}

// Direct forcing by the clauses, without memoization, as an oracle.
bool naive(const KripkeModel& m, const std::string& w, const Formula& f)
{
    using K = Formula::Kind;
    switch (f.kind()) {
    case K::Atom: {
        auto it = m.valuation.find(f.name());
        return it != m.valuation.end() && it->second.count(w);
    }
    case K::Falsum: return false;
    case K::Neg: return !naive(m, w, f.body());
    case K::And: return naive(m, w, f.left()) && naive(m, w, f.right());
    case K::Or: return naive(m, w, f.left()) || naive(m, w, f.right());
    case K::Imp: return !naive(m, w, f.left()) || naive(m, w, f.right());
    case K::Box:
        for (const auto& [u, v] : m.rel)
            if (u == w && !naive(m, v, f.body()))
                return false;
        return true;
    case K::Proof:
        if (!evidence_holds(m.evidence, f.term(), f.body()))
            return false;
        for (const auto& v : m.worlds)
            if (!naive(m, v, f.body()))
                return false;
        return true;
    }
    return false;
}

} // namespace

TEST_CASE("evidence_holds")
{
    CHECK(evidence_holds({{T("x"), F("P->Q")}, {T("y"), F("P")}}, T("x*y"), F("Q")));
    CHECK(evidence_holds({{T("y"), F("P")}}, T("!y"), F("y:P")));
    CHECK_FALSE(evidence_holds({}, T("x"), F("P")));
    CHECK(evidence_holds({{T("y"), F("P")}}, T("x+y"), F("P")));
    CHECK(evidence_holds({{T("y"), F("P")}}, T("y+x"), F("P")));
    CHECK_FALSE(evidence_holds({{T("y"), F("P")}}, T("x*y"), F("P")));
    CHECK(evidence_holds({{T("y"), F("P")}}, T("!!y"), F("!y:y:P")));
    // application needs the implication on the left
    CHECK_FALSE(evidence_holds({{T("x"), F("P->Q")}, {T("y"), F("P")}}, T("y*x"), F("Q")));
}

TEST_CASE("evidence is monotone in the seed")
{
    testgen::Gen gen(5);
    for (int i = 0; i < 300; ++i) {
        std::set<ProofPair> seed;
        for (int k = 0; k < 4; ++k)
            seed.insert({gen.term(1), gen.formula(2)});
        std::set<ProofPair> bigger = seed;
        bigger.insert({gen.term(1), gen.formula(2)});
        // queries built from the seed so that positives occur
        EvidenceRelation small(seed), large(bigger);
        for (int q = 0; q < 10; ++q) {
            const ProofTerm t = gen.term(2);
            for (const Formula& f : small.evidenced(t))
                REQUIRE(large.holds(t, f));
        }
        for (const auto& [t, f] : seed) {
            REQUIRE(large.holds(ProofTerm::bang(t), Formula::proof(t, f)));
            REQUIRE(large.holds(ProofTerm::sum(gen.term(1), t), f));
        }
    }
}

TEST_CASE("the IER model")
{
    const KripkeModel m = ier_model();
    CHECK(m.worlds == std::vector<std::string>{"1", "2"});
    CHECK(m.evidence.empty());
    CHECK(frame_problems(m).empty());

    const Formula ier = F("[]x:P -> P");
    CHECK_FALSE(forces(m, "2", ier));
    CHECK(forces(m, "1", ier));
    CHECK_FALSE(forces(m, "1", F("[]x:P")));
    CHECK(forces(m, "2", F("[]x:P")));
    for (const char* w : {"1", "2"}) {
        CHECK(forces(m, w, F("~x:P")));
        CHECK(forces(m, w, F("~P")));
    }
    CHECK(forces(m, "1", F("[]x:P -> x:P")));
    CHECK_FALSE(forces(m, "2", F("[]x:P -> x:P")));
    CHECK(forces(m, "2", F("[]false")));
    CHECK_FALSE(forces(m, "1", F("[]false")));

    CHECK_FALSE(holds_in_model(m, ier, EvalMode::AllWorlds));
    CHECK(holds_in_model(m, ier, EvalMode::RootOnly));
    CHECK(holds_in_model(m, F("~x:P"), EvalMode::AllWorlds));
    CHECK(failing_world(m, ier) == std::optional<std::string>("2"));
    CHECK_FALSE(failing_world(m, ier, EvalMode::RootOnly));
}

TEST_CASE("h_set")
{
    // one member per box subformula: []G -> G
    CHECK(h_set(F("[]x:P -> P")) == std::set<Formula>{F("[]x:P -> x:P")});
    CHECK(h_set(F("P -> Q")).empty());
    CHECK(h_set(F("[]([]P->P)")) == std::set<Formula>{F("[]([]P->P) -> ([]P->P)"), F("[]P -> P")});

    testgen::Gen gen(11);
    for (int i = 0; i < 200; ++i) {
        const Formula f = gen.formula(6);
        std::size_t boxes = 0;
        for (const Formula& g : subformula_closure(f).formulas)
            boxes += g.kind() == Formula::Kind::Box;
        REQUIRE(h_set(f).size() == boxes);
    }
}

TEST_CASE("validate_model")
{
    const KripkeModel m = ier_model();
    const std::vector<Formula> goal{F("[]x:P -> P")};
    SoundnessReport r = validate_model(m, goal, {});
    CHECK(r.ok());
    CHECK(r.failures.empty());

    KripkeModel cycle;
    cycle.worlds = {"1", "2"};
    cycle.root = "1";
    cycle.rel = {{"1", "2"}, {"2", "1"}};
    r = validate_model(cycle, {}, {});
    CHECK_FALSE(r.frame_ok);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.failures.empty());

    r = validate_model(m, {}, {{"c", F("x:P->[]P")}});
    CHECK(r.frame_ok);
    CHECK_FALSE(r.cs_holds);
    CHECK_FALSE(r.ok());

    KripkeModel blind = m;
    blind.rel.clear();
    CHECK_FALSE(frame_problems(blind).empty());

    KripkeModel reflexive = m;
    reflexive.rel.insert({"2", "2"});
    CHECK_FALSE(frame_problems(reflexive).empty());

    KripkeModel unknown_root = m;
    unknown_root.root = "7";
    CHECK_FALSE(frame_problems(unknown_root).empty());

    // unsound for []false -> false: the root forces []false
    KripkeModel single;
    single.worlds = {"1"};
    single.root = "1";
    const std::vector<Formula> bot{F("[]false -> false")};
    r = validate_model(single, bot, {});
    CHECK(r.frame_ok);
    CHECK_FALSE(r.f_sound);
}

TEST_CASE("forcing agrees with the clauses, proof assertions are world-invariant")
{
    testgen::Gen gen(2026);
    for (int i = 0; i < 300; ++i) {
        std::vector<ProofPair> pairs;
        for (int k = 0; k < 4; ++k)
            pairs.push_back({gen.term(1), gen.formula(2)});
        const KripkeModel m = random_model(gen, 1 + gen.below(4), pairs);
        REQUIRE(frame_problems(m).empty());
        ModelEvaluator eval(m);
        for (int q = 0; q < 5; ++q) {
            const Formula f = gen.formula(4);
            for (const auto& w : m.worlds)
                REQUIRE(eval.forces(w, f) == naive(m, w, f));
            for (const auto& [t, body] : pairs) {
                const Formula pf = Formula::proof(t, body);
                const bool at_root = eval.forces(m.root, pf);
                for (const auto& w : m.worlds)
                    REQUIRE(eval.forces(w, pf) == at_root);
            }
        }
    }
}

TEST_CASE("axiom instances over the seed are forced")
{
    testgen::Gen gen(31337);
    const std::vector<ProofTerm> extra{T("x"), T("y"), T("a")};
    for (int i = 0; i < 200; ++i) {
        std::vector<ProofPair> pairs;
        for (int k = 0; k < 4; ++k)
            pairs.push_back({gen.term(1), gen.formula(2)});
        const KripkeModel m = random_model(gen, 1 + gen.below(4), pairs);
        ModelEvaluator eval(m);

        std::vector<std::pair<Formula, SchemaId>> instances;
        for (const auto& [t, a] : pairs) {
            const Formula ta = Formula::proof(t, a);
            const ProofTerm s = extra[gen.below(3)];
            instances.push_back({Formula::imp(ta, Formula::box(a)), SchemaId::C1});
            instances.push_back({Formula::imp(Formula::neg(ta), Formula::box(Formula::neg(ta))), SchemaId::C2});
            instances.push_back({Formula::imp(ta, a), SchemaId::LP4});
            instances.push_back({Formula::imp(ta, Formula::proof(ProofTerm::bang(t), ta)), SchemaId::LP2});
            instances.push_back({Formula::imp(ta, Formula::proof(ProofTerm::sum(t, s), a)), SchemaId::LP3});
            instances.push_back({Formula::imp(ta, Formula::proof(ProofTerm::sum(s, t), a)), SchemaId::LP3});
            instances.push_back({Formula::imp(Formula::box(a), Formula::box(Formula::box(a))), SchemaId::GL2});
            for (const auto& [u, b] : pairs) {
                const Formula tab = Formula::proof(t, Formula::imp(a, b));
                instances.push_back({Formula::imp(tab, Formula::imp(Formula::proof(u, a), Formula::proof(ProofTerm::app(t, u), b))),
                                     SchemaId::LP1});
                instances.push_back({Formula::imp(Formula::box(Formula::imp(a, b)), Formula::imp(Formula::box(a), Formula::box(b))),
                                     SchemaId::GL1});
            }
            if (a.kind() == Formula::Kind::Imp) {
                const ProofTerm u = extra[gen.below(3)];
                instances.push_back({Formula::imp(ta, Formula::imp(Formula::proof(u, a.left()),
                                                                   Formula::proof(ProofTerm::app(t, u), a.right()))),
                                     SchemaId::LP1});
            }
        }
        for (const auto& [inst, id] : instances) {
            REQUIRE(is_instance_of(inst, id));
            for (const auto& w : m.worlds)
                REQUIRE(eval.forces(w, inst));
        }

        // C3: forced off the root; at the root when the model is sound for it
        for (const auto& [t, a] : pairs) {
            const Formula c3 = Formula::imp(Formula::proof(t, Formula::box(a)), a);
            for (const auto& w : m.worlds)
                if (w != m.root)
                    REQUIRE(eval.forces(w, c3));
            const std::vector<Formula> sound_for{c3};
            if (validate_model(m, sound_for, {}).f_sound)
                REQUIRE(eval.forces(m.root, c3));
        }
    }
}

TEST_CASE("Loeb instances hold everywhere")
{
    testgen::Gen gen(8);
    for (int i = 0; i < 200; ++i) {
        std::vector<ProofPair> pairs{{gen.term(1), gen.formula(2)}, {gen.term(1), gen.formula(2)}};
        const KripkeModel m = random_model(gen, 1 + gen.below(5), pairs);
        ModelEvaluator eval(m);
        for (int q = 0; q < 4; ++q) {
            const Formula a = gen.formula(3);
            const Formula lob = Formula::imp(Formula::box(Formula::imp(Formula::box(a), a)), Formula::box(a));
            for (const auto& w : m.worlds)
                REQUIRE(eval.forces(w, lob));
        }
    }
}
