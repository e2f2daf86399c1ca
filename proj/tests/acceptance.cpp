// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails. Limits are fixed below.

#include "generators.hpp"

#include "gla/decide.hpp"
#include "gla/internalize.hpp"
#include "gla/io.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace gla;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double fixture_check_limit = 0.1;   // seconds per fixture
constexpr double ier_search_limit = 1.0;
constexpr double gl_golden_limit = 1.0;       // whole list
constexpr int lift_samples = 200;
constexpr int lift_depth = 4;
constexpr int soundness_samples = 500;
constexpr double soundness_limit = 300.0;
constexpr int conjoin_samples = 200;
constexpr double realizability_limit = 10.0;
constexpr int property_samples = 1000;
constexpr double corpus_limit = 30.0;         // per formula

const fs::path fixture_dir = GLA_FIXTURE_DIR;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Formula F(const char* text) { return parse_formula(text); }

struct Outcome {
    bool pass = true;
    std::ostringstream note;

    void fail(const std::string& why)
    {
        if (pass)
            note << why;
        pass = false;
    }
};

const char* const derivation_fixtures[] = {"pos_introspection.json", "stability.json", "explicit_lob.json",
                                           "c3_derived.json", "internalize_nec.json", "internalize_refl.json"};

void fixture_checking(Outcome& o)
{
    const ConstantSpecification cs = io::load_cs(fixture_dir / "cs.json");
    double worst = 0;
    for (const char* name : derivation_fixtures) {
        const Derivation d = io::load_derivation(fixture_dir / name);
        const auto start = Clock::now();
        const CheckReport r = check_derivation(d, cs);
        const double t = seconds_since(start);
        worst = std::max(worst, t);
        if (!r.ok)
            o.fail(std::string(name) + " step " + std::to_string(r.first_error->first) + ": " + r.first_error->second);
        if (t >= fixture_check_limit)
            o.fail(std::string(name) + " took " + std::to_string(t) + " s");
    }
    if (o.pass)
        o.note << "6 derivations, slowest " << worst * 1000 << " ms";
}

void ier_reproduction(Outcome& o)
{
    const KripkeModel m = io::load_model(fixture_dir / "ier_model.json");
    const Formula ier = F("[]x:P -> P");
    if (failing_world(m, ier, EvalMode::AllWorlds) != std::optional<std::string>("2"))
        o.fail("fixture model does not fail at world 2");
    if (!holds_in_model(m, ier, EvalMode::RootOnly))
        o.fail("fixture model fails at the root");
    // node facts: ~P, ~x:P everywhere; []x:P only at 2; the soundness line at 1
    ModelEvaluator eval(m);
    const bool facts = eval.forces("1", F("~P")) && eval.forces("2", F("~P")) && eval.forces("1", F("~x:P")) &&
                       eval.forces("2", F("~x:P")) && !eval.forces("1", F("[]x:P")) && eval.forces("2", F("[]x:P")) &&
                       eval.forces("1", F("[]x:P -> x:P"));
    if (!facts)
        o.fail("node facts differ");
    const std::vector<Formula> goal{ier};
    if (!validate_model(m, goal, {}).ok())
        o.fail("fixture model is not sound for the goal");

    const auto start = Clock::now();
    const SearchResult r = countermodel_search(ier, {});
    const double t = seconds_since(start);
    if (!r.model)
        o.fail("search found nothing");
    else if (r.model->worlds.size() != 2 || r.model->rel.size() != 1 || !r.model->evidence.empty() ||
             r.model->valuation.count("P") || r.failing_world == r.model->root)
        o.fail("search found a different model");
    if (t >= ier_search_limit)
        o.fail("search took " + std::to_string(t) + " s");
    if (o.pass)
        o.note << "search " << t * 1000 << " ms";
}

void gl_oracle(Outcome& o)
{
    const std::pair<const char*, bool> golden[] = {
        {"[](P -> Q) -> ([]P -> []Q)", true}, {"[]P -> [][]P", true},
        {"[]([]P -> P) -> []P", true},        {"[](P & Q) -> ([]P & []Q)", true},
        {"([]P & []Q) -> [](P & Q)", true},   {"[]([]false -> false) -> []false", true},
        {"[]~[]false -> []false", true},      {"[]P -> P", false},
        {"~[]false", false},                  {"[]false -> false", false},
        {"P -> []P", false},                  {"~[]P -> []~[]P", false},
    };
    const auto start = Clock::now();
    for (const auto& [text, theorem] : golden) {
        const Formula f = F(text);
        const Verdict v = decide_gl(f);
        if (theorem != std::holds_alternative<Theorem>(v))
            o.fail(std::string("wrong verdict for ") + text);
        if (const auto* n = std::get_if<NonTheorem>(&v))
            if (!frame_problems(n->model).empty() || forces(n->model, n->failing_world, f))
                o.fail(std::string("countermodel does not refute ") + text);
    }
    const double t = seconds_since(start);
    if (t >= gl_golden_limit)
        o.fail("took " + std::to_string(t) + " s");
    if (o.pass)
        o.note << "12 formulas in " << t * 1000 << " ms";
}

void internalization(Outcome& o)
{
    const ConstantSpecification cs = io::load_cs(fixture_dir / "cs.json");
    int failures = 0;
    for (int seed = 0; seed < lift_samples; ++seed) {
        const Derivation d = random_derivation(seed, 1 + seed % lift_depth, cs);
        try {
            const LiftResult r = lift(d, cs);
            if (r.witness.conclusion() != Formula::proof(r.term, d.conclusion()) || !r.cs.includes(cs) ||
                !validate_cs(r.cs).ok || !check_derivation(r.witness, r.cs).ok)
                ++failures;
        } catch (const std::exception&) {
            ++failures;
        }
    }
    if (failures)
        o.fail(std::to_string(failures) + " failures");
    else
        o.note << lift_samples << " lifts re-checked";
}

void soundness_cross_check(Outcome& o)
{
    // Half plain conclusions under the shared cs, half internalized
    // conclusions p:F under the cs the lift produced.
    const ConstantSpecification cs = io::load_cs(fixture_dir / "cs.json");
    const auto start = Clock::now();
    int violations = 0, truncated = 0, budget = 0, too_wide = 0;
    for (int seed = 0; seed < soundness_samples; ++seed) {
        const Derivation d = random_derivation(seed, 1 + seed % 4, cs);
        Formula goal = d.conclusion();
        ConstantSpecification goal_cs = cs;
        if (seed % 2) {
            const LiftResult r = lift(d, cs);
            goal = Formula::proof(r.term, d.conclusion());
            goal_cs = r.cs;
        }
        SearchResult r;
        try {
            r = countermodel_search(goal, goal_cs);
        } catch (const std::length_error&) {
            ++too_wide;   // more proof assertions than a seed mask holds
            continue;
        }
        if (r.model) {
            ++violations;
            if (violations == 1)
                std::cerr << "soundness violation: " << print_formula(goal) << '\n';
        }
        truncated += r.seeds_truncated;
        budget += r.budget_exceeded;
    }
    const double t = seconds_since(start);
    if (violations)
        o.fail(std::to_string(violations) + " violations");
    if (t >= soundness_limit)
        o.fail("took " + std::to_string(t) + " s");
    if (o.pass)
        o.note << soundness_samples << " conclusions, 0 violations, " << t << " s (" << truncated
               << " with truncated seed space, " << too_wide << " too wide to search, " << budget
               << " over budget)";
}

void conjoinability(Outcome& o)
{
    int failures = 0;
    for (int seed = 0; seed < conjoin_samples; ++seed) {
        const Derivation k = random_derivation(2 * seed, 1 + seed % 6, {});
        const Derivation l = random_derivation(2 * seed + 1, 1 + (seed / 6) % 6, {});
        try {
            const auto tk = proof_table(k, {});
            const auto tl = proof_table(l, {});
            const auto tn = proof_table(conjoin(k, l), {});
            if (!std::includes(tn.begin(), tn.end(), tk.begin(), tk.end()) ||
                !std::includes(tn.begin(), tn.end(), tl.begin(), tl.end()) || tn.size() > k.steps.size() + l.steps.size())
                ++failures;
        } catch (const InvalidProofCode&) {
            ++failures;
        }
    }
    if (failures)
        o.fail(std::to_string(failures) + " failures");
    else
        o.note << conjoin_samples << " pairs";
}

void non_realizability(Outcome& o)
{
    const Formula f = F("x:(u:false -> false) -> v:false");
    const auto start = Clock::now();
    const Verdict v = decide(f, {});
    const double t = seconds_since(start);
    const auto* n = std::get_if<NonTheorem>(&v);
    if (!n)
        o.fail("no countermodel");
    else {
        const std::vector<Formula> goal{f};
        if (!validate_model(n->model, goal, {}).ok() || forces(n->model, n->failing_world, f))
            o.fail("countermodel does not check");
    }
    if (t >= realizability_limit)
        o.fail("took " + std::to_string(t) + " s");
    if (o.pass)
        o.note << t * 1000 << " ms";
}

void property_suites(Outcome& o)
{
    testgen::Gen gen(1);
    int round_trip = 0, closure = 0;
    for (int i = 0; i < property_samples; ++i) {
        const Formula f = gen.formula(7);
        round_trip += parse_formula(print_formula(f)) != f;
    }
    const ConstantSpecification cs = io::load_cs(fixture_dir / "cs.json");
    for (int seed = 0; seed < property_samples; ++seed) {
        const Derivation d = random_derivation(seed, 5, cs);
        const PropositionMap props{{"P", gen.formula(2)}, {"Q", gen.formula(2)}};
        const VariableMap vars{{"x", gen.term(2)}, {"y", gen.term(2)}};
        closure += !check_derivation(d, cs).ok || !check_derivation(substitute(d, props, vars), substitute(cs, props, vars)).ok;
    }
    if (round_trip)
        o.fail(std::to_string(round_trip) + " round-trip failures");
    if (closure)
        o.fail(std::to_string(closure) + " substitution-closure failures");
    if (o.pass)
        o.note << property_samples << " formulas, " << property_samples << " derivations";
}

void desk_scale(Outcome& o)
{
    const ConstantSpecification cs = io::load_cs(fixture_dir / "cs.json");
    std::vector<std::pair<Formula, bool>> corpus;   // formula, expected theorem
    for (const char* name : derivation_fixtures)
        corpus.push_back({io::load_derivation(fixture_dir / name).conclusion(), true});
    for (const char* text : {"[](P -> Q) -> ([]P -> []Q)", "[]P -> [][]P", "[]([]P -> P) -> []P", "t:P -> []t:P"})
        corpus.push_back({F(text), true});
    for (const char* text : {"[]x:P -> P", "x:(u:false -> false) -> v:false", "[]P -> P", "[]false -> false", "~[]false"})
        corpus.push_back({F(text), false});

    double worst = 0;
    for (const auto& [f, theorem] : corpus) {
        SearchConfig cfg;
        cfg.time_budget = std::chrono::milliseconds(static_cast<long long>(corpus_limit * 1000));
        const auto start = Clock::now();
        const Verdict v = decide(f, cs, cfg);
        const double t = seconds_since(start);
        worst = std::max(worst, t);
        if (std::holds_alternative<Unknown>(v))
            o.fail("Unknown for " + print_formula(f) + " (" + std::get<Unknown>(v).exhausted + ")");
        else if (std::holds_alternative<Theorem>(v) != theorem)
            o.fail("wrong verdict for " + print_formula(f));
        if (t >= corpus_limit)
            o.fail(print_formula(f) + " took " + std::to_string(t) + " s");
    }
    if (o.pass)
        o.note << corpus.size() << " formulas, slowest " << worst << " s";
}

} // namespace

int main()
{
    const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
        {"fixture checking", fixture_checking},
        {"IER countermodel reproduction", ier_reproduction},
        {"GL oracle golden list", gl_oracle},
        {"internalization of random derivations", internalization},
        {"soundness cross-check", soundness_cross_check},
        {"conjoinability", conjoinability},
        {"non-realizability of full Loeb", non_realizability},
        {"round-trip and substitution closure", property_suites},
        {"desk-scale decisions on the corpus", desk_scale},
    };
    int failed = 0, index = 0;
    for (const auto& [name, body] : criteria) {
        Outcome o;
        try {
            body(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << ++index << ": " << name << " (" << o.note.str()
                  << ")" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
