#pragma once

#include "gla/calculus.hpp"
#include "gla/semantics.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>

namespace gla {

// Subformulas of the goal, of every c:A in the cs, and of every member of
// their H-sets.
struct ClosureSet {
    std::set<Formula> formulas;
    std::set<ProofPair> proof_pairs;   // (t, G) for every t:G in formulas
    std::set<std::string> letters;
};

ClosureSet closure_set(const Formula& f, const ConstantSpecification& cs);

struct SearchConfig {
    int max_worlds = 4;     // at most 6
    int max_seed = 12;      // largest evidence seed tried, in pairs
    EvalMode eval_mode = EvalMode::AllWorlds;
    int saturation_depth = 2;
    std::chrono::milliseconds time_budget{30000};
    bool parallel = true;
    // Certified derivations tried before saturation; empty disables.
    std::filesystem::path corpus_dir = GLA_FIXTURE_DIR;

    void validate() const;
};

struct SearchResult {
    std::optional<KripkeModel> model;
    std::string failing_world;
    bool budget_exceeded = false;
    bool seeds_truncated = false;   // some seeds were above max_seed
    std::uint64_t models_examined = 0;
};

// Enumerates models in canonical order (world count, frame, valuation, seed)
// and returns the first that is sound for the goal and the cs, satisfies the
// cs, and refutes the goal.
SearchResult countermodel_search(const Formula& f, const ConstantSpecification& cs, const SearchConfig& cfg = {});

struct Theorem {
    std::string certificate;               // "gl-tableau", "fixture:<file>", "saturation"
    std::optional<Derivation> derivation;
};
struct NonTheorem {
    KripkeModel model;
    std::string failing_world;
};
struct Unknown {
    std::string exhausted;
};
using Verdict = std::variant<Theorem, NonTheorem, Unknown>;

class FragmentError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// GL validity on finite transitive irreflexive frames. Throws FragmentError
// on formulas with proof assertions.
Verdict decide_gl(const Formula& f);

Verdict decide(const Formula& f, const ConstantSpecification& cs, const SearchConfig& cfg = {});

// Forward proof search used by decide: schema instances over the closure,
// Nec, Refl and propositional reasoning. The result re-checks with
// allow_taut.
std::optional<Derivation> saturate(const Formula& goal, const ConstantSpecification& cs, int depth);

// Certified derivations shipped as fixtures. A fixture proves every
// substitution instance of its conclusion.
struct CorpusHit {
    std::string name;
    Derivation derivation;
};
std::optional<CorpusHit> find_in_corpus(const Formula& f, const ConstantSpecification& cs,
                                        const std::filesystem::path& dir);

} // namespace gla
