#pragma once

#include "gla/syntax.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gla {

// Axiom schemas in enumeration order. P1..P10 are the classical base:
//   P1 A->(B->A)                 P6  A->A|B
//   P2 (A->B)->((A->(B->C))->(A->C))   P7  B->A|B
//   P3 A&B->A                    P8  (A->C)->((B->C)->(A|B->C))
//   P4 A&B->B                    P9  (A->B)->((A->~B)->~A)
//   P5 A->(B->A&B)               P10 ~~A->A
enum class SchemaId : unsigned char {
    P1, P2, P3, P4, P5, P6, P7, P8, P9, P10,
    GL1, GL2, GL3,
    LP1, LP2, LP3, LP4,
    C1, C2, C3,
};

inline constexpr int schema_count = 20;

enum class LogicMode : unsigned char { GLA, GL, LP };

std::string_view to_string(SchemaId id);
std::optional<SchemaId> schema_from_string(std::string_view name);
std::string_view to_string(LogicMode mode);
std::optional<LogicMode> mode_from_string(std::string_view name);

bool schema_allowed(SchemaId id, LogicMode mode);

// Pattern formulas for a schema: atoms are formula metavariables (A, B, C),
// proof variables are term metavariables (x, y). LP3 has two shapes.
std::span<const Formula> schema_patterns(SchemaId id);

struct AxiomMatch {
    SchemaId schema;
    PropositionMap formulas;
    VariableMap terms;
};

std::optional<AxiomMatch> match_axiom(const Formula& f, LogicMode mode = LogicMode::GLA);
bool is_instance_of(const Formula& f, SchemaId id);

struct CsEntry {
    std::string constant;
    Formula axiom;

    Formula assertion() const { return Formula::proof(ProofTerm::constant(constant), axiom); }
    friend auto operator<=>(const CsEntry&, const CsEntry&) = default;
    friend bool operator==(const CsEntry&, const CsEntry&) = default;
};

class ConstantSpecification {
public:
    ConstantSpecification() = default;
    ConstantSpecification(std::initializer_list<CsEntry> entries) : entries_(entries) {}

    bool add(std::string constant, Formula axiom) { return entries_.insert({std::move(constant), std::move(axiom)}).second; }
    void merge(const ConstantSpecification& other) { entries_.insert(other.entries_.begin(), other.entries_.end()); }
    bool contains(const std::string& constant, const Formula& axiom) const { return entries_.count({constant, axiom}) > 0; }
    bool includes(const ConstantSpecification& other) const;
    bool uses_constant(std::string_view name) const;

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    friend bool operator==(const ConstantSpecification&, const ConstantSpecification&) = default;

private:
    std::set<CsEntry> entries_;
};

// Step indices in justifications and reports are 1-based, as in derivation
// files.
struct CheckReport {
    bool ok = true;
    std::optional<std::pair<std::size_t, std::string>> first_error;

    static CheckReport success() { return {}; }
    static CheckReport failure(std::size_t step, std::string reason) { return {false, std::pair{step, std::move(reason)}}; }
};

enum class Rule : unsigned char { Axiom, CS, MP, Nec, Refl, Hyp, Taut };

std::string_view to_string(Rule rule);
std::optional<Rule> rule_from_string(std::string_view name);

struct Justification {
    Rule rule = Rule::Axiom;
    SchemaId schema = SchemaId::P1;   // Axiom
    std::string constant;             // CS
    std::vector<std::size_t> refs;    // MP: {implication, minor}; Nec, Refl: {premise}; Taut: premises
    std::size_t hypothesis = 0;       // Hyp

    static Justification axiom(SchemaId id) { return {Rule::Axiom, id}; }
    static Justification cs(std::string c) { return {Rule::CS, SchemaId::P1, std::move(c)}; }
    static Justification mp(std::size_t impl, std::size_t minor) { return {Rule::MP, SchemaId::P1, {}, {impl, minor}}; }
    static Justification nec(std::size_t i) { return {Rule::Nec, SchemaId::P1, {}, {i}}; }
    static Justification refl(std::size_t i) { return {Rule::Refl, SchemaId::P1, {}, {i}}; }
    static Justification hyp(std::size_t k) { return {Rule::Hyp, SchemaId::P1, {}, {}, k}; }
    static Justification taut(std::vector<std::size_t> premises) { return {Rule::Taut, SchemaId::P1, {}, std::move(premises)}; }

    friend bool operator==(const Justification&, const Justification&) = default;
};

struct Step {
    Formula formula;
    Justification just;

    friend bool operator==(const Step&, const Step&) = default;
};

struct Derivation {
    LogicMode mode = LogicMode::GLA;
    std::vector<Formula> hypotheses;
    std::vector<Step> steps;

    const Formula& conclusion() const { return steps.back().formula; }
    friend bool operator==(const Derivation&, const Derivation&) = default;
};

struct CheckOptions {
    bool allow_taut = false;
};

CheckReport validate_cs(const ConstantSpecification& cs);
CheckReport check_derivation(const Derivation& d, const ConstantSpecification& cs, CheckOptions options = {});

// True when `goal` is a classical consequence of `premises`, reading Box and
// Proof subformulas as opaque letters.
bool propositionally_entails(std::span<const Formula> premises, const Formula& goal);

class TransformError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};
class InvalidProofCode : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Discharges the last hypothesis A, producing a derivation of A -> G.
Derivation deduction_transform(const Derivation& d);

std::set<Formula> proof_table(const Derivation& k, const ConstantSpecification& cs);
Derivation conjoin(const Derivation& k, const Derivation& l);

Derivation random_derivation(std::uint64_t seed, int depth, const ConstantSpecification& cs);

Derivation substitute(const Derivation& d, const PropositionMap& props, const VariableMap& vars);
ConstantSpecification substitute(const ConstantSpecification& cs, const PropositionMap& props, const VariableMap& vars);

// Appends steps with 1-based bookkeeping and tracks which lines depend on
// hypotheses. Axiom and CS lines are shared when the same formula was
// already derived hypothesis-free.
class DerivationBuilder {
public:
    explicit DerivationBuilder(LogicMode mode = LogicMode::GLA) { derivation_.mode = mode; }

    // Adds f as a hypothesis (reusing an equal one) and emits a Hyp line.
    std::size_t hypothesis(const Formula& f);
    std::size_t declare_hypothesis(const Formula& f);
    std::size_t hypothesis_step(std::size_t k);
    std::size_t axiom(const Formula& f);
    std::size_t axiom(const Formula& f, SchemaId id);
    std::size_t cs(const std::string& constant, const Formula& axiom);
    std::size_t mp(std::size_t implication, std::size_t minor);
    std::size_t nec(std::size_t premise);
    std::size_t refl(std::size_t premise);
    std::size_t taut(const Formula& f, std::vector<std::size_t> premises);

    // Splices a hypothesis-free derivation and returns its conclusion's index.
    std::size_t include(const Derivation& sub);

    // From A->B and B->C, derive A->C.
    std::size_t syllogism(std::size_t ab, std::size_t bc);
    // From A, derive B->A.
    std::size_t weaken(std::size_t a, const Formula& b);

    const Formula& formula(std::size_t index) const { return derivation_.steps.at(index - 1).formula; }
    bool depends_on_hypotheses(std::size_t index) const { return dependent_.at(index - 1); }
    std::optional<std::size_t> find(const Formula& f) const;
    std::size_t size() const { return derivation_.steps.size(); }

    const Derivation& derivation() const { return derivation_; }
    Derivation take() { return std::move(derivation_); }

private:
    std::size_t push(Formula f, Justification j, bool dependent);

    Derivation derivation_;
    std::vector<bool> dependent_;
};

// Small propositional lemmas over the P1..P10 base, all hypothesis-free.
namespace lemmas {

Derivation identity(const Formula& a);                    // A -> A
Derivation excluded_middle(const Formula& a);             // A | ~A
Derivation explosion(const Formula& a, const Formula& b); // ~A -> (A -> B)
Derivation contraposition(const Derivation& ab);          // from A -> B: ~B -> ~A
Derivation cases(const Derivation& ac, const Derivation& nac); // from A->C, ~A->C: C

} // namespace lemmas

} // namespace gla
