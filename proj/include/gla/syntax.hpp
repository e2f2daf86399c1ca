#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace gla {

// Proof terms: variables, constants, application (*), sum (+) and the
// proof checker (!). Variables are named u..z, everything else lowercase is
// a constant.
class ProofTerm {
public:
    enum class Kind : unsigned char { Var, Const, App, Sum, Bang };

    static ProofTerm var(std::string name);
    static ProofTerm constant(std::string name);
    // Picks Var or Const from the first letter of the name.
    static ProofTerm named(std::string name);
    static ProofTerm app(ProofTerm left, ProofTerm right);
    static ProofTerm sum(ProofTerm left, ProofTerm right);
    static ProofTerm bang(ProofTerm inner);

    Kind kind() const;
    bool is_atomic() const { return kind() == Kind::Var || kind() == Kind::Const; }
    const std::string& name() const;
    const ProofTerm& left() const;
    const ProofTerm& right() const;
    const ProofTerm& inner() const { return left(); }

    std::size_t hash() const;
    std::size_t size() const;

    friend bool operator==(const ProofTerm& a, const ProofTerm& b);
    friend std::strong_ordering operator<=>(const ProofTerm& a, const ProofTerm& b);

private:
    struct Node;
    explicit ProofTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

class Formula {
public:
    enum class Kind : unsigned char { Atom, Falsum, Neg, And, Or, Imp, Box, Proof };

    static Formula atom(std::string name);
    static Formula falsum();
    static Formula truth() { return neg(falsum()); }
    static Formula neg(Formula body);
    static Formula conj(Formula left, Formula right);
    static Formula disj(Formula left, Formula right);
    static Formula imp(Formula left, Formula right);
    static Formula box(Formula body);
    static Formula proof(ProofTerm term, Formula body);

    Kind kind() const;
    const std::string& name() const;
    // Neg, Box and Proof keep their single operand in body().
    const Formula& body() const;
    const Formula& left() const;
    const Formula& right() const;
    const ProofTerm& term() const;

    bool is_binary() const;
    // Atom, Box and Proof: the pieces a truth table treats as opaque letters.
    bool is_propositional_atom() const;

    std::size_t hash() const;
    std::size_t size() const;

    friend bool operator==(const Formula& a, const Formula& b);
    friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

private:
    struct Node;
    static Formula make_binary(Kind kind, Formula left, Formula right);
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

using ProofPair = std::pair<ProofTerm, Formula>;

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, std::string expected);
    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

Formula parse_formula(std::string_view text);
ProofTerm parse_term(std::string_view text);

std::string print_term(const ProofTerm& t);
std::string print_formula(const Formula& f);

struct Closure {
    std::set<Formula> formulas;
    std::set<ProofTerm> terms;
};

Closure subformula_closure(const Formula& f);
void add_subterms(const ProofTerm& t, std::set<ProofTerm>& out);

using PropositionMap = std::map<std::string, Formula>;
using VariableMap = std::map<std::string, ProofTerm>;

ProofTerm substitute(const ProofTerm& t, const VariableMap& vars);
Formula substitute(const Formula& f, const PropositionMap& props, const VariableMap& vars);

bool mentions_proofs(const Formula& f);
bool mentions_boxes(const Formula& f);
void collect_letters(const Formula& f, std::set<std::string>& out);

// Pattern matching used by the axiom recognizer and the fixture corpus:
// atoms in `pattern` are formula metavariables, proof variables are term
// metavariables, everything else must match literally. Bindings already in
// the maps must agree.
bool match_pattern(const Formula& pattern, const Formula& f, PropositionMap& props, VariableMap& vars);
bool match_pattern(const ProofTerm& pattern, const ProofTerm& t, VariableMap& vars);

} // namespace gla

template <> struct std::hash<gla::ProofTerm> {
    std::size_t operator()(const gla::ProofTerm& t) const noexcept { return t.hash(); }
};
template <> struct std::hash<gla::Formula> {
    std::size_t operator()(const gla::Formula& f) const noexcept { return f.hash(); }
};
