#include "gla/syntax.hpp"

#include <cctype>
#include <functional>
#include <optional>

namespace gla {

namespace {

std::size_t mix(std::size_t seed, std::size_t value)
{
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool is_variable_name(std::string_view name)
{
    return !name.empty() && name.front() >= 'u' && name.front() <= 'z';
}

} // namespace

// ---------------------------------------------------------------------------
// ProofTerm

struct ProofTerm::Node {
    Kind kind;
    std::string name;
    std::optional<ProofTerm> left;
    std::optional<ProofTerm> right;
    std::size_t hash = 0;
    std::size_t size = 1;
};

ProofTerm ProofTerm::var(std::string name)
{
    if (!is_variable_name(name))
        throw std::invalid_argument("proof variable names start with u..z: " + name);
    auto n = std::make_shared<Node>(Node{Kind::Var, std::move(name)});
    n->hash = mix(std::hash<std::string>{}(n->name), 1);
    return ProofTerm(std::move(n));
}

ProofTerm ProofTerm::constant(std::string name)
{
    if (name.empty() || !std::islower(static_cast<unsigned char>(name.front())) || is_variable_name(name))
        throw std::invalid_argument("proof constant names start with a..t: " + name);
    auto n = std::make_shared<Node>(Node{Kind::Const, std::move(name)});
    n->hash = mix(std::hash<std::string>{}(n->name), 2);
    return ProofTerm(std::move(n));
}

ProofTerm ProofTerm::named(std::string name)
{
    return is_variable_name(name) ? var(std::move(name)) : constant(std::move(name));
}

ProofTerm ProofTerm::app(ProofTerm left, ProofTerm right)
{
    auto n = std::make_shared<Node>(Node{Kind::App, {}, left, right});
    n->hash = mix(mix(3, left.hash()), right.hash());
    n->size = 1 + left.size() + right.size();
    return ProofTerm(std::move(n));
}

ProofTerm ProofTerm::sum(ProofTerm left, ProofTerm right)
{
    auto n = std::make_shared<Node>(Node{Kind::Sum, {}, left, right});
    n->hash = mix(mix(4, left.hash()), right.hash());
    n->size = 1 + left.size() + right.size();
    return ProofTerm(std::move(n));
}

ProofTerm ProofTerm::bang(ProofTerm inner)
{
    auto n = std::make_shared<Node>(Node{Kind::Bang, {}, inner});
    n->hash = mix(5, inner.hash());
    n->size = 1 + inner.size();
    return ProofTerm(std::move(n));
}

ProofTerm::Kind ProofTerm::kind() const { return node_->kind; }
const std::string& ProofTerm::name() const { return node_->name; }
const ProofTerm& ProofTerm::left() const { return *node_->left; }
const ProofTerm& ProofTerm::right() const { return *node_->right; }
std::size_t ProofTerm::hash() const { return node_->hash; }
std::size_t ProofTerm::size() const { return node_->size; }

bool operator==(const ProofTerm& a, const ProofTerm& b)
{
    if (a.node_ == b.node_)
        return true;
    if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size())
        return false;
    switch (a.kind()) {
    case ProofTerm::Kind::Var:
    case ProofTerm::Kind::Const:
        return a.name() == b.name();
    case ProofTerm::Kind::Bang:
        return a.inner() == b.inner();
    default:
        return a.left() == b.left() && a.right() == b.right();
    }
}

std::strong_ordering operator<=>(const ProofTerm& a, const ProofTerm& b)
{
    if (a.node_ == b.node_)
        return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0)
        return c;
    switch (a.kind()) {
    case ProofTerm::Kind::Var:
    case ProofTerm::Kind::Const:
        return a.name().compare(b.name()) <=> 0;
    case ProofTerm::Kind::Bang:
        return a.inner() <=> b.inner();
    default:
        if (auto c = a.left() <=> b.left(); c != 0)
            return c;
        return a.right() <=> b.right();
    }
}

// ---------------------------------------------------------------------------
// Formula

struct Formula::Node {
    Kind kind;
    std::string name;
    std::optional<Formula> left;
    std::optional<Formula> right;
    std::optional<ProofTerm> term;
    std::size_t hash = 0;
    std::size_t size = 1;
};

Formula Formula::atom(std::string name)
{
    if (name.empty() || !std::isupper(static_cast<unsigned char>(name.front())))
        throw std::invalid_argument("sentence letters start uppercase: " + name);
    auto n = std::make_shared<Node>(Node{Kind::Atom, std::move(name)});
    n->hash = mix(std::hash<std::string>{}(n->name), 11);
    return Formula(std::move(n));
}

Formula Formula::falsum()
{
    static const Formula f = [] {
        auto n = std::make_shared<Node>(Node{Kind::Falsum});
        n->hash = 12;
        return Formula(std::move(n));
    }();
    return f;
}

Formula Formula::neg(Formula body)
{
    auto n = std::make_shared<Node>(Node{Kind::Neg, {}, body});
    n->hash = mix(13, body.hash());
    n->size = 1 + body.size();
    return Formula(std::move(n));
}

Formula Formula::box(Formula body)
{
    auto n = std::make_shared<Node>(Node{Kind::Box, {}, body});
    n->hash = mix(17, body.hash());
    n->size = 1 + body.size();
    return Formula(std::move(n));
}

Formula Formula::proof(ProofTerm term, Formula body)
{
    auto n = std::make_shared<Node>(Node{Kind::Proof, {}, body, std::nullopt, term});
    n->hash = mix(mix(18, term.hash()), body.hash());
    n->size = 1 + term.size() + body.size();
    return Formula(std::move(n));
}

namespace {

std::size_t binary_tag(Formula::Kind kind)
{
    switch (kind) {
    case Formula::Kind::And: return 14;
    case Formula::Kind::Or: return 15;
    default: return 16;
    }
}

} // namespace

Formula Formula::make_binary(Kind kind, Formula left, Formula right)
{
    auto n = std::make_shared<Node>(Node{kind, {}, left, right});
    n->hash = mix(mix(binary_tag(kind), left.hash()), right.hash());
    n->size = 1 + left.size() + right.size();
    return Formula(std::move(n));
}

Formula Formula::conj(Formula left, Formula right) { return make_binary(Kind::And, std::move(left), std::move(right)); }
Formula Formula::disj(Formula left, Formula right) { return make_binary(Kind::Or, std::move(left), std::move(right)); }
Formula Formula::imp(Formula left, Formula right) { return make_binary(Kind::Imp, std::move(left), std::move(right)); }

Formula::Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::body() const { return *node_->left; }
const Formula& Formula::left() const { return *node_->left; }
const Formula& Formula::right() const { return *node_->right; }
const ProofTerm& Formula::term() const { return *node_->term; }
std::size_t Formula::hash() const { return node_->hash; }
std::size_t Formula::size() const { return node_->size; }

bool Formula::is_binary() const
{
    return kind() == Kind::And || kind() == Kind::Or || kind() == Kind::Imp;
}

bool Formula::is_propositional_atom() const
{
    return kind() == Kind::Atom || kind() == Kind::Box || kind() == Kind::Proof;
}

bool operator==(const Formula& a, const Formula& b)
{
    if (a.node_ == b.node_)
        return true;
    if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size())
        return false;
    switch (a.kind()) {
    case Formula::Kind::Atom:
        return a.name() == b.name();
    case Formula::Kind::Falsum:
        return true;
    case Formula::Kind::Neg:
    case Formula::Kind::Box:
        return a.body() == b.body();
    case Formula::Kind::Proof:
        return a.term() == b.term() && a.body() == b.body();
    default:
        return a.left() == b.left() && a.right() == b.right();
    }
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b)
{
    if (a.node_ == b.node_)
        return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0)
        return c;
    switch (a.kind()) {
    case Formula::Kind::Atom:
        return a.name().compare(b.name()) <=> 0;
    case Formula::Kind::Falsum:
        return std::strong_ordering::equal;
    case Formula::Kind::Neg:
    case Formula::Kind::Box:
        return a.body() <=> b.body();
    case Formula::Kind::Proof:
        if (auto c = a.term() <=> b.term(); c != 0)
            return c;
        return a.body() <=> b.body();
    default:
        if (auto c = a.left() <=> b.left(); c != 0)
            return c;
        return a.right() <=> b.right();
    }
}

// ---------------------------------------------------------------------------
// Closure, substitution and traversal helpers

void add_subterms(const ProofTerm& t, std::set<ProofTerm>& out)
{
    if (!out.insert(t).second)
        return;
    switch (t.kind()) {
    case ProofTerm::Kind::Bang:
        add_subterms(t.inner(), out);
        break;
    case ProofTerm::Kind::App:
    case ProofTerm::Kind::Sum:
        add_subterms(t.left(), out);
        add_subterms(t.right(), out);
        break;
    default:
        break;
    }
}

namespace {

void close_formula(const Formula& f, Closure& out)
{
    if (!out.formulas.insert(f).second)
        return;
    switch (f.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Falsum:
        break;
    case Formula::Kind::Neg:
    case Formula::Kind::Box:
        close_formula(f.body(), out);
        break;
    case Formula::Kind::Proof:
        add_subterms(f.term(), out.terms);
        close_formula(f.body(), out);
        break;
    default:
        close_formula(f.left(), out);
        close_formula(f.right(), out);
        break;
    }
}

} // namespace

Closure subformula_closure(const Formula& f)
{
    Closure out;
    close_formula(f, out);
    return out;
}

ProofTerm substitute(const ProofTerm& t, const VariableMap& vars)
{
    switch (t.kind()) {
    case ProofTerm::Kind::Var: {
        auto it = vars.find(t.name());
        return it == vars.end() ? t : it->second;
    }
    case ProofTerm::Kind::Const:
        return t;
    case ProofTerm::Kind::Bang:
        return ProofTerm::bang(substitute(t.inner(), vars));
    case ProofTerm::Kind::App:
        return ProofTerm::app(substitute(t.left(), vars), substitute(t.right(), vars));
    case ProofTerm::Kind::Sum:
        return ProofTerm::sum(substitute(t.left(), vars), substitute(t.right(), vars));
    }
    return t;
}

Formula substitute(const Formula& f, const PropositionMap& props, const VariableMap& vars)
{
    switch (f.kind()) {
    case Formula::Kind::Atom: {
        auto it = props.find(f.name());
        return it == props.end() ? f : it->second;
    }
    case Formula::Kind::Falsum:
        return f;
    case Formula::Kind::Neg:
        return Formula::neg(substitute(f.body(), props, vars));
    case Formula::Kind::Box:
        return Formula::box(substitute(f.body(), props, vars));
    case Formula::Kind::Proof:
        return Formula::proof(substitute(f.term(), vars), substitute(f.body(), props, vars));
    case Formula::Kind::And:
        return Formula::conj(substitute(f.left(), props, vars), substitute(f.right(), props, vars));
    case Formula::Kind::Or:
        return Formula::disj(substitute(f.left(), props, vars), substitute(f.right(), props, vars));
    case Formula::Kind::Imp:
        return Formula::imp(substitute(f.left(), props, vars), substitute(f.right(), props, vars));
    }
    return f;
}

bool mentions_proofs(const Formula& f)
{
    switch (f.kind()) {
    case Formula::Kind::Proof:
        return true;
    case Formula::Kind::Atom:
    case Formula::Kind::Falsum:
        return false;
    case Formula::Kind::Neg:
    case Formula::Kind::Box:
        return mentions_proofs(f.body());
    default:
        return mentions_proofs(f.left()) || mentions_proofs(f.right());
    }
}

bool mentions_boxes(const Formula& f)
{
    switch (f.kind()) {
    case Formula::Kind::Box:
        return true;
    case Formula::Kind::Atom:
    case Formula::Kind::Falsum:
        return false;
    case Formula::Kind::Neg:
    case Formula::Kind::Proof:
        return mentions_boxes(f.body());
    default:
        return mentions_boxes(f.left()) || mentions_boxes(f.right());
    }
}

void collect_letters(const Formula& f, std::set<std::string>& out)
{
    switch (f.kind()) {
    case Formula::Kind::Atom:
        out.insert(f.name());
        break;
    case Formula::Kind::Falsum:
        break;
    case Formula::Kind::Neg:
    case Formula::Kind::Box:
    case Formula::Kind::Proof:
        collect_letters(f.body(), out);
        break;
    default:
        collect_letters(f.left(), out);
        collect_letters(f.right(), out);
        break;
    }
}

bool match_pattern(const ProofTerm& pattern, const ProofTerm& t, VariableMap& vars)
{
    switch (pattern.kind()) {
    case ProofTerm::Kind::Var: {
        auto [it, inserted] = vars.try_emplace(pattern.name(), t);
        return inserted || it->second == t;
    }
    case ProofTerm::Kind::Const:
        return t.kind() == ProofTerm::Kind::Const && t.name() == pattern.name();
    case ProofTerm::Kind::Bang:
        return t.kind() == ProofTerm::Kind::Bang && match_pattern(pattern.inner(), t.inner(), vars);
    default:
        return t.kind() == pattern.kind() && match_pattern(pattern.left(), t.left(), vars)
            && match_pattern(pattern.right(), t.right(), vars);
    }
}

bool match_pattern(const Formula& pattern, const Formula& f, PropositionMap& props, VariableMap& vars)
{
    switch (pattern.kind()) {
    case Formula::Kind::Atom: {
        auto [it, inserted] = props.try_emplace(pattern.name(), f);
        return inserted || it->second == f;
    }
    case Formula::Kind::Falsum:
        return f.kind() == Formula::Kind::Falsum;
    case Formula::Kind::Neg:
    case Formula::Kind::Box:
        return f.kind() == pattern.kind() && match_pattern(pattern.body(), f.body(), props, vars);
    case Formula::Kind::Proof:
        return f.kind() == Formula::Kind::Proof && match_pattern(pattern.term(), f.term(), vars)
            && match_pattern(pattern.body(), f.body(), props, vars);
    default:
        return f.kind() == pattern.kind() && match_pattern(pattern.left(), f.left(), props, vars)
            && match_pattern(pattern.right(), f.right(), props, vars);
    }
}

} // namespace gla
