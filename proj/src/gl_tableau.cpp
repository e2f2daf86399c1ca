#include "gla/decide.hpp"

#include <stdexcept>

namespace gla {

namespace {

using Signed = std::pair<bool, Formula>;   // true: must hold, false: must fail

struct Tree {
    std::set<std::string> atoms;
    std::vector<Tree> children;
};

// Satisfiability of a set of signed formulas at the root of a finite
// transitive irreflexive tree. On success returns the tree.
//
// Propositional rules split the agenda; once only letters and boxes remain,
// every F []A needs a successor carrying T B, T []B for each T []B here, plus
// T []A and F A. The extra T []A is the Lob step; it also makes the boxed part
// grow along each path, which bounds the depth.
std::optional<Tree> satisfy(std::set<Signed> literals, std::vector<Signed> agenda)
{
    using K = Formula::Kind;
    while (!agenda.empty()) {
        Signed s = std::move(agenda.back());
        agenda.pop_back();
        const auto& [sign, f] = s;
        switch (f.kind()) {
        case K::Falsum:
            if (sign)
                return std::nullopt;
            break;
        case K::Atom:
        case K::Box:
        case K::Proof:
            if (literals.count({!sign, f}))
                return std::nullopt;
            literals.insert(s);
            break;
        case K::Neg:
            agenda.push_back({!sign, f.body()});
            break;
        case K::And:
            if (sign) {
                agenda.push_back({true, f.left()});
                agenda.push_back({true, f.right()});
            } else {
                auto left = agenda;
                left.push_back({false, f.left()});
                if (auto t = satisfy(literals, std::move(left)))
                    return t;
                agenda.push_back({false, f.right()});
            }
            break;
        case K::Or:
            if (!sign) {
                agenda.push_back({false, f.left()});
                agenda.push_back({false, f.right()});
            } else {
                auto left = agenda;
                left.push_back({true, f.left()});
                if (auto t = satisfy(literals, std::move(left)))
                    return t;
                agenda.push_back({true, f.right()});
            }
            break;
        case K::Imp:
            if (!sign) {
                agenda.push_back({true, f.left()});
                agenda.push_back({false, f.right()});
            } else {
                auto left = agenda;
                left.push_back({false, f.left()});
                if (auto t = satisfy(literals, std::move(left)))
                    return t;
                agenda.push_back({true, f.right()});
            }
            break;
        }
    }

    Tree node;
    std::vector<Signed> carried;
    for (const auto& [sign, f] : literals) {
        if (sign && f.kind() == Formula::Kind::Atom)
            node.atoms.insert(f.name());
        if (sign && f.kind() == Formula::Kind::Box) {
            carried.push_back({true, f.body()});
            carried.push_back({true, f});
        }
    }
    for (const auto& [sign, f] : literals) {
        if (sign || f.kind() != Formula::Kind::Box)
            continue;
        std::vector<Signed> child = carried;
        child.push_back({true, f});
        child.push_back({false, f.body()});
        auto t = satisfy({}, std::move(child));
        if (!t)
            return std::nullopt;
        node.children.push_back(std::move(*t));
    }
    return node;
}

void number(const Tree& t, std::vector<std::string>& ancestors, KripkeModel& m)
{
    const std::string label = std::to_string(m.worlds.size() + 1);
    m.worlds.push_back(label);
    for (const auto& a : ancestors)
        m.rel.insert({a, label});
    for (const auto& atom : t.atoms)
        m.valuation[atom].insert(label);
    ancestors.push_back(label);
    for (const Tree& c : t.children)
        number(c, ancestors, m);
    ancestors.pop_back();
}

} // namespace

Verdict decide_gl(const Formula& f)
{
    if (mentions_proofs(f))
        throw FragmentError("decide_gl takes formulas without proof assertions: " + print_formula(f));
    auto tree = satisfy({}, {{false, f}});
    if (!tree)
        return Theorem{"gl-tableau", std::nullopt};

    KripkeModel m;
    std::vector<std::string> ancestors;
    number(*tree, ancestors, m);
    m.root = m.worlds.front();
    if (failing_world(m, f, EvalMode::RootOnly) != m.root)
        throw std::logic_error("tableau countermodel does not refute " + print_formula(f));
    return NonTheorem{std::move(m), "1"};
}

} // namespace gla
