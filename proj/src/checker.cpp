#include "gla/calculus.hpp"

#include <map>

namespace gla {

namespace {

// Formulas compiled over opaque letters for three-valued evaluation.
class PropositionalFrame {
public:
    enum Value : signed char { False = 0, True = 1, Unknown = 2 };

    int compile(const Formula& f)
    {
        Node n;
        switch (f.kind()) {
        case Formula::Kind::Falsum:
            n.op = Op::Bottom;
            break;
        case Formula::Kind::Atom:
        case Formula::Kind::Box:
        case Formula::Kind::Proof: {
            n.op = Op::Letter;
            auto [it, inserted] = letters_.try_emplace(f, static_cast<int>(letters_.size()));
            n.a = it->second;
            break;
        }
        case Formula::Kind::Neg:
            n.op = Op::Not;
            n.a = compile(f.body());
            break;
        case Formula::Kind::And:
            n.op = Op::And;
            n.a = compile(f.left());
            n.b = compile(f.right());
            break;
        case Formula::Kind::Or:
            n.op = Op::Or;
            n.a = compile(f.left());
            n.b = compile(f.right());
            break;
        case Formula::Kind::Imp:
            n.op = Op::Imp;
            n.a = compile(f.left());
            n.b = compile(f.right());
            break;
        }
        nodes_.push_back(n);
        return static_cast<int>(nodes_.size()) - 1;
    }

    std::size_t letter_count() const { return letters_.size(); }

    Value eval(int index, const std::vector<Value>& assignment) const
    {
        const Node& n = nodes_[index];
        switch (n.op) {
        case Op::Bottom:
            return False;
        case Op::Letter:
            return assignment[n.a];
        case Op::Not: {
            Value v = eval(n.a, assignment);
            return v == Unknown ? Unknown : (v == True ? False : True);
        }
        case Op::And: {
            Value l = eval(n.a, assignment);
            if (l == False)
                return False;
            Value r = eval(n.b, assignment);
            if (r == False)
                return False;
            return (l == True && r == True) ? True : Unknown;
        }
        case Op::Or: {
            Value l = eval(n.a, assignment);
            if (l == True)
                return True;
            Value r = eval(n.b, assignment);
            if (r == True)
                return True;
            return (l == False && r == False) ? False : Unknown;
        }
        case Op::Imp: {
            Value l = eval(n.a, assignment);
            if (l == False)
                return True;
            Value r = eval(n.b, assignment);
            if (r == True)
                return True;
            return (l == True && r == False) ? False : Unknown;
        }
        }
        return Unknown;
    }

private:
    enum class Op : unsigned char { Bottom, Letter, Not, And, Or, Imp };
    struct Node {
        Op op = Op::Bottom;
        int a = -1;
        int b = -1;
    };

    std::map<Formula, int> letters_;
    std::vector<Node> nodes_;
};

// Searches for an assignment making every premise true and the goal false.
bool find_refutation(const PropositionalFrame& frame, const std::vector<int>& premises, int goal,
                     std::vector<PropositionalFrame::Value>& assignment, std::size_t next)
{
    using V = PropositionalFrame::Value;
    if (frame.eval(goal, assignment) == V::True)
        return false;
    bool all_true = true;
    for (int p : premises) {
        V v = frame.eval(p, assignment);
        if (v == V::False)
            return false;
        all_true = all_true && v == V::True;
    }
    if (all_true && frame.eval(goal, assignment) == V::False)
        return true;
    if (next == assignment.size())
        return false;
    for (V choice : {V::True, V::False}) {
        assignment[next] = choice;
        if (find_refutation(frame, premises, goal, assignment, next + 1))
            return true;
    }
    assignment[next] = V::Unknown;
    return false;
}

bool refers_back(const Justification& j, std::size_t current, std::size_t count)
{
    if (j.refs.size() != count && count != 0)
        return false;
    for (std::size_t r : j.refs)
        if (r == 0 || r >= current)
            return false;
    return true;
}

} // namespace

bool propositionally_entails(std::span<const Formula> premises, const Formula& goal)
{
    PropositionalFrame frame;
    std::vector<int> compiled;
    compiled.reserve(premises.size());
    for (const Formula& p : premises)
        compiled.push_back(frame.compile(p));
    int g = frame.compile(goal);
    std::vector<PropositionalFrame::Value> assignment(frame.letter_count(), PropositionalFrame::Unknown);
    return !find_refutation(frame, compiled, g, assignment, 0);
}

CheckReport check_derivation(const Derivation& d, const ConstantSpecification& cs, CheckOptions options)
{
    if (d.steps.empty())
        return CheckReport::failure(0, "derivation has no steps");

    auto mode_violation = [&](const Formula& f) -> std::optional<std::string> {
        if (d.mode == LogicMode::GL && mentions_proofs(f))
            return "proof assertions are not part of GL";
        if (d.mode == LogicMode::LP && mentions_boxes(f))
            return "the box modality is not part of LP";
        return std::nullopt;
    };
    for (const Formula& h : d.hypotheses)
        if (auto why = mode_violation(h))
            return CheckReport::failure(0, "hypothesis " + print_formula(h) + ": " + *why);

    std::vector<bool> dependent(d.steps.size() + 1, false);
    auto at = [&](std::size_t index) -> const Formula& { return d.steps[index - 1].formula; };

    for (std::size_t i = 1; i <= d.steps.size(); ++i) {
        const Step& step = d.steps[i - 1];
        const Formula& f = step.formula;
        const Justification& j = step.just;
        if (auto why = mode_violation(f))
            return CheckReport::failure(i, *why);

        switch (j.rule) {
        case Rule::Axiom:
            if (!schema_allowed(j.schema, d.mode))
                return CheckReport::failure(i, std::string(to_string(j.schema)) + " is not an axiom of "
                                                   + std::string(to_string(d.mode)));
            if (!is_instance_of(f, j.schema))
                return CheckReport::failure(i, "not an instance of " + std::string(to_string(j.schema)));
            break;
        case Rule::CS:
            if (f.kind() != Formula::Kind::Proof || f.term().kind() != ProofTerm::Kind::Const)
                return CheckReport::failure(i, "CS step must assert c:A for a proof constant c");
            if (!j.constant.empty() && j.constant != f.term().name())
                return CheckReport::failure(i, "CS step names constant " + j.constant + " but asserts "
                                                   + f.term().name());
            if (!cs.contains(f.term().name(), f.body()))
                return CheckReport::failure(i, "not in the constant specification");
            break;
        case Rule::MP:
            if (!refers_back(j, i, 2))
                return CheckReport::failure(i, "MP must cite two earlier steps");
            if (at(j.refs[0]) != Formula::imp(at(j.refs[1]), f))
                return CheckReport::failure(i, "step " + std::to_string(j.refs[0]) + " is not step "
                                                   + std::to_string(j.refs[1]) + " -> this formula");
            dependent[i] = dependent[j.refs[0]] || dependent[j.refs[1]];
            break;
        case Rule::Nec:
        case Rule::Refl: {
            if (d.mode == LogicMode::LP)
                return CheckReport::failure(i, "LP has no " + std::string(to_string(j.rule)) + " rule");
            if (!refers_back(j, i, 1))
                return CheckReport::failure(i, std::string(to_string(j.rule)) + " must cite one earlier step");
            std::size_t r = j.refs[0];
            bool shape = j.rule == Rule::Nec ? f == Formula::box(at(r)) : at(r) == Formula::box(f);
            if (!shape)
                return CheckReport::failure(i, j.rule == Rule::Nec ? "formula is not [] of the cited step"
                                                                   : "cited step is not [] of this formula");
            if (dependent[r])
                return CheckReport::failure(i, std::string(to_string(j.rule))
                                                   + " applied to a hypothesis-dependent step");
            break;
        }
        case Rule::Hyp:
            if (j.hypothesis == 0 || j.hypothesis > d.hypotheses.size())
                return CheckReport::failure(i, "no hypothesis " + std::to_string(j.hypothesis));
            if (d.hypotheses[j.hypothesis - 1] != f)
                return CheckReport::failure(i, "formula differs from hypothesis " + std::to_string(j.hypothesis));
            dependent[i] = true;
            break;
        case Rule::Taut: {
            if (!options.allow_taut)
                return CheckReport::failure(i, "Taut steps are disabled");
            if (!refers_back(j, i, 0))
                return CheckReport::failure(i, "Taut must cite earlier steps");
            std::vector<Formula> premises;
            for (std::size_t r : j.refs) {
                premises.push_back(at(r));
                dependent[i] = dependent[i] || dependent[r];
            }
            if (!propositionally_entails(premises, f))
                return CheckReport::failure(i, "not a propositional consequence of the cited steps");
            break;
        }
        }
    }
    return CheckReport::success();
}

} // namespace gla
