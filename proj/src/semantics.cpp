#include "gla/semantics.hpp"

#include <stdexcept>

namespace gla {

std::vector<std::string> frame_problems(const KripkeModel& m)
{
    std::vector<std::string> problems;
    if (m.worlds.empty()) {
        problems.push_back("frame: no worlds");
        return problems;
    }
    std::set<std::string> known;
    for (const auto& w : m.worlds)
        if (!known.insert(w).second)
            problems.push_back("frame: duplicate world " + w);
    for (const auto& [u, v] : m.rel) {
        if (!known.count(u) || !known.count(v))
            problems.push_back("frame: relation mentions unknown world in (" + u + "," + v + ")");
        if (u == v)
            problems.push_back("frame: " + u + " sees itself");
    }
    for (const auto& [u, v] : m.rel)
        for (const auto& [v2, w] : m.rel)
            if (v == v2 && !m.rel.count({u, w}))
                problems.push_back("frame: not transitive at " + u + " < " + v + " < " + w);
    if (!known.count(m.root)) {
        problems.push_back("root: " + m.root + " is not a world");
    } else {
        for (const auto& w : m.worlds)
            if (w != m.root && !m.rel.count({m.root, w}))
                problems.push_back("root: " + m.root + " does not see " + w);
    }
    for (const auto& [letter, where] : m.valuation)
        for (const auto& w : where)
            if (!known.count(w))
                problems.push_back("valuation: " + letter + " true at unknown world " + w);
    return problems;
}

ModelEvaluator::ModelEvaluator(const KripkeModel& m)
    : labels_(m.worlds), evidence_(m.evidence)
{
    for (std::size_t i = 0; i < labels_.size(); ++i)
        index_.emplace(labels_[i], i);
    successors_.resize(labels_.size());
    for (const auto& [u, v] : m.rel) {
        auto iu = index_.find(u), iv = index_.find(v);
        if (iu == index_.end() || iv == index_.end())
            throw std::invalid_argument("relation mentions an unknown world");
        successors_[iu->second].push_back(iv->second);
    }
    auto r = index_.find(m.root);
    if (r == index_.end())
        throw std::invalid_argument("root is not a world: " + m.root);
    root_ = r->second;
    for (const auto& [letter, where] : m.valuation) {
        std::vector<bool> truth(labels_.size(), false);
        for (const auto& w : where)
            if (auto it = index_.find(w); it != index_.end())
                truth[it->second] = true;
        valuation_.emplace(letter, std::move(truth));
    }
}

bool ModelEvaluator::forces(const std::string& world, const Formula& f)
{
    auto it = index_.find(world);
    if (it == index_.end())
        throw std::invalid_argument("unknown world: " + world);
    return truth(f)[it->second];
}

const std::vector<bool>& ModelEvaluator::truth(const Formula& f)
{
    if (auto it = memo_.find(f); it != memo_.end())
        return it->second;

    const std::size_t n = labels_.size();
    std::vector<bool> out(n, false);
    switch (f.kind()) {
    case Formula::Kind::Atom:
        if (auto it = valuation_.find(f.name()); it != valuation_.end())
            out = it->second;
        break;
    case Formula::Kind::Falsum:
        break;
    case Formula::Kind::Neg: {
        const auto& b = truth(f.body());
        for (std::size_t i = 0; i < n; ++i)
            out[i] = !b[i];
        break;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp: {
        const auto l = truth(f.left());
        const auto& r = truth(f.right());
        for (std::size_t i = 0; i < n; ++i) {
            if (f.kind() == Formula::Kind::And)
                out[i] = l[i] && r[i];
            else if (f.kind() == Formula::Kind::Or)
                out[i] = l[i] || r[i];
            else
                out[i] = !l[i] || r[i];
        }
        break;
    }
    case Formula::Kind::Box: {
        const auto& b = truth(f.body());
        for (std::size_t i = 0; i < n; ++i) {
            bool all = true;
            for (std::size_t v : successors_[i])
                all = all && b[v];
            out[i] = all;
        }
        break;
    }
    case Formula::Kind::Proof: {
        // u forces t:F iff E(t,F) and F holds at every world, so the value
        // does not depend on u.
        const auto& b = truth(f.body());
        bool everywhere = true;
        for (std::size_t i = 0; i < n; ++i)
            everywhere = everywhere && b[i];
        bool value = everywhere && evidence_.holds(f.term(), f.body());
        out.assign(n, value);
        break;
    }
    }
    return memo_.emplace(f, std::move(out)).first->second;
}

bool forces(const KripkeModel& m, const std::string& world, const Formula& f)
{
    return ModelEvaluator(m).forces(world, f);
}

namespace {

void collect_h(const Formula& f, std::set<Formula>& out)
{
    switch (f.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Falsum:
        break;
    case Formula::Kind::Box:
        out.insert(Formula::imp(f, f.body()));
        collect_h(f.body(), out);
        break;
    case Formula::Kind::Neg:
    case Formula::Kind::Proof:
        collect_h(f.body(), out);
        break;
    default:
        collect_h(f.left(), out);
        collect_h(f.right(), out);
        break;
    }
}

} // namespace

std::set<Formula> h_set(const Formula& f)
{
    std::set<Formula> out;
    collect_h(f, out);
    return out;
}

SoundnessReport validate_model(const KripkeModel& m, std::span<const Formula> sound_for, const ConstantSpecification& cs)
{
    SoundnessReport report;
    report.frame_ok = true;
    report.root_ok = true;
    for (auto& p : frame_problems(m)) {
        if (p.rfind("root:", 0) == 0)
            report.root_ok = false;
        else
            report.frame_ok = false;
        report.failures.push_back(std::move(p));
    }
    if (!report.frame_ok || !report.root_ok)
        return report;

    ModelEvaluator eval(m);
    const std::size_t root = eval.root_index();
    auto sound_at_root = [&](const Formula& f, const char* what) {
        bool ok = true;
        for (const Formula& h : h_set(f)) {
            if (!eval.forces_at(root, h)) {
                ok = false;
                report.failures.push_back(std::string(what) + ": root does not force " + print_formula(h));
            }
        }
        return ok;
    };

    report.f_sound = true;
    for (const Formula& f : sound_for)
        report.f_sound = sound_at_root(f, "soundness") && report.f_sound;

    report.cs_sound = true;
    report.cs_holds = true;
    for (const auto& entry : cs) {
        Formula assertion = entry.assertion();
        report.cs_sound = sound_at_root(assertion, "cs-soundness") && report.cs_sound;
        if (!eval.forces_at(root, assertion)) {
            report.cs_holds = false;
            report.failures.push_back("cs: " + print_formula(assertion) + " does not hold");
        }
    }
    return report;
}

std::optional<std::string> failing_world(const KripkeModel& m, const Formula& f, EvalMode mode)
{
    ModelEvaluator eval(m);
    if (mode == EvalMode::RootOnly) {
        if (eval.forces_at(eval.root_index(), f))
            return std::nullopt;
        return eval.label(eval.root_index());
    }
    const auto& truth = eval.truth(f);
    for (std::size_t i = 0; i < truth.size(); ++i)
        if (!truth[i])
            return eval.label(i);
    return std::nullopt;
}

bool holds_in_model(const KripkeModel& m, const Formula& f, EvalMode mode)
{
    return !failing_world(m, f, mode);
}

} // namespace gla
