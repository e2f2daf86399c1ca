#pragma once

#include "gla/calculus.hpp"
#include "gla/syntax.hpp"

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace gla {

// A finite rooted GL-frame with a valuation and an evidence seed. The
// evidence relation of the model is the least relation containing the seed
// and closed under application, proof checking and sum.
struct KripkeModel {
    std::vector<std::string> worlds;
    std::set<std::pair<std::string, std::string>> rel;
    std::string root;
    std::map<std::string, std::set<std::string>> valuation;
    std::set<ProofPair> evidence;

    friend bool operator==(const KripkeModel&, const KripkeModel&) = default;
};

enum class EvalMode : unsigned char { AllWorlds, RootOnly };

// Computes E(t, .) bottom-up over the subterms of t. Each term evidences a
// finite set of formulas.
class EvidenceRelation {
public:
    explicit EvidenceRelation(const std::set<ProofPair>& seed);

    const std::set<Formula>& evidenced(const ProofTerm& t);
    bool holds(const ProofTerm& t, const Formula& f) { return evidenced(t).count(f) > 0; }

private:
    std::map<ProofTerm, std::set<Formula>> seed_;
    std::map<ProofTerm, std::set<Formula>> memo_;
};

bool evidence_holds(const std::set<ProofPair>& seed, const ProofTerm& t, const Formula& f);

// Frame conditions: nonempty, known labels, irreflexive, transitive, and the
// root sees every other world. Empty result means the frame is fine.
std::vector<std::string> frame_problems(const KripkeModel& m);

// Memoized forcing over one model. Requires a well-formed frame.
class ModelEvaluator {
public:
    explicit ModelEvaluator(const KripkeModel& m);

    bool forces(const std::string& world, const Formula& f);
    bool forces_at(std::size_t world, const Formula& f) { return truth(f)[world]; }
    const std::vector<bool>& truth(const Formula& f);
    std::size_t root_index() const { return root_; }
    std::size_t world_count() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_[i]; }

private:
    std::vector<std::string> labels_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> successors_;
    std::size_t root_ = 0;
    std::map<std::string, std::vector<bool>> valuation_;
    EvidenceRelation evidence_;
    std::map<Formula, std::vector<bool>> memo_;
};

bool forces(const KripkeModel& m, const std::string& world, const Formula& f);

// {[]G -> G : []G a subformula of f}
std::set<Formula> h_set(const Formula& f);

struct SoundnessReport {
    bool frame_ok = false;
    bool root_ok = false;
    bool f_sound = false;
    bool cs_sound = false;
    bool cs_holds = false;
    std::vector<std::string> failures;

    bool ok() const { return frame_ok && root_ok && f_sound && cs_sound && cs_holds; }
};

SoundnessReport validate_model(const KripkeModel& m, std::span<const Formula> sound_for, const ConstantSpecification& cs);

bool holds_in_model(const KripkeModel& m, const Formula& f, EvalMode mode = EvalMode::AllWorlds);

// The first world (in the model's world order) where f fails under `mode`.
std::optional<std::string> failing_world(const KripkeModel& m, const Formula& f, EvalMode mode = EvalMode::AllWorlds);

} // namespace gla
