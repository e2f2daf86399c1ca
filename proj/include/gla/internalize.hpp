#pragma once

#include "gla/calculus.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace gla {

class LiftError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Supplies constants prefix1, prefix2, ... skipping anything reserved.
// Concurrent lifts should use different prefixes.
class FreshNames {
public:
    explicit FreshNames(std::string prefix = "k", std::size_t next = 1);

    void reserve(const std::string& name) { taken_.insert(name); }
    void reserve(const ProofTerm& t);
    void reserve(const Formula& f);
    void reserve(const ConstantSpecification& cs);
    void reserve(const Derivation& d);

    std::string next();
    std::size_t counter() const { return next_; }

private:
    std::string prefix_;
    std::size_t next_;
    std::set<std::string> taken_;
};

struct LiftResult {
    ProofTerm term;
    ConstantSpecification cs;   // input cs plus the constants introduced
    Derivation witness;         // hypothesis-free, concludes term:F (or the
                                // implication for nec_term/refl_term/explicit_lob)
};

// p:F -> (a*!p):[]F with a:(p:F -> []F)
LiftResult nec_term(const ProofTerm& p, const Formula& f, const ConstantSpecification& cs);
LiftResult nec_term(const ProofTerm& p, const Formula& f, const ConstantSpecification& cs, FreshNames& names);

// p:[]F -> (b*!p):F with b:(p:[]F -> F)
LiftResult refl_term(const ProofTerm& p, const Formula& f, const ConstantSpecification& cs);
LiftResult refl_term(const ProofTerm& p, const Formula& f, const ConstantSpecification& cs, FreshNames& names);

// From a checked hypothesis-free derivation of F, a term p and a derivation
// of p:F.
LiftResult lift(const Derivation& d, const ConstantSpecification& cs);
LiftResult lift(const Derivation& d, const ConstantSpecification& cs, FreshNames& names);

// x:([]F -> F) -> (b*!(c*(a*!x))):F
LiftResult explicit_lob(const Formula& f, const ProofTerm& x, const ConstantSpecification& cs);
LiftResult explicit_lob(const Formula& f, const ProofTerm& x, const ConstantSpecification& cs, FreshNames& names);

} // namespace gla
