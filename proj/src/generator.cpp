#include "gla/calculus.hpp"

#include <random>

namespace gla {

namespace {

constexpr std::size_t max_line_size = 32;

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }

    template <class T>
    const T& pick(const std::vector<T>& items) { return items[below(items.size())]; }

private:
    std::mt19937_64 rng_;
};

const std::vector<Formula>& formula_pool()
{
    static const std::vector<Formula> pool = [] {
        std::vector<Formula> out;
        for (const char* text : {"P", "Q", "false", "~P", "[]P", "x:P", "y:Q", "P -> Q", "[]x:P", "~y:Q"})
            out.push_back(parse_formula(text));
        return out;
    }();
    return pool;
}

const std::vector<ProofTerm>& term_pool()
{
    static const std::vector<ProofTerm> pool = [] {
        std::vector<ProofTerm> out;
        for (const char* text : {"x", "y", "!x", "x*y"})
            out.push_back(parse_term(text));
        return out;
    }();
    return pool;
}

Formula instantiate(SchemaId id, std::size_t shape, Sampler& s)
{
    auto patterns = schema_patterns(id);
    const Formula& pattern = patterns[shape % patterns.size()];
    PropositionMap props{{"A", s.pick(formula_pool())}, {"B", s.pick(formula_pool())}, {"C", s.pick(formula_pool())}};
    VariableMap vars{{"x", s.pick(term_pool())}, {"y", s.pick(term_pool())}};
    return substitute(pattern, props, vars);
}

// Axiom instances whose antecedent is exactly `f`.
std::vector<std::pair<Formula, SchemaId>> forward_axioms(const Formula& f, Sampler& s)
{
    using K = Formula::Kind;
    std::vector<std::pair<Formula, SchemaId>> out;
    const Formula other = s.pick(formula_pool());
    const ProofTerm term = s.pick(term_pool());
    out.push_back({Formula::imp(f, Formula::imp(other, f)), SchemaId::P1});
    out.push_back({Formula::imp(f, Formula::disj(f, other)), SchemaId::P6});
    out.push_back({Formula::imp(f, Formula::disj(other, f)), SchemaId::P7});
    switch (f.kind()) {
    case K::Proof: {
        const ProofTerm& t = f.term();
        const Formula& a = f.body();
        out.push_back({Formula::imp(f, Formula::proof(ProofTerm::bang(t), f)), SchemaId::LP2});
        out.push_back({Formula::imp(f, Formula::proof(ProofTerm::sum(t, term), a)), SchemaId::LP3});
        out.push_back({Formula::imp(f, a), SchemaId::LP4});
        out.push_back({Formula::imp(f, Formula::box(a)), SchemaId::C1});
        if (a.kind() == K::Box)
            out.push_back({Formula::imp(f, a.body()), SchemaId::C3});
        if (a.kind() == K::Imp)
            out.push_back({Formula::imp(f, Formula::imp(Formula::proof(term, a.left()),
                                                        Formula::proof(ProofTerm::app(t, term), a.right()))),
                           SchemaId::LP1});
        break;
    }
    case K::Neg:
        if (f.body().kind() == K::Proof)
            out.push_back({Formula::imp(f, Formula::box(f)), SchemaId::C2});
        break;
    case K::Box:
        out.push_back({Formula::imp(f, Formula::box(f)), SchemaId::GL2});
        if (f.body().kind() == K::Imp)
            out.push_back({Formula::imp(f, Formula::imp(Formula::box(f.body().left()), Formula::box(f.body().right()))),
                           SchemaId::GL1});
        break;
    case K::And:
        out.push_back({Formula::imp(f, f.left()), SchemaId::P3});
        out.push_back({Formula::imp(f, f.right()), SchemaId::P4});
        break;
    case K::Imp: {
        Formula a = f.left(), b = f.right();
        out.push_back({Formula::imp(f, Formula::imp(Formula::imp(a, Formula::imp(b, other)), Formula::imp(a, other))),
                       SchemaId::P2});
        break;
    }
    default:
        break;
    }
    return out;
}

} // namespace

Derivation random_derivation(std::uint64_t seed, int depth, const ConstantSpecification& cs)
{
    Sampler s(seed);
    DerivationBuilder b(LogicMode::GLA);
    std::vector<CsEntry> entries(cs.begin(), cs.end());

    auto new_axiom = [&] {
        auto id = static_cast<SchemaId>(s.below(schema_count));
        return b.axiom(instantiate(id, s.below(2), s), id);
    };
    new_axiom();

    for (int round = 2; round <= depth; ++round) {
        std::size_t produced = 0;
        for (int attempt = 0; attempt < 8 && produced == 0; ++attempt) {
            std::size_t line = 1 + s.below(b.size());
            const Formula& f = b.formula(line);
            switch (s.below(7)) {
            case 0:
                produced = new_axiom();
                break;
            case 1:
            case 2: {
                auto candidates = forward_axioms(f, s);
                const auto& [ax, id] = candidates[s.below(candidates.size())];
                if (ax.right().size() <= max_line_size)
                    produced = b.mp(b.axiom(ax, id), line);
                break;
            }
            case 3:
                if (f.size() < max_line_size)
                    produced = b.nec(line);
                break;
            case 4: {
                std::vector<std::size_t> boxed;
                for (std::size_t i = 1; i <= b.size(); ++i)
                    if (b.formula(i).kind() == Formula::Kind::Box)
                        boxed.push_back(i);
                if (!boxed.empty())
                    produced = b.refl(s.pick(boxed));
                break;
            }
            case 5:
                if (!entries.empty()) {
                    const CsEntry& e = s.pick(entries);
                    produced = b.cs(e.constant, e.axiom);
                }
                break;
            default: {
                std::vector<std::pair<std::size_t, std::size_t>> pairs;
                for (std::size_t i = 1; i <= b.size(); ++i)
                    for (std::size_t j = 1; j <= b.size(); ++j)
                        if (b.formula(i).kind() == Formula::Kind::Imp && b.formula(i).left() == b.formula(j))
                            pairs.push_back({i, j});
                if (!pairs.empty()) {
                    auto [i, j] = s.pick(pairs);
                    produced = b.mp(i, j);
                }
                break;
            }
            }
        }
        if (produced == 0)
            new_axiom();
    }
    return b.take();
}

} // namespace gla
