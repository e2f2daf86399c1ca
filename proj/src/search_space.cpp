#include "gla/search_kernel.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace gla::search {

namespace {

// Relation codes on m points: bit i*m+j means i < j in the order.
std::uint32_t permute(std::uint32_t code, int m, const std::array<int, world_limit>& perm)
{
    std::uint32_t out = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (code >> (i * m + j) & 1u)
                out |= 1u << (perm[i] * m + perm[j]);
    return out;
}

bool transitive(std::uint32_t code, int m)
{
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (code >> (i * m + j) & 1u)
                for (int k = 0; k < m; ++k)
                    if ((code >> (j * m + k) & 1u) && !(code >> (i * m + k) & 1u))
                        return false;
    return true;
}

std::vector<Frame> build_frames(int n)
{
    const int m = n - 1;
    // Every finite strict order has a linear extension, so orders with edges
    // only from lower to higher index cover all classes.
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            slots.push_back({i, j});

    std::set<std::uint32_t> classes;
    for (std::uint32_t pick = 0; pick < (1u << slots.size()); ++pick) {
        std::uint32_t code = 0;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (pick >> s & 1u)
                code |= 1u << (slots[s].first * m + slots[s].second);
        if (!transitive(code, m))
            continue;
        std::array<int, world_limit> perm{};
        std::iota(perm.begin(), perm.begin() + m, 0);
        std::uint32_t best = code;
        do {
            best = std::min(best, permute(code, m, perm));
        } while (std::next_permutation(perm.begin(), perm.begin() + m));
        classes.insert(best);
    }

    std::vector<Frame> out;
    for (std::uint32_t code : classes) {
        Frame fr;
        fr.worlds = n;
        fr.code = code;
        fr.succ[0] = static_cast<Mask>(((1u << n) - 1) & ~1u);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (code >> (i * m + j) & 1u)
                    fr.succ[i + 1] |= static_cast<Mask>(1u << (j + 1));
        out.push_back(fr);
    }
    return out;
}

} // namespace

const std::vector<Frame>& frames(int worlds)
{
    static const std::vector<std::vector<Frame>> table = [] {
        std::vector<std::vector<Frame>> t(world_limit + 1);
        for (int n = 1; n <= world_limit; ++n)
            t[n] = build_frames(n);
        return t;
    }();
    if (worlds < 1 || worlds > world_limit)
        throw std::out_of_range("world count out of range");
    return table[worlds];
}

Problem compile(const Formula& goal, const ConstantSpecification& cs, EvalMode mode, int max_seed)
{
    Problem p;
    p.mode = mode;
    const ClosureSet cl = closure_set(goal, cs);

    p.formulas.assign(cl.formulas.begin(), cl.formulas.end());
    std::stable_sort(p.formulas.begin(), p.formulas.end(),
                     [](const Formula& a, const Formula& b) { return a.size() < b.size(); });
    std::map<Formula, int> index;
    for (std::size_t i = 0; i < p.formulas.size(); ++i)
        index.emplace(p.formulas[i], static_cast<int>(i));

    p.letters.assign(cl.letters.begin(), cl.letters.end());
    p.pairs.assign(cl.proof_pairs.begin(), cl.proof_pairs.end());
    if (p.pairs.size() > 64)
        throw std::length_error("more than 64 proof assertions in the closure");
    std::map<ProofPair, int> pair_index;
    for (std::size_t i = 0; i < p.pairs.size(); ++i)
        pair_index.emplace(p.pairs[i], static_cast<int>(i));

    for (const Formula& f : p.formulas) {
        Node node;
        node.kind = f.kind();
        switch (f.kind()) {
        case Formula::Kind::Atom:
            node.letter = static_cast<int>(std::lower_bound(p.letters.begin(), p.letters.end(), f.name()) - p.letters.begin());
            break;
        case Formula::Kind::Falsum:
            break;
        case Formula::Kind::Neg:
        case Formula::Kind::Box:
            node.a = index.at(f.body());
            break;
        case Formula::Kind::Proof:
            node.a = index.at(f.body());
            node.pair = pair_index.at({f.term(), f.body()});
            break;
        default:
            node.a = index.at(f.left());
            node.b = index.at(f.right());
            break;
        }
        p.nodes.push_back(node);
    }
    p.goal = index.at(goal);

    std::set<int> required;
    std::uint64_t cs_mask = 0;
    for (const Formula& h : h_set(goal))
        required.insert(index.at(h));
    for (const auto& e : cs) {
        const Formula a = e.assertion();
        required.insert(index.at(a));
        for (const Formula& h : h_set(a))
            required.insert(index.at(h));
        cs_mask |= std::uint64_t{1} << pair_index.at({a.term(), a.body()});
    }
    p.root_required.assign(required.begin(), required.end());

    // Seeds: closed subsets of the pairs that contain the cs pairs. A seed
    // and its closure give the same model on the closure, so only closed
    // ones are tried.
    std::vector<int> free;
    for (std::size_t i = 0; i < p.pairs.size(); ++i)
        if (!(cs_mask >> i & 1u))
            free.push_back(static_cast<int>(i));
    constexpr std::size_t enumeration_cap = 16;
    const std::size_t k = std::min(free.size(), enumeration_cap);
    if (free.size() > enumeration_cap)
        p.seeds_truncated = true;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << k); ++sub) {
        std::uint64_t seed = cs_mask;
        for (std::size_t i = 0; i < k; ++i)
            if (sub >> i & 1u)
                seed |= std::uint64_t{1} << free[i];
        if (std::popcount(seed) > max_seed) {
            p.seeds_truncated = true;
            continue;
        }
        std::set<ProofPair> pairs;
        for (std::size_t i = 0; i < p.pairs.size(); ++i)
            if (seed >> i & 1u)
                pairs.insert(p.pairs[i]);
        EvidenceRelation ev(pairs);
        std::uint64_t closed = 0;
        for (std::size_t i = 0; i < p.pairs.size(); ++i)
            if (ev.holds(p.pairs[i].first, p.pairs[i].second))
                closed |= std::uint64_t{1} << i;
        if (closed == seed)
            p.seeds.push_back(seed);
    }
    std::sort(p.seeds.begin(), p.seeds.end());
    return p;
}

Mask evaluate(const Problem& p, const Frame& fr, std::uint64_t valuation, std::uint64_t seed, std::vector<Mask>& m)
{
    const int n = fr.worlds;
    const Mask all = static_cast<Mask>((1u << n) - 1);
    m.resize(p.nodes.size());
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        const Node& node = p.nodes[i];
        Mask v = 0;
        switch (node.kind) {
        case Formula::Kind::Atom:
            v = static_cast<Mask>((valuation >> (node.letter * n)) & all);
            break;
        case Formula::Kind::Falsum:
            break;
        case Formula::Kind::Neg:
            v = all & ~m[node.a];
            break;
        case Formula::Kind::And:
            v = m[node.a] & m[node.b];
            break;
        case Formula::Kind::Or:
            v = m[node.a] | m[node.b];
            break;
        case Formula::Kind::Imp:
            v = all & (~m[node.a] | m[node.b]);
            break;
        case Formula::Kind::Box: {
            const Mask body = m[node.a];
            for (int u = 0; u < n; ++u)
                if ((fr.succ[u] & ~body) == 0)
                    v |= static_cast<Mask>(1u << u);
            break;
        }
        case Formula::Kind::Proof:
            v = ((seed >> node.pair & 1u) && m[node.a] == all) ? all : 0;
            break;
        }
        m[i] = v;
    }
    for (int r : p.root_required)
        if (!(m[r] & 1u))
            return 0;
    const Mask refuted = all & ~m[p.goal];
    return p.mode == EvalMode::RootOnly ? (refuted & 1u) : refuted;
}

KripkeModel build_model(const Problem& p, const Frame& fr, std::uint64_t valuation, std::uint64_t seed)
{
    KripkeModel model;
    const int n = fr.worlds;
    for (int w = 0; w < n; ++w)
        model.worlds.push_back(std::to_string(w + 1));
    model.root = model.worlds[0];
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (fr.succ[u] >> v & 1u)
                model.rel.insert({model.worlds[u], model.worlds[v]});
    for (std::size_t l = 0; l < p.letters.size(); ++l)
        for (int w = 0; w < n; ++w)
            if (valuation >> (l * n + w) & 1u)
                model.valuation[p.letters[l]].insert(model.worlds[w]);
    for (std::size_t i = 0; i < p.pairs.size(); ++i)
        if (seed >> i & 1u)
            model.evidence.insert(p.pairs[i]);
    return model;
}

} // namespace gla::search
