#pragma once

// The countermodel enumeration, split out so the serial and OpenMP scans can
// be tested and benchmarked against each other.

#include "gla/decide.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace gla::search {

inline constexpr int world_limit = 6;
using Mask = std::uint8_t;   // bit w = world w; world 0 is the root

// Root sees every world; the rest is a strict partial order on 1..n-1.
struct Frame {
    int worlds = 1;
    std::array<Mask, world_limit> succ{};
    std::uint32_t code = 0;   // adjacency of the non-root part, row-major
};

// One representative per isomorphism class, sorted by code.
const std::vector<Frame>& frames(int worlds);

struct Node {
    Formula::Kind kind = Formula::Kind::Falsum;
    int a = -1, b = -1;   // children
    int letter = -1;      // Atom
    int pair = -1;        // Proof
};

struct Problem {
    std::vector<Formula> formulas;   // subformulas before their parents
    std::vector<Node> nodes;
    std::vector<std::string> letters;
    std::vector<ProofPair> pairs;
    std::vector<int> root_required;  // H-members and cs assertions
    int goal = -1;
    EvalMode mode = EvalMode::AllWorlds;
    // Closed evidence seeds (bit i = pairs[i]) that contain every cs pair,
    // ascending.
    std::vector<std::uint64_t> seeds;
    bool seeds_truncated = false;
};

Problem compile(const Formula& goal, const ConstantSpecification& cs, EvalMode mode, int max_seed);

using Clock = std::chrono::steady_clock;

struct Hit {
    std::size_t frame = 0;
    std::uint64_t valuation = 0;   // bit letter*n + w
    std::size_t seed = 0;          // index into Problem::seeds
    Mask failing = 0;
};

struct ScanResult {
    std::optional<Hit> hit;
    bool budget_exceeded = false;
    std::uint64_t models = 0;
};

// If the model is accepted, the mask of worlds where the goal fails (per
// mode); 0 otherwise. `scratch` holds one mask per node.
Mask evaluate(const Problem& p, const Frame& fr, std::uint64_t valuation, std::uint64_t seed, std::vector<Mask>& scratch);

// Scans every (frame, valuation, seed) with the given world count and returns
// the canonically least hit.
ScanResult scan_serial(const Problem& p, int worlds, Clock::time_point deadline);
ScanResult scan_parallel(const Problem& p, int worlds, Clock::time_point deadline);

KripkeModel build_model(const Problem& p, const Frame& fr, std::uint64_t valuation, std::uint64_t seed);

} // namespace gla::search
