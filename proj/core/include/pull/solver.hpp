#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "pull/engine.hpp"

namespace pull {

struct SolveLimits {
    uint64_t max_states = 100'000'000;
    double max_seconds = 1800.0;
    uint64_t max_memory_hint = 8ull << 30;  // advisory

    static SolveLimits quick() { return {1'000'000, 60.0, 1ull << 30}; }
};

enum class Verdict : uint8_t { Solvable, Unsolvable, Unknown };

std::string_view verdict_name(Verdict v);

struct SolveOutcome {
    Verdict verdict = Verdict::Unknown;
    std::vector<Move> witness;   // present iff Solvable
    uint64_t states_explored = 0;
    uint64_t frontier_peak = 0;
    // Pull-one monotonicity check: number of duplicate hits whose stored
    // depth differed from expansion depth + 1 (must stay 0 for PULL_ONE).
    uint64_t potential_violations = 0;
};

// Exhaustive breadth-first search over normalized states. Deterministic:
// moves expand in box row-major then L,R,U,D order, so the witness is the
// lexicographically smallest among minimal-pull solutions.
SolveOutcome solve(const Board& board, const SolveLimits& limits = {});

// Oracle: exhaustive search over exact (player cell, box configuration)
// states without region normalization. Walk steps cost 0, pulls cost 1.
// Guard: at most 64 cells and 4 boxes (throws std::invalid_argument).
SolveOutcome naive_solve(const Board& board, const SolveLimits& limits = {});

// Number of distinct normalized states reachable from the initial state,
// or nullopt if a limit was hit.
std::optional<uint64_t> count_reachable_states(const Board& board, const SolveLimits& limits = {});

}  // namespace pull
