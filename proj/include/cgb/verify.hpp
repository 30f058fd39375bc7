#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cgb/board.hpp"
#include "cgb/rules.hpp"

namespace cgb {

// Outcome counts over a set of full colorings. Theorem compliance means
// draws == 0 and double_wins == 0.
struct Tally {
    uint64_t total = 0;
    uint64_t red_wins = 0;
    uint64_t blue_wins = 0;
    uint64_t draws = 0;
    uint64_t double_wins = 0;

    Tally& operator+=(const Tally& other) {
        total += other.total;
        red_wins += other.red_wins;
        blue_wins += other.blue_wins;
        draws += other.draws;
        double_wins += other.double_wins;
        return *this;
    }
    bool compliant() const { return draws == 0 && double_wins == 0; }
    bool operator==(const Tally&) const = default;
    std::string to_string() const;  // "total=16 red=8 blue=8 draw=0 both=0"
};

inline constexpr int kDefaultGuard = 24;

// Test seam: overrides the side-goal evaluation (used to prove the theorem-
// violation reporting path actually fires). Empty means the real rules.
using EvaluateFn = std::function<GoalResult(const Board&, const Coloring&)>;

// Tallies full colorings indexed in [begin, end): bit i of the index is the
// color of the i-th Empty vertex of `base` in ascending id order, 0 = Red,
// 1 = Blue. Partitioning the index range and summing the parts gives the
// same result as one call.
Tally enumerate_indices(const Board& board, const Coloring& base, uint64_t begin, uint64_t end,
                        const EvaluateFn& evaluate = {});

// All 2^n full colorings extending `base` (empty base means all vertices
// free). Throws InputError when the free vertex count exceeds `guard`.
// Runs the index range in parallel for large boards; the result is
// independent of the partitioning.
Tally enumerate_exhaustive(const Board& board, const Coloring& base = {},
                           int guard = kDefaultGuard, const EvaluateFn& evaluate = {});

// `trials` uniformly random full colorings extending `base`. Deterministic
// for a fixed seed within one implementation.
Tally sample_random(const Board& board, uint64_t trials, uint64_t seed,
                    const Coloring& base = {}, const EvaluateFn& evaluate = {});

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // counterexample or summary
};

struct SuiteReport {
    std::vector<CheckResult> checks;
    bool bad_tally = false;  // a draw or double win was observed
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Cross-construction consistency checks, exhaustive over the board's free
// vertices: exactly-one-winner, and per kind the doubling/extension/Gale
// invariants. A validation failure short-circuits the rest.
SuiteReport invariant_suite(const Board& board, int guard = kDefaultGuard);

struct SelfplayResult {
    Tally tally;
    std::vector<std::vector<int>> games;  // move sequence per game
};

// Random play, Red first, uniformly random empty vertex each move, until
// the board is full; the winner of the final position is tallied.
SelfplayResult selfplay(const Board& board, uint64_t games, uint64_t seed);

} // namespace cgb
