#pragma once

// Ground truth for small instances. Nothing here touches the DP code; the
// enumerators share only the leaf-sequence cost evaluator from core.

#include <cstddef>
#include <cstdint>

#include "tdcode/core.hpp"

namespace tdcode::oracle {

struct OracleBudget {
    std::size_t max_n = 8;
    std::size_t max_level = 5;
    std::size_t max_one_ended_n = 6;
    std::size_t max_assignments = 4096;      // option products for enumerate_choice
    std::uint64_t max_visits = 200'000'000;  // search nodes per call
};

// Least cost over every realizable leaf sequence with exactly n leaves on
// levels 1..max_level. Throws BudgetExceeded past the budget and
// NoFeasibleTree when no sequence fits.
Cost enumerate_gmr(const WeightSeq& w, const LevelSpec& spec, std::size_t max_level,
                   const OracleBudget& budget = {});

// Least cost of a binary code with every word ending in 1 and no word longer
// than max_depth (at most n + 2).
Cost enumerate_one_ended(const WeightSeq& w, std::size_t max_depth, const OracleBudget& budget = {});

inline Cost enumerate_one_ended(const WeightSeq& w, const OracleBudget& budget = {}) {
    return enumerate_one_ended(w, w.size() + 2, budget);
}

// r-ary Huffman, padded with zero weights until r - 1 divides count - 1 (and
// count >= r, so a single weight still pays one symbol).
Cost huffman_greedy(const WeightSeq& w, std::uint64_t r);

// Minimum of enumerate_gmr over every per-level option assignment.
Cost enumerate_choice(const WeightSeq& w, const ChoiceLevelSpec& spec, std::size_t max_level,
                      const OracleBudget& budget = {});

}  // namespace tdcode::oracle
