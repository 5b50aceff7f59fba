#pragma once

// Named coding problems phrased as (choice-)GMR instances, with the solution
// mapped back to codewords over the original alphabet.

#include <cstdint>
#include <vector>

#include "tdcode/choice.hpp"
#include "tdcode/gmr.hpp"

namespace tdcode::problems {

// Level i may use arity t_{i-1}; a list shorter than n repeats its last entry.
struct MixedRadixSpec {
    std::vector<std::uint64_t> arities;
};

// Codeword lengths restricted to a given set over an r-symbol alphabet.
struct ReservedSpec {
    std::uint64_t radix = 2;
    std::vector<std::uint64_t> lengths;  // strictly increasing, all >= 1
};

// At most g distinct codeword lengths over an r-symbol alphabet.
struct GLengthsSpec {
    std::uint64_t radix = 2;
    std::uint64_t g = 1;
};

struct Solution {
    CodeBook book;                    // words over the original alphabet, weight order
    LevelSpec levels;                 // the (meta-)levels the tree actually uses
    gmr::DPResult dp;
};

Solution solve_gmr(const WeightSeq& w, const LevelSpec& spec, gmr::Algorithm algorithm = gmr::Algorithm::Batched,
                   const gmr::SolveOptions& options = {});

Solution solve_mixed_radix(const WeightSeq& w, const MixedRadixSpec& spec,
                           gmr::Algorithm algorithm = gmr::Algorithm::Batched);

// Throws NoFeasibleTree when r^{max length} < n, ArityOverflow when a meta-arity
// r^{gap} does not fit in 64 bits.
Solution solve_reserved_given(const WeightSeq& w, const ReservedSpec& spec,
                              gmr::Algorithm algorithm = gmr::Algorithm::Batched);

Solution solve_reserved_g(const WeightSeq& w, const GLengthsSpec& spec,
                          gmr::Algorithm algorithm = gmr::Algorithm::Batched);

// Constant (r, 1) levels; the optimum is the r-ary Huffman cost.
Solution solve_huffman_reference_adapter(const WeightSeq& w, std::uint64_t r,
                                         gmr::Algorithm algorithm = gmr::Algorithm::Batched);

// Level specs built by the adapters, exposed for tests and benchmarks.
LevelSpec mixed_radix_levels(const MixedRadixSpec& spec, std::size_t depth);
LevelSpec reserved_levels(const ReservedSpec& spec, std::uint64_t n);
ChoiceLevelSpec g_lengths_levels(const GLengthsSpec& spec, std::uint64_t n);

// Rewrites each level-k symbol s (0 <= s < radix^{gap_k}) as gap_k base-radix
// digits, most significant first.
std::vector<Codeword> expand_meta_words(std::span<const Codeword> words, std::span<const LevelParams> levels,
                                        std::uint64_t radix);

}  // namespace tdcode::problems
