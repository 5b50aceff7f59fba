#pragma once

// GMR trees where every level picks one (arity, edge length) pair out of a
// set of options. Each option is filled like a fixed level, then the level
// keeps the per-signature minimum over options.

#include "tdcode/gmr.hpp"

namespace tdcode::choice {

// Level-i table for the single option `j`, filled from the combined level-(i-1) table.
gmr::LevelTable per_option_fill(const gmr::LevelTable& prev, std::size_t level, const LevelParams& option,
                                std::uint32_t j, const WeightSeq& w, gmr::Algorithm algorithm,
                                std::uint64_t& cells);

// OPT^i = min_j OPT^{i,j}; equal costs resolve to the smaller option index.
gmr::LevelTable combine_options(std::uint64_t n, std::size_t level, const std::vector<LevelParams>& options,
                                std::span<const gmr::LevelTable> per_option);

gmr::DPResult solve_choice(const WeightSeq& w, const ChoiceLevelSpec& spec,
                           gmr::Algorithm algorithm = gmr::Algorithm::Batched,
                           const gmr::SolveOptions& options = {});

}  // namespace tdcode::choice
