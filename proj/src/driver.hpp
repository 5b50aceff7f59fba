#pragma once

// Level-by-level driver shared by the fixed-spec and choice solvers.

#include <functional>

#include "tdcode/gmr.hpp"

namespace tdcode::gmr::detail {

// Builds level i from level i-1, adding its work to `cells`.
using LevelBuilder = std::function<LevelTable(std::size_t level, const LevelTable& prev, std::uint64_t& cells)>;

std::size_t resolve_max_level(const SolveOptions& options, std::uint64_t n, std::size_t spec_depth);

DPResult run_levels(const WeightSeq& w, std::size_t max_level, bool keep_tables, const LevelBuilder& build);

}  // namespace tdcode::gmr::detail
