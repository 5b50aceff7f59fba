#pragma once

// Seeded weight generators and operation-count measurements for the scaling
// experiments.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tdcode/gmr.hpp"

namespace tdcode::bench {

enum class Distribution { Uniform, Geometric, Zipf };

enum class Problem { Gmr, MixedRadix, ReservedGiven, ReservedG, OneEnded, Huffman };

std::string_view to_string(Distribution d) noexcept;
std::string_view to_string(Problem p) noexcept;
std::optional<Distribution> parse_distribution(std::string_view s);
std::optional<Problem> parse_problem(std::string_view s);

// uniform: integers in [1, 1e6]; geometric: 2^50 halved per rank, floored at 1;
// zipf: round(1e9 / rank).
std::vector<std::int64_t> generate_weights(Distribution d, std::size_t n, std::uint64_t seed);

// Level spec for the gmr bench: n levels, arities 2..4 and edge lengths 1..3
// drawn from `seed`.
LevelSpec random_levels(std::size_t depth, std::uint64_t seed);

// Fixed parameters of the bench instances.
inline constexpr std::uint64_t kReservedRadix = 2;
inline const std::vector<std::uint64_t> kReservedLengths{3, 5, 7, 9};
inline constexpr std::uint64_t kGLengthsBudget = 3;
inline constexpr std::uint64_t kMixedRadixTop = 4;

struct Measurement {
    Problem problem = Problem::Gmr;
    gmr::Algorithm algorithm = gmr::Algorithm::Batched;
    std::size_t n = 0;
    std::uint64_t cells = 0;
    Cost cost;
    double seconds = 0.0;
};

// Solves one bench instance in cost-only mode where the solver allows it.
Measurement run_case(Problem problem, gmr::Algorithm algorithm, std::span<const std::int64_t> raw,
                     std::uint64_t seed);

// Least-squares slope of log(y) against log(x); empty with fewer than two
// distinct x values.
std::optional<double> loglog_slope(std::span<const std::pair<double, double>> points);

}  // namespace tdcode::bench
