#include "tdcode/bench.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include "tdcode/choice.hpp"
#include "tdcode/one_ended.hpp"
#include "tdcode/problems.hpp"

namespace tdcode::bench {

std::string_view to_string(Distribution d) noexcept {
    switch (d) {
        case Distribution::Uniform: return "uniform";
        case Distribution::Geometric: return "geometric";
        case Distribution::Zipf: return "zipf";
    }
    return "?";
}

std::string_view to_string(Problem p) noexcept {
    switch (p) {
        case Problem::Gmr: return "gmr";
        case Problem::MixedRadix: return "mixed-radix";
        case Problem::ReservedGiven: return "reserved-given";
        case Problem::ReservedG: return "reserved-g";
        case Problem::OneEnded: return "one-ended";
        case Problem::Huffman: return "huffman";
    }
    return "?";
}

std::optional<Distribution> parse_distribution(std::string_view s) {
    for (Distribution d : {Distribution::Uniform, Distribution::Geometric, Distribution::Zipf}) {
        if (s == to_string(d)) {
            return d;
        }
    }
    return std::nullopt;
}

std::optional<Problem> parse_problem(std::string_view s) {
    for (Problem p : {Problem::Gmr, Problem::MixedRadix, Problem::ReservedGiven, Problem::ReservedG,
                      Problem::OneEnded, Problem::Huffman}) {
        if (s == to_string(p)) {
            return p;
        }
    }
    return std::nullopt;
}

std::vector<std::int64_t> generate_weights(Distribution d, std::size_t n, std::uint64_t seed) {
    std::vector<std::int64_t> out(n);
    switch (d) {
        case Distribution::Uniform: {
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<std::int64_t> dist(1, 1'000'000);
            for (auto& p : out) {
                p = dist(rng);
            }
            break;
        }
        case Distribution::Geometric:
            for (std::size_t i = 0; i < n; ++i) {
                out[i] = i < 50 ? (std::int64_t{1} << (50 - i)) : 1;
            }
            break;
        case Distribution::Zipf:
            for (std::size_t i = 0; i < n; ++i) {
                out[i] = std::llround(1e9 / static_cast<double>(i + 1));
            }
            break;
    }
    return out;
}

LevelSpec random_levels(std::size_t depth, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<std::uint64_t> arity(2, 4);
    std::uniform_int_distribution<std::uint64_t> edge(1, 3);
    std::vector<LevelParams> levels(depth);
    for (auto& lp : levels) {
        lp.arity = arity(rng);
        lp.edge = edge(rng);
    }
    return LevelSpec(std::move(levels));
}

Measurement run_case(Problem problem, gmr::Algorithm algorithm, std::span<const std::int64_t> raw,
                     std::uint64_t seed) {
    const WeightSeq w = normalize_weights(raw);
    const std::size_t n = w.size();
    Measurement out{problem, algorithm, n, 0, Cost{}, 0.0};
    const gmr::SolveOptions cost_only{std::nullopt, false};
    const auto start = std::chrono::steady_clock::now();
    auto take = [&](const gmr::DPResult& r) {
        out.cells = r.cells_updated;
        out.cost = r.answer.cost;
    };
    switch (problem) {
        case Problem::Gmr:
            take(gmr::solve(w, random_levels(n, seed), algorithm, cost_only));
            break;
        case Problem::MixedRadix: {
            std::vector<std::uint64_t> arities;
            for (std::size_t i = 0; i < n; ++i) {
                arities.push_back(2 + i % (kMixedRadixTop - 1));
            }
            take(gmr::solve(w, problems::mixed_radix_levels({arities}, n), algorithm, cost_only));
            break;
        }
        case Problem::ReservedGiven:
            take(gmr::solve(w, problems::reserved_levels({kReservedRadix, kReservedLengths}, n), algorithm,
                            cost_only));
            break;
        case Problem::ReservedG:
            take(choice::solve_choice(w, problems::g_lengths_levels({kReservedRadix, kGLengthsBudget}, n),
                                      algorithm, cost_only));
            break;
        case Problem::OneEnded: {
            const one_ended::Result r = algorithm == gmr::Algorithm::Naive ? one_ended::solve_one_ended_naive(w)
                                                                          : one_ended::solve_one_ended(w);
            out.cells = r.cells_updated;
            out.cost = r.cost;
            break;
        }
        case Problem::Huffman:
            take(gmr::solve(w, LevelSpec::constant(2, 1, n), algorithm, cost_only));
            break;
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

std::optional<double> loglog_slope(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2) {
        return std::nullopt;
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : points) {
        const double lx = std::log(x);
        const double ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double k = static_cast<double>(points.size());
    const double denom = k * sxx - sx * sx;
    if (std::abs(denom) < 1e-12) {
        return std::nullopt;
    }
    return (k * sxy - sx * sy) / denom;
}

}  // namespace tdcode::bench
