#pragma once

// Small random-instance generators shared by the unit and acceptance tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tdcode/core.hpp"

namespace testing {

inline std::vector<std::int64_t> random_weights(std::mt19937_64& rng, std::size_t n, std::int64_t hi = 100) {
    std::uniform_int_distribution<std::int64_t> dist(1, hi);
    std::vector<std::int64_t> out(n);
    for (auto& p : out) {
        p = dist(rng);
    }
    return out;
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline tdcode::LevelSpec random_levels(std::mt19937_64& rng, std::size_t depth, std::uint64_t max_arity,
                                       std::uint64_t max_edge) {
    std::vector<tdcode::LevelParams> levels(depth);
    for (auto& lp : levels) {
        lp.arity = uniform(rng, 2, max_arity);
        lp.edge = uniform(rng, 1, max_edge);
    }
    return tdcode::LevelSpec(std::move(levels));
}

inline std::string word(const tdcode::Codeword& w) {
    std::string s;
    for (std::uint32_t sym : w) {
        s += static_cast<char>('0' + sym);
    }
    return s;
}

inline std::vector<std::string> words(const std::vector<tdcode::Codeword>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) {
        out.push_back(word(w));
    }
    return out;
}

}  // namespace testing
