#pragma once

// Shared domain types: sorted weight sequences, per-level tree shapes, leaf
// sequences and code books, plus cost evaluation and code validation.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tdcode/cost.hpp"

namespace tdcode {

// Weights p_1 >= p_2 >= ... >= p_n >= 0 with the suffix sums W_m = sum_{i>m} p_i.
// Indices past n read as weight 0, which is how the solvers pad trees to full.
class WeightSeq {
public:
    [[nodiscard]] std::size_t size() const noexcept { return weights_.size(); }

    // 1-based; 0 for i > n.
    [[nodiscard]] std::uint64_t weight(std::size_t i) const noexcept {
        return (i >= 1 && i <= weights_.size()) ? weights_[i - 1] : 0;
    }

    // W_m; 0 for m >= n.
    [[nodiscard]] std::uint64_t suffix(std::uint64_t m) const noexcept {
        return m < suffix_.size() ? suffix_[m] : 0;
    }

    [[nodiscard]] std::uint64_t total() const noexcept { return suffix_.front(); }

    [[nodiscard]] std::span<const std::uint64_t> weights() const noexcept { return weights_; }

    // Caller index of the i-th largest weight (1-based i).
    [[nodiscard]] std::size_t original_index(std::size_t i) const { return order_.at(i - 1); }

    friend WeightSeq normalize_weights(std::span<const std::int64_t> raw);

private:
    std::vector<std::uint64_t> weights_;
    std::vector<std::uint64_t> suffix_;  // n + 1 entries
    std::vector<std::size_t> order_;
};

// Sorts non-increasing (stable, so equal weights keep caller order) and
// precomputes suffix sums. Throws InvalidInput on empty or negative input.
WeightSeq normalize_weights(std::span<const std::int64_t> raw);

inline WeightSeq normalize_weights(std::initializer_list<std::int64_t> raw) {
    return normalize_weights(std::span<const std::int64_t>(raw.begin(), raw.size()));
}

struct LevelParams {
    std::uint64_t arity = 2;
    std::uint64_t edge = 1;

    friend bool operator==(const LevelParams&, const LevelParams&) = default;
    friend auto operator<=>(const LevelParams&, const LevelParams&) = default;
};

// Per-level (arity, edge length) pairs for levels 1..depth().
class LevelSpec {
public:
    LevelSpec() = default;
    explicit LevelSpec(std::vector<LevelParams> levels);

    static LevelSpec constant(std::uint64_t arity, std::uint64_t edge, std::size_t depth);

    [[nodiscard]] std::size_t depth() const noexcept { return levels_.size(); }
    [[nodiscard]] const LevelParams& level(std::size_t i) const { return levels_.at(i - 1); }
    [[nodiscard]] std::uint64_t arity(std::size_t i) const { return level(i).arity; }
    [[nodiscard]] std::uint64_t edge(std::size_t i) const { return level(i).edge; }

    // L(i) = c_1 + ... + c_i, with L(0) = 0.
    [[nodiscard]] std::uint64_t cumulative_depth(std::size_t i) const { return cumulative_.at(i); }

    // Pads to `depth` levels by repeating the last level; never truncates.
    [[nodiscard]] LevelSpec extended_to(std::size_t depth) const;

    [[nodiscard]] const std::vector<LevelParams>& levels() const noexcept { return levels_; }

private:
    std::vector<LevelParams> levels_;
    std::vector<std::uint64_t> cumulative_{0};
};

// Each level offers a set of (arity, edge length) options; a tree fixes one
// option per level.
class ChoiceLevelSpec {
public:
    ChoiceLevelSpec() = default;
    explicit ChoiceLevelSpec(std::vector<std::vector<LevelParams>> levels);

    static ChoiceLevelSpec from(const LevelSpec& spec);

    [[nodiscard]] std::size_t depth() const noexcept { return levels_.size(); }
    [[nodiscard]] const std::vector<LevelParams>& options(std::size_t i) const { return levels_.at(i - 1); }

    // The plain spec obtained by picking options[i-1] at level i.
    [[nodiscard]] LevelSpec select(std::span<const std::size_t> choice) const;

private:
    std::vector<std::vector<LevelParams>> levels_;
};

// Number of leaves on each level; counts()[0] is the root level and is always 0.
class LeafSequence {
public:
    LeafSequence() = default;
    explicit LeafSequence(std::vector<std::uint64_t> counts);

    static LeafSequence from_levels(std::initializer_list<std::pair<std::size_t, std::uint64_t>> levels);

    [[nodiscard]] const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
    [[nodiscard]] std::uint64_t at(std::size_t level) const noexcept {
        return level < counts_.size() ? counts_[level] : 0;
    }
    [[nodiscard]] std::size_t terminal_level() const noexcept { return counts_.empty() ? 0 : counts_.size() - 1; }
    [[nodiscard]] std::uint64_t total() const noexcept;

    friend bool operator==(const LeafSequence&, const LeafSequence&) = default;

private:
    std::vector<std::uint64_t> counts_;
};

using Codeword = std::vector<std::uint32_t>;

// Codewords in weight order (word i carries p_i), each word a sequence of
// symbol indices.
struct CodeBook {
    std::vector<Codeword> words;
    std::vector<std::uint64_t> lengths;
    Cost cost;
    LeafSequence leaves;
};

// Realizability diagnostic: slots left on the terminal level after placing
// every leaf, or the (negative) shortfall at the first level that overflows.
std::int64_t kraft_slack(const LeafSequence& seq, const LevelSpec& spec);

bool is_realizable(const LeafSequence& seq, const LevelSpec& spec);

// Sum of L(level(v_t)) * p_t with weights handed out shallowest level first.
Cost cost_of_leaf_sequence(const LeafSequence& seq, const WeightSeq& w, const LevelSpec& spec);

bool check_prefix_free(std::span<const Codeword> words);
bool check_prefix_free(std::span<const std::string> words);

// Level-order construction: on every level the leftmost free slots become the
// leaves, the rest stay internal. Symbol k on level i ranges over 0..r_i-1.
// The returned book has one word per leaf and an unset (unreachable) cost.
CodeBook leafseq_to_codewords(const LeafSequence& seq, const LevelSpec& spec);

// Removes leaves from the deepest levels until exactly n remain.
LeafSequence prune_to_n(const LeafSequence& seq, std::uint64_t n);

// Renders words as digit strings (0-9a-z) when every symbol of every word
// fits, dot-separated decimal symbols otherwise.
std::vector<std::string> format_codewords(std::span<const Codeword> words);

// Words reordered so entry k belongs to the k-th caller weight.
std::vector<Codeword> in_caller_order(const CodeBook& book, const WeightSeq& w);
std::vector<std::uint64_t> lengths_in_caller_order(const CodeBook& book, const WeightSeq& w);

}  // namespace tdcode
