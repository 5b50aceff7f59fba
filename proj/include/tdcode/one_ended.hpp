#pragma once

// Minimum-cost binary prefix-free codes in which every word ends in 1.
//
// Trees are grown a level at a time. A node is good when it is a 1-leaf that
// carries one of p_1..p_n and bad otherwise; every bad node on the bottom
// level is expanded into a 0-child and a 1-child. The state (m, b) counts good
// leaves so far and bad nodes on the bottom level, and
//
//   OPT[m,b] = min { OPT[m',b'] + W_{m'} : m = m' + 2b' - b, 1 <= b' <= b <= 2b' }
//
// over the level-free table m <= n, 1 <= b <= 2n - 1, from OPT[0,1] = 0.
// Entries sharing d = m + b draw from the same candidates gamma(b'), so each
// diagonal is answered with window minima over a range-minimum index.

#include <cstdint>
#include <limits>
#include <vector>

#include "tdcode/core.hpp"

namespace tdcode::one_ended {

struct Signature {
    std::uint64_t m = 0;
    std::uint64_t b = 0;

    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature&, const Signature&) = default;
};

inline constexpr std::uint32_t kNoPredecessor = std::numeric_limits<std::uint32_t>::max();

struct Entry {
    Cost cost;
    std::uint32_t pred_b = kNoPredecessor;

    friend bool operator==(const Entry&, const Entry&) = default;
};

class Table {
public:
    explicit Table(std::uint64_t n);

    [[nodiscard]] std::uint64_t n() const noexcept { return n_; }
    [[nodiscard]] std::uint64_t max_bad() const noexcept { return 2 * n_ - 1; }

    [[nodiscard]] bool is_valid(std::uint64_t m, std::uint64_t b) const noexcept {
        return m <= n_ && b >= 1 && b <= max_bad();
    }
    [[nodiscard]] const Entry* find(std::uint64_t m, std::uint64_t b) const noexcept {
        return is_valid(m, b) ? &cells_[index(m, b)] : nullptr;
    }
    [[nodiscard]] Entry* find(std::uint64_t m, std::uint64_t b) noexcept {
        return is_valid(m, b) ? &cells_[index(m, b)] : nullptr;
    }
    [[nodiscard]] Cost cost(std::uint64_t m, std::uint64_t b) const noexcept {
        const Entry* e = find(m, b);
        return e ? e->cost : Cost::unreachable();
    }

    friend bool operator==(const Table&, const Table&) = default;

private:
    [[nodiscard]] std::size_t index(std::uint64_t m, std::uint64_t b) const noexcept {
        return static_cast<std::size_t>(m * max_bad() + (b - 1));
    }

    std::uint64_t n_ = 0;
    std::vector<Entry> cells_;
};

// Valid (m', b') that expand into `sig`, by increasing b'.
std::vector<Signature> oe_predecessors(Signature sig, std::uint64_t n);

struct Result {
    Cost cost;
    CodeBook book;                     // words end in symbol 1, weight order
    std::vector<Signature> expansion;  // (0,1) -> ... -> (n, b)
    Table table{1};
    std::uint64_t cells_updated = 0;
};

// Batched fill with window minima.
Result solve_one_ended(const WeightSeq& w);

// Direct minimization over oe_predecessors in lexicographic (m, b) order.
Result solve_one_ended_naive(const WeightSeq& w);

// Least OPT[n, b] over 1 <= b <= 2n - 2 (b = 1 when n = 1); ties go to the smaller b.
Signature best_final(const Table& table);

std::vector<Signature> backtrack(const Table& table, Signature final_sig);

// Bad nodes are expanded left to right into a 0-child then a 1-child; the
// first m_i - m_{i-1} new 1-children become good leaves, shallowest weights first.
CodeBook expansion_to_codewords(const std::vector<Signature>& expansion, const WeightSeq& w);

// Sum over expansion steps of W_{m_{i-1}}.
Cost telescoped_cost(const std::vector<Signature>& expansion, const WeightSeq& w);

}  // namespace tdcode::one_ended
