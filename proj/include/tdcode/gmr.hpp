#pragma once

// Top-down dynamic program over (m, b) signatures for generalized mixed-radix
// trees, in a direct O(n^3)-per-level form and a batched O(n^2)-per-level form.
//
// A level-i signature (m, b) counts the labeled leaves on levels <= i (m) and
// the bottom-level nodes that will be expanded (b). OPT^i[m,b] is the least
// partial cost sum_{t<=m} depth(v_t) p_t + L(i) W_m over full i-level trees.
// Levels are filled from OPT^0[0,1] = 0 with
//
//   OPT^i[m,b] = min { OPT^{i-1}[m',b'] + c_i W_{m'} : m = m' + b' r_i - b, 0 <= b <= b' r_i }.
//
// The batched form groups the entries of one level by d = m + b: every entry
// on that diagonal draws from the same candidate list gamma(b'), and the
// admissible b' window only grows as m increases, so one sweep with a
// running minimum fills the whole diagonal.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "tdcode/core.hpp"

namespace tdcode::gmr {

enum class Algorithm { Naive, Batched };

struct Signature {
    std::uint64_t m = 0;
    std::uint64_t b = 0;

    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature&, const Signature&) = default;
};

inline constexpr std::uint32_t kNoPredecessor = std::numeric_limits<std::uint32_t>::max();

// One table cell. The predecessor is stored as b'; m' follows from the
// expansion relation and the arity of the option that produced the cell.
struct Entry {
    Cost cost;
    std::uint32_t pred_b = kNoPredecessor;
    std::uint32_t option = 0;

    friend bool operator==(const Entry&, const Entry&) = default;
};

// Inclusive range of m for which (m, 0) is a valid signature.
struct Segment {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    friend bool operator==(const Segment&, const Segment&) = default;
};

// OPT^i restricted to valid signatures: every (m, b) with b > 0 and m + b <= n,
// plus (m, 0) for m in the union of [max(n, r), n + r - 1] over the level's
// options. Absent signatures read as UNREACHABLE.
class LevelTable {
public:
    LevelTable(std::uint64_t n, std::size_t level, std::vector<LevelParams> options);

    // Level 0: only the internal root, OPT^0[0,1] = 0.
    static LevelTable root(std::uint64_t n);

    [[nodiscard]] std::uint64_t n() const noexcept { return n_; }
    [[nodiscard]] std::size_t level() const noexcept { return level_; }
    [[nodiscard]] const std::vector<LevelParams>& options() const noexcept { return options_; }
    [[nodiscard]] const std::vector<Segment>& closed_segments() const noexcept { return segments_; }

    [[nodiscard]] bool is_valid(std::uint64_t m, std::uint64_t b) const noexcept { return index_of(m, b) != kAbsent; }

    [[nodiscard]] const Entry* find(std::uint64_t m, std::uint64_t b) const noexcept {
        const std::size_t idx = index_of(m, b);
        return idx == kAbsent ? nullptr : &cells_[idx];
    }
    [[nodiscard]] Entry* find(std::uint64_t m, std::uint64_t b) noexcept {
        const std::size_t idx = index_of(m, b);
        return idx == kAbsent ? nullptr : &cells_[idx];
    }

    [[nodiscard]] Cost cost(std::uint64_t m, std::uint64_t b) const noexcept {
        const Entry* e = find(m, b);
        return e ? e->cost : Cost::unreachable();
    }

    // Visits every valid signature: open cells by diagonal, then closed rows by m.
    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t d = 1; d <= n_; ++d) {
            for (std::uint64_t m = 0; m < d; ++m) {
                f(Signature{m, d - m}, cells_[open_index(m, d - m)]);
            }
        }
        for (const Segment& seg : segments_) {
            for (std::uint64_t m = seg.lo; m <= seg.hi; ++m) {
                f(Signature{m, 0}, *find(m, 0));
            }
        }
    }

    friend bool operator==(const LevelTable&, const LevelTable&) = default;

private:
    static constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();

    [[nodiscard]] std::size_t open_count() const noexcept { return static_cast<std::size_t>(n_ * (n_ + 1) / 2); }

    [[nodiscard]] std::size_t open_index(std::uint64_t m, std::uint64_t b) const noexcept {
        const std::uint64_t d = m + b;
        return static_cast<std::size_t>(d * (d - 1) / 2 + m);
    }

    [[nodiscard]] std::size_t index_of(std::uint64_t m, std::uint64_t b) const noexcept {
        if (b > 0) {
            return (b <= n_ && m <= n_ - b) ? open_index(m, b) : kAbsent;
        }
        std::size_t base = open_count();
        for (const Segment& seg : segments_) {
            if (m < seg.lo) {
                break;
            }
            if (m <= seg.hi) {
                return base + static_cast<std::size_t>(m - seg.lo);
            }
            base += static_cast<std::size_t>(seg.hi - seg.lo + 1);
        }
        return kAbsent;
    }

    std::uint64_t n_ = 0;
    std::size_t level_ = 0;
    std::vector<LevelParams> options_;
    std::vector<Segment> segments_;
    std::vector<Entry> cells_;
};

struct Answer {
    std::size_t level = 0;
    std::uint64_t leaves = 0;  // n'
    Cost cost;

    friend bool operator==(const Answer&, const Answer&) = default;
};

struct SolveOptions {
    // Deepest level considered; defaults to min(n, spec depth).
    std::optional<std::size_t> max_level;
    // false: cost-only mode, two live tables and no backtrace.
    bool keep_tables = true;
};

struct DPResult {
    std::vector<LevelTable> tables;       // levels 0..max_level, empty in cost-only mode
    Answer answer;
    std::vector<Signature> expansion;     // (0,1) -> ... -> (n',0), one per level
    std::vector<LevelParams> chosen;      // (r_i, c_i) used on levels 1..answer.level
    LeafSequence full_leaves;             // the full tree, n' leaves
    LeafSequence leaves;                  // pruned to exactly n leaves
    std::uint64_t cells_updated = 0;
};

// Valid level-(i-1) signatures (m', b') with (m', b') -> (m, b) at level i,
// ordered by increasing m'.
std::vector<Signature> predecessors(std::size_t level, Signature sig, const LevelSpec& spec, std::uint64_t n);

bool is_valid_signature(std::size_t level, Signature sig, const LevelSpec& spec, std::uint64_t n);

// Fills `out` (a level-i table) from the level-(i-1) table using the option
// stored at `option` in out.options(). Cells record `option` as their source.
void fill_level(const LevelTable& prev, LevelTable& out, std::uint32_t option, const WeightSeq& w,
                Algorithm algorithm, std::uint64_t& cells);

DPResult solve(const WeightSeq& w, const LevelSpec& spec, Algorithm algorithm, const SolveOptions& options = {});

inline DPResult solve_naive(const WeightSeq& w, const LevelSpec& spec, const SolveOptions& options = {}) {
    return solve(w, spec, Algorithm::Naive, options);
}

inline DPResult solve_batched(const WeightSeq& w, const LevelSpec& spec, const SolveOptions& options = {}) {
    return solve(w, spec, Algorithm::Batched, options);
}

// Least OPT^l[n',0] over all tables; ties go to the smaller l, then smaller n'.
// Throws NoFeasibleTree when every candidate is UNREACHABLE.
Answer extract_answer(std::span<const LevelTable> tables);

struct Backtrace {
    std::vector<Signature> expansion;
    std::vector<LevelParams> chosen;
    LeafSequence leaves;  // unpruned, n' leaves
};

// Follows stored predecessors from (n', 0) back to the root. A chain that does
// not end at (0,1) on level 0 throws InternalInconsistency.
Backtrace backtrack(std::span<const LevelTable> tables, const Answer& answer);

// Sum over the expansion steps of c_i * W_{m_{i-1}}.
Cost telescoped_cost(std::span<const Signature> expansion, std::span<const LevelParams> chosen, const WeightSeq& w);

}  // namespace tdcode::gmr
