#include "tdcode/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace tdcode {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::InvalidLeafSequence: return "InvalidLeafSequence";
        case ErrorKind::InsufficientLeaves: return "InsufficientLeaves";
        case ErrorKind::NoFeasibleTree: return "NoFeasibleTree";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::ArityOverflow: return "ArityOverflow";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::InvalidRange: return "InvalidRange";
    }
    return "Unknown";
}

WeightSeq normalize_weights(std::span<const std::int64_t> raw) {
    if (raw.empty()) {
        throw Error(ErrorKind::InvalidInput, "weight sequence is empty");
    }
    WeightSeq out;
    out.order_.resize(raw.size());
    std::iota(out.order_.begin(), out.order_.end(), std::size_t{0});
    for (std::int64_t v : raw) {
        if (v < 0) {
            throw Error(ErrorKind::InvalidInput, "negative weight " + std::to_string(v));
        }
    }
    std::stable_sort(out.order_.begin(), out.order_.end(),
                     [&](std::size_t a, std::size_t b) { return raw[a] > raw[b]; });
    out.weights_.reserve(raw.size());
    for (std::size_t idx : out.order_) {
        out.weights_.push_back(static_cast<std::uint64_t>(raw[idx]));
    }
    out.suffix_.assign(raw.size() + 1, 0);
    for (std::size_t m = raw.size(); m-- > 0;) {
        out.suffix_[m] = checked_add(out.suffix_[m + 1], out.weights_[m]);
    }
    return out;
}

LevelSpec::LevelSpec(std::vector<LevelParams> levels) : levels_(std::move(levels)) {
    cumulative_.reserve(levels_.size() + 1);
    for (const LevelParams& lp : levels_) {
        if (lp.arity < 2) {
            throw Error(ErrorKind::InvalidInput, "level arity must be at least 2");
        }
        if (lp.edge < 1) {
            throw Error(ErrorKind::InvalidInput, "edge length must be positive");
        }
        cumulative_.push_back(checked_add(cumulative_.back(), lp.edge));
    }
}

LevelSpec LevelSpec::constant(std::uint64_t arity, std::uint64_t edge, std::size_t depth) {
    return LevelSpec(std::vector<LevelParams>(depth, LevelParams{arity, edge}));
}

LevelSpec LevelSpec::extended_to(std::size_t depth) const {
    if (levels_.empty() || depth <= levels_.size()) {
        return *this;
    }
    std::vector<LevelParams> out = levels_;
    out.resize(depth, levels_.back());
    return LevelSpec(std::move(out));
}

ChoiceLevelSpec::ChoiceLevelSpec(std::vector<std::vector<LevelParams>> levels) : levels_(std::move(levels)) {
    for (const auto& opts : levels_) {
        if (opts.empty()) {
            throw Error(ErrorKind::InvalidInput, "a level has an empty option set");
        }
        for (std::size_t j = 0; j < opts.size(); ++j) {
            if (opts[j].arity < 2 || opts[j].edge < 1) {
                throw Error(ErrorKind::InvalidInput, "option needs arity >= 2 and edge length >= 1");
            }
            for (std::size_t k = 0; k < j; ++k) {
                if (opts[k] == opts[j]) {
                    throw Error(ErrorKind::InvalidInput, "duplicate option within a level");
                }
            }
        }
    }
}

ChoiceLevelSpec ChoiceLevelSpec::from(const LevelSpec& spec) {
    std::vector<std::vector<LevelParams>> levels;
    levels.reserve(spec.depth());
    for (const LevelParams& lp : spec.levels()) {
        levels.push_back({lp});
    }
    return ChoiceLevelSpec(std::move(levels));
}

LevelSpec ChoiceLevelSpec::select(std::span<const std::size_t> choice) const {
    if (choice.size() != levels_.size()) {
        throw Error(ErrorKind::InvalidInput, "choice vector does not cover every level");
    }
    std::vector<LevelParams> out;
    out.reserve(choice.size());
    for (std::size_t i = 0; i < choice.size(); ++i) {
        out.push_back(levels_[i].at(choice[i]));
    }
    return LevelSpec(std::move(out));
}

LeafSequence::LeafSequence(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {
    if (!counts_.empty() && counts_.front() != 0) {
        throw Error(ErrorKind::InvalidLeafSequence, "leaves on level 0");
    }
    while (!counts_.empty() && counts_.back() == 0) {
        counts_.pop_back();
    }
}

LeafSequence LeafSequence::from_levels(std::initializer_list<std::pair<std::size_t, std::uint64_t>> levels) {
    std::vector<std::uint64_t> counts;
    for (const auto& [level, count] : levels) {
        if (counts.size() <= level) {
            counts.resize(level + 1, 0);
        }
        counts[level] += count;
    }
    return LeafSequence(std::move(counts));
}

std::uint64_t LeafSequence::total() const noexcept {
    std::uint64_t sum = 0;
    for (std::uint64_t c : counts_) {
        sum += c;
    }
    return sum;
}

namespace {

constexpr std::uint64_t kBudgetCap = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out) || out > kBudgetCap) {
        return kBudgetCap;
    }
    return out;
}

std::int64_t signed_gap(std::uint64_t budget, std::uint64_t used) {
    if (used <= budget) {
        return static_cast<std::int64_t>(std::min(budget - used, kBudgetCap));
    }
    return -static_cast<std::int64_t>(std::min(used - budget, kBudgetCap));
}

}  // namespace

std::int64_t kraft_slack(const LeafSequence& seq, const LevelSpec& spec) {
    std::uint64_t budget = 1;  // the root
    const auto& counts = seq.counts();
    for (std::size_t level = 0; level < counts.size(); ++level) {
        if (level > 0) {
            const std::uint64_t arity = level <= spec.depth() ? spec.arity(level) : 0;
            budget = saturating_mul(budget - counts[level - 1], arity);
        }
        if (counts[level] > budget || level + 1 == counts.size()) {
            return signed_gap(budget, counts[level]);
        }
    }
    return 1;
}

bool is_realizable(const LeafSequence& seq, const LevelSpec& spec) { return kraft_slack(seq, spec) >= 0; }

Cost cost_of_leaf_sequence(const LeafSequence& seq, const WeightSeq& w, const LevelSpec& spec) {
    if (!is_realizable(seq, spec)) {
        throw Error(ErrorKind::InvalidLeafSequence, "leaf sequence is not realizable under the level spec");
    }
    if (seq.total() < w.size()) {
        throw Error(ErrorKind::InsufficientLeaves, "fewer leaves than weights");
    }
    std::uint64_t cost = 0;
    std::size_t next = 1;
    const auto& counts = seq.counts();
    for (std::size_t level = 1; level < counts.size() && next <= w.size(); ++level) {
        const std::uint64_t depth = spec.cumulative_depth(level);
        for (std::uint64_t k = 0; k < counts[level] && next <= w.size(); ++k, ++next) {
            cost = checked_add(cost, checked_mul(depth, w.weight(next)));
        }
    }
    return Cost::finite(cost);
}

namespace {

template <typename Word>
bool prefix_free_sorted(std::vector<const Word*>& sorted) {
    std::sort(sorted.begin(), sorted.end(), [](const Word* a, const Word* b) { return *a < *b; });
    // After sorting, a word that prefixes another also prefixes its successor.
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        const Word& a = *sorted[i - 1];
        const Word& b = *sorted[i];
        if (a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin())) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool check_prefix_free(std::span<const Codeword> words) {
    std::vector<const Codeword*> ptrs;
    ptrs.reserve(words.size());
    for (const auto& word : words) {
        ptrs.push_back(&word);
    }
    return prefix_free_sorted(ptrs);
}

bool check_prefix_free(std::span<const std::string> words) {
    std::vector<const std::string*> ptrs;
    ptrs.reserve(words.size());
    for (const auto& word : words) {
        ptrs.push_back(&word);
    }
    return prefix_free_sorted(ptrs);
}

CodeBook leafseq_to_codewords(const LeafSequence& seq, const LevelSpec& spec) {
    if (!is_realizable(seq, spec)) {
        throw Error(ErrorKind::InvalidLeafSequence, "leaf sequence is not realizable under the level spec");
    }
    CodeBook book;
    book.leaves = seq;
    const auto& counts = seq.counts();
    std::uint64_t remaining = seq.total();
    // Only the leftmost `remaining` internal nodes can have leaf descendants
    // under the leftmost-slot rule, so the frontier never grows past that.
    std::vector<Codeword> frontier{Codeword{}};
    for (std::size_t level = 1; level < counts.size(); ++level) {
        const std::uint64_t arity = spec.arity(level);
        const std::uint64_t leaves = counts[level];
        remaining -= leaves;
        std::vector<Codeword> next;
        std::uint64_t placed = 0;
        for (const Codeword& parent : frontier) {
            if (placed == leaves && next.size() >= remaining) {
                break;
            }
            for (std::uint64_t sym = 0; sym < arity; ++sym) {
                if (placed == leaves && next.size() >= remaining) {
                    break;
                }
                if (sym > std::numeric_limits<std::uint32_t>::max()) {
                    throw Error(ErrorKind::Overflow, "symbol index exceeds 32 bits");
                }
                Codeword word = parent;
                word.push_back(static_cast<std::uint32_t>(sym));
                if (placed < leaves) {
                    book.lengths.push_back(word.size());
                    book.words.push_back(std::move(word));
                    ++placed;
                } else {
                    next.push_back(std::move(word));
                }
            }
        }
        frontier = std::move(next);
    }
    return book;
}

LeafSequence prune_to_n(const LeafSequence& seq, std::uint64_t n) {
    if (seq.total() < n) {
        throw Error(ErrorKind::InsufficientLeaves, "cannot prune to more leaves than present");
    }
    std::vector<std::uint64_t> counts = seq.counts();
    std::uint64_t excess = seq.total() - n;
    for (std::size_t level = counts.size(); level-- > 0 && excess > 0;) {
        const std::uint64_t take = std::min(excess, counts[level]);
        counts[level] -= take;
        excess -= take;
    }
    return LeafSequence(std::move(counts));
}

std::vector<std::string> format_codewords(std::span<const Codeword> words) {
    bool compact = true;
    for (const auto& word : words) {
        for (std::uint32_t sym : word) {
            compact = compact && sym < 36;
        }
    }
    std::vector<std::string> out;
    out.reserve(words.size());
    for (const auto& word : words) {
        std::string s;
        for (std::size_t k = 0; k < word.size(); ++k) {
            if (compact) {
                s.push_back(word[k] < 10 ? static_cast<char>('0' + word[k]) : static_cast<char>('a' + word[k] - 10));
            } else {
                if (k > 0) {
                    s.push_back('.');
                }
                s += std::to_string(word[k]);
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Codeword> in_caller_order(const CodeBook& book, const WeightSeq& w) {
    std::vector<Codeword> out(w.size());
    for (std::size_t i = 1; i <= w.size() && i <= book.words.size(); ++i) {
        out[w.original_index(i)] = book.words[i - 1];
    }
    return out;
}

std::vector<std::uint64_t> lengths_in_caller_order(const CodeBook& book, const WeightSeq& w) {
    std::vector<std::uint64_t> out(w.size(), 0);
    for (std::size_t i = 1; i <= w.size() && i <= book.lengths.size(); ++i) {
        out[w.original_index(i)] = book.lengths[i - 1];
    }
    return out;
}

}  // namespace tdcode
