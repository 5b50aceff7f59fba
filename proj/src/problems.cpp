#include "tdcode/problems.hpp"

#include <string>

namespace tdcode::problems {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t out = 1;
    for (std::uint64_t k = 0; k < exp; ++k) {
        if (__builtin_mul_overflow(out, base, &out)) {
            throw Error(ErrorKind::ArityOverflow,
                        std::to_string(base) + "^" + std::to_string(exp) + " does not fit in 64 bits");
        }
    }
    return out;
}

// r^exp >= n without overflowing.
bool power_reaches(std::uint64_t r, std::uint64_t exp, std::uint64_t n) {
    std::uint64_t v = 1;
    for (std::uint64_t k = 0; k < exp && v < n; ++k) {
        if (__builtin_mul_overflow(v, r, &v)) {
            return true;
        }
    }
    return v >= n;
}

void check_radix(std::uint64_t r) {
    if (r < 2) {
        throw Error(ErrorKind::InvalidInput, "alphabet size must be at least 2");
    }
}

// Builds words for the pruned leaf sequence over `used` and checks the cost
// against the DP answer.
CodeBook build_book(const gmr::DPResult& dp, const LevelSpec& used, const WeightSeq& w) {
    CodeBook book = leafseq_to_codewords(dp.leaves, used);
    book.cost = cost_of_leaf_sequence(dp.leaves, w, used);
    if (book.cost != dp.answer.cost) {
        throw Error(ErrorKind::InternalInconsistency,
                    "code cost " + std::to_string(book.cost.value()) + " differs from the table optimum " +
                        std::to_string(dp.answer.cost.value()));
    }
    return book;
}

Solution finish_meta(gmr::DPResult dp, const WeightSeq& w, std::uint64_t radix) {
    Solution sol;
    sol.levels = LevelSpec(dp.chosen);
    sol.book = build_book(dp, sol.levels, w);
    sol.book.words = expand_meta_words(sol.book.words, sol.levels.levels(), radix);
    for (std::size_t i = 0; i < sol.book.words.size(); ++i) {
        sol.book.lengths[i] = sol.book.words[i].size();
    }
    sol.dp = std::move(dp);
    return sol;
}

}  // namespace

Solution solve_gmr(const WeightSeq& w, const LevelSpec& spec, gmr::Algorithm algorithm,
                   const gmr::SolveOptions& options) {
    Solution sol;
    sol.dp = gmr::solve(w, spec, algorithm, options);
    sol.levels = LevelSpec(sol.dp.chosen);
    sol.book = build_book(sol.dp, sol.levels, w);
    return sol;
}

LevelSpec mixed_radix_levels(const MixedRadixSpec& spec, std::size_t depth) {
    if (spec.arities.empty()) {
        throw Error(ErrorKind::InvalidInput, "mixed-radix spec needs at least one arity");
    }
    std::vector<LevelParams> levels;
    for (std::uint64_t t : spec.arities) {
        levels.push_back(LevelParams{t, 1});
    }
    return LevelSpec(std::move(levels)).extended_to(depth);
}

Solution solve_mixed_radix(const WeightSeq& w, const MixedRadixSpec& spec, gmr::Algorithm algorithm) {
    return solve_gmr(w, mixed_radix_levels(spec, w.size()), algorithm);
}

LevelSpec reserved_levels(const ReservedSpec& spec, std::uint64_t n) {
    check_radix(spec.radix);
    if (spec.lengths.empty()) {
        throw Error(ErrorKind::InvalidInput, "length set is empty");
    }
    std::vector<LevelParams> levels;
    std::uint64_t prev = 0;
    for (std::uint64_t len : spec.lengths) {
        if (len <= prev) {
            throw Error(ErrorKind::InvalidInput, "lengths must be positive and strictly increasing");
        }
        levels.push_back(LevelParams{checked_pow(spec.radix, len - prev), len - prev});
        prev = len;
    }
    if (!power_reaches(spec.radix, spec.lengths.back(), n)) {
        throw Error(ErrorKind::NoFeasibleTree, "longest allowed length cannot host " + std::to_string(n) + " words");
    }
    return LevelSpec(std::move(levels));
}

Solution solve_reserved_given(const WeightSeq& w, const ReservedSpec& spec, gmr::Algorithm algorithm) {
    const LevelSpec meta = reserved_levels(spec, w.size());
    return finish_meta(gmr::solve(w, meta, algorithm), w, spec.radix);
}

ChoiceLevelSpec g_lengths_levels(const GLengthsSpec& spec, std::uint64_t n) {
    check_radix(spec.radix);
    if (spec.g == 0) {
        throw Error(ErrorKind::InvalidInput, "g must be at least 1");
    }
    // t runs over 1..1 + floor(log_r n)
    std::uint64_t top = 1;
    for (std::uint64_t v = spec.radix; v <= n; v = checked_mul(v, spec.radix)) {
        ++top;
    }
    std::vector<LevelParams> opts;
    for (std::uint64_t t = 1; t <= top; ++t) {
        opts.push_back(LevelParams{checked_pow(spec.radix, t), t});
    }
    return ChoiceLevelSpec(std::vector<std::vector<LevelParams>>(static_cast<std::size_t>(spec.g), opts));
}

Solution solve_reserved_g(const WeightSeq& w, const GLengthsSpec& spec, gmr::Algorithm algorithm) {
    const ChoiceLevelSpec levels = g_lengths_levels(spec, w.size());
    return finish_meta(choice::solve_choice(w, levels, algorithm), w, spec.radix);
}

Solution solve_huffman_reference_adapter(const WeightSeq& w, std::uint64_t r, gmr::Algorithm algorithm) {
    check_radix(r);
    return solve_gmr(w, LevelSpec::constant(r, 1, w.size()), algorithm);
}

std::vector<Codeword> expand_meta_words(std::span<const Codeword> words, std::span<const LevelParams> levels,
                                        std::uint64_t radix) {
    std::vector<Codeword> out;
    out.reserve(words.size());
    for (const Codeword& word : words) {
        Codeword digits;
        for (std::size_t k = 0; k < word.size(); ++k) {
            const std::uint64_t gap = levels[k].edge;
            std::uint64_t s = word[k];
            const std::size_t at = digits.size();
            digits.resize(at + gap);
            for (std::uint64_t j = gap; j-- > 0;) {
                digits[at + j] = static_cast<std::uint32_t>(s % radix);
                s /= radix;
            }
        }
        out.push_back(std::move(digits));
    }
    return out;
}

}  // namespace tdcode::problems
