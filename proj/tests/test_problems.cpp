#include <doctest.h>

#include <set>

#include "support.hpp"
#include "tdcode/oracle.hpp"
#include "tdcode/problems.hpp"

using namespace tdcode;
using namespace tdcode::problems;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no tdcode::Error thrown");
    return ErrorKind::InternalInconsistency;
}

std::set<std::string> word_set(const CodeBook& b) {
    const auto ws = testing::words(b.words);
    return {ws.begin(), ws.end()};
}

}  // namespace

TEST_CASE("mixed radix") {
    CHECK(solve_mixed_radix(normalize_weights({3, 2, 1, 1}), {{2}}).book.cost.value() == 13);
    CHECK(solve_mixed_radix(normalize_weights({1, 1, 1, 1, 1}), {{2, 3}}).book.cost.value() == 10);
    const auto quad = solve_mixed_radix(normalize_weights({1, 1, 1}), {{4}});
    CHECK(quad.book.cost.value() == 3);
    CHECK(word_set(quad.book) == std::set<std::string>{"0", "1", "2"});
    CHECK(kind_of([] { solve_mixed_radix(normalize_weights({1, 1}), {{}}); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { solve_mixed_radix(normalize_weights({1, 1}), {{1}}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("mixed radix symbols stay inside each level's range") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t n = testing::uniform(rng, 1, 25);
        std::vector<std::uint64_t> t(testing::uniform(rng, 1, n));
        for (auto& a : t) {
            a = testing::uniform(rng, 2, 5);
        }
        const WeightSeq w = normalize_weights(testing::random_weights(rng, n));
        const auto sol = solve_mixed_radix(w, {t});
        CHECK(check_prefix_free(sol.book.words));
        for (const Codeword& word : sol.book.words) {
            for (std::size_t k = 0; k < word.size(); ++k) {
                CHECK(word[k] < t[std::min(k, t.size() - 1)]);
            }
        }
    }
}

TEST_CASE("mixed radix with a constant arity is the Huffman adapter") {
    std::mt19937_64 rng(32);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t n = testing::uniform(rng, 1, 20);
        const std::uint64_t r = testing::uniform(rng, 2, 5);
        const WeightSeq w = normalize_weights(testing::random_weights(rng, n));
        const auto a = solve_mixed_radix(w, {{r}});
        const auto b = solve_huffman_reference_adapter(w, r);
        CHECK(a.book.cost == b.book.cost);
        CHECK(a.book.words == b.book.words);
    }
}

TEST_CASE("reserved lengths, given set") {
    const auto four = solve_reserved_given(normalize_weights({1, 2, 3, 4}), {2, {2}});
    CHECK(four.book.cost.value() == 20);
    CHECK(word_set(four.book) == std::set<std::string>{"00", "01", "10", "11"});

    const auto mixed = solve_reserved_given(normalize_weights({4, 1, 1}), {2, {1, 2}});
    CHECK(mixed.book.cost.value() == 8);
    CHECK(testing::words(mixed.book.words) == std::vector<std::string>{"0", "10", "11"});

    CHECK(kind_of([] { solve_reserved_given(normalize_weights({1, 1, 1}), {2, {1}}); }) ==
          ErrorKind::NoFeasibleTree);
    CHECK(kind_of([] { solve_reserved_given(normalize_weights({1, 1}), {2, {0, 2}}); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { solve_reserved_given(normalize_weights({1, 1}), {2, {3, 2}}); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { solve_reserved_given(normalize_weights({1, 1}), {2, {}}); }) == ErrorKind::InvalidInput);
    CHECK(kind_of([] { solve_reserved_given(normalize_weights({1, 1}), {2, {1, 70}}); }) ==
          ErrorKind::ArityOverflow);
}

TEST_CASE("reserved lengths {1,3,6} over sixteen weights") {
    std::vector<std::int64_t> raw;
    for (int i = 1; i <= 16; ++i) {
        raw.push_back(i);
    }
    const WeightSeq w = normalize_weights(raw);
    for (auto alg : {gmr::Algorithm::Naive, gmr::Algorithm::Batched}) {
        const auto sol = solve_reserved_given(w, {2, {1, 3, 6}}, alg);
        CHECK(sol.book.cost.value() == 573);
        CHECK(sol.dp.leaves == LeafSequence::from_levels({{2, 6}, {3, 10}}));
    }
}

TEST_CASE("large meta-arities take the wide-level branch") {
    const WeightSeq w = normalize_weights({9, 7, 5, 3, 2, 1});
    const auto sol = solve_reserved_given(w, {3, {4, 9}});
    CHECK(sol.levels.arity(1) == 81);
    for (auto len : sol.book.lengths) {
        CHECK(len == 4);
    }
    CHECK(sol.book.cost.value() == 4 * 27);
}

TEST_CASE("reserved-given round trip") {
    std::mt19937_64 rng(33);
    for (int rep = 0; rep < 80; ++rep) {
        const std::size_t n = testing::uniform(rng, 1, 20);
        const std::uint64_t r = testing::uniform(rng, 2, 3);
        std::set<std::uint64_t> lens;
        const std::size_t g = testing::uniform(rng, 1, 4);
        while (lens.size() < g) {
            lens.insert(testing::uniform(rng, 1, 7));
        }
        const std::vector<std::uint64_t> lambda(lens.begin(), lens.end());
        std::uint64_t cap = 1;
        for (std::uint64_t k = 0; k < lambda.back(); ++k) {
            cap *= r;
        }
        const WeightSeq w = normalize_weights(testing::random_weights(rng, n));
        if (cap < n) {
            CHECK(kind_of([&] { solve_reserved_given(w, {r, lambda}); }) == ErrorKind::NoFeasibleTree);
            continue;
        }
        const auto sol = solve_reserved_given(w, {r, lambda});
        CHECK(check_prefix_free(sol.book.words));
        std::vector<std::uint64_t> from_levels;
        const auto& counts = sol.dp.leaves.counts();
        for (std::size_t k = 1; k < counts.size(); ++k) {
            from_levels.insert(from_levels.end(), counts[k], lambda[k - 1]);
        }
        CHECK(sol.book.lengths == from_levels);
        std::uint64_t cost = 0;
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(lens.count(sol.book.words[i].size()) == 1);
            for (auto sym : sol.book.words[i]) {
                CHECK(sym < r);
            }
            cost += sol.book.words[i].size() * w.weight(i + 1);
        }
        CHECK(cost == sol.book.cost.value());
    }
}

TEST_CASE("reserved lengths, at most g of them") {
    CHECK(solve_reserved_g(normalize_weights({1, 1, 1, 1}), {2, 1}).book.cost.value() == 8);
    const auto two = solve_reserved_g(normalize_weights({4, 1, 1}), {2, 2});
    CHECK(two.book.cost.value() == 8);
    CHECK(two.book.lengths == std::vector<std::uint64_t>{1, 2, 2});
    CHECK(kind_of([] { solve_reserved_g(normalize_weights({1}), {2, 0}); }) == ErrorKind::InvalidInput);

    const ChoiceLevelSpec opts = g_lengths_levels({2, 3}, 8);
    CHECK(opts.depth() == 3);
    CHECK(opts.options(1) == std::vector<LevelParams>{{2, 1}, {4, 2}, {8, 3}, {16, 4}});
}

TEST_CASE("g-lengths envelope") {
    std::mt19937_64 rng(34);
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t n = testing::uniform(rng, 1, 16);
        const std::uint64_t r = testing::uniform(rng, 2, 3);
        const WeightSeq w = normalize_weights(testing::random_weights(rng, n, 1000));
        Cost prev = Cost::unreachable();
        for (std::uint64_t g = 1; g <= n; ++g) {
            const auto sol = solve_reserved_g(w, {r, g});
            CHECK(sol.book.cost <= prev);
            prev = sol.book.cost;
            const std::set<std::uint64_t> distinct(sol.book.lengths.begin(), sol.book.lengths.end());
            CHECK(distinct.size() <= g);
            CHECK(check_prefix_free(sol.book.words));
        }
        CHECK(prev == oracle::huffman_greedy(w, r));
        // once g covers the lengths of a Huffman code it no longer binds
        const auto huff = solve_huffman_reference_adapter(w, r);
        const std::set<std::uint64_t> hl(huff.book.lengths.begin(), huff.book.lengths.end());
        CHECK(solve_reserved_g(w, {r, hl.size()}).book.cost == huff.book.cost);
    }
}

TEST_CASE("reserved-g agrees with the oracle over option assignments") {
    std::mt19937_64 rng(35);
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t n = testing::uniform(rng, 1, 6);
        const std::uint64_t g = testing::uniform(rng, 1, 3);
        const WeightSeq w = normalize_weights(testing::random_weights(rng, n));
        const auto cs = g_lengths_levels({2, g}, n);
        CHECK(solve_reserved_g(w, {2, g}).book.cost == oracle::enumerate_choice(w, cs, std::min<std::size_t>(n, g)));
    }
}

TEST_CASE("Huffman adapter") {
    CHECK(solve_huffman_reference_adapter(normalize_weights({3, 2, 1, 1}), 2).book.cost.value() == 13);
    CHECK(solve_huffman_reference_adapter(normalize_weights({1, 1, 1}), 3).book.cost.value() == 3);
    CHECK(solve_huffman_reference_adapter(normalize_weights({1, 1}), 2).book.cost.value() == 2);
    CHECK(kind_of([] { solve_huffman_reference_adapter(normalize_weights({1, 1}), 1); }) == ErrorKind::InvalidInput);
    std::mt19937_64 rng(36);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = testing::uniform(rng, 1, 30);
        const std::uint64_t r = testing::uniform(rng, 2, 4);
        const WeightSeq w = normalize_weights(testing::random_weights(rng, n, 1000));
        const auto sol = solve_huffman_reference_adapter(w, r);
        CHECK(sol.book.cost == oracle::huffman_greedy(w, r));
        CHECK(check_prefix_free(sol.book.words));
    }
}

TEST_CASE("expand_meta_words writes base-r digits, most significant first") {
    const std::vector<Codeword> meta{{5, 0}, {2}};
    const std::vector<LevelParams> levels{{8, 3}, {2, 1}};
    CHECK(testing::words(expand_meta_words(meta, levels, 2)) == std::vector<std::string>{"1010", "010"});
}
