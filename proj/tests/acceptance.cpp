// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "support.hpp"
#include "tdcode/bench.hpp"
#include "tdcode/choice.hpp"
#include "tdcode/one_ended.hpp"
#include "tdcode/oracle.hpp"
#include "tdcode/problems.hpp"

using namespace tdcode;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

// Criterion 7 is checked on every instance solved for criteria 1-4.
struct Telescoping {
    std::size_t checked = 0;
    std::size_t broken = 0;

    void gmr_result(const gmr::DPResult& r, const WeightSeq& w) {
        ++checked;
        if (gmr::telescoped_cost(r.expansion, r.chosen, w) != r.answer.cost) {
            ++broken;
        }
    }
    void one_ended_result(const one_ended::Result& r, const WeightSeq& w) {
        ++checked;
        if (one_ended::telescoped_cost(r.expansion, w) != r.cost) {
            ++broken;
        }
    }
};

Telescoping telescoping;

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// 1. Oracle equivalence, GMR.
Verdict oracle_gmr() {
    std::mt19937_64 rng(1001);
    std::size_t mismatches = 0;
    std::size_t infeasible = 0;
    const std::size_t total = 500;
    for (std::size_t rep = 0; rep < total; ++rep) {
        const std::size_t n = testing::uniform(rng, 1, 8);
        const std::size_t max_level = testing::uniform(rng, 1, 5);
        const WeightSeq w = normalize_weights(testing::random_weights(rng, n, 50));
        const LevelSpec spec = testing::random_levels(rng, max_level, 4, 3);
        Cost expected;
        try {
            expected = oracle::enumerate_gmr(w, spec, max_level);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NoFeasibleTree) {
                throw;
            }
        }
        for (auto alg : {gmr::Algorithm::Naive, gmr::Algorithm::Batched}) {
            try {
                const auto r = gmr::solve(w, spec, alg, {max_level, true});
                telescoping.gmr_result(r, w);
                mismatches += r.answer.cost != expected;
            } catch (const Error& e) {
                mismatches += !(e.kind() == ErrorKind::NoFeasibleTree && !expected.is_finite());
            }
        }
        infeasible += !expected.is_finite();
    }
    return {mismatches == 0, fmt("%zu instances (%zu infeasible under their level cap), %zu mismatches", total,
                                 infeasible, mismatches)};
}

// 2. Oracle equivalence, one-ended.
Verdict oracle_one_ended() {
    std::mt19937_64 rng(1002);
    std::size_t mismatches = 0;
    const std::size_t total = 300;
    for (std::size_t rep = 0; rep < total; ++rep) {
        const std::size_t n = testing::uniform(rng, 1, 6);
        const WeightSeq w = normalize_weights(testing::random_weights(rng, n, 50));
        const Cost expected = oracle::enumerate_one_ended(w);
        const auto a = one_ended::solve_one_ended_naive(w);
        const auto b = one_ended::solve_one_ended(w);
        telescoping.one_ended_result(a, w);
        telescoping.one_ended_result(b, w);
        mismatches += (a.cost != expected) + (b.cost != expected);
    }
    return {mismatches == 0, fmt("%zu instances, %zu mismatches", total, mismatches)};
}

// 3. Huffman cross-check.
Verdict huffman_cross_check() {
    std::mt19937_64 rng(1003);
    std::size_t mismatches = 0;
    const std::size_t total = 500;
    for (std::size_t rep = 0; rep < total; ++rep) {
        const std::size_t n = testing::uniform(rng, 1, 12);
        const std::uint64_t r = testing::uniform(rng, 2, 4);
        const WeightSeq w = normalize_weights(testing::random_weights(rng, n, 1000));
        const auto sol = problems::solve_huffman_reference_adapter(w, r);
        telescoping.gmr_result(sol.dp, w);
        mismatches += sol.book.cost != oracle::huffman_greedy(w, r);
    }
    return {mismatches == 0, fmt("%zu instances, %zu mismatches", total, mismatches)};
}

bool same_run(const gmr::DPResult& a, const gmr::DPResult& b) {
    return a.tables == b.tables && a.answer == b.answer && a.expansion == b.expansion && a.chosen == b.chosen &&
           a.leaves == b.leaves;
}

std::vector<std::uint64_t> random_lengths(std::mt19937_64& rng, std::uint64_t r, std::size_t n) {
    for (;;) {
        std::set<std::uint64_t> lens;
        const std::size_t g = testing::uniform(rng, 1, 4);
        while (lens.size() < g) {
            lens.insert(testing::uniform(rng, 1, 8));
        }
        std::uint64_t cap = 1;
        for (std::uint64_t k = 0; k < *lens.rbegin(); ++k) {
            cap *= r;
        }
        if (cap >= n) {
            return {lens.begin(), lens.end()};
        }
    }
}

// 4. Naive/batched bit-equality per problem family.
Verdict naive_batched_equality() {
    std::mt19937_64 rng(1004);
    const std::size_t per_family = 200;
    std::vector<std::pair<std::string, std::size_t>> failures;
    auto family = [&](const std::string& name, const std::function<bool(const WeightSeq&)>& check) {
        std::size_t bad = 0;
        for (std::size_t rep = 0; rep < per_family; ++rep) {
            const std::size_t n = testing::uniform(rng, 1, 40);
            // narrow weight range with zeros: plenty of ties
            auto raw = testing::random_weights(rng, n, 9);
            for (auto& p : raw) {
                p = p == 1 ? 0 : p;
            }
            bad += !check(normalize_weights(raw));
        }
        failures.emplace_back(name, bad);
    };
    auto compare = [](const gmr::DPResult& a, const gmr::DPResult& b, const WeightSeq& w) {
        telescoping.gmr_result(a, w);
        telescoping.gmr_result(b, w);
        return same_run(a, b);
    };
    family("gmr", [&](const WeightSeq& w) {
        const LevelSpec spec = testing::random_levels(rng, w.size(), 5, 3);
        return compare(gmr::solve_naive(w, spec), gmr::solve_batched(w, spec), w);
    });
    family("mixed-radix", [&](const WeightSeq& w) {
        std::vector<std::uint64_t> t(testing::uniform(rng, 1, w.size()));
        for (auto& a : t) {
            a = testing::uniform(rng, 2, 5);
        }
        const auto a = problems::solve_mixed_radix(w, {t}, gmr::Algorithm::Naive);
        const auto b = problems::solve_mixed_radix(w, {t}, gmr::Algorithm::Batched);
        return compare(a.dp, b.dp, w) && a.book.words == b.book.words;
    });
    family("reserved-given", [&](const WeightSeq& w) {
        const std::uint64_t r = testing::uniform(rng, 2, 3);
        const problems::ReservedSpec spec{r, random_lengths(rng, r, w.size())};
        const auto a = problems::solve_reserved_given(w, spec, gmr::Algorithm::Naive);
        const auto b = problems::solve_reserved_given(w, spec, gmr::Algorithm::Batched);
        return compare(a.dp, b.dp, w) && a.book.words == b.book.words;
    });
    family("reserved-g", [&](const WeightSeq& w) {
        const problems::GLengthsSpec spec{testing::uniform(rng, 2, 3), testing::uniform(rng, 1, 4)};
        const auto a = problems::solve_reserved_g(w, spec, gmr::Algorithm::Naive);
        const auto b = problems::solve_reserved_g(w, spec, gmr::Algorithm::Batched);
        return compare(a.dp, b.dp, w) && a.book.words == b.book.words;
    });
    family("huffman", [&](const WeightSeq& w) {
        const std::uint64_t r = testing::uniform(rng, 2, 4);
        const auto a = problems::solve_huffman_reference_adapter(w, r, gmr::Algorithm::Naive);
        const auto b = problems::solve_huffman_reference_adapter(w, r, gmr::Algorithm::Batched);
        return compare(a.dp, b.dp, w) && a.book.words == b.book.words;
    });
    family("one-ended", [&](const WeightSeq& w) {
        const auto a = one_ended::solve_one_ended_naive(w);
        const auto b = one_ended::solve_one_ended(w);
        telescoping.one_ended_result(a, w);
        telescoping.one_ended_result(b, w);
        return a.table == b.table && a.cost == b.cost && a.expansion == b.expansion && a.book.words == b.book.words;
    });
    bool pass = true;
    std::string detail = fmt("%zu instances per family, disagreements:", per_family);
    for (const auto& [name, bad] : failures) {
        pass = pass && bad == 0;
        detail += fmt(" %s=%zu", name.c_str(), bad);
    }
    return {pass, detail};
}

// 5. Reduction soundness.
Verdict reduction_soundness() {
    std::mt19937_64 rng(1005);
    const std::size_t total = 1000;
    std::size_t violations = 0;
    for (std::size_t rep = 0; rep < total; ++rep) {
        const std::size_t n = testing::uniform(rng, 1, 40);
        const WeightSeq w = normalize_weights(testing::random_weights(rng, n, 1000));
        bool ok = true;
        CodeBook book;
        switch (rep % 5) {
            case 0: {
                std::vector<std::uint64_t> t(testing::uniform(rng, 1, n));
                for (auto& a : t) {
                    a = testing::uniform(rng, 2, 6);
                }
                book = problems::solve_mixed_radix(w, {t}).book;
                for (const Codeword& word : book.words) {
                    for (std::size_t k = 0; k < word.size(); ++k) {
                        ok = ok && word[k] < t[std::min(k, t.size() - 1)];
                    }
                }
                break;
            }
            case 1: {
                const std::uint64_t r = testing::uniform(rng, 2, 4);
                const auto lambda = random_lengths(rng, r, n);
                book = problems::solve_reserved_given(w, {r, lambda}).book;
                const std::set<std::uint64_t> allowed(lambda.begin(), lambda.end());
                for (const Codeword& word : book.words) {
                    ok = ok && allowed.count(word.size()) == 1;
                    for (auto s : word) {
                        ok = ok && s < r;
                    }
                }
                break;
            }
            case 2: {
                const std::uint64_t r = testing::uniform(rng, 2, 4);
                const std::uint64_t g = testing::uniform(rng, 1, 5);
                book = problems::solve_reserved_g(w, {r, g}).book;
                std::set<std::size_t> distinct;
                for (const Codeword& word : book.words) {
                    distinct.insert(word.size());
                    for (auto s : word) {
                        ok = ok && s < r;
                    }
                }
                ok = ok && distinct.size() <= g;
                break;
            }
            case 3: {
                book = one_ended::solve_one_ended(w).book;
                for (const Codeword& word : book.words) {
                    ok = ok && !word.empty() && word.back() == 1;
                }
                break;
            }
            case 4: {
                const LevelSpec spec = testing::random_levels(rng, n, 5, 3);
                book = problems::solve_gmr(w, spec).book;
                for (const Codeword& word : book.words) {
                    for (std::size_t k = 0; k < word.size(); ++k) {
                        ok = ok && word[k] < spec.arity(k + 1);
                    }
                }
                break;
            }
        }
        ok = ok && book.words.size() == n && check_prefix_free(book.words);
        violations += !ok;
    }
    return {violations == 0, fmt("%zu instances over 5 problem families, %zu violations", total, violations)};
}

// 6. Complexity scaling of cells_updated.
Verdict complexity_scaling() {
    const std::vector<std::size_t> sizes{50, 100, 200, 400};
    auto slope = [&](bench::Problem p, gmr::Algorithm alg) {
        std::vector<std::pair<double, double>> pts;
        for (std::size_t n : sizes) {
            const auto raw = bench::generate_weights(bench::Distribution::Uniform, n, 7);
            const auto m = bench::run_case(p, alg, raw, 7);
            pts.emplace_back(static_cast<double>(n), static_cast<double>(m.cells));
        }
        return *bench::loglog_slope(pts);
    };
    struct Check {
        const char* name;
        bench::Problem problem;
        gmr::Algorithm alg;
        double lo;
        double hi;
    };
    const std::vector<Check> checks{
        {"gmr/batched", bench::Problem::Gmr, gmr::Algorithm::Batched, 2.7, 3.3},
        {"gmr/naive", bench::Problem::Gmr, gmr::Algorithm::Naive, 3.7, 4.3},
        {"reserved-given/batched", bench::Problem::ReservedGiven, gmr::Algorithm::Batched, 1.7, 2.3},
        {"reserved-given/naive", bench::Problem::ReservedGiven, gmr::Algorithm::Naive, 2.7, 3.3},
        {"one-ended/batched", bench::Problem::OneEnded, gmr::Algorithm::Batched, 1.6, 2.4},
        {"one-ended/naive", bench::Problem::OneEnded, gmr::Algorithm::Naive, 2.7, 3.3},
        {"reserved-g/batched", bench::Problem::ReservedG, gmr::Algorithm::Batched, 0.0, 2.5},
    };
    bool pass = true;
    std::string detail = "slopes over n=50..400:";
    for (const Check& c : checks) {
        const double s = slope(c.problem, c.alg);
        const bool ok = s >= c.lo && s <= c.hi;
        pass = pass && ok;
        detail += fmt(" %s=%.3f%s", c.name, s, ok ? "" : "(out of range)");
    }
    return {pass, detail};
}

// 7. Telescoping identity over everything solved in 1-4.
Verdict telescoping_identity() {
    return {telescoping.checked > 0 && telescoping.broken == 0,
            fmt("%zu backtraces re-summed, %zu differ from the reported optimum", telescoping.checked,
                telescoping.broken)};
}

// 8. Lengths {1,3,6}, binary, weights 1..16.
Verdict lengths_1_3_6() {
    // Frozen from enumerate_gmr over the three meta-levels (2,1), (4,2), (8,3).
    constexpr std::uint64_t kGolden = 573;
    std::vector<std::int64_t> raw;
    for (int i = 1; i <= 16; ++i) {
        raw.push_back(i);
    }
    const WeightSeq w = normalize_weights(raw);
    const problems::ReservedSpec spec{2, {1, 3, 6}};
    oracle::OracleBudget budget;
    budget.max_n = 16;
    const Cost oracle_cost = oracle::enumerate_gmr(w, problems::reserved_levels(spec, 16), 3, budget);
    const auto naive = problems::solve_reserved_given(w, spec, gmr::Algorithm::Naive);
    const auto batched = problems::solve_reserved_given(w, spec, gmr::Algorithm::Batched);
    const bool pass = oracle_cost.value() == kGolden && naive.book.cost.value() == kGolden &&
                      batched.book.cost.value() == kGolden;
    return {pass, fmt("golden %llu, oracle %llu, naive %llu, batched %llu", (unsigned long long)kGolden,
                      (unsigned long long)oracle_cost.value(), (unsigned long long)naive.book.cost.value(),
                      (unsigned long long)batched.book.cost.value())};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        Verdict (*run)();
    };
    const Criterion criteria[] = {
        {1, "oracle equivalence, gmr", oracle_gmr},
        {2, "oracle equivalence, one-ended", oracle_one_ended},
        {3, "huffman cross-check", huffman_cross_check},
        {4, "naive/batched bit-equality", naive_batched_equality},
        {5, "reduction soundness", reduction_soundness},
        {6, "complexity scaling", complexity_scaling},
        {7, "telescoping identity", telescoping_identity},
        {8, "reserved lengths {1,3,6}, n=16", lengths_1_3_6},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %d: %s: %s (%.1fs)\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(),
                    secs);
        std::fflush(stdout);
        failed += !v.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
