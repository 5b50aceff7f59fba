#include "tdcode/oracle.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

namespace tdcode::oracle {

namespace {

void over_budget(const std::string& what) { throw Error(ErrorKind::BudgetExceeded, what); }

struct Visits {
    std::uint64_t used = 0;
    std::uint64_t limit = 0;
    void tick() {
        if (++used > limit) {
            over_budget("search visited more than " + std::to_string(limit) + " nodes");
        }
    }
};

}  // namespace

Cost enumerate_gmr(const WeightSeq& w, const LevelSpec& spec, std::size_t max_level, const OracleBudget& budget) {
    const std::uint64_t n = w.size();
    if (n > budget.max_n) {
        over_budget("n = " + std::to_string(n) + " exceeds the oracle limit " + std::to_string(budget.max_n));
    }
    if (max_level > budget.max_level) {
        over_budget("max_level " + std::to_string(max_level) + " exceeds the oracle limit");
    }
    if (max_level == 0 || max_level > spec.depth()) {
        throw Error(ErrorKind::InvalidInput, "max_level must lie in 1..spec depth");
    }
    Visits visits{0, budget.max_visits};
    Cost best;
    std::vector<std::uint64_t> counts{0};
    // `open`: internal nodes on the current bottom level. Each level only
    // picks its leaf count; every other slot stays internal, capped at the
    // leaves still to place since each of them needs just one ancestor here.
    std::function<void(std::size_t, std::uint64_t, std::uint64_t)> dfs = [&](std::size_t level,
                                                                             std::uint64_t placed,
                                                                             std::uint64_t open) {
        visits.tick();
        if (placed == n) {
            const Cost c = cost_of_leaf_sequence(LeafSequence(counts), w, spec);
            best = std::min(best, c);
            return;
        }
        if (level > max_level || open == 0) {
            return;
        }
        const std::uint64_t slots = checked_mul(open, spec.arity(level));
        const std::uint64_t left = n - placed;
        for (std::uint64_t x = 0; x <= std::min(slots, left); ++x) {
            counts.push_back(x);
            dfs(level + 1, placed + x, std::min(slots - x, left - x));
            counts.pop_back();
        }
    };
    dfs(1, 0, 1);
    if (!best.is_finite()) {
        throw Error(ErrorKind::NoFeasibleTree, "no leaf sequence fits within the level limit");
    }
    return best;
}

Cost enumerate_one_ended(const WeightSeq& w, std::size_t max_depth, const OracleBudget& budget) {
    const std::uint64_t n = w.size();
    if (n == 0) {
        throw Error(ErrorKind::InvalidInput, "one-ended coding needs at least one weight");
    }
    if (n > budget.max_one_ended_n) {
        over_budget("n = " + std::to_string(n) + " exceeds the one-ended oracle limit");
    }
    if (max_depth > n + 2) {
        over_budget("max_depth exceeds n + 2");
    }
    Visits visits{0, budget.max_visits};
    Cost best;
    // Level by level: `expanded` nodes on the previous level each give one
    // 0-child and one 1-child here. Some 1-children become leaves taking the
    // next weights; any of the remaining nodes may be expanded further. A
    // subtree without a labeled leaf is dropped, so expanded <= leaves left.
    std::function<void(std::size_t, std::uint64_t, std::uint64_t, std::uint64_t)> dfs =
        [&](std::size_t depth, std::uint64_t placed, std::uint64_t expanded, std::uint64_t cost) {
            visits.tick();
            if (depth > max_depth) {
                return;
            }
            // every unplaced weight ends at least this deep
            if (best.is_finite() && checked_add(cost, checked_mul(depth, w.suffix(placed))) >= best.value()) {
                return;
            }
            std::uint64_t here = cost;
            for (std::uint64_t x = 0; x <= std::min(expanded, n - placed); ++x) {
                if (x > 0) {
                    here = checked_add(here, checked_mul(depth, w.weight(placed + x)));
                }
                const std::uint64_t p = placed + x;
                if (p == n) {
                    best = std::min(best, Cost::finite(here));
                    continue;
                }
                const std::uint64_t free_nodes = 2 * expanded - x;
                for (std::uint64_t e = 1; e <= std::min(free_nodes, n - p); ++e) {
                    dfs(depth + 1, p, e, here);
                }
            }
        };
    dfs(1, 0, 1, 0);
    if (!best.is_finite()) {
        throw Error(ErrorKind::NoFeasibleTree, "max_depth too small for n one-ended words");
    }
    return best;
}

Cost huffman_greedy(const WeightSeq& w, std::uint64_t r) {
    if (r < 2) {
        throw Error(ErrorKind::InvalidInput, "arity must be at least 2");
    }
    if (w.size() == 0) {
        throw Error(ErrorKind::InvalidInput, "no weights");
    }
    std::priority_queue<std::uint64_t, std::vector<std::uint64_t>, std::greater<>> heap;
    for (std::uint64_t p : w.weights()) {
        heap.push(p);
    }
    while (heap.size() < r || (heap.size() - 1) % (r - 1) != 0) {
        heap.push(0);
    }
    std::uint64_t cost = 0;
    while (heap.size() > 1) {
        std::uint64_t merged = 0;
        for (std::uint64_t k = 0; k < r; ++k) {
            merged = checked_add(merged, heap.top());
            heap.pop();
        }
        cost = checked_add(cost, merged);
        heap.push(merged);
    }
    return Cost::finite(cost);
}

Cost enumerate_choice(const WeightSeq& w, const ChoiceLevelSpec& spec, std::size_t max_level,
                      const OracleBudget& budget) {
    if (max_level == 0 || max_level > spec.depth()) {
        throw Error(ErrorKind::InvalidInput, "max_level must lie in 1..spec depth");
    }
    std::uint64_t product = 1;
    for (std::size_t i = 1; i <= max_level; ++i) {
        product *= spec.options(i).size();
        if (product > budget.max_assignments) {
            over_budget("too many option assignments");
        }
    }
    std::vector<std::size_t> pick(max_level, 0);
    Cost best;
    for (;;) {
        std::vector<LevelParams> levels;
        for (std::size_t i = 1; i <= max_level; ++i) {
            levels.push_back(spec.options(i)[pick[i - 1]]);
        }
        try {
            best = std::min(best, enumerate_gmr(w, LevelSpec(levels), max_level, budget));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NoFeasibleTree) {
                throw;
            }
        }
        std::size_t i = 0;
        while (i < max_level && ++pick[i] == spec.options(i + 1).size()) {
            pick[i++] = 0;
        }
        if (i == max_level) {
            break;
        }
    }
    if (!best.is_finite()) {
        throw Error(ErrorKind::NoFeasibleTree, "no option assignment fits n leaves");
    }
    return best;
}

}  // namespace tdcode::oracle
