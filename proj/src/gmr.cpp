#include "tdcode/gmr.hpp"

#include <algorithm>
#include <string>

#include "driver.hpp"

namespace tdcode::gmr {

namespace {

std::vector<Segment> closed_rows(std::uint64_t n, const std::vector<LevelParams>& options) {
    std::vector<Segment> segs;
    for (const LevelParams& opt : options) {
        std::uint64_t hi = 0;
        if (__builtin_add_overflow(n, opt.arity - 1, &hi)) {
            throw Error(ErrorKind::ArityOverflow, "arity too large for the signature range");
        }
        segs.push_back(Segment{std::max(n, opt.arity), hi});
    }
    std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
    std::vector<Segment> merged;
    for (const Segment& s : segs) {
        if (!merged.empty() && s.lo <= merged.back().hi + 1) {
            merged.back().hi = std::max(merged.back().hi, s.hi);
        } else {
            merged.push_back(s);
        }
    }
    return merged;
}

inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return a / b + (a % b != 0 ? 1 : 0); }

// Candidate b' for target (m, b) under arity r: ceil(b/r) <= b' <= floor((m+b)/r).
struct Window {
    std::uint64_t lo;
    std::uint64_t hi;
    [[nodiscard]] bool empty() const noexcept { return lo > hi; }
};

inline Window candidate_window(std::uint64_t m, std::uint64_t b, std::uint64_t r) {
    return Window{ceil_div(b, r), (m + b) / r};
}

void fill_naive(const LevelTable& prev, LevelTable& out, std::uint32_t option, const WeightSeq& w,
                std::uint64_t& cells) {
    const LevelParams& lp = out.options().at(option);
    const std::uint64_t r = lp.arity;
    const std::uint64_t c = lp.edge;
    auto relax = [&](Signature sig, Entry& target) {
        const Window win = candidate_window(sig.m, sig.b, r);
        if (win.empty()) {
            return;
        }
        // Descending b' visits m' ascending; strict improvement keeps the
        // lexicographically smallest (m', b') among ties.
        for (std::uint64_t bp = win.hi + 1; bp-- > win.lo;) {
            ++cells;
            const std::uint64_t mp = sig.m + sig.b - bp * r;
            const Cost base = prev.cost(mp, bp);
            if (!base.is_finite()) {
                continue;
            }
            const Cost cand = extend(base, checked_mul(c, w.suffix(mp)));
            if (cand < target.cost) {
                target.cost = cand;
                target.pred_b = static_cast<std::uint32_t>(bp);
                target.option = option;
            }
        }
    };
    const std::uint64_t n = out.n();
    for (std::uint64_t d = 1; d <= n; ++d) {
        for (std::uint64_t m = 0; m < d; ++m) {
            relax(Signature{m, d - m}, *out.find(m, d - m));
        }
    }
    for (const Segment& seg : out.closed_segments()) {
        for (std::uint64_t m = seg.lo; m <= seg.hi; ++m) {
            relax(Signature{m, 0}, *out.find(m, 0));
        }
    }
}

// Fills every valid cell on diagonal m + b = d with one running-minimum sweep
// over gamma(b') = OPT^{i-1}[d - b' r, b'] + c W_{d - b' r}.
void sweep_diagonal(const LevelTable& prev, LevelTable& out, std::uint32_t option, std::uint64_t d,
                    std::uint64_t r, std::uint64_t c, const WeightSeq& w, std::vector<Cost>& gamma,
                    std::uint64_t& cells) {
    const std::uint64_t q = d / r;
    gamma.resize(q + 1);
    for (std::uint64_t bp = 0; bp <= q; ++bp) {
        ++cells;
        const std::uint64_t mp = d - bp * r;
        const Cost base = prev.cost(mp, bp);
        gamma[bp] = base.is_finite() ? extend(base, checked_mul(c, w.suffix(mp))) : base;
    }
    Cost run = Cost::unreachable();
    std::uint32_t run_b = kNoPredecessor;
    std::uint64_t next_b = q;  // next b' to fold in, reached when r | (d - m)
    std::uint64_t next_m = d - q * r;  // t = d mod r
    for (std::uint64_t m = next_m; m <= d; ++m) {
        ++cells;
        if (m == next_m) {
            // A smaller b' means a larger m'; only a strictly better value displaces.
            if (gamma[next_b] < run) {
                run = gamma[next_b];
                run_b = static_cast<std::uint32_t>(next_b);
            }
            next_m += r;
            --next_b;
        }
        if (Entry* e = out.find(m, d - m); e != nullptr && run.is_finite()) {
            *e = Entry{run, run_b, option};
        }
    }
}

void fill_batched(const LevelTable& prev, LevelTable& out, std::uint32_t option, const WeightSeq& w,
                  std::uint64_t& cells) {
    const LevelParams& lp = out.options().at(option);
    const std::uint64_t r = lp.arity;
    const std::uint64_t c = lp.edge;
    const std::uint64_t n = out.n();
    std::vector<Cost> gamma;
    if (r <= n) {
        for (std::uint64_t d = 1; d <= n + r - 1; ++d) {
            sweep_diagonal(prev, out, option, d, r, c, w, gamma, cells);
        }
        return;
    }
    // r > n: an expanded node alone overshoots n, so open cells only come from
    // empty windows, and each (m, 0) has just (m - r, 1) and (m, 0) as sources.
    for (std::uint64_t d = 1; d <= n; ++d) {
        sweep_diagonal(prev, out, option, d, r, c, w, gamma, cells);
    }
    for (std::uint64_t m = r; m <= r + n - 1; ++m) {
        Entry* e = out.find(m, 0);
        if (e == nullptr) {
            continue;
        }
        for (std::uint64_t bp : {std::uint64_t{1}, std::uint64_t{0}}) {
            ++cells;
            const std::uint64_t mp = m - bp * r;
            const Cost base = prev.cost(mp, bp);
            if (!base.is_finite()) {
                continue;
            }
            const Cost cand = extend(base, checked_mul(c, w.suffix(mp)));
            if (cand < e->cost) {
                e->cost = cand;
                e->pred_b = static_cast<std::uint32_t>(bp);
                e->option = option;
            }
        }
    }
}

}  // namespace

LevelTable::LevelTable(std::uint64_t n, std::size_t level, std::vector<LevelParams> options)
    : n_(n), level_(level), options_(std::move(options)), segments_(closed_rows(n, options_)) {
    std::size_t total = open_count();
    for (const Segment& seg : segments_) {
        total += static_cast<std::size_t>(seg.hi - seg.lo + 1);
    }
    cells_.assign(total, Entry{});
}

LevelTable LevelTable::root(std::uint64_t n) {
    LevelTable t(n, 0, {});
    if (Entry* e = t.find(0, 1)) {
        e->cost = Cost::finite(0);
    }
    return t;
}

bool is_valid_signature(std::size_t level, Signature sig, const LevelSpec& spec, std::uint64_t n) {
    if (sig.b > 0) {
        return sig.b <= n && sig.m <= n - sig.b;
    }
    if (level == 0 || level > spec.depth()) {
        return false;
    }
    const std::uint64_t r = spec.arity(level);
    return sig.m >= std::max(n, r) && sig.m - r < n;  // m <= n + r - 1
}

std::vector<Signature> predecessors(std::size_t level, Signature sig, const LevelSpec& spec, std::uint64_t n) {
    if (level == 0 || level > spec.depth()) {
        throw Error(ErrorKind::InvalidInput, "level outside the spec");
    }
    const std::uint64_t r = spec.arity(level);
    const Window win = candidate_window(sig.m, sig.b, r);
    std::vector<Signature> out;
    for (std::uint64_t bp = win.hi + 1; bp-- > win.lo;) {
        const Signature cand{sig.m + sig.b - bp * r, bp};
        if (is_valid_signature(level - 1, cand, spec, n)) {
            out.push_back(cand);
        }
    }
    return out;
}

void fill_level(const LevelTable& prev, LevelTable& out, std::uint32_t option, const WeightSeq& w,
                Algorithm algorithm, std::uint64_t& cells) {
    if (algorithm == Algorithm::Naive) {
        fill_naive(prev, out, option, w, cells);
    } else {
        fill_batched(prev, out, option, w, cells);
    }
}

namespace {

Answer best_closed(const LevelTable& t) {
    Answer best;
    for (const Segment& seg : t.closed_segments()) {
        for (std::uint64_t m = seg.lo; m <= seg.hi; ++m) {
            const Cost c = t.cost(m, 0);
            if (c < best.cost) {
                best = Answer{t.level(), m, c};
            }
        }
    }
    return best;
}

}  // namespace

Answer extract_answer(std::span<const LevelTable> tables) {
    Answer best;
    for (const LevelTable& t : tables) {
        const Answer here = best_closed(t);
        if (here.cost < best.cost) {
            best = here;
        }
    }
    if (!best.cost.is_finite()) {
        throw Error(ErrorKind::NoFeasibleTree, "no full tree fits within the level limit");
    }
    return best;
}

Backtrace backtrack(std::span<const LevelTable> tables, const Answer& answer) {
    if (answer.level >= tables.size()) {
        throw Error(ErrorKind::InternalInconsistency, "answer level has no table");
    }
    Backtrace bt;
    bt.expansion.assign(answer.level + 1, Signature{});
    bt.chosen.assign(answer.level, LevelParams{});
    Signature cur{answer.leaves, 0};
    for (std::size_t i = answer.level; i >= 1; --i) {
        bt.expansion[i] = cur;
        const Entry* e = tables[i].find(cur.m, cur.b);
        if (e == nullptr || !e->cost.is_finite() || e->pred_b == kNoPredecessor) {
            throw Error(ErrorKind::InternalInconsistency,
                        "broken predecessor chain at level " + std::to_string(i));
        }
        const LevelParams& lp = tables[i].options().at(e->option);
        bt.chosen[i - 1] = lp;
        cur = Signature{cur.m + cur.b - std::uint64_t{e->pred_b} * lp.arity, e->pred_b};
    }
    if (cur != Signature{0, 1}) {
        throw Error(ErrorKind::InternalInconsistency, "predecessor chain does not reach the root");
    }
    bt.expansion[0] = cur;
    std::vector<std::uint64_t> counts(answer.level + 1, 0);
    for (std::size_t i = 1; i <= answer.level; ++i) {
        counts[i] = bt.expansion[i].m - bt.expansion[i - 1].m;
    }
    bt.leaves = LeafSequence(std::move(counts));
    return bt;
}

Cost telescoped_cost(std::span<const Signature> expansion, std::span<const LevelParams> chosen, const WeightSeq& w) {
    if (expansion.size() != chosen.size() + 1) {
        throw Error(ErrorKind::InvalidInput, "expansion and level choices disagree in length");
    }
    std::uint64_t total = 0;
    for (std::size_t i = 1; i < expansion.size(); ++i) {
        total = checked_add(total, checked_mul(chosen[i - 1].edge, w.suffix(expansion[i - 1].m)));
    }
    return Cost::finite(total);
}

namespace detail {

std::size_t resolve_max_level(const SolveOptions& options, std::uint64_t n, std::size_t spec_depth) {
    if (options.max_level) {
        if (*options.max_level == 0) {
            throw Error(ErrorKind::InvalidInput, "max_level must be at least 1");
        }
        if (*options.max_level > spec_depth) {
            throw Error(ErrorKind::InvalidInput, "level spec does not cover max_level");
        }
        return *options.max_level;
    }
    if (spec_depth == 0) {
        throw Error(ErrorKind::InvalidInput, "level spec is empty");
    }
    return static_cast<std::size_t>(std::min<std::uint64_t>(n, spec_depth));
}

DPResult run_levels(const WeightSeq& w, std::size_t max_level, bool keep_tables, const LevelBuilder& build) {
    const std::uint64_t n = w.size();
    DPResult result;
    LevelTable prev = LevelTable::root(n);
    if (keep_tables) {
        result.tables.reserve(max_level + 1);
        result.tables.push_back(prev);
    }
    Answer best;
    for (std::size_t i = 1; i <= max_level; ++i) {
        LevelTable cur = build(i, prev, result.cells_updated);
        const Answer here = best_closed(cur);
        if (here.cost < best.cost) {
            best = here;
        }
        if (keep_tables) {
            result.tables.push_back(cur);
        }
        prev = std::move(cur);
    }
    if (!best.cost.is_finite()) {
        throw Error(ErrorKind::NoFeasibleTree, "no full tree fits within the level limit");
    }
    result.answer = best;
    if (keep_tables) {
        Backtrace bt = backtrack(result.tables, best);
        result.expansion = std::move(bt.expansion);
        result.chosen = std::move(bt.chosen);
        result.full_leaves = bt.leaves;
        result.leaves = prune_to_n(bt.leaves, n);
    }
    return result;
}

}  // namespace detail

DPResult solve(const WeightSeq& w, const LevelSpec& spec, Algorithm algorithm, const SolveOptions& options) {
    const std::uint64_t n = w.size();
    const std::size_t max_level = detail::resolve_max_level(options, n, spec.depth());
    return detail::run_levels(w, max_level, options.keep_tables,
                              [&](std::size_t i, const LevelTable& prev, std::uint64_t& cells) {
                                  LevelTable cur(n, i, {spec.level(i)});
                                  fill_level(prev, cur, 0, w, algorithm, cells);
                                  return cur;
                              });
}

}  // namespace tdcode::gmr
