#include "tdcode/one_ended.hpp"

#include <algorithm>

#include "tdcode/rmq.hpp"

namespace tdcode::one_ended {

namespace {

inline std::uint64_t ceil_half(std::uint64_t x) { return (x + 1) / 2; }

void require_weights(const WeightSeq& w) {
    if (w.size() == 0) {
        throw Error(ErrorKind::InvalidInput, "one-ended coding needs at least one weight");
    }
}

Table start_table(std::uint64_t n) {
    Table t(n);
    t.find(0, 1)->cost = Cost::finite(0);
    return t;
}

Result finish(Table table, const WeightSeq& w, std::uint64_t cells) {
    Result res;
    const Signature last = best_final(table);
    res.cost = table.cost(last.m, last.b);
    res.expansion = backtrack(table, last);
    res.book = expansion_to_codewords(res.expansion, w);
    if (res.book.cost != res.cost) {
        throw Error(ErrorKind::InternalInconsistency, "rebuilt code disagrees with the table cost");
    }
    res.table = std::move(table);
    res.cells_updated = cells;
    return res;
}

}  // namespace

Table::Table(std::uint64_t n) : n_(n) {
    if (n == 0) {
        throw Error(ErrorKind::InvalidInput, "one-ended table needs n >= 1");
    }
    cells_.assign(static_cast<std::size_t>((n + 1) * max_bad()), Entry{});
}

std::vector<Signature> oe_predecessors(Signature sig, std::uint64_t n) {
    std::vector<Signature> out;
    if (sig.b == 0) {
        return out;
    }
    const std::uint64_t d = sig.m + sig.b;
    const std::uint64_t hi = std::min(sig.b, d / 2);
    for (std::uint64_t bp = ceil_half(sig.b); bp <= hi; ++bp) {
        const Signature cand{d - 2 * bp, bp};
        if (cand.m <= n && cand.b <= 2 * n - 1) {
            out.push_back(cand);
        }
    }
    return out;
}

Result solve_one_ended_naive(const WeightSeq& w) {
    require_weights(w);
    const std::uint64_t n = w.size();
    Table table = start_table(n);
    std::uint64_t cells = 0;
    for (std::uint64_t m = 0; m <= n; ++m) {
        for (std::uint64_t b = 1; b <= table.max_bad(); ++b) {
            if (m == 0 && b == 1) {
                continue;
            }
            Entry& e = *table.find(m, b);
            const std::uint64_t d = m + b;
            const std::uint64_t hi = std::min(b, d / 2);
            for (std::uint64_t bp = ceil_half(b); bp <= hi; ++bp) {
                ++cells;
                const Cost base = table.cost(d - 2 * bp, bp);
                if (!base.is_finite()) {
                    continue;
                }
                const Cost cand = extend(base, w.suffix(d - 2 * bp));
                if (cand < e.cost) {
                    e = Entry{cand, static_cast<std::uint32_t>(bp)};
                }
            }
        }
    }
    return finish(std::move(table), w, cells);
}

Result solve_one_ended(const WeightSeq& w) {
    require_weights(w);
    const std::uint64_t n = w.size();
    Table table = start_table(n);
    std::uint64_t cells = 0;
    std::vector<Cost> gamma;
    for (std::uint64_t d = 2; d <= 3 * n - 1; ++d) {
        // gamma[b' - 1] = OPT[d - 2b', b'] + W_{d - 2b'}
        const std::uint64_t q = d / 2;
        gamma.assign(static_cast<std::size_t>(q), Cost::unreachable());
        for (std::uint64_t bp = 1; bp <= q; ++bp) {
            ++cells;
            const Cost base = table.cost(d - 2 * bp, bp);
            if (base.is_finite()) {
                gamma[bp - 1] = extend(base, w.suffix(d - 2 * bp));
            }
        }
        const RMQIndex rmq(gamma);
        cells += rmq.build_work();
        const std::uint64_t b_lo = d > n ? d - n : 1;
        const std::uint64_t b_hi = std::min(d, table.max_bad());
        for (std::uint64_t b = b_lo; b <= b_hi; ++b) {
            ++cells;
            const std::uint64_t lo = ceil_half(b);
            const std::uint64_t hi = std::min(b, q);
            if (lo > hi) {
                continue;  // (0, b) with b odd has no predecessor
            }
            const std::size_t k = rmq.query(lo - 1, hi - 1);
            if (gamma[k].is_finite()) {
                *table.find(d - b, b) = Entry{gamma[k], static_cast<std::uint32_t>(k + 1)};
            }
        }
    }
    return finish(std::move(table), w, cells);
}

Signature best_final(const Table& table) {
    const std::uint64_t n = table.n();
    const std::uint64_t b_hi = n == 1 ? 1 : 2 * n - 2;
    Signature best{n, 0};
    Cost best_cost;
    for (std::uint64_t b = 1; b <= b_hi; ++b) {
        if (table.cost(n, b) < best_cost) {
            best_cost = table.cost(n, b);
            best = Signature{n, b};
        }
    }
    if (!best_cost.is_finite()) {
        throw Error(ErrorKind::InternalInconsistency, "no finite one-ended answer");
    }
    return best;
}

std::vector<Signature> backtrack(const Table& table, Signature final_sig) {
    std::vector<Signature> path{final_sig};
    Signature cur = final_sig;
    while (cur != Signature{0, 1}) {
        const Entry* e = table.find(cur.m, cur.b);
        if (e == nullptr || !e->cost.is_finite() || e->pred_b == kNoPredecessor) {
            throw Error(ErrorKind::InternalInconsistency, "broken one-ended predecessor chain");
        }
        const std::uint64_t bp = e->pred_b;
        cur = Signature{cur.m + cur.b - 2 * bp, bp};
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

CodeBook expansion_to_codewords(const std::vector<Signature>& expansion, const WeightSeq& w) {
    if (expansion.empty() || expansion.front() != Signature{0, 1}) {
        throw Error(ErrorKind::InvalidInput, "expansion must start at (0,1)");
    }
    CodeBook book;
    std::vector<Codeword> bad{Codeword{}};
    std::vector<std::uint64_t> counts{0};
    std::uint64_t total = 0;
    for (std::size_t i = 1; i < expansion.size(); ++i) {
        const Signature prev = expansion[i - 1];
        const Signature cur = expansion[i];
        if (bad.size() != prev.b || cur.m < prev.m || cur.m - prev.m > prev.b ||
            cur.b != 2 * prev.b - (cur.m - prev.m)) {
            throw Error(ErrorKind::InvalidInput, "expansion step is not realizable");
        }
        std::uint64_t good = cur.m - prev.m;
        std::vector<Codeword> next;
        next.reserve(static_cast<std::size_t>(cur.b));
        for (const Codeword& parent : bad) {
            Codeword zero = parent;
            zero.push_back(0);
            Codeword one = parent;
            one.push_back(1);
            next.push_back(std::move(zero));
            if (good > 0) {
                --good;
                const std::uint64_t depth = one.size();
                total = checked_add(total, checked_mul(depth, w.weight(book.words.size() + 1)));
                book.lengths.push_back(depth);
                book.words.push_back(std::move(one));
            } else {
                next.push_back(std::move(one));
            }
        }
        counts.push_back(cur.m - prev.m);
        bad = std::move(next);
    }
    book.cost = Cost::finite(total);
    book.leaves = LeafSequence(std::move(counts));
    return book;
}

Cost telescoped_cost(const std::vector<Signature>& expansion, const WeightSeq& w) {
    std::uint64_t total = 0;
    for (std::size_t i = 1; i < expansion.size(); ++i) {
        total = checked_add(total, w.suffix(expansion[i - 1].m));
    }
    return Cost::finite(total);
}

}  // namespace tdcode::one_ended
