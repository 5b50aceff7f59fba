#include "tdcode/choice.hpp"

#include "driver.hpp"

namespace tdcode::choice {

gmr::LevelTable per_option_fill(const gmr::LevelTable& prev, std::size_t level, const LevelParams& option,
                                std::uint32_t j, const WeightSeq& w, gmr::Algorithm algorithm,
                                std::uint64_t& cells) {
    gmr::LevelTable table(w.size(), level, {option});
    gmr::fill_level(prev, table, 0, w, algorithm, cells);
    // fill_level tags cells with 0, the only option this table knows; relabel
    // to the index in the level's full option list.
    if (j != 0) {
        table.for_each([&](gmr::Signature s, const gmr::Entry& e) {
            if (e.cost.is_finite()) {
                table.find(s.m, s.b)->option = j;
            }
        });
    }
    return table;
}

gmr::LevelTable combine_options(std::uint64_t n, std::size_t level, const std::vector<LevelParams>& options,
                                std::span<const gmr::LevelTable> per_option) {
    gmr::LevelTable out(n, level, options);
    for (const gmr::LevelTable& t : per_option) {
        t.for_each([&](gmr::Signature s, const gmr::Entry& e) {
            gmr::Entry* slot = out.find(s.m, s.b);
            if (slot == nullptr) {
                throw Error(ErrorKind::InternalInconsistency, "option table has a cell the level does not");
            }
            // strict: options are visited in index order, the first one keeps ties
            if (e.cost < slot->cost) {
                *slot = e;
            }
        });
    }
    return out;
}

gmr::DPResult solve_choice(const WeightSeq& w, const ChoiceLevelSpec& spec, gmr::Algorithm algorithm,
                           const gmr::SolveOptions& options) {
    const std::uint64_t n = w.size();
    const std::size_t max_level = gmr::detail::resolve_max_level(options, n, spec.depth());
    return gmr::detail::run_levels(
        w, max_level, options.keep_tables, [&](std::size_t i, const gmr::LevelTable& prev, std::uint64_t& cells) {
            const std::vector<LevelParams>& opts = spec.options(i);
            std::vector<gmr::LevelTable> per;
            per.reserve(opts.size());
            for (std::uint32_t j = 0; j < opts.size(); ++j) {
                per.push_back(per_option_fill(prev, i, opts[j], j, w, algorithm, cells));
            }
            return combine_options(n, i, opts, per);
        });
}

}  // namespace tdcode::choice
