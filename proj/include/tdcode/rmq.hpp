#pragma once

// Static range-minimum index (sparse table). O(L log L) build, O(1) argmin
// queries; ties resolve to the smallest index.

#include <cstddef>
#include <span>
#include <vector>

#include "tdcode/cost.hpp"

namespace tdcode {

class RMQIndex {
public:
    // Copies `values`; throws InvalidInput when empty.
    explicit RMQIndex(std::span<const Cost> values);

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] const Cost& value(std::size_t i) const { return values_.at(i); }

    // Smallest argmin over [i, j]. Throws InvalidRange unless i <= j < size().
    [[nodiscard]] std::size_t query(std::size_t i, std::size_t j) const;

    // Number of table cells written by the build, for operation counting.
    [[nodiscard]] std::size_t build_work() const noexcept { return build_work_; }

private:
    [[nodiscard]] std::size_t better(std::size_t a, std::size_t b) const noexcept {
        // a < b by construction of every call site
        return values_[b] < values_[a] ? b : a;
    }

    std::vector<Cost> values_;
    std::vector<std::vector<std::size_t>> table_;  // table_[k][i]: argmin of [i, i + 2^k)
    std::size_t build_work_ = 0;
};

}  // namespace tdcode
