#include "tdcode/rmq.hpp"

#include <bit>
#include <string>

namespace tdcode {

RMQIndex::RMQIndex(std::span<const Cost> values) : values_(values.begin(), values.end()) {
    const std::size_t n = values_.size();
    if (n == 0) {
        throw Error(ErrorKind::InvalidInput, "range-minimum index over an empty array");
    }
    table_.emplace_back(n);
    for (std::size_t i = 0; i < n; ++i) {
        table_[0][i] = i;
    }
    build_work_ = n;
    for (std::size_t k = 1; (std::size_t{1} << k) <= n; ++k) {
        const std::size_t half = std::size_t{1} << (k - 1);
        const std::size_t count = n - (std::size_t{1} << k) + 1;
        std::vector<std::size_t> row(count);
        const std::vector<std::size_t>& below = table_[k - 1];
        for (std::size_t i = 0; i < count; ++i) {
            row[i] = better(below[i], below[i + half]);
        }
        build_work_ += count;
        table_.push_back(std::move(row));
    }
}

std::size_t RMQIndex::query(std::size_t i, std::size_t j) const {
    if (i > j || j >= values_.size()) {
        throw Error(ErrorKind::InvalidRange,
                    "query [" + std::to_string(i) + ", " + std::to_string(j) + "] on " +
                        std::to_string(values_.size()) + " values");
    }
    const std::size_t k = static_cast<std::size_t>(std::bit_width(j - i + 1)) - 1;
    const std::size_t a = table_[k][i];
    const std::size_t b = table_[k][j + 1 - (std::size_t{1} << k)];
    // the two blocks overlap; when they tie, a is never larger than b
    if (a <= b) {
        return better(a, b);
    }
    return values_[a] < values_[b] ? a : b;
}

}  // namespace tdcode
