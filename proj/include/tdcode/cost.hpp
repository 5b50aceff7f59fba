#pragma once

#include <compare>
#include <cstdint>
#include <limits>

#include "tdcode/error.hpp"

namespace tdcode {

// Exact path-length cost, or the UNREACHABLE marker. Finite costs are always
// strictly below the marker: arithmetic that would reach it throws Overflow.
class Cost {
public:
    constexpr Cost() noexcept = default;

    static constexpr Cost unreachable() noexcept { return Cost{}; }

    static Cost finite(std::uint64_t value) {
        if (value == kMarker) {
            throw Error(ErrorKind::Overflow, "cost reaches the 64-bit limit");
        }
        return Cost{value, 0};
    }

    [[nodiscard]] constexpr bool is_finite() const noexcept { return raw_ != kMarker; }
    [[nodiscard]] constexpr std::uint64_t value() const noexcept { return raw_; }

    // Unreachable orders after every finite cost; the raw encoding already does this.
    friend constexpr auto operator<=>(Cost, Cost) noexcept = default;

private:
    static constexpr std::uint64_t kMarker = std::numeric_limits<std::uint64_t>::max();

    constexpr Cost(std::uint64_t v, int) noexcept : raw_(v) {}

    std::uint64_t raw_ = kMarker;
};

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw Error(ErrorKind::Overflow, "integer addition overflows 64 bits");
    }
    return out;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw Error(ErrorKind::Overflow, "integer multiplication overflows 64 bits");
    }
    return out;
}

// base + step, propagating UNREACHABLE.
inline Cost extend(Cost base, std::uint64_t step) {
    if (!base.is_finite()) {
        return base;
    }
    return Cost::finite(checked_add(base.value(), step));
}

}  // namespace tdcode
