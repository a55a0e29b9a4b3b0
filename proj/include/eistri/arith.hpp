#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace eistri {

/// Thrown whenever a computation would leave the range of std::int64_t.
/// Nothing in this library is allowed to wrap silently.
struct arithmetic_overflow : std::overflow_error {
    explicit arithmetic_overflow(const std::string& what) : std::overflow_error(what) {}
};

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(x, y, &r)) {
        throw arithmetic_overflow("integer addition overflows 64 bits");
    }
    return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
    std::int64_t r = 0;
    if (__builtin_sub_overflow(x, y, &r)) {
        throw arithmetic_overflow("integer subtraction overflows 64 bits");
    }
    return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(x, y, &r)) {
        throw arithmetic_overflow("integer multiplication overflows 64 bits");
    }
    return r;
}

/// Exact integer square root: the unique r with r*r <= x < (r+1)*(r+1).
/// Never goes through floating point for the final answer; the double
/// sqrt only seeds the fixup loop.
inline std::int64_t isqrt(std::int64_t x) {
    if (x < 0) {
        throw std::domain_error("isqrt of a negative number");
    }
    auto ux = static_cast<std::uint64_t>(x);
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(ux)));
    while (r > 0 && r * r > ux) {
        --r;
    }
    while ((r + 1) * (r + 1) <= ux) {
        ++r;
    }
    return static_cast<std::int64_t>(r);
}

inline bool is_perfect_square(std::int64_t x) {
    if (x < 0) {
        return false;
    }
    const std::int64_t r = isqrt(x);
    return r * r == x;
}

}  // namespace eistri
