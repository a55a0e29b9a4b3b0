#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "eistri/arith.hpp"

namespace eistri {

/// The two triangle families this library deals in. `sixty` holds the
/// triples with a 60-degree angle opposite side a (a^2 = b^2 + c^2 - bc),
/// `one_twenty` the triples with a 120-degree angle opposite side a
/// (a^2 = b^2 + c^2 + bc).
enum class family : std::uint8_t { sixty, one_twenty };

inline const char* family_name(family f) {
    return f == family::sixty ? "60" : "120";
}

/// Integer side lengths (a, b, c), a opposite the distinguished angle.
/// Sides are validated at construction; every triple in circulation has
/// a, b, c >= 1.
struct triple {
    std::int64_t a;
    std::int64_t b;
    std::int64_t c;

    triple(std::int64_t a_, std::int64_t b_, std::int64_t c_) : a(a_), b(b_), c(c_) {
        if (a < 1 || b < 1 || c < 1) {
            throw std::domain_error("triangle sides must be positive integers");
        }
    }

    auto operator<=>(const triple&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const triple& t) {
    return os << '(' << t.a << ',' << t.b << ',' << t.c << ')';
}

/// 3x3 signed integer matrix. The library's shipped constants all have
/// determinant +1 or -1; see tree.hpp for the checked generator sets.
struct gen_matrix {
    std::array<std::array<std::int64_t, 3>, 3> m{};

    constexpr std::int64_t at(int row, int col) const { return m[row][col]; }

    bool operator==(const gen_matrix&) const = default;
};

constexpr gen_matrix make_matrix(std::int64_t m00, std::int64_t m01, std::int64_t m02,
                                 std::int64_t m10, std::int64_t m11, std::int64_t m12,
                                 std::int64_t m20, std::int64_t m21, std::int64_t m22) {
    return gen_matrix{{{{{m00, m01, m02}}, {{m10, m11, m12}}, {{m20, m21, m22}}}}};
}

inline std::ostream& operator<<(std::ostream& os, const gen_matrix& g) {
    os << '[';
    for (int i = 0; i < 3; ++i) {
        os << (i == 0 ? "[" : ",[") << g.m[i][0] << ',' << g.m[i][1] << ',' << g.m[i][2] << ']';
    }
    return os << ']';
}

inline std::int64_t det(const gen_matrix& g) {
    const auto& m = g.m;
    const std::int64_t c0 = checked_sub(checked_mul(m[1][1], m[2][2]), checked_mul(m[1][2], m[2][1]));
    const std::int64_t c1 = checked_sub(checked_mul(m[1][0], m[2][2]), checked_mul(m[1][2], m[2][0]));
    const std::int64_t c2 = checked_sub(checked_mul(m[1][0], m[2][1]), checked_mul(m[1][1], m[2][0]));
    return checked_add(checked_sub(checked_mul(m[0][0], c0), checked_mul(m[0][1], c1)),
                       checked_mul(m[0][2], c2));
}

/// b^2 + c^2 - bc for the 60-degree family, b^2 + c^2 + bc for the
/// 120-degree family. This is the value a^2 must equal for membership.
inline std::int64_t form_value(family f, std::int64_t b, std::int64_t c) {
    if (b < 1 || c < 1) {
        throw std::domain_error("form_value requires b, c >= 1");
    }
    const std::int64_t sq = checked_add(checked_mul(b, b), checked_mul(c, c));
    const std::int64_t cross = checked_mul(b, c);
    return f == family::sixty ? checked_sub(sq, cross) : checked_add(sq, cross);
}

inline std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c) {
    return std::gcd(std::gcd(a, b), c);
}

inline bool is_member(family f, const triple& t) {
    return checked_mul(t.a, t.a) == form_value(f, t.b, t.c);
}

inline bool is_primitive(family f, const triple& t) {
    return is_member(f, t) && gcd3(t.a, t.b, t.c) == 1;
}

/// The family whose primitive test t passes, if any. The two quadratic
/// forms differ by 2bc > 0, so at most one family can match.
inline std::optional<family> classify(const triple& t) {
    if (is_primitive(family::sixty, t)) {
        return family::sixty;
    }
    if (is_primitive(family::one_twenty, t)) {
        return family::one_twenty;
    }
    return std::nullopt;
}

/// Order-insensitive representative (a, max(b,c), min(b,c)). Both forms
/// are symmetric in b and c, so this is the canonical name of the
/// geometric triangle.
inline triple canonicalize(const triple& t) {
    return t.b >= t.c ? t : triple(t.a, t.c, t.b);
}

}  // namespace eistri
