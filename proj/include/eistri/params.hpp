#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "eistri/core.hpp"

namespace eistri {

/// Which of the two admissible third sides the 60-degree map produces:
/// `plus` selects n^2 + 2mn, `minus` selects m^2 - n^2. The 120-degree
/// map uses both expressions at once, so the selector is ignored there.
enum class side_variant : std::uint8_t { plus, minus };

inline const char* variant_name(side_variant v) {
    return v == side_variant::plus ? "plus" : "minus";
}

enum class param_violation : std::uint8_t { not_ordered, not_coprime, mod3_collision };

inline const char* to_string(param_violation v) {
    switch (v) {
        case param_violation::not_ordered: return "NOT_ORDERED";
        case param_violation::not_coprime: return "NOT_COPRIME";
        default: return "MOD3_COLLISION";
    }
}

class param_error : public std::domain_error {
  public:
    explicit param_error(param_violation v) : std::domain_error(to_string(v)), violation_(v) {}
    param_violation violation() const { return violation_; }

  private:
    param_violation violation_;
};

/// Generator pair for the quadratic-form parametrizations. Valid pairs
/// satisfy m > n > 0, gcd(m,n) = 1 and m !== n (mod 3).
struct param_pair {
    std::int64_t m;
    std::int64_t n;
    side_variant variant = side_variant::plus;
};

/// First violated constraint, or nullopt when (m, n) is admissible.
inline std::optional<param_violation> check_params(std::int64_t m, std::int64_t n) {
    if (n < 1 || m <= n) {
        return param_violation::not_ordered;
    }
    if (std::gcd(m, n) != 1) {
        return param_violation::not_coprime;
    }
    if (m % 3 == n % 3) {
        return param_violation::mod3_collision;
    }
    return std::nullopt;
}

inline param_pair validate_params(std::int64_t m, std::int64_t n,
                                  side_variant variant = side_variant::plus) {
    if (auto v = check_params(m, n)) {
        throw param_error(*v);
    }
    return param_pair{m, n, variant};
}

namespace detail {

inline std::int64_t common_side(const param_pair& p) {
    // m^2 + mn + n^2, the side opposite the distinguished angle.
    return checked_add(checked_add(checked_mul(p.m, p.m), checked_mul(p.m, p.n)),
                       checked_mul(p.n, p.n));
}

inline std::int64_t side_m2_2mn(const param_pair& p) {
    return checked_add(checked_mul(p.m, p.m), checked_mul(2, checked_mul(p.m, p.n)));
}

inline std::int64_t side_n2_2mn(const param_pair& p) {
    return checked_add(checked_mul(p.n, p.n), checked_mul(2, checked_mul(p.m, p.n)));
}

inline std::int64_t side_m2_n2(const param_pair& p) {
    return checked_sub(checked_mul(p.m, p.m), checked_mul(p.n, p.n));
}

}  // namespace detail

/// 60-degree triple of a valid pair: (m^2+mn+n^2, m^2+2mn, n^2+2mn) for
/// the plus variant, (m^2+mn+n^2, m^2+2mn, m^2-n^2) for minus. Both
/// variants come out with b > c.
inline triple eisenstein_from_params(const param_pair& p) {
    const std::int64_t a = detail::common_side(p);
    const std::int64_t b = detail::side_m2_2mn(p);
    const std::int64_t c =
        p.variant == side_variant::plus ? detail::side_n2_2mn(p) : detail::side_m2_n2(p);
    return triple(a, b, c);
}

/// 120-degree triple of a valid pair: (m^2+mn+n^2, n^2+2mn, m^2-n^2),
/// kept in exactly this component order; b < c happens and is the
/// caller's problem (canonicalize if you need the set representative).
inline triple sub_eisenstein_from_params(const param_pair& p) {
    return triple(detail::common_side(p), detail::side_n2_2mn(p), detail::side_m2_n2(p));
}

/// Inverse of the generation maps. Finds the unique valid (m, n[, variant])
/// whose triple is canonicalize-equal to t, by solving
/// n^2 + mn + (m^2 - a) = 0 for each m <= isqrt(a) with an integer
/// discriminant test. Empty when t is not primitive in the family or is
/// the equilateral (1,1,1).
inline std::optional<param_pair> params_from_triple(family f, const triple& t) {
    if (!is_primitive(f, t)) {
        return std::nullopt;
    }
    const triple want = canonicalize(t);
    for (std::int64_t m = 1; checked_mul(m, m) <= t.a; ++m) {
        // discriminant of n^2 + mn + (m^2 - a): 4a - 3m^2, positive while m^2 <= a
        const std::int64_t disc = checked_sub(checked_mul(4, t.a), checked_mul(3, checked_mul(m, m)));
        if (!is_perfect_square(disc)) {
            continue;
        }
        const std::int64_t root = isqrt(disc);
        if ((root - m) % 2 != 0) {
            continue;
        }
        const std::int64_t n = (root - m) / 2;
        if (n < 1 || check_params(m, n)) {
            continue;
        }
        if (f == family::sixty) {
            for (side_variant v : {side_variant::plus, side_variant::minus}) {
                const param_pair p{m, n, v};
                if (canonicalize(eisenstein_from_params(p)) == want) {
                    return p;
                }
            }
        } else {
            const param_pair p{m, n, side_variant::plus};
            if (canonicalize(sub_eisenstein_from_params(p)) == want) {
                return p;
            }
        }
    }
    return std::nullopt;
}

/// Thrown when an operation that needs a non-equilateral input meets
/// b == c, the one case the family bijection excludes.
struct degenerate_error : std::domain_error {
    explicit degenerate_error(const std::string& what) : std::domain_error(what) {}
};

/// The companion 60-degree triple (a, b, b-c) sharing sides a and b.
/// Requires a 60-degree member in b > c order; (1,1,1) has no twin.
inline triple twin_60(const triple& t) {
    if (t.b == t.c) {
        throw degenerate_error("equilateral triple has no twin");
    }
    if (t.b < t.c) {
        throw std::domain_error("twin_60 requires the ordered form b > c");
    }
    if (!is_member(family::sixty, t)) {
        throw std::domain_error("twin_60 requires a 60-degree member");
    }
    return triple(t.a, t.b, t.b - t.c);
}

/// Component swap (a, c, b), the 120-degree side of the twin
/// correspondence. An involution.
inline triple swap_120(const triple& t) {
    return triple(t.a, t.c, t.b);
}

/// Walks every valid (m, n) pair whose triple has a <= max_a, in
/// deterministic order: m ascending from 2, n ascending within m. For the
/// 60-degree family fn sees the plus triple then the minus triple of each
/// pair; for 120 it sees the single map output.
template <typename Fn>
void for_each_param_triple(family f, std::int64_t max_a, Fn&& fn) {
    for (std::int64_t m = 2; checked_add(checked_mul(m, m), checked_add(m, 1)) <= max_a; ++m) {
        for (std::int64_t n = 1; n < m; ++n) {
            if (check_params(m, n)) {
                continue;
            }
            param_pair p{m, n, side_variant::plus};
            if (detail::common_side(p) > max_a) {
                continue;
            }
            if (f == family::sixty) {
                fn(eisenstein_from_params(p), p);
                p.variant = side_variant::minus;
                fn(eisenstein_from_params(p), p);
            } else {
                fn(sub_eisenstein_from_params(p), p);
            }
        }
    }
}

}  // namespace eistri
