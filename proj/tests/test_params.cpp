#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "eistri/oracle.hpp"
#include "eistri/params.hpp"

using namespace eistri;

TEST_CASE("parameter validation names the violated constraint") {
    CHECK_NOTHROW(validate_params(2, 1));
    CHECK_FALSE(check_params(2, 1).has_value());
    CHECK(check_params(6, 3) == param_violation::not_coprime);
    CHECK(check_params(4, 1) == param_violation::mod3_collision);
    CHECK(check_params(1, 2) == param_violation::not_ordered);
    CHECK(check_params(3, 0) == param_violation::not_ordered);
    CHECK(check_params(3, 3) == param_violation::not_ordered);
    CHECK_THROWS_AS(validate_params(6, 3), param_error);
    try {
        validate_params(4, 1);
        FAIL("expected param_error");
    } catch (const param_error& e) {
        CHECK(e.violation() == param_violation::mod3_collision);
        CHECK(std::string(e.what()) == "MOD3_COLLISION");
    }
}

TEST_CASE("60-degree generation map") {
    CHECK(eisenstein_from_params({2, 1, side_variant::plus}) == triple(7, 8, 5));
    CHECK(eisenstein_from_params({2, 1, side_variant::minus}) == triple(7, 8, 3));
    CHECK(eisenstein_from_params({3, 1, side_variant::plus}) == triple(13, 15, 7));
}

TEST_CASE("120-degree generation map") {
    CHECK(sub_eisenstein_from_params({2, 1}) == triple(7, 5, 3));
    CHECK(sub_eisenstein_from_params({3, 1}) == triple(13, 7, 8));
    CHECK(sub_eisenstein_from_params({3, 2}) == triple(19, 16, 5));
}

TEST_CASE("generated triples are primitive members with the stated order") {
    for (std::int64_t m = 2; m <= 60; ++m) {
        for (std::int64_t n = 1; n < m; ++n) {
            if (check_params(m, n)) {
                continue;
            }
            const triple plus = eisenstein_from_params({m, n, side_variant::plus});
            const triple minus = eisenstein_from_params({m, n, side_variant::minus});
            REQUIRE(is_primitive(family::sixty, plus));
            REQUIRE(is_primitive(family::sixty, minus));
            REQUIRE(plus.b > plus.c);
            REQUIRE(minus.b > minus.c);
            REQUIRE(is_primitive(family::one_twenty, sub_eisenstein_from_params({m, n})));
        }
    }
}

TEST_CASE("inverse map recovers the generating pair") {
    const auto p120 = params_from_triple(family::one_twenty, triple(7, 5, 3));
    REQUIRE(p120.has_value());
    CHECK(p120->m == 2);
    CHECK(p120->n == 1);

    const auto p60 = params_from_triple(family::sixty, triple(7, 8, 5));
    REQUIRE(p60.has_value());
    CHECK(p60->m == 2);
    CHECK(p60->n == 1);
    CHECK(p60->variant == side_variant::plus);

    CHECK_FALSE(params_from_triple(family::sixty, triple(1, 1, 1)).has_value());
    CHECK_FALSE(params_from_triple(family::sixty, triple(3, 4, 5)).has_value());
    CHECK_FALSE(params_from_triple(family::sixty, triple(14, 16, 10)).has_value());
}

TEST_CASE("round trip through the inverse for all pairs up to 60") {
    for (std::int64_t m = 2; m <= 60; ++m) {
        for (std::int64_t n = 1; n < m; ++n) {
            if (check_params(m, n)) {
                continue;
            }
            for (side_variant v : {side_variant::plus, side_variant::minus}) {
                const param_pair p{m, n, v};
                const auto back = params_from_triple(family::sixty, eisenstein_from_params(p));
                REQUIRE(back.has_value());
                REQUIRE(back->m == m);
                REQUIRE(back->n == n);
                REQUIRE(back->variant == v);
            }
            const auto back = params_from_triple(family::one_twenty, sub_eisenstein_from_params({m, n}));
            REQUIRE(back.has_value());
            REQUIRE(back->m == m);
            REQUIRE(back->n == n);
        }
    }
}

TEST_CASE("every triple is achieved exactly once up to 2000") {
    std::map<triple, int> ordered_60;
    for_each_param_triple(family::sixty, 2000,
                          [&](const triple& t, const param_pair&) { ++ordered_60[t]; });
    for (const auto& [t, count] : ordered_60) {
        REQUIRE(count == 1);
    }
    std::map<triple, int> canonical_120;
    for_each_param_triple(family::one_twenty, 2000,
                          [&](const triple& t, const param_pair&) { ++canonical_120[canonicalize(t)]; });
    for (const auto& [t, count] : canonical_120) {
        REQUIRE(count == 1);
    }
    // and the covered sets match the oracle
    CHECK(oracle::certify_params(family::sixty, 2000, oracle::brute_force(family::sixty, 2000)).pass());
    CHECK(oracle::certify_params(family::one_twenty, 2000,
                                 oracle::brute_force(family::one_twenty, 2000))
              .pass());
}

TEST_CASE("twin of a 60-degree triple") {
    CHECK(twin_60(triple(7, 8, 5)) == triple(7, 8, 3));
    CHECK(twin_60(triple(13, 15, 7)) == triple(13, 15, 8));
    CHECK_THROWS_AS(twin_60(triple(1, 1, 1)), degenerate_error);
    CHECK_THROWS_AS(twin_60(triple(7, 5, 8)), std::domain_error);
    CHECK_THROWS_AS(twin_60(triple(7, 8, 4)), std::domain_error);  // not a member
}

TEST_CASE("twin_60 is an involution away from the equilateral") {
    for (const triple& t : oracle::brute_force(family::sixty, 300)) {
        if (t.b == t.c) {
            continue;
        }
        REQUIRE(twin_60(twin_60(t)) == t);
    }
}

TEST_CASE("twinning swaps the two variants of one pair") {
    for (std::int64_t m = 2; m <= 60; ++m) {
        for (std::int64_t n = 1; n < m; ++n) {
            if (check_params(m, n)) {
                continue;
            }
            REQUIRE(twin_60(eisenstein_from_params({m, n, side_variant::plus})) ==
                    eisenstein_from_params({m, n, side_variant::minus}));
        }
    }
}

TEST_CASE("swap_120 swaps the legs and is an involution") {
    CHECK(swap_120(triple(13, 7, 8)) == triple(13, 8, 7));
    CHECK(swap_120(triple(7, 5, 3)) == triple(7, 3, 5));
    for (const triple& t : oracle::brute_force(family::one_twenty, 300)) {
        REQUIRE(swap_120(swap_120(t)) == t);
    }
}
