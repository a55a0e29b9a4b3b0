#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "eistri/bijection.hpp"
#include "eistri/core.hpp"
#include "eistri/params.hpp"
#include "eistri/tree.hpp"

namespace eistri::oracle {

/// Exhaustive ground truth: every canonical (b >= c) primitive triple of
/// the family with a <= max_a, found by sweeping (b, c) and testing the
/// form value for a perfect square. Shares only the membership
/// predicates with the generative code paths, never their logic.
/// Sorted by (a, b, c); duplicate-free by construction.
inline std::vector<triple> brute_force(family f, std::int64_t max_a) {
    if (max_a < 1) {
        throw std::domain_error("max_a must be >= 1");
    }
    const std::int64_t a_sq_max = checked_mul(max_a, max_a);
    std::vector<triple> out;
    auto sweep_column = [&](std::int64_t b) {
        for (std::int64_t c = 1; c <= b; ++c) {
            const std::int64_t fv = form_value(f, b, c);
            if (fv > a_sq_max) {
                continue;
            }
            const std::int64_t a = isqrt(fv);
            if (a * a == fv && gcd3(a, b, c) == 1) {
                out.emplace_back(a, b, c);
            }
        }
    };
    if (f == family::one_twenty) {
        // a > b always holds (a^2 = b^2 + c^2 + bc > b^2)
        for (std::int64_t b = 1; b < max_a; ++b) {
            sweep_column(b);
        }
    } else {
        // b >= c forces a^2 >= 3b^2/4, so 3b^2 <= 4*max_a^2 bounds the sweep
        const std::int64_t limit = checked_mul(4, a_sq_max);
        for (std::int64_t b = 1; checked_mul(3, checked_mul(b, b)) <= limit; ++b) {
            sweep_column(b);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Outcome of comparing one generative path against the oracle.
/// `duplicates` lists outputs the path produced more than once (in the
/// path's own identity: ordered triples for the trees and the 60-degree
/// parametrization, canonical triples for the 120-degree one);
/// `missing` / `extra` compare canonical sets against the oracle.
struct source_check {
    std::int64_t ordered_count = 0;
    std::int64_t canonical_count = 0;
    std::vector<triple> duplicates;
    std::vector<triple> missing;
    std::vector<triple> extra;

    bool pass() const { return duplicates.empty() && missing.empty() && extra.empty(); }
};

/// Outcome of pushing the whole 60-degree oracle set (minus the
/// equilateral) through the family bijection.
struct bijection_check {
    std::int64_t image_ordered = 0;
    std::int64_t image_canonical = 0;
    std::int64_t roundtrip_failures = 0;
    std::vector<triple> duplicates;
    std::vector<triple> missing;
    std::vector<triple> extra;

    bool pass() const {
        return roundtrip_failures == 0 && duplicates.empty() && missing.empty() && extra.empty();
    }
};

struct certification_report {
    family fam = family::sixty;
    std::int64_t max_a = 0;
    std::int64_t oracle_count = 0;
    source_check tree;
    source_check params;
    std::optional<bijection_check> bijection;  // present for the 120-degree family

    bool pass() const {
        return tree.pass() && params.pass() && (!bijection || bijection->pass());
    }
};

namespace detail {

inline std::vector<triple> sorted_canonical_set(std::vector<triple> v) {
    for (auto& t : v) {
        t = canonicalize(t);
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline std::vector<triple> repeated_values(std::vector<triple> v) {
    std::sort(v.begin(), v.end());
    std::vector<triple> dups;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] == v[i - 1] && (dups.empty() || dups.back() != v[i])) {
            dups.push_back(v[i]);
        }
    }
    return dups;
}

inline source_check compare_with_oracle(family f, std::vector<triple> produced,
                                        const std::vector<triple>& dup_basis,
                                        const std::vector<triple>& oracle_set) {
    source_check chk;
    chk.ordered_count = static_cast<std::int64_t>(produced.size());
    chk.duplicates = repeated_values(dup_basis);
    auto canonical = sorted_canonical_set(std::move(produced));
    if (f == family::sixty) {
        // the equilateral triple lives outside the generative paths
        canonical.insert(std::lower_bound(canonical.begin(), canonical.end(), triple(1, 1, 1)),
                         triple(1, 1, 1));
    }
    chk.canonical_count = static_cast<std::int64_t>(canonical.size());
    std::set_difference(oracle_set.begin(), oracle_set.end(), canonical.begin(), canonical.end(),
                        std::back_inserter(chk.missing));
    std::set_difference(canonical.begin(), canonical.end(), oracle_set.begin(), oracle_set.end(),
                        std::back_inserter(chk.extra));
    return chk;
}

}  // namespace detail

/// Tree path vs oracle: enumerates with twins and requires every
/// ordered output exactly once and canonical coverage to match exactly.
inline source_check certify_tree(family f, std::int64_t max_a,
                                 const std::vector<triple>& oracle_set) {
    std::vector<triple> produced;
    tree::for_each_node(f, max_a, true, [&produced](const tree::tree_node& n) {
        produced.push_back(n.t);
    });
    return detail::compare_with_oracle(f, produced, produced, oracle_set);
}

/// Parametrization path vs oracle. For the 60-degree family the ordered
/// b > c outputs per (m, n, variant) must be pairwise distinct; for the
/// 120-degree family distinctness is required of the canonical forms.
inline source_check certify_params(family f, std::int64_t max_a,
                                   const std::vector<triple>& oracle_set) {
    std::vector<triple> produced;
    for_each_param_triple(f, max_a,
                          [&produced](const triple& t, const param_pair&) { produced.push_back(t); });
    std::vector<triple> dup_basis = produced;
    if (f == family::one_twenty) {
        for (auto& t : dup_basis) {
            t = canonicalize(t);
        }
    }
    return detail::compare_with_oracle(f, produced, dup_basis, oracle_set);
}

/// Bijection vs both oracles: maps every non-equilateral canonical
/// 60-degree triple through to_sub, demands injectivity on the ordered
/// images, an exact from_sub round trip, and canonical image equal to
/// the 120-degree oracle set.
inline bijection_check certify_bijection(const std::vector<triple>& oracle_60,
                                         const std::vector<triple>& oracle_120) {
    bijection_check chk;
    std::vector<triple> images;
    images.reserve(oracle_60.size());
    for (const auto& t : oracle_60) {
        if (t.b == t.c) {
            continue;  // (1,1,1) is outside the bijection's domain
        }
        const triple image = to_sub(t);
        if (from_sub(image) != t) {
            ++chk.roundtrip_failures;
        }
        images.push_back(image);
    }
    chk.image_ordered = static_cast<std::int64_t>(images.size());
    chk.duplicates = detail::repeated_values(images);
    const auto canonical = detail::sorted_canonical_set(std::move(images));
    chk.image_canonical = static_cast<std::int64_t>(canonical.size());
    std::set_difference(oracle_120.begin(), oracle_120.end(), canonical.begin(), canonical.end(),
                        std::back_inserter(chk.missing));
    std::set_difference(canonical.begin(), canonical.end(), oracle_120.begin(), oracle_120.end(),
                        std::back_inserter(chk.extra));
    return chk;
}

/// Runs every certification for one family at the given bound.
inline certification_report certify(family f, std::int64_t max_a) {
    certification_report report;
    report.fam = f;
    report.max_a = max_a;
    const auto oracle_set = brute_force(f, max_a);
    report.oracle_count = static_cast<std::int64_t>(oracle_set.size());
    report.tree = certify_tree(f, max_a, oracle_set);
    report.params = certify_params(f, max_a, oracle_set);
    if (f == family::one_twenty) {
        report.bijection = certify_bijection(brute_force(family::sixty, max_a), oracle_set);
    }
    return report;
}

namespace detail {

inline void write_diff(std::ostream& os, const std::vector<triple>& diff, const char* label) {
    os << ' ' << label << '=' << diff.size();
    if (!diff.empty()) {
        os << " first=" << diff.front();
    }
}

inline void write_source_check(std::ostream& os, const char* name, const source_check& chk) {
    os << name << " ordered=" << chk.ordered_count << " canonical=" << chk.canonical_count;
    write_diff(os, chk.duplicates, "duplicates");
    write_diff(os, chk.missing, "missing");
    write_diff(os, chk.extra, "extra");
    os << " pass=" << (chk.pass() ? "true" : "false") << '\n';
}

}  // namespace detail

inline void write_report(std::ostream& os, const certification_report& r) {
    os << "family=" << family_name(r.fam) << " max_a=" << r.max_a << '\n';
    os << "oracle count=" << r.oracle_count << '\n';
    detail::write_source_check(os, "tree", r.tree);
    detail::write_source_check(os, "params", r.params);
    if (r.bijection) {
        os << "bijection image_ordered=" << r.bijection->image_ordered
           << " image_canonical=" << r.bijection->image_canonical
           << " roundtrip_failures=" << r.bijection->roundtrip_failures;
        detail::write_diff(os, r.bijection->duplicates, "duplicates");
        detail::write_diff(os, r.bijection->missing, "missing");
        detail::write_diff(os, r.bijection->extra, "extra");
        os << " pass=" << (r.bijection->pass() ? "true" : "false") << '\n';
    }
    os << "result=" << (r.pass() ? "PASS" : "FAIL") << '\n';
}

}  // namespace eistri::oracle
