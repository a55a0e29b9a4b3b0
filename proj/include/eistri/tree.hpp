#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eistri/bijection.hpp"
#include "eistri/core.hpp"
#include "eistri/params.hpp"

namespace eistri::tree {

/// Root selector for the generation trees. s1 is (7,8,5) / (7,5,3),
/// s2 is (13,15,7) / (13,7,8) for the 60- / 120-degree family.
enum class seed_id : std::uint8_t { s1, s2 };

inline const char* seed_name(seed_id s) {
    return s == seed_id::s1 ? "S1" : "S2";
}

/// Name of one tree element: seed, generator letters, and whether the
/// companion form is meant. letters[0] is the generator applied last;
/// an empty sequence names the seed itself. twin selects (a,b,b-c) in
/// the 60-degree tree and (a,c,b) in the 120-degree tree.
struct derivation_word {
    seed_id seed = seed_id::s1;
    std::vector<std::uint8_t> letters;  // values in 1..5
    bool twin = false;

    bool operator==(const derivation_word&) const = default;
};

/// Five generators plus the two roots of one family's tree.
struct matrix_set {
    family fam;
    std::array<gen_matrix, 5> generators;
    std::array<triple, 2> seeds;
};

namespace detail {

inline matrix_set raw_set_60() {
    return matrix_set{
        family::sixty,
        {make_matrix(7, -6, 6, 8, -7, 7, 4, -4, 3),
         make_matrix(7, 6, -6, 8, 7, -7, 4, 3, -4),
         make_matrix(7, 6, 0, 8, 7, 0, 4, 3, 1),
         make_matrix(7, 0, 6, 8, 0, 7, 4, 1, 3),
         make_matrix(7, 0, -6, 8, 0, -7, 4, 1, -4)},
        {triple(7, 8, 5), triple(13, 15, 7)}};
}

inline matrix_set raw_set_120() {
    return matrix_set{
        family::one_twenty,
        {make_matrix(7, 0, -6, 4, -1, -4, 4, 1, -3),
         make_matrix(7, 0, 6, 4, -1, 3, 4, 1, 4),
         make_matrix(7, 6, 6, 4, 4, 3, 4, 3, 4),
         make_matrix(7, 6, 0, 4, 4, 1, 4, 3, -1),
         make_matrix(7, -6, 0, 4, -3, 1, 4, -4, -1)},
        {triple(7, 5, 3), triple(13, 7, 8)}};
}

}  // namespace detail

/// Cross-checks every identity the two generator sets must satisfy and
/// returns a description of each failure (empty means the constants are
/// sound). The checks: unimodularity of all twelve matrices, exact
/// inverse pair for the bijection matrix, the conjugation identity
/// linking the families generator by generator, the seed correspondence
/// under the bijection, and form preservation of every generator on
/// every seed.
inline std::vector<std::string> matrix_set_violations() {
    std::vector<std::string> out;
    const matrix_set sixty = detail::raw_set_60();
    const matrix_set twenty = detail::raw_set_120();
    auto complain = [&out](const std::string& msg) { out.push_back(msg); };

    auto check_unimodular = [&](const gen_matrix& g, const std::string& name) {
        const std::int64_t d = det(g);
        if (d != 1 && d != -1) {
            std::ostringstream os;
            os << name << " has determinant " << d;
            complain(os.str());
        }
    };
    for (int i = 0; i < 5; ++i) {
        check_unimodular(sixty.generators[i], "60-generator " + std::to_string(i + 1));
        check_unimodular(twenty.generators[i], "120-generator " + std::to_string(i + 1));
    }
    check_unimodular(to_sub_matrix, "bijection matrix");
    check_unimodular(from_sub_matrix, "bijection inverse");

    if (mat_mul(to_sub_matrix, from_sub_matrix) != identity_matrix ||
        mat_mul(from_sub_matrix, to_sub_matrix) != identity_matrix) {
        complain("bijection matrix and its inverse do not multiply to the identity");
    }

    for (int i = 0; i < 5; ++i) {
        if (conjugate(sixty.generators[i]) != twenty.generators[i]) {
            complain("conjugation identity fails for generator " + std::to_string(i + 1));
        }
    }

    for (int s = 0; s < 2; ++s) {
        if (apply_matrix(to_sub_matrix, sixty.seeds[s]) != twenty.seeds[s]) {
            complain("bijection does not map 60-seed " + std::to_string(s + 1) +
                     " to the matching 120-seed");
        }
    }

    auto check_seed = [&](const matrix_set& ms, int s) {
        if (!is_primitive(ms.fam, ms.seeds[s])) {
            complain(std::string(family_name(ms.fam)) + "-seed " + std::to_string(s + 1) +
                     " is not a primitive member");
        }
        for (int i = 0; i < 5; ++i) {
            const triple child = apply_matrix(ms.generators[i], ms.seeds[s]);
            if (!is_primitive(ms.fam, child)) {
                complain(std::string(family_name(ms.fam)) + "-generator " + std::to_string(i + 1) +
                         " maps a seed outside the family");
            }
        }
    };
    for (int s = 0; s < 2; ++s) {
        check_seed(sixty, s);
        check_seed(twenty, s);
    }
    return out;
}

/// The validated generator set of a family. The identities above are
/// verified once per process; a failure means the shipped constants are
/// corrupt and is treated as fatal.
inline const matrix_set& canonical_matrix_set(family f) {
    static const auto sets = [] {
        auto violations = matrix_set_violations();
        if (!violations.empty()) {
            std::string msg = "generator constants failed self-check:";
            for (const auto& v : violations) {
                msg += "\n  " + v;
            }
            throw std::logic_error(msg);
        }
        return std::array<matrix_set, 2>{detail::raw_set_60(), detail::raw_set_120()};
    }();
    return sets[f == family::sixty ? 0 : 1];
}

/// Evaluates a derivation word: the letters act right to left on the
/// seed (letters[0] is applied last), then the twin flag swaps in the
/// companion form.
inline triple apply_word(const derivation_word& w, family f) {
    const matrix_set& ms = canonical_matrix_set(f);
    triple t = ms.seeds[w.seed == seed_id::s1 ? 0 : 1];
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        if (*it < 1 || *it > 5) {
            throw std::domain_error("derivation letters must be in 1..5");
        }
        t = apply_matrix(ms.generators[*it - 1], t);
    }
    if (!w.twin) {
        return t;
    }
    return f == family::sixty ? twin_60(t) : swap_120(t);
}

/// One enumerated element: the triple together with the word naming it.
struct tree_node {
    triple t;
    derivation_word word;
};

/// Breadth-first walk of one family's tree up to side bound max_a:
/// seeds s1 then s2, children by letter 1..5. Subtrees are pruned as
/// soon as a exceeds max_a, which is sound because every generator
/// strictly grows a (checked on each edge). With include_twins each
/// node's companion form follows it immediately. (1,1,1) is never a
/// tree element; callers wanting the full 60-degree family add it
/// themselves.
template <typename Fn>
void for_each_node(family f, std::int64_t max_a, bool include_twins, Fn&& fn) {
    if (max_a < 1) {
        throw std::domain_error("max_a must be >= 1");
    }
    const matrix_set& ms = canonical_matrix_set(f);
    struct pending {
        triple t;
        seed_id seed;
        std::vector<std::uint8_t> letters;
    };
    std::deque<pending> queue;
    for (int s = 0; s < 2; ++s) {
        if (ms.seeds[s].a <= max_a) {
            queue.push_back({ms.seeds[s], s == 0 ? seed_id::s1 : seed_id::s2, {}});
        }
    }
    while (!queue.empty()) {
        pending node = std::move(queue.front());
        queue.pop_front();
        fn(tree_node{node.t, {node.seed, node.letters, false}});
        if (include_twins) {
            const triple tw = f == family::sixty ? twin_60(node.t) : swap_120(node.t);
            fn(tree_node{tw, {node.seed, node.letters, true}});
        }
        for (std::uint8_t letter = 1; letter <= 5; ++letter) {
            const triple child = apply_matrix(ms.generators[letter - 1], node.t);
            if (child.a <= node.t.a) {
                throw std::logic_error("generator failed to grow side a; pruning would be unsound");
            }
            if (child.a > max_a) {
                continue;
            }
            std::vector<std::uint8_t> letters;
            letters.reserve(node.letters.size() + 1);
            letters.push_back(letter);
            letters.insert(letters.end(), node.letters.begin(), node.letters.end());
            queue.push_back({child, node.seed, std::move(letters)});
        }
    }
}

inline std::vector<tree_node> enumerate(family f, std::int64_t max_a, bool include_twins) {
    std::vector<tree_node> out;
    for_each_node(f, max_a, include_twins, [&out](const tree_node& n) { out.push_back(n); });
    return out;
}

namespace detail {

inline std::optional<seed_id> seed_of(const matrix_set& ms, const triple& t) {
    if (t == ms.seeds[0]) {
        return seed_id::s1;
    }
    if (t == ms.seeds[1]) {
        return seed_id::s2;
    }
    return std::nullopt;
}

/// The predecessor of t under one inverse generator, if it is a
/// plausible tree element: positive sides, strictly smaller a, a
/// primitive member, and b > c order in the 60-degree family.
inline std::optional<triple> try_inverse(const matrix_set& ms, const gen_matrix& inverse,
                                         const triple& t) {
    std::int64_t out[3];
    const std::int64_t in[3] = {t.a, t.b, t.c};
    for (int i = 0; i < 3; ++i) {
        std::int64_t sum = 0;
        for (int k = 0; k < 3; ++k) {
            sum = checked_add(sum, checked_mul(inverse.m[i][k], in[k]));
        }
        if (sum < 1) {
            return std::nullopt;
        }
        out[i] = sum;
    }
    if (out[0] >= t.a) {
        return std::nullopt;
    }
    const triple parent(out[0], out[1], out[2]);
    if (!is_primitive(ms.fam, parent)) {
        return std::nullopt;
    }
    if (ms.fam == family::sixty && parent.b <= parent.c) {
        return std::nullopt;
    }
    return parent;
}

/// Depth-first backtracking walk from t down to a seed, stripping one
/// generator per step. On success path holds the word (first letter =
/// outermost generator). Iterative; the chain length is about the
/// square root of t.a in the worst case.
inline bool walk_to_seed(const matrix_set& ms, const std::array<gen_matrix, 5>& inverses,
                         const triple& start, std::vector<std::uint8_t>& path,
                         seed_id& seed_out) {
    path.clear();
    if (const auto s = seed_of(ms, start)) {
        seed_out = *s;
        return true;
    }
    struct frame {
        triple t;
        std::uint8_t next_letter;
    };
    std::vector<frame> stack{{start, 1}};
    while (!stack.empty()) {
        frame& top = stack.back();
        if (top.next_letter > 5) {
            const bool root = stack.size() == 1;
            stack.pop_back();
            if (!root) {
                path.pop_back();
            }
            continue;
        }
        const std::uint8_t letter = top.next_letter++;
        const auto parent = try_inverse(ms, inverses[letter - 1], top.t);
        if (!parent) {
            continue;
        }
        path.push_back(letter);
        if (const auto s = seed_of(ms, *parent)) {
            seed_out = *s;
            return true;
        }
        stack.push_back({*parent, 1});
    }
    return false;
}

inline std::optional<derivation_word> find_word(family f, const triple& base, bool twin) {
    const matrix_set& ms = canonical_matrix_set(f);
    std::array<gen_matrix, 5> inverses;
    for (int i = 0; i < 5; ++i) {
        inverses[i] = unimodular_inverse(ms.generators[i]);
    }
    derivation_word w;
    w.twin = twin;
    if (walk_to_seed(ms, inverses, base, w.letters, w.seed)) {
        return w;
    }
    return std::nullopt;
}

}  // namespace detail

/// Inverse tree lookup: the word that generates t's ordered
/// representative, found by walking the unique chain of inverse
/// generators down to a seed. Empty when t is not a primitive member of
/// either family or is the equilateral (1,1,1), which lives outside the
/// trees.
inline std::optional<derivation_word> derive_word(const triple& t) {
    const auto fam = classify(t);
    if (!fam) {
        return std::nullopt;
    }
    if (*fam == family::sixty) {
        const triple rep = canonicalize(t);
        if (rep.b == rep.c) {
            return std::nullopt;  // (1,1,1)
        }
        if (auto w = detail::find_word(family::sixty, rep, false)) {
            return w;
        }
        return detail::find_word(family::sixty, twin_60(rep), true);
    }
    if (auto w = detail::find_word(family::one_twenty, t, false)) {
        return w;
    }
    return detail::find_word(family::one_twenty, swap_120(t), true);
}

}  // namespace eistri::tree
