// Acceptance suite: certifies the full library at the desk-scale bound
// of a <= 10000 and prints one pass/fail line per criterion. Exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "eistri/cli.hpp"
#include "eistri/eistri.hpp"

namespace {

constexpr std::int64_t kBound = 10000;

// counts of canonical primitive triples with a <= 10000, computed by the
// brute-force oracle and pinned as regression constants
constexpr std::int64_t kCount60 = 2769;
constexpr std::int64_t kCount120 = 1384;

struct outcome {
    bool pass = false;
    std::string note;
};

int failures = 0;

void report(int index, const char* name, double budget_seconds,
            const std::function<outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    outcome result;
    try {
        result = body();
    } catch (const std::exception& e) {
        result.pass = false;
        result.note = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = budget_seconds <= 0.0 || elapsed <= budget_seconds;
    const bool pass = result.pass && in_budget;
    if (!pass) {
        ++failures;
    }
    std::printf("criterion %d: %-38s %s (%.3fs)\n", index, name, pass ? "PASS" : "FAIL", elapsed);
    if (!result.pass && !result.note.empty()) {
        std::printf("             %s\n", result.note.c_str());
    }
    if (result.pass && !in_budget) {
        std::printf("             exceeded the %.3fs budget\n", budget_seconds);
    }
}

outcome expect(bool condition, const std::string& note_on_failure) {
    return {condition, condition ? std::string() : note_on_failure};
}

struct cli_result {
    int code;
    std::string out;
};

cli_result run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = eistri::cli::run(args, out, err);
    return {code, out.str() + err.str()};
}

}  // namespace

int main() {
    using namespace eistri;

    std::vector<triple> oracle_60;
    std::vector<triple> oracle_120;
    oracle::bijection_check bij;
    oracle::source_check params_60;
    oracle::source_check params_120;

    // 1. the check command accepts the four seeds and rejects (13,15,17);
    //    the membership predicates answer in under a millisecond
    report(1, "seed identities", 0.0, [&]() -> outcome {
        const auto t0 = std::chrono::steady_clock::now();
        const bool predicates = is_primitive(family::sixty, triple(7, 8, 5)) &&
                                is_primitive(family::sixty, triple(13, 15, 7)) &&
                                is_primitive(family::one_twenty, triple(7, 5, 3)) &&
                                is_primitive(family::one_twenty, triple(13, 7, 8)) &&
                                !is_member(family::sixty, triple(13, 15, 17));
        const double predicate_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!predicates) {
            return {false, "a membership predicate disagrees with the seed data"};
        }
        if (predicate_seconds > 0.001) {
            return {false, "membership predicates exceeded 1 ms"};
        }
        struct seed_case {
            const char* a;
            const char* b;
            const char* c;
            std::string expected;
            int code;
        };
        const seed_case cases[] = {
            {"7", "8", "5", "{\"family\":60,\"primitive\":true}\n", 0},
            {"13", "15", "7", "{\"family\":60,\"primitive\":true}\n", 0},
            {"7", "5", "3", "{\"family\":120,\"primitive\":true}\n", 0},
            {"13", "7", "8", "{\"family\":120,\"primitive\":true,\"canonical\":[13,8,7]}\n", 0},
            {"13", "15", "17", "{\"family\":null}\n", 1},
        };
        for (const auto& c : cases) {
            const auto r = run_cli({"check", c.a, c.b, c.c});
            if (r.code != c.code || r.out != c.expected) {
                return {false, std::string("check ") + c.a + " " + c.b + " " + c.c +
                                   " returned code " + std::to_string(r.code) + ": " + r.out};
            }
        }
        return {true, ""};
    });

    // 2. the bijection carries the 60-degree oracle set (minus the
    //    equilateral) exactly onto the 120-degree oracle set and is
    //    inverted by from_sub on every element
    report(2, "bijection certification at 10^4", 10.0, [&]() -> outcome {
        oracle_60 = oracle::brute_force(family::sixty, kBound);
        oracle_120 = oracle::brute_force(family::one_twenty, kBound);
        bij = oracle::certify_bijection(oracle_60, oracle_120);
        std::ostringstream os;
        os << "roundtrip_failures=" << bij.roundtrip_failures << " duplicates="
           << bij.duplicates.size() << " missing=" << bij.missing.size() << " extra="
           << bij.extra.size();
        return expect(bij.pass(), os.str());
    });

    // 3. the verify command certifies both trees against the oracle
    report(3, "tree certification via verify", 15.0, [&]() -> outcome {
        const auto r = run_cli({"verify", "--family", "both", "--max-a", "10000"});
        if (r.code != 0) {
            return {false, "exit code " + std::to_string(r.code) + "\n" + r.out};
        }
        const auto first = r.out.find("result=PASS");
        const bool both = first != std::string::npos &&
                          r.out.find("result=PASS", first + 1) != std::string::npos;
        return expect(both, "expected two PASS verdicts:\n" + r.out);
    });

    // 4. every valid (m,n) reproduces each oracle triple exactly once
    report(4, "parametrization certification at 10^4", 2.0, [&]() -> outcome {
        params_60 = oracle::certify_params(family::sixty, kBound, oracle_60);
        params_120 = oracle::certify_params(family::one_twenty, kBound, oracle_120);
        return expect(params_60.pass() && params_120.pass(),
                      "a parametrization difference list is nonempty");
    });

    // 5. the conjugation identity links the generator sets entry for
    //    entry, and all twelve shipped matrices are unimodular
    report(5, "conjugation identities", 0.0, [&]() -> outcome {
        const auto& sixty = tree::canonical_matrix_set(family::sixty);
        const auto& twenty = tree::canonical_matrix_set(family::one_twenty);
        for (int i = 0; i < 5; ++i) {
            if (conjugate(sixty.generators[i]) != twenty.generators[i]) {
                return {false, "conjugation fails for generator " + std::to_string(i + 1)};
            }
            for (const gen_matrix& g : {sixty.generators[i], twenty.generators[i]}) {
                const std::int64_t d = det(g);
                if (d != 1 && d != -1) {
                    return {false, "generator determinant is not +-1"};
                }
            }
        }
        if (det(to_sub_matrix) != -1 || det(from_sub_matrix) != -1) {
            return {false, "bijection matrix determinant is not -1"};
        }
        return expect(tree::matrix_set_violations().empty(), "self-check reported violations");
    });

    // 6. on every edge of both trees to depth 4: form and gcd
    //    preservation, strict growth of a, and the side-ordering laws
    report(6, "structural invariants to depth 4", 1.0, [&]() -> outcome {
        for (family f : {family::sixty, family::one_twenty}) {
            const auto& set = tree::canonical_matrix_set(f);
            std::vector<triple> level(set.seeds.begin(), set.seeds.end());
            for (const triple& seed : level) {
                if (!is_primitive(f, seed)) {
                    return {false, "a seed is not a primitive member"};
                }
            }
            for (int depth = 0; depth < 4; ++depth) {
                std::vector<triple> next;
                next.reserve(level.size() * 5);
                for (const triple& parent : level) {
                    for (const gen_matrix& g : set.generators) {
                        const triple child = apply_matrix(g, parent);
                        if (!is_primitive(f, child)) {
                            return {false, "an edge leaves the family"};
                        }
                        if (gcd3(child.a, child.b, child.c) != 1) {
                            return {false, "an edge breaks gcd preservation"};
                        }
                        if (child.a <= parent.a) {
                            return {false, "an edge fails strict growth"};
                        }
                        const bool ordered = f == family::sixty
                                                 ? child.b > child.a && child.a > child.c
                                                 : child.a > child.b && child.a > child.c;
                        if (!ordered) {
                            return {false, "an edge breaks the side-ordering law"};
                        }
                        next.push_back(child);
                    }
                }
                level = std::move(next);
            }
        }
        return {true, ""};
    });

    // 7. the pinned counts at 10^4, reproduced by oracle, trees,
    //    parametrization and bijection alike
    report(7, "regression counts at 10^4", 0.0, [&]() -> outcome {
        if (static_cast<std::int64_t>(oracle_60.size()) != kCount60 ||
            static_cast<std::int64_t>(oracle_120.size()) != kCount120) {
            return {false, "oracle counts moved: " + std::to_string(oracle_60.size()) + ", " +
                               std::to_string(oracle_120.size())};
        }
        const auto tree_60 = oracle::certify_tree(family::sixty, kBound, oracle_60);
        const auto tree_120 = oracle::certify_tree(family::one_twenty, kBound, oracle_120);
        const bool counts = tree_60.canonical_count == kCount60 &&
                            tree_120.canonical_count == kCount120 &&
                            params_60.canonical_count == kCount60 &&
                            params_120.canonical_count == kCount120 &&
                            bij.image_canonical == kCount120;
        return expect(counts && tree_60.pass() && tree_120.pass(),
                      "a generation path disagrees with the pinned counts");
    });

    std::printf("acceptance: %d/7 criteria passed\n", 7 - failures);
    return failures == 0 ? 0 : 1;
}
