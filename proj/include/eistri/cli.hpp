#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eistri/bijection.hpp"
#include "eistri/core.hpp"
#include "eistri/oracle.hpp"
#include "eistri/params.hpp"
#include "eistri/tree.hpp"

// Command-line front end. Exit codes: 0 success or PASS, 1 negative
// query result or FAIL, 2 usage error, 3 arithmetic overflow, 4 domain
// error. All output is deterministic for fixed arguments.

namespace eistri::cli {

namespace detail {

enum class source_kind : std::uint8_t { tree, params, oracle };

inline source_kind parse_source(const std::string& s) {
    if (s == "tree") {
        return source_kind::tree;
    }
    return s == "params" ? source_kind::params : source_kind::oracle;
}

inline family parse_family(const std::string& s) {
    return s == "60" ? family::sixty : family::one_twenty;
}

/// One output row of the enumerate command. Word and parameter fields
/// are only rendered when the matching flag was given; a present flag
/// with an absent value (only the equilateral prelude) renders as null.
struct record {
    triple t;
    bool with_word = false;
    std::optional<tree::derivation_word> word;
    bool with_params = false;
    std::optional<param_pair> params;
    bool show_variant = false;

    explicit record(const triple& t_) : t(t_) {}
};

inline std::string word_digits(const std::vector<std::uint8_t>& letters) {
    std::string s;
    for (auto l : letters) {
        s += static_cast<char>('0' + l);
    }
    return s;
}

inline void write_jsonl(std::ostream& os, const record& r) {
    os << "{\"a\":" << r.t.a << ",\"b\":" << r.t.b << ",\"c\":" << r.t.c;
    if (r.with_word) {
        if (r.word) {
            os << ",\"seed\":\"" << tree::seed_name(r.word->seed) << "\",\"word\":[";
            for (std::size_t i = 0; i < r.word->letters.size(); ++i) {
                os << (i ? "," : "") << static_cast<int>(r.word->letters[i]);
            }
            os << "],\"twin\":" << (r.word->twin ? "true" : "false");
        } else {
            os << ",\"seed\":null,\"word\":null,\"twin\":null";
        }
    }
    if (r.with_params) {
        if (r.params) {
            os << ",\"m\":" << r.params->m << ",\"n\":" << r.params->n;
            if (r.show_variant) {
                os << ",\"variant\":\"" << variant_name(r.params->variant) << "\"";
            }
        } else {
            os << ",\"m\":null,\"n\":null";
            if (r.show_variant) {
                os << ",\"variant\":null";
            }
        }
    }
    os << "}\n";
}

inline void write_csv_header(std::ostream& os, bool with_word, bool with_params,
                             bool show_variant) {
    os << "a,b,c";
    if (with_word) {
        os << ",seed,word,twin";
    }
    if (with_params) {
        os << (show_variant ? ",m,n,variant" : ",m,n");
    }
    os << '\n';
}

inline void write_csv(std::ostream& os, const record& r) {
    os << r.t.a << ',' << r.t.b << ',' << r.t.c;
    if (r.with_word) {
        if (r.word) {
            os << ',' << tree::seed_name(r.word->seed) << ',' << word_digits(r.word->letters)
               << ',' << (r.word->twin ? "true" : "false");
        } else {
            os << ",,,";
        }
    }
    if (r.with_params) {
        if (r.params) {
            os << ',' << r.params->m << ',' << r.params->n;
            if (r.show_variant) {
                os << ',' << variant_name(r.params->variant);
            }
        } else {
            os << (r.show_variant ? ",,," : ",,");
        }
    }
    os << '\n';
}

struct enumerate_options {
    std::string family_str;
    std::string source = "tree";
    std::string format = "jsonl";
    std::int64_t max_a = 0;
    bool include_twins = false;
    bool include_equilateral = false;
    bool with_word = false;
    bool with_params = false;
};

inline int cmd_enumerate(const enumerate_options& opt, std::ostream& out, std::ostream& err) {
    const family fam = parse_family(opt.family_str);
    const source_kind source = parse_source(opt.source);
    if (opt.include_twins && source != source_kind::tree) {
        err << "--include-twins only applies to --source tree\n";
        return 2;
    }
    if (opt.include_equilateral &&
        (fam != family::sixty || source == source_kind::oracle)) {
        err << "--include-equilateral only applies to --family 60 with --source tree or params\n";
        return 2;
    }
    const bool csv = opt.format == "csv";
    const bool show_variant = fam == family::sixty;
    if (csv) {
        write_csv_header(out, opt.with_word, opt.with_params, show_variant);
    }
    auto emit = [&](record r) {
        r.with_word = opt.with_word;
        r.with_params = opt.with_params;
        r.show_variant = show_variant;
        if (csv) {
            write_csv(out, r);
        } else {
            write_jsonl(out, r);
        }
    };
    if (opt.include_equilateral) {
        emit(record(triple(1, 1, 1)));  // word and params stay null
    }
    switch (source) {
        case source_kind::tree:
            tree::for_each_node(fam, opt.max_a, opt.include_twins, [&](const tree::tree_node& n) {
                record r(n.t);
                r.word = n.word;
                if (opt.with_params) {
                    r.params = params_from_triple(fam, n.t);
                }
                emit(std::move(r));
            });
            break;
        case source_kind::params:
            for_each_param_triple(fam, opt.max_a, [&](const triple& t, const param_pair& p) {
                record r(t);
                if (opt.with_word) {
                    r.word = tree::derive_word(t);
                }
                r.params = p;
                emit(std::move(r));
            });
            break;
        case source_kind::oracle:
            for (const triple& t : oracle::brute_force(fam, opt.max_a)) {
                record r(t);
                if (opt.with_word) {
                    r.word = tree::derive_word(t);
                }
                if (opt.with_params) {
                    r.params = params_from_triple(fam, t);
                }
                emit(std::move(r));
            }
            break;
    }
    return 0;
}

inline int cmd_check(const triple& t, std::ostream& out) {
    const bool in_60 = is_member(family::sixty, t);
    const bool in_120 = !in_60 && is_member(family::one_twenty, t);
    if (!in_60 && !in_120) {
        out << "{\"family\":null}\n";
        return 1;
    }
    const family fam = in_60 ? family::sixty : family::one_twenty;
    out << "{\"family\":" << family_name(fam)
        << ",\"primitive\":" << (gcd3(t.a, t.b, t.c) == 1 ? "true" : "false");
    if (const triple canon = canonicalize(t); canon != t) {
        out << ",\"canonical\":[" << canon.a << ',' << canon.b << ',' << canon.c << ']';
    }
    out << "}\n";
    return 0;
}

inline int cmd_map(const std::string& to, const triple& t, std::ostream& out) {
    const triple mapped = to == "120" ? to_sub(t) : from_sub(t);
    out << mapped.a << ' ' << mapped.b << ' ' << mapped.c << '\n';
    return 0;
}

inline int cmd_params(const triple& t, std::ostream& out) {
    const auto fam = classify(t);
    const auto p = fam ? params_from_triple(*fam, t) : std::nullopt;
    if (!p) {
        out << "NOT_FOUND\n";
        return 1;
    }
    out << "m=" << p->m << " n=" << p->n;
    if (*fam == family::sixty) {
        out << " variant=" << variant_name(p->variant);
    }
    out << '\n';
    return 0;
}

inline int cmd_derive(const triple& t, std::ostream& out) {
    const auto w = tree::derive_word(t);
    if (!w) {
        out << "NOT_IN_FAMILY\n";
        return 1;
    }
    out << "seed=" << tree::seed_name(w->seed) << " word=" << word_digits(w->letters)
        << " twin=" << (w->twin ? "true" : "false") << '\n';
    return 0;
}

inline int cmd_verify(const std::string& family_str, std::int64_t max_a, std::ostream& out) {
    bool all_pass = true;
    const bool run_60 = family_str == "60" || family_str == "both";
    const bool run_120 = family_str == "120" || family_str == "both";
    if (run_60) {
        const auto report = oracle::certify(family::sixty, max_a);
        oracle::write_report(out, report);
        all_pass = all_pass && report.pass();
    }
    if (run_120) {
        const auto report = oracle::certify(family::one_twenty, max_a);
        oracle::write_report(out, report);
        all_pass = all_pass && report.pass();
    }
    return all_pass ? 0 : 1;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact enumeration, mapping and certification of the primitive "
                 "integer triangles with a 60- or 120-degree angle"};
    app.name("eistri");
    app.require_subcommand(1);

    detail::enumerate_options enum_opt;
    auto* enumerate = app.add_subcommand("enumerate", "stream one family up to a side bound");
    enumerate->add_option("--family", enum_opt.family_str, "triangle family")
        ->required()
        ->check(CLI::IsMember({"60", "120"}));
    enumerate->add_option("--max-a", enum_opt.max_a, "largest side a to emit")
        ->required()
        ->check(CLI::PositiveNumber);
    enumerate->add_option("--source", enum_opt.source, "generator to use (default tree)")
        ->check(CLI::IsMember({"tree", "params", "oracle"}));
    enumerate->add_flag("--include-twins", enum_opt.include_twins,
                        "emit each node's companion form (tree source)");
    enumerate->add_flag("--include-equilateral", enum_opt.include_equilateral,
                        "prepend (1,1,1) to the 60-degree stream");
    enumerate->add_flag("--with-word", enum_opt.with_word, "add seed/word/twin fields");
    enumerate->add_flag("--with-params", enum_opt.with_params, "add m/n fields");
    enumerate->add_option("--format", enum_opt.format, "jsonl or csv (default jsonl)")
        ->check(CLI::IsMember({"jsonl", "csv"}));

    std::array<std::int64_t, 3> sides{};
    auto add_sides = [&sides](CLI::App* cmd) {
        cmd->add_option("a", sides[0], "side opposite the distinguished angle")
            ->required()
            ->check(CLI::PositiveNumber);
        cmd->add_option("b", sides[1], "second side")->required()->check(CLI::PositiveNumber);
        cmd->add_option("c", sides[2], "third side")->required()->check(CLI::PositiveNumber);
    };

    auto* check = app.add_subcommand("check", "classify a triple");
    add_sides(check);

    std::string map_to;
    auto* map = app.add_subcommand("map", "apply the family bijection");
    map->add_option("--to", map_to, "target family")
        ->required()
        ->check(CLI::IsMember({"60", "120"}));
    add_sides(map);

    auto* params = app.add_subcommand("params", "invert the generation map");
    add_sides(params);

    auto* derive = app.add_subcommand("derive", "find the tree derivation of a triple");
    add_sides(derive);

    std::string verify_family;
    std::int64_t verify_max_a = 0;
    auto* verify = app.add_subcommand("verify", "certify the generators against the oracle");
    verify->add_option("--family", verify_family, "family to certify")
        ->required()
        ->check(CLI::IsMember({"60", "120", "both"}));
    verify->add_option("--max-a", verify_max_a, "certification bound")
        ->required()
        ->check(CLI::PositiveNumber);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("eistri");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (enumerate->parsed()) {
            return detail::cmd_enumerate(enum_opt, out, err);
        }
        const triple t = check->parsed() || map->parsed() || params->parsed() || derive->parsed()
                             ? triple(sides[0], sides[1], sides[2])
                             : triple(1, 1, 1);
        if (check->parsed()) {
            return detail::cmd_check(t, out);
        }
        if (map->parsed()) {
            return detail::cmd_map(map_to, t, out);
        }
        if (params->parsed()) {
            return detail::cmd_params(t, out);
        }
        if (derive->parsed()) {
            return detail::cmd_derive(t, out);
        }
        return detail::cmd_verify(verify_family, verify_max_a, out);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const arithmetic_overflow& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 4;
    }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace eistri::cli
