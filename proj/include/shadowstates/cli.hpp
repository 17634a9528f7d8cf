#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shadowstates/bijection.hpp"
#include "shadowstates/genpoly.hpp"
#include "shadowstates/rosette.hpp"
#include "shadowstates/verify.hpp"
#include "shadowstates/words.hpp"

namespace shadowstates::cli {

using nlohmann::json;

// Exit codes: 0 ok, 1 verification failure, 2 usage, 3 census cap exceeded,
// 4 word-set method disagreement, 5 word outside a bijection domain.

inline int census_cap() {
    if (const char* env = std::getenv("SHADOWSTATES_MAX_BRUTEFORCE")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return kDefaultCensusCap;
}

namespace detail {

inline std::string join(const std::vector<std::string>& items, char sep = ',') {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

inline json wrap(const std::string& command, json params, json result) {
    return json{{"command", command}, {"params", std::move(params)}, {"result", std::move(result)}};
}

inline std::vector<std::string> coeff_strings(const GenPolynomial& p) {
    std::vector<std::string> out;
    if (p.coeffs().empty()) return {"0"};
    for (const auto& c : p.coeffs()) out.push_back(c.to_string());
    return out;
}

struct MethodDisagreement {
    std::string description;
};

// Every route for a set must land on the same words; report the symmetric
// difference otherwise.
inline void cross_check(const std::string& set, const WordSet& a, const WordSet& b,
                        std::optional<MethodDisagreement>& out) {
    if (a == b || out.has_value()) return;
    std::vector<std::string> diff;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
    out = MethodDisagreement{set + " methods disagree; symmetric difference: " + join(diff)};
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Knot-shadow state censuses, generating polynomials, binary-word "
                 "encodings, rosette regions and the bijection between them"};
    app.require_subcommand(1);

    std::string family_name_arg, method = "closed", format = "csv", set_name;
    int n = -1;
    bool n_given = false;
    int components = -1;
    std::string map_word, inverse_word, svg_path;
    bool table = false, codes = false, geometry = false;
    double radius = 1.5;
    int max_n = 10;

    auto add_family_n = [&](CLI::App* sub) {
        sub->add_option("family", family_name_arg, "twist-loop, foil, twist-knot or figure-eight")
            ->required();
        sub->add_option("n", n, "half-twist count")->check(CLI::NonNegativeNumber);
    };
    auto add_format = [&](CLI::App* sub, const char* allowed) {
        sub->add_option("--format", format, "output format")->check(CLI::IsMember(
            allowed == std::string("csv") ? std::vector<std::string>{"csv", "json"}
                                          : std::vector<std::string>{"text", "json"}));
    };

    CLI::App* poly = app.add_subcommand("poly", "generating polynomial of a family");
    add_family_n(poly);
    poly->add_option("--method", method, "closed, recurrence, via-parts or bruteforce");
    add_format(poly, "csv");

    CLI::App* states = app.add_subcommand("states", "state census words of a family");
    add_family_n(states);
    states->add_option("--components,-k", components, "only the k-component states")
        ->check(CLI::PositiveNumber);
    add_format(states, "csv");

    CLI::App* words = app.add_subcommand("words", "binary word sets P, T2, F2, Tau2");
    words->add_option("set", set_name, "P, T2, F2 or Tau2")->required();
    words->add_option("n", n, "word-set index")->required()->check(CLI::NonNegativeNumber);
    words->add_option("--method", method,
                      "P: closed|recursive|filter; F2: closed|recursive; Tau2: definition|psi");
    add_format(words, "csv");

    CLI::App* bijection = app.add_subcommand("bijection", "the map P_{n+1} <-> Tau_n");
    bijection->add_option("n", n, "bijection index")->required()->check(CLI::NonNegativeNumber);
    bijection->add_option("--map", map_word, "region code of length n+1 to map forward");
    bijection->add_option("--inverse", inverse_word, "2-state word of length n+2 to map back");
    bijection->add_flag("--table", table, "emit the full pairing table");
    add_format(bijection, "csv");

    CLI::App* rosette = app.add_subcommand("rosette", "circle rosette regions");
    rosette->add_option("n", n, "circle count")->required()->check(CLI::PositiveNumber);
    rosette->add_option("--radius", radius, "common radius, must exceed 1");
    rosette->add_flag("--codes", codes, "list the region codes");
    rosette->add_option("--svg", svg_path, "write an SVG rendering to this path");
    add_format(rosette, "text");

    CLI::App* verify = app.add_subcommand("verify", "run the cross-check suite");
    verify->add_option("--max-n", max_n, "largest index checked")->check(CLI::NonNegativeNumber);
    verify->add_flag("--geometry", geometry, "include the rosette checks");

    std::vector<std::string> argv_store;
    argv_store.push_back("shadowstates");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        n_given = (poly->count("n") || states->count("n") || words->count("n") ||
                   bijection->count("n") || rosette->count("n")) > 0;

        if (poly->parsed() || states->parsed()) {
            Family family = family_from_name(family_name_arg);
            if (family == Family::FigureEight) {
                if (n_given) throw std::invalid_argument("figure-eight takes no half-twist count");
                n = 0;
            } else if (!n_given) {
                throw std::invalid_argument("family '" + family_name_arg +
                                            "' needs a half-twist count");
            }
        }

        if (poly->parsed()) {
            GenPolynomial p = family_poly(family_from_name(family_name_arg), n,
                                          poly_method_from_name(method));
            if (format == "json") {
                out << detail::wrap("poly",
                                    {{"family", family_name_arg}, {"method", method}, {"n", n}},
                                    {{"coefficients", detail::coeff_strings(p)}})
                           .dump()
                    << "\n";
            } else {
                out << p.to_csv() << "\n";
            }
            return 0;
        }

        if (states->parsed()) {
            auto census = build({family_from_name(family_name_arg), n}).state_census(census_cap());
            if (components >= 0) {
                std::vector<std::string> list =
                    census.count(components) ? census[components] : std::vector<std::string>{};
                if (format == "json") {
                    out << detail::wrap("states",
                                        {{"components", components},
                                         {"family", family_name_arg},
                                         {"n", n}},
                                        {{"words", list}})
                               .dump()
                        << "\n";
                } else {
                    out << detail::join(list) << "\n";
                }
            } else if (format == "json") {
                json result = json::object();
                for (const auto& [k, list] : census) result[std::to_string(k)] = list;
                out << detail::wrap("states", {{"family", family_name_arg}, {"n", n}},
                                    {{"census", result}})
                           .dump()
                    << "\n";
            } else {
                for (const auto& [k, list] : census)
                    out << k << ":" << detail::join(list) << "\n";
            }
            return 0;
        }

        if (words->parsed()) {
            const bool method_given = words->count("--method") > 0;
            std::optional<detail::MethodDisagreement> disagreement;
            WordSet result;
            if (set_name == "P") {
                WordSet closed = gen_P(n, PMethod::Closed);
                detail::cross_check("P", closed, gen_P(n, PMethod::Recursive), disagreement);
                if (n <= 20)
                    detail::cross_check("P", closed, gen_P(n, PMethod::Filter), disagreement);
                if (!method_given || method == "closed") result = std::move(closed);
                else if (method == "recursive") result = gen_P(n, PMethod::Recursive);
                else if (method == "filter") result = gen_P(n, PMethod::Filter);
                else throw std::invalid_argument("P methods: closed, recursive, filter");
            } else if (set_name == "T2") {
                result = gen_T2(n);
            } else if (set_name == "F2") {
                WordSet closed = gen_F2(n, F2Method::Closed);
                detail::cross_check("F2", closed, gen_F2(n, F2Method::Recursive), disagreement);
                if (!method_given || method == "closed") result = std::move(closed);
                else if (method == "recursive") result = gen_F2(n, F2Method::Recursive);
                else throw std::invalid_argument("F2 methods: closed, recursive");
            } else if (set_name == "Tau2") {
                WordSet definition = gen_Tau2(n, Tau2Method::Definition);
                detail::cross_check("Tau2", definition, gen_Tau2(n, Tau2Method::PsiRecursion),
                                    disagreement);
                if (!method_given || method == "closed" || method == "definition")
                    result = std::move(definition);
                else if (method == "psi") result = gen_Tau2(n, Tau2Method::PsiRecursion);
                else throw std::invalid_argument("Tau2 methods: definition, psi");
            } else {
                throw std::invalid_argument("unknown set '" + set_name +
                                            "' (expected P, T2, F2 or Tau2)");
            }
            if (disagreement) {
                err << disagreement->description << "\n";
                return 4;
            }
            if (format == "json") {
                out << detail::wrap("words",
                                    {{"method", method_given ? method : "default"},
                                     {"n", n},
                                     {"set", set_name}},
                                    {{"words", result}})
                           .dump()
                    << "\n";
            } else {
                out << detail::join(result) << "\n";
            }
            return 0;
        }

        if (bijection->parsed()) {
            if (!map_word.empty() + !inverse_word.empty() + table != 1)
                throw std::invalid_argument("pick exactly one of --map, --inverse, --table");
            if (!map_word.empty()) {
                if (static_cast<int>(map_word.size()) != n + 1)
                    throw WordDomainError("--map expects a word of length n+1 = " +
                                          std::to_string(n + 1));
                Word image = varphi(map_word);
                if (format == "json")
                    out << detail::wrap("bijection", {{"map", map_word}, {"n", n}},
                                        {{"image", image}})
                               .dump()
                        << "\n";
                else
                    out << image << "\n";
            } else if (!inverse_word.empty()) {
                if (static_cast<int>(inverse_word.size()) != n + 2)
                    throw WordDomainError("--inverse expects a word of length n+2 = " +
                                          std::to_string(n + 2));
                Word pre = varphi_inv(inverse_word);
                if (format == "json")
                    out << detail::wrap("bijection", {{"inverse", inverse_word}, {"n", n}},
                                        {{"preimage", pre}})
                               .dump()
                        << "\n";
                else
                    out << pre << "\n";
            } else {
                BijectionTable t = bijection_table(n);
                if (format == "json") {
                    static const char* keys[8] = {"p01_hat", "p00", "f01", "t00",
                                                  "p10_hat", "p11", "f10", "t11"};
                    json cols = json::object();
                    for (int c = 0; c < 8; ++c) cols[keys[c]] = t.cols[static_cast<std::size_t>(c)];
                    out << detail::wrap("bijection", {{"n", n}, {"table", true}},
                                        {{"columns", cols}})
                               .dump()
                        << "\n";
                } else {
                    for (std::size_t row = 0; row < t.rows(); ++row) {
                        std::string line;
                        for (int c = 0; c < 8; ++c) {
                            if (c) line += ',';
                            const auto& col = t.cols[static_cast<std::size_t>(c)];
                            if (row < col.size()) line += col[row];
                        }
                        out << line << "\n";
                    }
                }
            }
            return 0;
        }

        if (rosette->parsed()) {
            Rosette ros = Rosette::regular(n, radius);
            auto probe_map = ros.region_probe_map();
            std::vector<std::string> code_list;
            for (const auto& [code, p] : probe_map) code_list.push_back(code);
            if (!svg_path.empty()) {
                std::ofstream f(svg_path, std::ios::binary);
                if (!f) throw std::invalid_argument("cannot write SVG to '" + svg_path + "'");
                f << ros.render_svg(codes ? &probe_map : nullptr);
            }
            if (format == "json") {
                json result{{"regions", code_list.size()}};
                if (codes) result["codes"] = code_list;
                if (!svg_path.empty()) result["svg"] = svg_path;
                out << detail::wrap("rosette", {{"n", n}, {"radius", radius}}, result).dump()
                    << "\n";
            } else {
                out << "regions: " << code_list.size() << "\n";
                if (codes)
                    for (const auto& code : code_list) out << code << "\n";
            }
            return 0;
        }

        if (verify->parsed()) {
            auto results = run_verification(max_n, geometry, census_cap());
            bool all = true;
            std::string first_failure;
            for (const auto& r : results) {
                out << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
                if (!r.pass) out << "  [" << r.detail << "]";
                out << "\n";
                if (!r.pass && all) {
                    all = false;
                    first_failure = r.detail;
                }
            }
            if (!all) {
                err << "first counterexample: " << first_failure << "\n";
                return 1;
            }
            return 0;
        }
        return 2;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const CensusCapExceeded& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const WordDomainError& e) {
        err << e.what() << "\n";
        return 5;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    }
}

}  // namespace shadowstates::cli
