#pragma once

#include <functional>
#include <string>
#include <vector>

#include "shadowstates/bijection.hpp"
#include "shadowstates/genpoly.hpp"
#include "shadowstates/rosette.hpp"
#include "shadowstates/words.hpp"

namespace shadowstates {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;  // first counterexample on failure
};

namespace detail {

class Checker {
public:
    explicit Checker(std::string name) : result_{std::move(name), true, ""} {}

    void require(bool ok, const std::string& counterexample) {
        if (!ok && result_.pass) {
            result_.pass = false;
            result_.detail = counterexample;
        }
    }

    CheckResult take() && { return std::move(result_); }

private:
    CheckResult result_;
};

}  // namespace detail

/**
 * The cross-check suite behind `verify`: polynomial routes against each other
 * and the brute-force census, word-set formulas against the census, the
 * bijection, and optionally the rosette geometry. Bounded by max_n; the
 * exponential checks stay within the census cap regardless.
 */
inline std::vector<CheckResult> run_verification(int max_n, bool geometry,
                                                 int census_cap = kDefaultCensusCap) {
    std::vector<CheckResult> results;
    auto run = [&results](const std::string& name, auto&& body) {
        detail::Checker c(name);
        body(c);
        results.push_back(std::move(c).take());
    };
    const int brute_n = std::min(max_n, census_cap - 2);

    run("polynomial routes agree (closed vs recurrence vs brute force)", [&](auto& c) {
        for (int n = 0; n <= max_n; ++n) {
            c.require(twist_loop_poly(n, PolyMethod::Closed) ==
                          twist_loop_poly(n, PolyMethod::Recurrence),
                      "twist loop routes differ at n=" + std::to_string(n));
            c.require(foil_poly(n, PolyMethod::Closed) == foil_poly(n, PolyMethod::Recurrence),
                      "foil routes differ at n=" + std::to_string(n));
            c.require(twist_knot_poly(n, PolyMethod::Closed) ==
                          twist_knot_poly(n, PolyMethod::ViaParts),
                      "twist knot routes differ at n=" + std::to_string(n));
        }
        for (int n = 0; n <= std::min(brute_n, 12); ++n) {
            c.require(poly_bruteforce(build({Family::TwistLoop, n}), census_cap) ==
                          twist_loop_poly(n),
                      "twist loop census polynomial differs at n=" + std::to_string(n));
            c.require(poly_bruteforce(build({Family::Foil, n}), census_cap) == foil_poly(n),
                      "foil census polynomial differs at n=" + std::to_string(n));
            c.require(poly_bruteforce(build({Family::TwistKnot, n}), census_cap) ==
                          twist_knot_poly(n),
                      "twist knot census polynomial differs at n=" + std::to_string(n));
        }
    });

    run("total state count: poly(1) = 2^crossings", [&](auto& c) {
        for (int n = 0; n <= max_n; ++n) {
            c.require(twist_loop_poly(n).eval_one() == BigUint::two_pow(unsigned(n)),
                      "twist loop at n=" + std::to_string(n));
            c.require(foil_poly(n).eval_one() == BigUint::two_pow(unsigned(n)),
                      "foil at n=" + std::to_string(n));
            c.require(twist_knot_poly(n).eval_one() == BigUint::two_pow(unsigned(n + 2)),
                      "twist knot at n=" + std::to_string(n));
        }
    });

    run("coefficient column identities", [&](auto& c) {
        for (int n = 0; n <= max_n; ++n) {
            GenPolynomial t = twist_loop_poly(n);
            for (int k = 1; k <= n + 1; ++k)
                c.require(t.coeff(k) == binomial(n, k - 1),
                          "t(" + std::to_string(n) + "," + std::to_string(k) + ")");
            GenPolynomial f = foil_poly(n);
            c.require(f.coeff(1) == BigUint(std::uint64_t(n)), "f(n,1) at n=" + std::to_string(n));
            if (n >= 1)
                c.require(f.coeff(2) == binomial(n, 2) + BigUint(1),
                          "f(n,2) at n=" + std::to_string(n));
            for (int k = 3; k <= n; ++k)
                c.require(f.coeff(k) == binomial(n, k),
                          "f(" + std::to_string(n) + "," + std::to_string(k) + ")");
            GenPolynomial tau = twist_knot_poly(n);
            c.require(tau.coeff(1) == BigUint(std::uint64_t(2 * n + 1)),
                      "tau(n,1) at n=" + std::to_string(n));
            c.require(tau.coeff(2) == BigUint(std::uint64_t(n) * unsigned(n) + unsigned(n) + 2),
                      "tau(n,2) at n=" + std::to_string(n));
            if (n >= 1)
                c.require(BigUint(3) * tau.coeff(3) ==
                              BigUint(std::uint64_t(n)) * BigUint(std::uint64_t(n)) *
                                      BigUint(std::uint64_t(n)) -
                                  BigUint(std::uint64_t(n)) + BigUint(3),
                          "tau(n,3) at n=" + std::to_string(n));
            for (int k = 4; k <= n + 1; ++k)
                c.require(tau.coeff(k) == BigUint(2) * binomial(n + 1, k),
                          "tau(" + std::to_string(n) + "," + std::to_string(k) + ")");
        }
    });

    run("sphere-move polynomial equalities", [&](auto& c) {
        if (max_n >= 1)
            c.require(twist_loop_poly(1) == foil_poly(1) &&
                          twist_loop_poly(1) == GenPolynomial::from_u64({0, 1, 1}),
                      "T_1 = F_1 = x^2 + x");
        if (max_n >= 2)
            c.require(twist_loop_poly(2) == twist_knot_poly(0) &&
                          twist_loop_poly(2) == GenPolynomial::from_u64({0, 1, 2, 1}),
                      "T_2 = tau_0 = x^3 + 2x^2 + x");
        if (max_n >= 3)
            c.require(foil_poly(3) == twist_knot_poly(1) &&
                          foil_poly(3) == GenPolynomial::from_u64({0, 3, 4, 1}),
                      "F_3 = tau_1 = x^3 + 4x^2 + 3x");
    });

    run("2-state word sets match the census", [&](auto& c) {
        for (int n = 0; n <= std::min(brute_n, 12); ++n) {
            auto grab = [](std::map<int, std::vector<std::string>> census, int k) {
                return census.count(k) ? census[k] : std::vector<std::string>{};
            };
            c.require(grab(build({Family::TwistLoop, n}).state_census(census_cap), 2) == gen_T2(n),
                      "T2 differs at n=" + std::to_string(n));
            c.require(grab(build({Family::Foil, n}).state_census(census_cap), 2) == gen_F2(n),
                      "F2 differs at n=" + std::to_string(n));
            c.require(grab(build({Family::TwistKnot, n}).state_census(census_cap), 2) ==
                          gen_Tau2(n),
                      "Tau2 differs at n=" + std::to_string(n));
        }
    });

    run("word-set routes agree and have the right size", [&](auto& c) {
        for (int n = 0; n <= max_n; ++n) {
            c.require(gen_F2(n, F2Method::Closed) == gen_F2(n, F2Method::Recursive),
                      "F2 routes differ at n=" + std::to_string(n));
            WordSet tau = gen_Tau2(n, Tau2Method::Definition);
            c.require(tau == gen_Tau2(n, Tau2Method::PsiRecursion),
                      "Tau2 routes differ at n=" + std::to_string(n));
            c.require(tau.size() == std::size_t(n) * unsigned(n) + unsigned(n) + 2,
                      "|Tau2| wrong at n=" + std::to_string(n));
        }
        for (int n = 1; n <= max_n; ++n) {
            WordSet p = gen_P(n, PMethod::Closed);
            c.require(p == gen_P(n, PMethod::Recursive),
                      "P routes differ at n=" + std::to_string(n));
            if (n <= 20)
                c.require(p == gen_P(n, PMethod::Filter),
                          "P filter route differs at n=" + std::to_string(n));
            c.require(p.size() == std::size_t(n) * unsigned(n) - unsigned(n) + 2,
                      "|P| wrong at n=" + std::to_string(n));
        }
    });

    run("foil 1-states equal twist loop 2-states", [&](auto& c) {
        for (int n = 1; n <= std::min(brute_n, 12); ++n)
            c.require(lemma_F1_equals_T2_check(n, census_cap), "lemma fails at n=" + std::to_string(n));
    });

    run("link-part census split (twist knot from parts)", [&](auto& c) {
        for (int n = 0; n <= std::min(brute_n, 8); ++n) {
            auto tau = build({Family::TwistKnot, n}).state_census(census_cap);
            auto loop = build({Family::TwistLoop, n}).state_census(census_cap);
            auto foil = build({Family::Foil, n}).state_census(census_cap);
            int kmax = tau.rbegin()->first;
            for (int k = 1; k <= kmax; ++k) {
                std::vector<Word> expect;
                auto add = [&expect](const char* head, std::map<int, std::vector<Word>>& m, int kk) {
                    if (!m.count(kk)) return;
                    for (const auto& w : m[kk]) expect.push_back(head + w);
                };
                add("00", loop, k);
                add("01", foil, k);
                add("10", foil, k);
                add("11", foil, k - 1);
                std::sort(expect.begin(), expect.end());
                std::vector<Word> got = tau.count(k) ? tau[k] : std::vector<Word>{};
                c.require(got == expect,
                          "split formula fails at n=" + std::to_string(n) + " k=" + std::to_string(k));
            }
        }
    });

    run("bijection onto the 2-state words", [&](auto& c) {
        for (int n = 0; n <= max_n; ++n) {
            auto rep = verify_bijection(n, census_cap);
            c.require(rep.is_bijection,
                      rep.counterexamples.empty()
                          ? "n=" + std::to_string(n)
                          : "n=" + std::to_string(n) + ": " + rep.counterexamples.front());
        }
    });

    if (geometry) {
        run("rosette regions match the bitonic codes", [&](auto& c) {
            for (double r : {1.1, 1.5, 3.0}) {
                for (int n = 1; n <= std::min(max_n, 12); ++n) {
                    Rosette ros = Rosette::regular(n, r);
                    auto codes = ros.region_codes();
                    const std::string at = " at n=" + std::to_string(n) + " r=" + std::to_string(r);
                    c.require(codes == gen_P(n), "region codes differ from P_n" + at);
                    c.require((long long)codes.size() == (long long)n * n - n + 2,
                              "region count wrong" + at);
                    if (n >= 2) {
                        c.require(ros.euler_region_count() == (long long)codes.size(),
                                  "Euler count differs" + at);
                        for (int i = 1; i <= n; ++i)
                            c.require((int)ros.lune_codes(i).size() == n - 1,
                                      "lune size wrong" + at);
                    }
                    c.require(ros.vertices_clear_of_third_circles(), "vertex near third circle" + at);
                    if (n >= 3)
                        c.require(ros.intersection_inside_rule_holds(),
                                  "intersection-inside rule fails" + at);
                }
            }
        });
    }

    return results;
}

}  // namespace shadowstates
