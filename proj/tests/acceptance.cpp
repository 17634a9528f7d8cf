// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values are pinned here, independent of the library paths
// they check wherever a second route exists.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "shadowstates/bijection.hpp"
#include "shadowstates/cli.hpp"
#include "shadowstates/genpoly.hpp"
#include "shadowstates/rosette.hpp"
#include "shadowstates/words.hpp"

using namespace shadowstates;

namespace {

struct Criterion {
    std::string label;
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& msg) {
        if (!ok && pass) {
            pass = false;
            detail = msg;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- criterion 2 expectations: the printed coefficient tables ----
// Table of t_{n,k}, 0 <= n <= 6.
const std::vector<std::vector<std::uint64_t>> kTwistLoopTable = {
    {0, 1},
    {0, 1, 1},
    {0, 1, 2, 1},
    {0, 1, 3, 3, 1},
    {0, 1, 4, 6, 4, 1},
    {0, 1, 5, 10, 10, 5, 1},
    {0, 1, 6, 15, 20, 15, 6, 1},
};

// Table of f_{n,k}, 0 <= n <= 12. The n=12, k=8 cell is C(12,8) = 495,
// confirmed by the census of the 12-foil.
const std::vector<std::vector<std::uint64_t>> kFoilTable = {
    {0, 0, 1},
    {0, 1, 1},
    {0, 2, 2},
    {0, 3, 4, 1},
    {0, 4, 7, 4, 1},
    {0, 5, 11, 10, 5, 1},
    {0, 6, 16, 20, 15, 6, 1},
    {0, 7, 22, 35, 35, 21, 7, 1},
    {0, 8, 29, 56, 70, 56, 28, 8, 1},
    {0, 9, 37, 84, 126, 126, 84, 36, 9, 1},
    {0, 10, 46, 120, 210, 252, 210, 120, 45, 10, 1},
    {0, 11, 56, 165, 330, 462, 462, 330, 165, 55, 11, 1},
    {0, 12, 67, 220, 495, 792, 924, 792, 495, 220, 66, 12, 1},
};

// Table of tau_{n,k}, 0 <= n <= 11.
const std::vector<std::vector<std::uint64_t>> kTwistKnotTable = {
    {0, 1, 2, 1},
    {0, 3, 4, 1},
    {0, 5, 8, 3},
    {0, 7, 14, 9, 2},
    {0, 9, 22, 21, 10, 2},
    {0, 11, 32, 41, 30, 12, 2},
    {0, 13, 44, 71, 70, 42, 14, 2},
    {0, 15, 58, 113, 140, 112, 56, 16, 2},
    {0, 17, 74, 169, 252, 252, 168, 72, 18, 2},
    {0, 19, 92, 241, 420, 504, 420, 240, 90, 20, 2},
    {0, 21, 112, 331, 660, 924, 924, 660, 330, 110, 22, 2},
    {0, 23, 134, 441, 990, 1584, 1848, 1584, 990, 440, 132, 24, 2},
};

// ---- criterion 7 expectation: the pairing table for n = 0..5, byte-exact.
// Column order: P-hat01, P00, 01F, 00T, P-hat10, P11, 10F, 11T.
const char* kPairingTable[6] = {
    "0,,01,,1,,10,\n",

    "00,01,011,000,11,10,101,110\n",

    "000,011,0111,0001,111,100,1011,1101\n"
    "010,001,0100,0010,101,110,1000,1110\n",

    "0000,0111,01111,00011,1111,1000,10111,11011\n"
    "0100,0011,01100,00101,1011,1100,10100,11101\n"
    "0110,0001,01001,00110,1001,1110,10001,11110\n"
    "0010,,01010,,1101,,10010,\n",

    "00000,01111,011111,000111,11111,10000,101111,110111\n"
    "01000,00111,011100,001011,10111,11000,101100,111011\n"
    "01100,00011,011001,001101,10011,11100,101001,111101\n"
    "00100,00001,011010,001110,11011,11110,101010,111110\n"
    "01110,,010011,,10001,,100011,\n"
    "00110,,010101,,11001,,100101,\n"
    "00010,,010110,,11101,,100110,\n",

    "000000,011111,0111111,0001111,111111,100000,1011111,1101111\n"
    "010000,001111,0111100,0010111,101111,110000,1011100,1110111\n"
    "011000,000111,0111001,0011011,100111,111000,1011001,1111011\n"
    "001000,000011,0111010,0011101,110111,111100,1011010,1111101\n"
    "011100,000001,0110011,0011110,100011,111110,1010011,1111110\n"
    "001100,,0110101,,110011,,1010101,\n"
    "000100,,0110110,,111011,,1010110,\n"
    "011110,,0100111,,100001,,1000111,\n"
    "001110,,0101011,,110001,,1001011,\n"
    "000110,,0101101,,111001,,1001101,\n"
    "000010,,0101110,,111101,,1001110,\n",
};

std::string run_cli(const std::vector<std::string>& args, int* exit_code = nullptr) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    if (exit_code) *exit_code = code;
    return out.str();
}

void criterion_1(Criterion& c) {
    auto t0 = std::chrono::steady_clock::now();
    for (int n = 0; n <= 12; ++n) {
        c.require(poly_bruteforce(build({Family::TwistLoop, n})) ==
                          twist_loop_poly(n, PolyMethod::Closed) &&
                      twist_loop_poly(n, PolyMethod::Closed) ==
                          twist_loop_poly(n, PolyMethod::Recurrence),
                  "twist loop n=" + std::to_string(n));
        c.require(poly_bruteforce(build({Family::Foil, n})) == foil_poly(n, PolyMethod::Closed) &&
                      foil_poly(n, PolyMethod::Closed) == foil_poly(n, PolyMethod::Recurrence),
                  "foil n=" + std::to_string(n));
        c.require(poly_bruteforce(build({Family::TwistKnot, n})) ==
                          twist_knot_poly(n, PolyMethod::Closed) &&
                      twist_knot_poly(n, PolyMethod::Closed) ==
                          twist_knot_poly(n, PolyMethod::ViaParts),
                  "twist knot n=" + std::to_string(n));
    }
    double elapsed = seconds_since(t0);
    c.require(elapsed < 30.0, "took " + std::to_string(elapsed) + "s, budget 30s");
}

void criterion_2(Criterion& c) {
    auto check_table = [&c](Family family, const std::vector<std::vector<std::uint64_t>>& expect,
                            const char* name) {
        auto table = coefficient_table(family, static_cast<int>(expect.size()) - 1);
        for (std::size_t n = 0; n < expect.size(); ++n) {
            for (std::size_t k = 0; k < table[n].size(); ++k) {
                BigUint want = k < expect[n].size() ? BigUint(expect[n][k]) : BigUint();
                c.require(table[n][k] == want, std::string(name) + " cell n=" + std::to_string(n) +
                                                   " k=" + std::to_string(k));
            }
        }
    };
    check_table(Family::TwistLoop, kTwistLoopTable, "twist loop table");
    check_table(Family::Foil, kFoilTable, "foil table");
    check_table(Family::TwistKnot, kTwistKnotTable, "twist knot table");
}

void criterion_3(Criterion& c) {
    for (int n = 0; n <= 30; ++n) {
        GenPolynomial t = twist_loop_poly(n);
        for (int k = 1; k <= n + 1; ++k)
            c.require(t.coeff(k) == binomial(n, k - 1),
                      "t(" + std::to_string(n) + "," + std::to_string(k) + ")");
        GenPolynomial f = foil_poly(n);
        c.require(f.coeff(1) == BigUint(std::uint64_t(n)), "f(n,1) n=" + std::to_string(n));
        if (n >= 1)
            c.require(f.coeff(2) == binomial(n, 2) + BigUint(1), "f(n,2) n=" + std::to_string(n));
        for (int k = 3; k <= n; ++k)
            c.require(f.coeff(k) == binomial(n, k),
                      "f(" + std::to_string(n) + "," + std::to_string(k) + ")");
        GenPolynomial tau = twist_knot_poly(n);
        c.require(tau.coeff(1) == BigUint(2 * std::uint64_t(n) + 1), "tau(n,1) n=" + std::to_string(n));
        c.require(tau.coeff(2) == BigUint(std::uint64_t(n) * unsigned(n) + unsigned(n) + 2),
                  "tau(n,2) n=" + std::to_string(n));
        if (n >= 1) {
            std::uint64_t nn = std::uint64_t(n);
            c.require(BigUint(3) * tau.coeff(3) == BigUint(nn * nn * nn - nn + 3),
                      "tau(n,3) n=" + std::to_string(n));
        }
        for (int k = 4; k <= n + 1; ++k)
            c.require(tau.coeff(k) == BigUint(2) * binomial(n + 1, k),
                      "tau(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
}

void criterion_4(Criterion& c) {
    c.require(poly_bruteforce(build({Family::TwistLoop, 1})) ==
                      poly_bruteforce(build({Family::Foil, 1})) &&
                  poly_bruteforce(build({Family::TwistLoop, 1})) ==
                      GenPolynomial::from_u64({0, 1, 1}),
              "T_1 = F_1 = x^2 + x");
    c.require(poly_bruteforce(build({Family::TwistLoop, 2})) ==
                      poly_bruteforce(build({Family::TwistKnot, 0})) &&
                  poly_bruteforce(build({Family::TwistLoop, 2})) ==
                      GenPolynomial::from_u64({0, 1, 2, 1}),
              "T_2 = tau_0 = x^3 + 2x^2 + x");
    c.require(poly_bruteforce(build({Family::Foil, 3})) ==
                      poly_bruteforce(build({Family::TwistKnot, 1})) &&
                  poly_bruteforce(build({Family::Foil, 3})) == GenPolynomial::from_u64({0, 3, 4, 1}),
              "F_3 = tau_1 = x^3 + 4x^2 + 3x");
}

void criterion_5(Criterion& c) {
    auto two_states = [](Family fam, int n) {
        auto census = build({fam, n}).state_census();
        return census.count(2) ? census[2] : std::vector<std::string>{};
    };
    for (int n = 0; n <= 12; ++n) {
        c.require(gen_T2(n) == two_states(Family::TwistLoop, n), "T2 census n=" + std::to_string(n));
        c.require(gen_F2(n) == two_states(Family::Foil, n), "F2 census n=" + std::to_string(n));
        c.require(gen_Tau2(n) == two_states(Family::TwistKnot, n),
                  "Tau2 census n=" + std::to_string(n));
    }
    for (int n = 0; n <= 200; ++n) {
        auto def = gen_Tau2(n, Tau2Method::Definition);
        c.require(def == gen_Tau2(n, Tau2Method::PsiRecursion),
                  "Tau2 routes n=" + std::to_string(n));
        c.require(def.size() == std::size_t(n) * unsigned(n) + unsigned(n) + 2,
                  "|Tau2| n=" + std::to_string(n));
    }
}

void criterion_6(Criterion& c) {
    for (int n = 1; n <= 20; ++n) {
        auto closed = gen_P(n, PMethod::Closed);
        c.require(closed == gen_P(n, PMethod::Recursive), "P recursive n=" + std::to_string(n));
        c.require(closed == gen_P(n, PMethod::Filter), "P filter n=" + std::to_string(n));
    }
    for (int n = 1; n <= 500; ++n) {
        auto closed = gen_P(n, PMethod::Closed);
        c.require(closed == gen_P(n, PMethod::Recursive), "P routes n=" + std::to_string(n));
        c.require(closed.size() == std::size_t(n) * unsigned(n) - unsigned(n) + 2,
                  "|P| n=" + std::to_string(n));
    }
}

void criterion_7(Criterion& c) {
    for (int n = 0; n <= 200; ++n) {
        auto rep = verify_bijection(n);
        c.require(rep.is_bijection,
                  "bijection n=" + std::to_string(n) +
                      (rep.counterexamples.empty() ? "" : ": " + rep.counterexamples.front()));
    }
    for (int n = 0; n <= 5; ++n) {
        int code = 0;
        std::string table = run_cli({"bijection", std::to_string(n), "--table"}, &code);
        c.require(code == 0 && table == kPairingTable[n], "pairing table block n=" + std::to_string(n));
    }
    c.require(varphi("0011") == "00101", "framed pair 0011");
    c.require(varphi("101") == "1000", "framed pair 101");
    c.require(varphi("11100") == "111101", "framed pair 11100");
    c.require(varphi("011110") == "0100111", "framed pair 011110");
    c.require(varphi("0001111111") == "00110111111", "worked example 1");
    c.require(varphi_inv("1110111111") == "110000000", "worked example 2");
    c.require(varphi("111100011111") == "1011110111011", "worked example 3");
    c.require(varphi_inv("011111110111011111") == "00001111110000000", "worked example 4");
}

void criterion_8(Criterion& c) {
    auto t0 = std::chrono::steady_clock::now();
    for (double r : {1.1, 1.5, 3.0}) {
        for (int n = 1; n <= 12; ++n) {
            Rosette ros = Rosette::regular(n, r);
            const std::string at = " n=" + std::to_string(n) + " r=" + std::to_string(r);
            auto codes = ros.region_codes();
            c.require((long long)codes.size() == (long long)n * n - n + 2, "region count" + at);
            c.require(codes == gen_P(n), "codes vs bitonic words" + at);
            if (n >= 2) {
                c.require(ros.euler_region_count() == (long long)codes.size(), "Euler count" + at);
                for (int i = 1; i <= n; ++i)
                    c.require((int)ros.lune_codes(i).size() == n - 1, "lune regions" + at);
            }
            c.require(ros.vertices_clear_of_third_circles(1e-9), "vertex clearance" + at);
        }
    }
    double elapsed = seconds_since(t0);
    c.require(elapsed < 5.0, "took " + std::to_string(elapsed) + "s, budget 5s");
}

void criterion_9(Criterion& c) {
    std::vector<FamilySpec> specs;
    for (int n = 1; n <= 8; ++n) specs.push_back({Family::TwistLoop, n});
    for (int n = 1; n <= 8; ++n) specs.push_back({Family::Foil, n});
    for (int n = 0; n <= 6; ++n) specs.push_back({Family::TwistKnot, n});
    specs.push_back({Family::FigureEight, 0});
    for (const auto& spec : specs) {
        auto d = build(spec);
        const int bits = d.crossing_count();
        for (std::uint64_t v = 0; v < (std::uint64_t(1) << bits); ++v) {
            std::string w(std::size_t(bits), '0');
            for (int i = 0; i < bits; ++i)
                w[std::size_t(i)] = (v >> (bits - 1 - i)) & 1 ? '1' : '0';
            int base = d.resolve(w);
            for (int i = 0; i < bits; ++i) {
                std::string flipped = w;
                flipped[std::size_t(i)] = flipped[std::size_t(i)] == '0' ? '1' : '0';
                int delta = d.resolve(flipped) - base;
                if (delta != 1 && delta != -1) {
                    c.require(false, family_name(spec.family) + " n=" +
                                         std::to_string(spec.half_twists) + " word " + w +
                                         " flip " + std::to_string(i));
                    return;
                }
            }
        }
    }
}

void criterion_10(Criterion& c) {
    const std::vector<std::pair<std::vector<std::string>, std::string>> golden = {
        {{"poly", "twist-knot", "2", "--format", "csv"}, "0,5,8,3\n"},
        {{"poly", "twist-loop", "0"}, "0,1\n"},
        {{"poly", "foil", "5"}, "0,5,11,10,5,1\n"},
        {{"states", "twist-knot", "1", "--components", "2"}, "000,011,101,110\n"},
        {{"states", "twist-loop", "2", "--components", "2"}, "01,10\n"},
        {{"words", "F2", "2"}, "00,11\n"},
        {{"words", "Tau2", "2"}, "0001,0010,0100,0111,1000,1011,1101,1110\n"},
        {{"bijection", "3", "--map", "0011"}, "00101\n"},
        {{"bijection", "8", "--inverse", "1110111111"}, "110000000\n"},
        {{"rosette", "6", "--radius", "1.5"}, "regions: 32\n"},
        {{"rosette", "1"}, "regions: 2\n"},
    };
    for (const auto& [cmd, want] : golden) {
        int code1 = 0, code2 = 0;
        std::string first = run_cli(cmd, &code1);
        std::string second = run_cli(cmd, &code2);
        c.require(code1 == 0 && code2 == 0, "exit code for " + cmd.front());
        c.require(first == want, "golden output for " + cmd.front() + " " + cmd[1]);
        c.require(first == second, "stability of " + cmd.front() + " " + cmd[1]);
    }
    const std::vector<std::vector<std::string>> stable_only = {
        {"poly", "twist-knot", "12", "--format", "json"},
        {"states", "figure-eight"},
        {"words", "P", "9", "--format", "json"},
        {"bijection", "5", "--table"},
        {"rosette", "7", "--codes", "--format", "json"},
        {"verify", "--max-n", "3"},
    };
    for (const auto& cmd : stable_only) {
        int code1 = 0, code2 = 0;
        std::string first = run_cli(cmd, &code1);
        std::string second = run_cli(cmd, &code2);
        c.require(code1 == code2 && first == second, "stability of " + cmd.front());
    }
    Rosette ros = Rosette::regular(5, 1.5);
    c.require(ros.render_svg() == Rosette::regular(5, 1.5).render_svg(), "SVG stability");
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, void (*)(Criterion&)>> criteria = {
        {"1. polynomial triple equality (census = closed = recurrence, n <= 12)", criterion_1},
        {"2. coefficient tables reproduced cell-exactly (t: n<=6, f: n<=12, tau: n<=11)", criterion_2},
        {"3. coefficient column identities for n <= 30", criterion_3},
        {"4. sphere-move polynomial equalities (T1=F1, T2=tau0, F3=tau1)", criterion_4},
        {"5. 2-state word sets: census oracle n <= 12; Tau2 routes and size n <= 200", criterion_5},
        {"6. bitonic region codes: three routes n <= 20, two routes n <= 500, size formula", criterion_6},
        {"7. bijection verified n <= 200; pairing table byte-exact n <= 5; worked examples", criterion_7},
        {"8. rosette geometry grid n <= 12, r in {1.1, 1.5, 3.0}", criterion_8},
        {"9. single-bit flips change the component count by exactly one (<= 8 crossings)", criterion_9},
        {"10. CLI outputs byte-stable and matching the golden lines", criterion_10},
    };
    bool all = true;
    for (auto& [label, fn] : criteria) {
        Criterion crit{label, true, ""};
        fn(crit);
        std::cout << (crit.pass ? "PASS  " : "FAIL  ") << label;
        if (!crit.pass) std::cout << "  [" << crit.detail << "]";
        std::cout << "\n";
        all = all && crit.pass;
    }
    return all ? 0 : 1;
}
