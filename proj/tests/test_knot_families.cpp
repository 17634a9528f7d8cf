#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shadowstates/genpoly.hpp"
#include "shadowstates/knot_families.hpp"

using namespace shadowstates;

TEST_CASE("crossing counts") {
    CHECK(crossing_count({Family::TwistLoop, 7}) == 7);
    CHECK(crossing_count({Family::Foil, 7}) == 7);
    CHECK(crossing_count({Family::TwistKnot, 7}) == 9);
    CHECK(crossing_count({Family::FigureEight, 0}) == 4);
    CHECK(build({Family::TwistKnot, 3}).crossing_count() == 5);
    CHECK_THROWS_AS(build({Family::TwistLoop, -1}), std::invalid_argument);
}

TEST_CASE("degenerate families") {
    auto t0 = build({Family::TwistLoop, 0});
    CHECK(t0.state_census() == std::map<int, std::vector<std::string>>{{1, {""}}});
    auto f0 = build({Family::Foil, 0});
    CHECK(f0.state_census() == std::map<int, std::vector<std::string>>{{2, {""}}});
    auto tau0 = build({Family::TwistKnot, 0});
    auto census = tau0.state_census();
    CHECK(census[1].size() == 1);
    CHECK(census[2] == std::vector<std::string>{"01", "10"});
    CHECK(census[3].size() == 1);
}

TEST_CASE("calibration: the A-split of the 1-twist loop splits") {
    CHECK(build({Family::TwistLoop, 1}).resolve("0") == 2);
}

TEST_CASE("calibration: link part of the 0-twist knot") {
    auto census = build({Family::TwistKnot, 0}).state_census();
    CHECK(census[2] == std::vector<std::string>{"01", "10"});
    // 00 keeps one loop (the twist-loop branch), 11 gives the extra unknot
    CHECK(census[1] == std::vector<std::string>{"00"});
    CHECK(census[3] == std::vector<std::string>{"11"});
}

TEST_CASE("figure-eight") {
    auto d = figure_eight();
    auto census = d.state_census();
    CHECK(census[1].size() == 5);
    CHECK(census[2].size() == 8);
    CHECK(census[3].size() == 3);
    std::size_t total = 0;
    for (auto& [k, words] : census) total += words.size();
    CHECK(total == 16);
    for (std::uint64_t v = 0; v < 16; ++v) {
        std::string w(4, '0'), flipped(4, '0');
        for (int i = 0; i < 4; ++i) {
            w[std::size_t(i)] = (v >> (3 - i)) & 1 ? '1' : '0';
            flipped[std::size_t(i)] = w[std::size_t(i)] == '0' ? '1' : '0';
        }
        int k = d.resolve(flipped);
        CHECK(k >= 1);
        CHECK(k <= 3);
    }
}

TEST_CASE("family polynomials match the closed forms") {
    for (int n = 0; n <= 12; ++n) {
        CHECK(poly_bruteforce(build({Family::TwistLoop, n})) == twist_loop_poly(n));
        CHECK(poly_bruteforce(build({Family::Foil, n})) == foil_poly(n));
        CHECK(poly_bruteforce(build({Family::TwistKnot, n})) == twist_knot_poly(n));
    }
}

TEST_CASE("sphere-move equalities") {
    CHECK(poly_bruteforce(build({Family::TwistLoop, 1})) == poly_bruteforce(build({Family::Foil, 1})));
    CHECK(poly_bruteforce(build({Family::TwistLoop, 2})) ==
          poly_bruteforce(build({Family::TwistKnot, 0})));
    CHECK(poly_bruteforce(build({Family::Foil, 3})) ==
          poly_bruteforce(build({Family::TwistKnot, 1})));
}

TEST_CASE("family name parsing") {
    CHECK(family_from_name("twist-loop") == Family::TwistLoop);
    CHECK(family_from_name("figure-eight") == Family::FigureEight);
    CHECK(family_name(Family::Foil) == "foil");
    CHECK_THROWS_AS(family_from_name("trefoil"), std::invalid_argument);
}
