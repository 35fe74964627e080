#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qpkg/constants.hpp"
#include "qpkg/spurious.hpp"

using namespace qpkg;

namespace {

double mode_frequency(const CavitySpec& c, int m, int n, int p) {
    const double term = std::pow(m / c.a, 2) + std::pow(n / c.b, 2) + std::pow(p / c.d, 2);
    return constants::c / (2.0 * std::sqrt(c.er)) * std::sqrt(term);
}

// independent enumeration up to index 5 in every direction
double brute_force_lowest(const CavitySpec& c) {
    double best = INFINITY;
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n)
            for (int p = 0; p <= 5; ++p) {
                const bool tm_ok = m >= 1 && n >= 1;
                const bool te_ok = p >= 1 && (m >= 1 || n >= 1);
                if (!tm_ok && !te_ok) continue;
                best = std::min(best, mode_frequency(c, m, n, p));
            }
    return best;
}

}  // namespace

TEST_CASE("TM110 of a thin 10x10 mm air cavity sits near 21.2 GHz") {
    const CavitySpec c{10e-3, 10e-3, 0.5e-3, 1.0};
    const CavityMode lowest = lowest_mode(c);
    CHECK(lowest.label() == "TM110");
    CHECK(lowest.frequency == doctest::Approx(21.2e9).epsilon(0.002));
    CHECK(lowest.frequency == doctest::Approx(brute_force_lowest(c)));
}

TEST_CASE("dielectric fill scales every mode by 1/sqrt(er)") {
    const CavitySpec air{10e-3, 10e-3, 0.5e-3, 1.0};
    const CavitySpec si{10e-3, 10e-3, 0.5e-3, 11.5};
    CHECK(lowest_mode(si).frequency ==
          doctest::Approx(lowest_mode(air).frequency / std::sqrt(11.5)));
}

TEST_CASE("lowest mode agrees with brute-force enumeration over varied shapes") {
    const double dims[] = {0.3e-3, 1e-3, 4e-3, 9e-3, 25e-3};
    for (double a : dims)
        for (double b : dims)
            for (double d : dims) {
                const CavitySpec c{a, b, d, 1.0};
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(d);
                CHECK(lowest_mode(c).frequency == doctest::Approx(brute_force_lowest(c)));
            }
}

TEST_CASE("mode list is sorted and mode frequencies match the closed form") {
    const CavitySpec c{12e-3, 8e-3, 2e-3, 1.0};
    const auto modes = cavity_mode_frequencies(c, 3);
    REQUIRE(!modes.empty());
    for (std::size_t i = 1; i < modes.size(); ++i)
        CHECK(modes[i].frequency >= modes[i - 1].frequency);
    for (const auto& m : modes)
        CHECK(m.frequency == doctest::Approx(mode_frequency(c, m.m, m.n, m.p)));
}

TEST_CASE("cavity validation rejects non-positive dimensions") {
    CHECK_THROWS(CavitySpec{0.0, 1e-3, 1e-3, 1.0}.validate());
    CHECK_THROWS(CavitySpec{1e-3, 1e-3, 1e-3, 0.0}.validate());
    CHECK_THROWS(cavity_mode_frequencies(CavitySpec{1e-3, 1e-3, 1e-3, 1.0}, 0));
}

TEST_CASE("parallel-plate capacitance of 25 mm^2 over 100 um is 2.21 pF") {
    const double c = parallel_plate_capacitance(25e-6, 100e-6, 1.0);
    CHECK(c == doctest::Approx(2.21e-12).epsilon(0.01));
    CHECK(c == doctest::Approx(constants::eps0 * 25e-6 / 100e-6));
}

TEST_CASE("wirebond grounding follows the 1 nH/mm rule") {
    CHECK(ground_inductance(Wirebond{1e-3, 1}) == doctest::Approx(1e-9));
    CHECK(ground_inductance(Wirebond{1e-3, 4}) == doctest::Approx(0.25e-9));
    CHECK(ground_inductance(Wirebond{1e-3, 1}, 2.0) == doctest::Approx(2e-9));
    CHECK(ground_inductance(Tsv{10e-12, 4}) == doctest::Approx(2.5e-12));
    CHECK(ground_inductance(Bump{30e-12, 3}) == doctest::Approx(10e-12));
}

TEST_CASE("single 1 mm wirebond over 2.21 pF resonates near 3.39 GHz") {
    const double cap = parallel_plate_capacitance(25e-6, 100e-6, 1.0);
    const double f = lc_resonance(ground_inductance(Wirebond{1e-3, 1}), cap);
    CHECK(f == doctest::Approx(3.39e9).epsilon(0.01));
}

TEST_CASE("four 10 pH vias push the resonance near 67.8 GHz") {
    const double cap = parallel_plate_capacitance(25e-6, 100e-6, 1.0);
    const double f = lc_resonance(ground_inductance(Tsv{10e-12, 4}), cap);
    CHECK(f == doctest::Approx(67.8e9).epsilon(0.01));
}

TEST_CASE("lc_resonance rejects non-positive arguments") {
    CHECK_THROWS_AS(lc_resonance(0.0, 1e-12), std::domain_error);
    CHECK_THROWS_AS(lc_resonance(1e-9, -1e-12), std::domain_error);
}

TEST_CASE("compare_mitigations evaluates alternatives over the same capacitance") {
    GroundingSpec g;
    g.overlap_area = 25e-6;
    g.gap = 100e-6;
    g.gap_er = 1.0;
    g.strategy = Wirebond{1e-3, 1};
    const auto table = compare_mitigations(g, {Wirebond{1e-3, 1}, Tsv{10e-12, 4}});
    REQUIRE(table.size() == 2);
    CHECK(table[0].second == doctest::Approx(3.39e9).epsilon(0.01));
    CHECK(table[1].second == doctest::Approx(67.8e9).epsilon(0.01));
    CHECK(table[1].second > table[0].second);
}
