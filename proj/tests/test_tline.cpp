#include <doctest.h>

#include <cmath>

#include "qpkg/constants.hpp"
#include "qpkg/tline.hpp"

using namespace qpkg;

TEST_CASE("elliptic integral limits and a tabulated value") {
    CHECK(elliptic_k(0.0) == doctest::Approx(constants::pi / 2.0));
    // K(1/sqrt(2)) = 1.8540746773...
    CHECK(elliptic_k(1.0 / std::sqrt(2.0)) == doctest::Approx(1.8540746773).epsilon(1e-9));
    CHECK_THROWS(elliptic_k(1.0));
}

TEST_CASE("cpw geometry 10/6 um on silicon gives ~51 ohm") {
    const CpwGeometry g{10e-6, 6e-6, 11.45};
    const CpwParameters p = cpw_parameters(g);
    CHECK(p.eeff == doctest::Approx((11.45 + 1.0) / 2.0));
    CHECK(p.z0 == doctest::Approx(51.0).epsilon(0.02));
}

TEST_CASE("wider center conductor lowers the impedance") {
    double prev = 1e9;
    for (double w : {4e-6, 8e-6, 16e-6, 32e-6}) {
        const double z = cpw_parameters({w, 6e-6, 11.45}).z0;
        CHECK(z < prev);
        prev = z;
    }
}

TEST_CASE("lossless cascade is unitary and matches the serial reference") {
    std::vector<NetworkElement> chain{Line{50.0, 6.25, 3e-3, 0.0}, SeriesInductor{40e-12},
                                      ShuntCapacitor{20e-15}, Line{65.0, 6.25, 1e-3, 0.0}};
    std::vector<double> freqs;
    for (int i = 0; i < 101; ++i) freqs.push_back(1e9 + 9e9 * i / 100.0);
    const auto par = cascade(chain, freqs, 50.0);
    const auto ser = cascade_serial(chain, freqs, 50.0);
    REQUIRE(par.size() == freqs.size());
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                CHECK(par.at(i, r, c) == ser.at(i, r, c));  // bitwise identical
        const double p = std::norm(par.at(i, 0, 0)) + std::norm(par.at(i, 1, 0));
        CHECK(p == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("matched line cascade is reflectionless") {
    std::vector<NetworkElement> chain{Line{50.0, 4.0, 5e-3, 0.0}};
    const auto s = cascade(chain, {2e9, 6e9}, 50.0);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(std::abs(s.at(i, 0, 0)) < 1e-12);
        CHECK(std::abs(s.at(i, 1, 0)) == doctest::Approx(1.0));
    }
}

TEST_CASE("line loss scales with length") {
    const double db_per_m = 20.0;
    std::vector<NetworkElement> chain{Line{50.0, 4.0, 0.1, db_per_m}};
    const auto s = cascade(chain, {5e9}, 50.0);
    const double s21_db = 20.0 * std::log10(std::abs(s.at(0, 1, 0)));
    CHECK(s21_db == doctest::Approx(-2.0).epsilon(1e-6));
}

TEST_CASE("84 pH series inductance reflects -30 dB at 6 GHz in 50 ohm") {
    const auto refl = tsv_transition_reflection(84e-12, 0.0, 50.0, {3e9, 6e9});
    CHECK(refl[1] == doctest::Approx(-30.0).epsilon(0.004));
    CHECK(refl[0] == doctest::Approx(-36.0).epsilon(0.01));
    CHECK(refl[0] < refl[1]);  // reflection grows with frequency
}

TEST_CASE("transition reflection is monotone in the series inductance") {
    double prev = -INFINITY;
    for (double l : {10e-12, 30e-12, 60e-12, 120e-12, 240e-12}) {
        const double r = tsv_transition_reflection(l, 0.0, 50.0, {6e9})[0];
        CHECK(r > prev);
        prev = r;
    }
}

TEST_CASE("perfect through hits the reporting floor") {
    CHECK(tsv_transition_reflection(0.0, 0.0, 50.0, {6e9})[0] == doctest::Approx(-200.0));
}

TEST_CASE("quarter-wave frequency and distributed parameters") {
    ResonatorSpec r;
    r.z0 = 50.0;
    r.eeff = 6.25;
    r.length = constants::c / (4.0 * 6e9 * 2.5);
    CHECK(quarter_wave_frequency(r) == doctest::Approx(6e9));
    CHECK(r.inductance_per_m() == doctest::Approx(50.0 * 2.5 / constants::c));
    CHECK(r.capacitance_per_m() == doctest::Approx(2.5 / (50.0 * constants::c)));
}

TEST_CASE("series milliohm at the short gives Q = pi z0 / (4 r)") {
    ResonatorSpec spec;
    spec.z0 = 50.0;
    spec.eeff = 6.25;
    spec.length = constants::c / (4.0 * 6e9 * 2.5);
    const double q = q_contribution(spec, {SeriesResistance{1e-3}, 0.0});
    CHECK(q == doctest::Approx(constants::pi * 50.0 / (4.0 * 1e-3)).epsilon(1e-9));
    CHECK(q == doctest::Approx(39270.0).epsilon(0.001));
}

TEST_CASE("series loss hurts less toward the open end") {
    ResonatorSpec spec;
    spec.z0 = 50.0;
    spec.eeff = 6.25;
    spec.length = 5e-3;
    double prev = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double x = spec.length * i / 50.0;
        const double q = q_contribution(spec, {SeriesResistance{1e-3}, x});
        CHECK(q > prev);
        prev = q;
    }
    // current null at the open end (cos(pi/2) underflows rather than hitting 0)
    CHECK(q_contribution(spec, {SeriesResistance{1e-3}, spec.length}) > 1e20);
    // voltage null at the short
    CHECK(std::isinf(q_contribution(spec, {ShuntConductance{1e-9}, 0.0})));
}

TEST_CASE("dielectric loss Q is the inverse participation-weighted tangent") {
    ResonatorSpec spec;
    spec.z0 = 50.0;
    spec.eeff = 6.25;
    spec.length = 5e-3;
    CHECK(q_contribution(spec, {DielectricLoss{0.9, 2e-6}, 0.0}) ==
          doctest::Approx(1.0 / (0.9 * 2e-6)));
}

TEST_CASE("composite Q combines harmonically, infinities drop out") {
    CHECK(composite_q({2e5, 2e5}) == doctest::Approx(1e5));
    CHECK(composite_q({2e5, INFINITY}) == doctest::Approx(2e5));
    CHECK(std::isinf(composite_q({})));
}

TEST_CASE("bound_component_loss inverts the composite") {
    CHECK(bound_component_loss(1e5, 3e5) == doctest::Approx(1.5e5));
    CHECK(std::isinf(bound_component_loss(3e5, 3e5)));
    CHECK(std::isinf(bound_component_loss(4e5, 3e5)));
}
