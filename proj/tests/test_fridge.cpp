#include <doctest.h>

#include <cmath>

#include "qpkg/constants.hpp"
#include "qpkg/fridge.hpp"

using namespace qpkg;

namespace {

FridgeSpec demo_fridge() {
    FridgeSpec f;
    f.stages = {{"50K", 50.0, 10.0},
                {"4K", 4.0, 0.5},
                {"still", 0.7, 10e-3},
                {"cp", 0.1, 200e-6},
                {"mxc", 0.01, 20e-6}};
    return f;
}

double trapezoid_load(const Material& m, double area, double length, double t_hot, double t_cold,
                      int panels) {
    double acc = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double ta = t_cold + (t_hot - t_cold) * i / panels;
        const double tb = t_cold + (t_hot - t_cold) * (i + 1) / panels;
        acc += 0.5 * (m.conductivity(ta) + m.conductivity(tb)) * (tb - ta);
    }
    return area / length * acc;
}

}  // namespace

TEST_CASE("thermal quantum of 5 GHz is 0.24 K") {
    CHECK(thermal_quantum(5e9) ==
          doctest::Approx(constants::h * 5e9 / constants::kB).epsilon(1e-15));
    CHECK(thermal_quantum(5e9) == doctest::Approx(0.2400).epsilon(0.001));
}

TEST_CASE("occupancy at the thermal quantum temperature is 1/(e-1)") {
    for (double f : {1e9, 5e9, 12e9})
        CHECK(occupancy(f, thermal_quantum(f)) ==
              doctest::Approx(1.0 / std::expm1(1.0)).epsilon(1e-12));
    CHECK(occupancy(6e9, 1e-3) < 1e-100);  // deep quantum regime underflows to ~0
    CHECK_THROWS(occupancy(-1.0, 1.0));
}

TEST_CASE("closed-form heat load matches the trapezoid oracle for all materials") {
    for (const auto& m : builtin_materials()) {
        const double load = cable_heat_load(m, 1e-7, 0.25, m.t_max, m.t_min);
        const double oracle = trapezoid_load(m, 1e-7, 0.25, m.t_max, m.t_min, 100000);
        CAPTURE(m.name);
        CHECK(load == doctest::Approx(oracle).epsilon(1e-3));
    }
}

TEST_CASE("heat load rejects spans outside the material validity range") {
    const Material& ss = find_material(builtin_materials(), "stainless_steel");
    CHECK_THROWS(cable_heat_load(ss, 1e-7, 0.25, 300.0, 4.0));
    CHECK_THROWS(cable_heat_load(ss, 1e-7, 0.25, 4.0, 0.01));
    CHECK_THROWS(find_material(builtin_materials(), "copper"));
}

TEST_CASE("attenuation chain reproduces the three-stage textbook number") {
    WiringChain chain;
    chain.attenuators = {{"4K", 20.0}, {"cp", 20.0}, {"mxc", 20.0}};
    const double n = attenuation_chain_noise(chain, demo_fridge(), 6e9, 300.0);
    CHECK(n == doctest::Approx(2.96e-3).epsilon(0.02));
}

TEST_CASE("attenuation chain limits are exact") {
    const FridgeSpec fridge = demo_fridge();
    WiringChain none;
    CHECK(attenuation_chain_noise(none, fridge, 6e9, 300.0) ==
          doctest::Approx(occupancy(6e9, 300.0)).epsilon(1e-15));
    WiringChain transparent;
    transparent.attenuators = {{"4K", 0.0}};
    CHECK(attenuation_chain_noise(transparent, fridge, 6e9, 300.0) ==
          occupancy(6e9, 300.0));  // 0 dB is the identity
    WiringChain thermalizing;
    thermalizing.attenuators = {{"mxc", INFINITY}};
    CHECK(attenuation_chain_noise(thermalizing, fridge, 6e9, 300.0) ==
          occupancy(6e9, 0.01));  // full thermalization to the coldest stage
    WiringChain dangling;
    dangling.attenuators = {{"nostage", 20.0}};
    CHECK_THROWS(attenuation_chain_noise(dangling, fridge, 6e9, 300.0));
}

TEST_CASE("attenuators apply in fridge stage order regardless of listing order") {
    const FridgeSpec fridge = demo_fridge();
    WiringChain fwd, rev;
    fwd.attenuators = {{"4K", 20.0}, {"cp", 20.0}, {"mxc", 20.0}};
    rev.attenuators = {{"mxc", 20.0}, {"cp", 20.0}, {"4K", 20.0}};
    CHECK(attenuation_chain_noise(fwd, fridge, 6e9, 300.0) ==
          attenuation_chain_noise(rev, fridge, 6e9, 300.0));
}

TEST_CASE("Friis cascade weighs later stages down by preceding gain") {
    const std::vector<Amplifier> chain = {{"hemt-ish", 20.0, 0.3},
                                          {"warm", 40.0, 4.0},
                                          {"room", 0.0, 300.0}};
    CHECK(receiver_noise(chain) == doctest::Approx(0.3403).epsilon(1e-4 / 0.3403));
    CHECK_THROWS(receiver_noise({}));
}

TEST_CASE("stage budgets attribute cable loads to the cold end") {
    FridgeSpec fridge = demo_fridge();
    WiringChain chain;
    chain.cables = {{"stainless_steel", 2e-7, 0.2, "4K", "still", 4}};
    const auto budgets = stage_budget(chain, fridge);
    REQUIRE(budgets.size() == fridge.stages.size());
    const Material& ss = find_material(builtin_materials(), "stainless_steel");
    const double expect = 4.0 * cable_heat_load(ss, 2e-7, 0.2, 4.0, 0.7);
    for (const auto& b : budgets) {
        if (b.stage == "still") {
            CHECK(b.conductive_load == doctest::Approx(expect));
            CHECK(b.pass == (b.conductive_load <= b.cooling_power));
        } else {
            CHECK(b.conductive_load == 0.0);
        }
    }
}

TEST_CASE("attenuator dissipation lands on its stage when signal power is set") {
    FridgeSpec fridge = demo_fridge();
    WiringChain chain;
    chain.attenuators = {{"4K", 20.0}, {"mxc", 20.0}};
    chain.signal_power = 1e-6;
    const auto budgets = stage_budget(chain, fridge);
    for (const auto& b : budgets) {
        if (b.stage == "4K") CHECK(b.dissipated_power == doctest::Approx(0.99e-6));
        if (b.stage == "mxc") CHECK(b.dissipated_power == doctest::Approx(0.99e-8));
    }
}

TEST_CASE("fridge validation requires strictly decreasing temperatures") {
    FridgeSpec bad;
    bad.stages = {{"a", 4.0, 1.0}, {"b", 4.0, 1.0}};
    CHECK_THROWS(bad.validate());
    CHECK_THROWS(FridgeSpec{}.validate());
    CHECK_THROWS(demo_fridge().stage("missing"));
}
