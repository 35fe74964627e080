#include <doctest.h>

#include <cmath>
#include <random>

#include "qpkg/network.hpp"

using namespace qpkg;

namespace {

FrequencyResponse random_two_port(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    FrequencyResponse resp;
    resp.port_count = 2;
    resp.representation = Representation::S;
    resp.freqs = {1e9, 2e9, 5e9};
    for (std::size_t i = 0; i < resp.freqs.size(); ++i)
        for (int k = 0; k < 4; ++k) resp.data.push_back(Complex(u(rng), u(rng)));
    return resp;
}

double max_dev(const FrequencyResponse& a, const FrequencyResponse& b) {
    double d = 0;
    for (std::size_t i = 0; i < a.data.size(); ++i) d = std::max(d, std::abs(a.data[i] - b.data[i]));
    return d;
}

}  // namespace

TEST_CASE("representation round trips return the original S data") {
    const FrequencyResponse s = random_two_port(7);
    for (Representation rep :
         {Representation::Y, Representation::Z, Representation::Abcd}) {
        const FrequencyResponse back = convert_network(convert_network(s, rep), Representation::S);
        CAPTURE(to_string(rep));
        CHECK(max_dev(s, back) < 1e-11);
    }
}

TEST_CASE("Y/Z are mutual inverses") {
    const FrequencyResponse s = random_two_port(11);
    const FrequencyResponse y = convert_network(s, Representation::Y);
    const FrequencyResponse z = convert_network(s, Representation::Z);
    for (std::size_t i = 0; i < s.freqs.size(); ++i) {
        const Complex prod00 = y.at(i, 0, 0) * z.at(i, 0, 0) + y.at(i, 0, 1) * z.at(i, 1, 0);
        const Complex prod01 = y.at(i, 0, 0) * z.at(i, 0, 1) + y.at(i, 0, 1) * z.at(i, 1, 1);
        CHECK(std::abs(prod00 - 1.0) < 1e-10);
        CHECK(std::abs(prod01) < 1e-10);
    }
}

TEST_CASE("series impedance ABCD converts to the textbook S-parameters") {
    FrequencyResponse abcd;
    abcd.port_count = 2;
    abcd.representation = Representation::Abcd;
    abcd.z_ref = 50.0;
    abcd.freqs = {1e9};
    const Complex z(0.0, 25.0);
    abcd.data = {1.0, z, 0.0, 1.0};
    const FrequencyResponse s = convert_network(abcd, Representation::S);
    const Complex s11 = z / (z + 100.0);
    const Complex s21 = 100.0 / (z + 100.0);
    CHECK(std::abs(s.at(0, 0, 0) - s11) < 1e-12);
    CHECK(std::abs(s.at(0, 1, 0) - s21) < 1e-12);
}

TEST_CASE("identity ABCD has no Z representation but a valid S one") {
    FrequencyResponse abcd;
    abcd.port_count = 2;
    abcd.representation = Representation::Abcd;
    abcd.freqs = {1e9};
    abcd.data = {1.0, 0.0, 0.0, 1.0};
    const FrequencyResponse s = convert_network(abcd, Representation::S);
    CHECK(std::abs(s.at(0, 0, 0)) < 1e-12);
    CHECK(std::abs(s.at(0, 1, 0) - 1.0) < 1e-12);
    CHECK_THROWS(convert_network(s, Representation::Z));
}

TEST_CASE("validate rejects malformed tables") {
    FrequencyResponse resp;
    resp.port_count = 1;
    resp.freqs = {2e9, 1e9};
    resp.data = {Complex(0, 0), Complex(0, 0)};
    CHECK_THROWS(resp.validate());  // not increasing
    resp.freqs = {1e9, 2e9};
    resp.data.pop_back();
    CHECK_THROWS(resp.validate());  // size mismatch
    resp.data = {Complex(0, 0), Complex(0, 0)};
    CHECK_NOTHROW(resp.validate());
    resp.port_count = 3;
    resp.representation = Representation::Abcd;
    CHECK_THROWS(resp.validate());  // ABCD is two-port only
}
