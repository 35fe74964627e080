#include <doctest.h>

#include <cmath>
#include <sstream>

#include "qpkg/touchstone.hpp"

using namespace qpkg;

TEST_CASE("one-port MA file with GHz default scale") {
    std::istringstream in(
        "! comment\n"
        "# GHz S MA R 50\n"
        "1.0 0.5 0.0\n"
        "2.0 0.5 90.0\n");
    const auto resp = parse_touchstone(in, 1, "mem");
    REQUIRE(resp.size() == 2);
    CHECK(resp.freqs[0] == doctest::Approx(1e9));
    CHECK(resp.freqs[1] == doctest::Approx(2e9));
    CHECK(resp.z_ref == 50.0);
    CHECK(resp.at(0, 0, 0).real() == doctest::Approx(0.5));
    CHECK(resp.at(1, 0, 0).imag() == doctest::Approx(0.5));
    CHECK(std::abs(resp.at(1, 0, 0).real()) < 1e-12);
}

TEST_CASE("option line defaults are GHz S MA R 50") {
    std::istringstream in("#\n1.0 0.25 45.0\n");
    const auto resp = parse_touchstone(in, 1, "mem");
    CHECK(resp.freqs[0] == doctest::Approx(1e9));
    CHECK(resp.representation == Representation::S);
    CHECK(resp.at(0, 0, 0).real() == doctest::Approx(0.25 * std::cos(std::atan(1.0))));
}

TEST_CASE("DB format decodes magnitude in dB") {
    std::istringstream in("# MHz S DB R 75\n100 -20.0 0.0\n");
    const auto resp = parse_touchstone(in, 1, "mem");
    CHECK(resp.freqs[0] == doctest::Approx(1e8));
    CHECK(resp.z_ref == 75.0);
    CHECK(resp.at(0, 0, 0).real() == doctest::Approx(0.1));
}

TEST_CASE("two-port RI rows use the 11 21 12 22 column order") {
    std::istringstream in(
        "# Hz S RI\n"
        "1e9  0.1 0.0  0.9 0.0  0.8 0.0  0.2 0.0\n");
    const auto resp = parse_touchstone(in, 2, "mem");
    CHECK(resp.at(0, 0, 0).real() == doctest::Approx(0.1));
    CHECK(resp.at(0, 1, 0).real() == doctest::Approx(0.9));
    CHECK(resp.at(0, 0, 1).real() == doctest::Approx(0.8));
    CHECK(resp.at(0, 1, 1).real() == doctest::Approx(0.2));
}

TEST_CASE("Y-parameter option line tags the representation") {
    std::istringstream in("# Hz Y RI\n1e9 1e-3 0.0\n");
    CHECK(parse_touchstone(in, 1, "mem").representation == Representation::Y);
}

TEST_CASE("malformed inputs report the offending line") {
    auto expect_throw = [](const std::string& text, const std::string& needle) {
        std::istringstream in(text);
        try {
            parse_touchstone(in, 1, "mem");
            FAIL_CHECK("expected a parse error for: " << text);
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_throw("[Version] 2.0\n# Hz S RI\n1e9 0 0\n", "v2");
    expect_throw("# Hz S RI\n# Hz S RI\n1e9 0 0\n", "duplicate");
    expect_throw("1e9 0 0\n# Hz S RI\n", "before option line");
    expect_throw("# Hz Q RI\n1e9 0 0\n", "unknown parameter type");
    expect_throw("# Hz S RI\n1e9 0\n", "mem:2");
    expect_throw("# Hz S RI\n1e9 0 zz\n", "invalid number");
    expect_throw("# Hz S RI\n2e9 0 0\n1e9 0 0\n", "non-monotonic");
    expect_throw("# Hz S RI\n", "no data rows");
}

TEST_CASE("csv parser infers the port count from column pairs") {
    std::istringstream in(
        "freq_hz,re11,im11,re12,im12,re21,im21,re22,im22\n"
        "1e9,0.1,0,0.2,0,0.3,0,0.4,0\n");
    const auto resp = parse_csv(in, "mem");
    CHECK(resp.port_count == 2);
    CHECK(resp.at(0, 0, 1).real() == doctest::Approx(0.2));
    CHECK(resp.at(0, 1, 0).real() == doctest::Approx(0.3));
}

TEST_CASE("csv parser rejects a bad header") {
    std::istringstream in("frequency,re,im\n1e9,0,0\n");
    CHECK_THROWS(parse_csv(in, "mem"));
}
