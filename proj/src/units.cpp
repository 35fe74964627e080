#include "qpkg/units.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qpkg {

namespace {

struct UnitEntry {
    Dimension dim;
    double factor;
};

const std::map<std::string, UnitEntry>& unit_table() {
    static const std::map<std::string, UnitEntry> table = {
        {"Hz", {Dimension::Frequency, 1.0}},
        {"kHz", {Dimension::Frequency, 1e3}},
        {"MHz", {Dimension::Frequency, 1e6}},
        {"GHz", {Dimension::Frequency, 1e9}},
        {"m", {Dimension::Length, 1.0}},
        {"cm", {Dimension::Length, 1e-2}},
        {"mm", {Dimension::Length, 1e-3}},
        {"um", {Dimension::Length, 1e-6}},
        {"µm", {Dimension::Length, 1e-6}},
        {"nm", {Dimension::Length, 1e-9}},
        {"m^2", {Dimension::Area, 1.0}},
        {"cm^2", {Dimension::Area, 1e-4}},
        {"mm^2", {Dimension::Area, 1e-6}},
        {"um^2", {Dimension::Area, 1e-12}},
        {"F", {Dimension::Capacitance, 1.0}},
        {"uF", {Dimension::Capacitance, 1e-6}},
        {"nF", {Dimension::Capacitance, 1e-9}},
        {"pF", {Dimension::Capacitance, 1e-12}},
        {"fF", {Dimension::Capacitance, 1e-15}},
        {"H", {Dimension::Inductance, 1.0}},
        {"uH", {Dimension::Inductance, 1e-6}},
        {"nH", {Dimension::Inductance, 1e-9}},
        {"pH", {Dimension::Inductance, 1e-12}},
        {"ohm", {Dimension::Resistance, 1.0}},
        {"Ohm", {Dimension::Resistance, 1.0}},
        {"kohm", {Dimension::Resistance, 1e3}},
        {"mohm", {Dimension::Resistance, 1e-3}},
        {"S", {Dimension::Conductance, 1.0}},
        {"mS", {Dimension::Conductance, 1e-3}},
        {"uS", {Dimension::Conductance, 1e-6}},
        {"nS", {Dimension::Conductance, 1e-9}},
        {"K", {Dimension::Temperature, 1.0}},
        {"mK", {Dimension::Temperature, 1e-3}},
        {"W", {Dimension::Power, 1.0}},
        {"mW", {Dimension::Power, 1e-3}},
        {"uW", {Dimension::Power, 1e-6}},
        {"nW", {Dimension::Power, 1e-9}},
        {"pW", {Dimension::Power, 1e-12}},
        {"fW", {Dimension::Power, 1e-15}},
        {"dB", {Dimension::Decibel, 1.0}},
        {"s", {Dimension::Time, 1.0}},
        {"ms", {Dimension::Time, 1e-3}},
        {"us", {Dimension::Time, 1e-6}},
        {"ns", {Dimension::Time, 1e-9}},
    };
    return table;
}

}  // namespace

std::string dimension_name(Dimension dim) {
    switch (dim) {
        case Dimension::Dimensionless: return "dimensionless";
        case Dimension::Frequency: return "frequency";
        case Dimension::Length: return "length";
        case Dimension::Area: return "area";
        case Dimension::Capacitance: return "capacitance";
        case Dimension::Inductance: return "inductance";
        case Dimension::Resistance: return "resistance";
        case Dimension::Conductance: return "conductance";
        case Dimension::Temperature: return "temperature";
        case Dimension::Power: return "power";
        case Dimension::Decibel: return "level";
        case Dimension::Time: return "time";
    }
    return "?";
}

double parse_quantity(const std::string& text, Dimension dim) {
    std::istringstream is(text);
    double value;
    if (!(is >> value)) throw std::runtime_error("cannot parse quantity '" + text + "'");
    std::string unit;
    is >> unit;
    std::string rest;
    if (is >> rest) throw std::runtime_error("trailing text in quantity '" + text + "'");

    if (unit.empty()) {
        if (dim == Dimension::Dimensionless) return value;
        throw std::runtime_error("missing unit in '" + text + "' (expected " + dimension_name(dim) +
                                 ")");
    }
    if (dim == Dimension::Dimensionless)
        throw std::runtime_error("unexpected unit '" + unit + "' on dimensionless quantity");
    if (dim == Dimension::Power && unit == "dBm") return 1e-3 * std::pow(10.0, value / 10.0);

    const auto it = unit_table().find(unit);
    if (it == unit_table().end())
        throw std::runtime_error("unknown unit suffix '" + unit + "' in '" + text + "'");
    if (it->second.dim != dim)
        throw std::runtime_error("unit '" + unit + "' is " + dimension_name(it->second.dim) +
                                 ", expected " + dimension_name(dim) + " in '" + text + "'");
    return value * it->second.factor;
}

}  // namespace qpkg
