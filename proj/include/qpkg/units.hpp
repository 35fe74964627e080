#pragma once

#include <string>

namespace qpkg {

/// Unit dimensions accepted in spec documents. Quantities are strings like
/// "6 GHz" or "0.5 mm"; bare numbers are allowed only for Dimensionless.
enum class Dimension {
    Dimensionless,
    Frequency,
    Length,
    Area,
    Capacitance,
    Inductance,
    Resistance,
    Conductance,
    Temperature,
    Power,
    Decibel,
    Time,
};

/// Parse "<number> <unit>" into SI base units for the given dimension.
/// Throws std::runtime_error naming the unknown or mismatched unit suffix.
/// Power accepts dBm alongside W-family suffixes.
double parse_quantity(const std::string& text, Dimension dim);

std::string dimension_name(Dimension dim);

}  // namespace qpkg
