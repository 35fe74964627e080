#pragma once

#include <complex>
#include <string>
#include <vector>

namespace qpkg {

using Complex = std::complex<double>;

enum class Representation { S, Y, Z, Abcd };

std::string to_string(Representation r);

/// Tabulated multi-port network data on a frequency grid.
/// Sign convention is e^{+jwt}: an ideal capacitor has admittance +jwC.
/// Immutable by convention after construction; validate() enforces the
/// structural invariants.
struct FrequencyResponse {
    int port_count = 1;
    Representation representation = Representation::S;
    double z_ref = 50.0;                 // ohm
    std::vector<double> freqs;           // Hz, strictly increasing
    std::vector<Complex> data;           // row-major port_count x port_count per point

    const Complex& at(std::size_t point, int row, int col) const {
        return data[point * port_count * port_count + row * port_count + col];
    }
    Complex& at(std::size_t point, int row, int col) {
        return data[point * port_count * port_count + row * port_count + col];
    }
    std::size_t size() const { return freqs.size(); }

    /// Throws std::invalid_argument on any violated invariant.
    void validate() const;
};

/// Convert between S/Y/Z/ABCD. ABCD is defined for two-ports only.
/// Throws std::runtime_error naming the frequency if a matrix inversion
/// required by the identity is singular at some point.
FrequencyResponse convert_network(const FrequencyResponse& resp, Representation target);

}  // namespace qpkg
