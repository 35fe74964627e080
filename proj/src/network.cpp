#include "qpkg/network.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qpkg {

namespace {

using Eigen::MatrixXcd;

[[noreturn]] void singular_at(double f, const char* what) {
    std::ostringstream os;
    os << "singular matrix in " << what << " conversion at " << f << " Hz";
    throw std::runtime_error(os.str());
}

MatrixXcd matrix_at(const FrequencyResponse& r, std::size_t k) {
    const int n = r.port_count;
    MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = r.at(k, i, j);
    return m;
}

void store(FrequencyResponse& r, std::size_t k, const MatrixXcd& m) {
    const int n = r.port_count;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(k, i, j) = m(i, j);
}

MatrixXcd invert(const MatrixXcd& m, double f, const char* what) {
    Eigen::FullPivLU<MatrixXcd> lu(m);
    if (!lu.isInvertible()) singular_at(f, what);
    return lu.inverse();
}

// S is the hub representation: it exists for any passive network, while Y/Z
// and ABCD can each be singular for ideal elements.
MatrixXcd to_s(const MatrixXcd& m, Representation rep, double z0, double f) {
    const auto n = m.rows();
    const MatrixXcd eye = MatrixXcd::Identity(n, n);
    switch (rep) {
        case Representation::S:
            return m;
        case Representation::Y: {
            // S = (I - z0 Y)(I + z0 Y)^-1
            return (eye - z0 * m) * invert(eye + z0 * m, f, "Y->S");
        }
        case Representation::Z: {
            // S = (Z - z0 I)(Z + z0 I)^-1
            return (m - z0 * eye) * invert(m + z0 * eye, f, "Z->S");
        }
        case Representation::Abcd: {
            const Complex a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
            const Complex den = a + b / z0 + c * z0 + d;
            if (std::abs(den) == 0.0) singular_at(f, "ABCD->S");
            MatrixXcd s(2, 2);
            s(0, 0) = (a + b / z0 - c * z0 - d) / den;
            s(0, 1) = 2.0 * (a * d - b * c) / den;
            s(1, 0) = 2.0 / den;
            s(1, 1) = (-a + b / z0 - c * z0 + d) / den;
            return s;
        }
    }
    throw std::logic_error("unreachable representation");
}

MatrixXcd from_s(const MatrixXcd& s, Representation rep, double z0, double f) {
    const auto n = s.rows();
    const MatrixXcd eye = MatrixXcd::Identity(n, n);
    switch (rep) {
        case Representation::S:
            return s;
        case Representation::Y: {
            // Y = (1/z0)(I - S)(I + S)^-1
            return (1.0 / z0) * (eye - s) * invert(eye + s, f, "S->Y");
        }
        case Representation::Z: {
            // Z = z0 (I + S)(I - S)^-1
            return z0 * (eye + s) * invert(eye - s, f, "S->Z");
        }
        case Representation::Abcd: {
            const Complex s11 = s(0, 0), s12 = s(0, 1), s21 = s(1, 0), s22 = s(1, 1);
            if (std::abs(s21) == 0.0) singular_at(f, "S->ABCD");
            MatrixXcd m(2, 2);
            m(0, 0) = ((1.0 + s11) * (1.0 - s22) + s12 * s21) / (2.0 * s21);
            m(0, 1) = z0 * ((1.0 + s11) * (1.0 + s22) - s12 * s21) / (2.0 * s21);
            m(1, 0) = ((1.0 - s11) * (1.0 - s22) - s12 * s21) / (z0 * 2.0 * s21);
            m(1, 1) = ((1.0 - s11) * (1.0 + s22) + s12 * s21) / (2.0 * s21);
            return m;
        }
    }
    throw std::logic_error("unreachable representation");
}

}  // namespace

std::string to_string(Representation r) {
    switch (r) {
        case Representation::S: return "S";
        case Representation::Y: return "Y";
        case Representation::Z: return "Z";
        case Representation::Abcd: return "ABCD";
    }
    return "?";
}

void FrequencyResponse::validate() const {
    if (port_count < 1) throw std::invalid_argument("port_count must be >= 1");
    if (z_ref <= 0) throw std::invalid_argument("z_ref must be positive");
    if (representation == Representation::Abcd && port_count != 2)
        throw std::invalid_argument("ABCD representation requires port_count = 2");
    if (data.size() != freqs.size() * static_cast<std::size_t>(port_count * port_count))
        throw std::invalid_argument("data size does not match frequency grid");
    double prev = 0.0;
    for (double f : freqs) {
        if (!(f > prev)) throw std::invalid_argument("freqs must be strictly increasing and positive");
        prev = f;
    }
    for (const Complex& v : data)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("non-finite network data");
}

FrequencyResponse convert_network(const FrequencyResponse& resp, Representation target) {
    resp.validate();
    if (target == Representation::Abcd && resp.port_count != 2)
        throw std::invalid_argument("ABCD conversion requires a two-port");
    FrequencyResponse out = resp;
    out.representation = target;
    if (target == resp.representation) return out;
    for (std::size_t k = 0; k < resp.size(); ++k) {
        const double f = resp.freqs[k];
        const MatrixXcd s = to_s(matrix_at(resp, k), resp.representation, resp.z_ref, f);
        store(out, k, from_s(s, target, resp.z_ref, f));
    }
    return out;
}

}  // namespace qpkg
