#include "qpkg/touchstone.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qpkg/constants.hpp"

namespace qpkg {

namespace {

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    std::ostringstream os;
    os << origin << ":" << line << ": " << msg;
    throw std::runtime_error(os.str());
}

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
    return s;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

bool parse_double(const std::string& t, double& out) {
    std::size_t pos = 0;
    try {
        out = std::stod(t, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == t.size();
}

struct OptionLine {
    double freq_scale = 1e9;  // GHz default
    Representation rep = Representation::S;
    enum class Format { MA, DB, RI } format = Format::MA;
    double z_ref = 50.0;
};

OptionLine parse_option_line(const std::vector<std::string>& toks, const std::string& origin,
                             int line) {
    OptionLine opt;
    for (std::size_t i = 1; i < toks.size(); ++i) {
        const std::string t = upper(toks[i]);
        if (t == "HZ") opt.freq_scale = 1.0;
        else if (t == "KHZ") opt.freq_scale = 1e3;
        else if (t == "MHZ") opt.freq_scale = 1e6;
        else if (t == "GHZ") opt.freq_scale = 1e9;
        else if (t == "S") opt.rep = Representation::S;
        else if (t == "Y") opt.rep = Representation::Y;
        else if (t == "Z") opt.rep = Representation::Z;
        else if (t == "MA") opt.format = OptionLine::Format::MA;
        else if (t == "DB") opt.format = OptionLine::Format::DB;
        else if (t == "RI") opt.format = OptionLine::Format::RI;
        else if (t == "R") {
            if (i + 1 >= toks.size() || !parse_double(toks[i + 1], opt.z_ref) || opt.z_ref <= 0)
                fail(origin, line, "malformed option line: expected a positive impedance after R");
            ++i;
        } else if (t == "G" || t == "H" || t == "A" || t.size() == 1) {
            // Touchstone allows exactly S/Y/Z here (G/H hybrids are v1-legal but
            // meaningless for this tool).
            fail(origin, line, "unknown parameter type '" + toks[i] + "' in option line");
        } else {
            fail(origin, line, "malformed option line: unrecognized token '" + toks[i] + "'");
        }
    }
    return opt;
}

Complex decode(double a, double b, OptionLine::Format fmt) {
    switch (fmt) {
        case OptionLine::Format::RI:
            return {a, b};
        case OptionLine::Format::MA:
            return std::polar(a, b * constants::pi / 180.0);
        case OptionLine::Format::DB:
            return std::polar(std::pow(10.0, a / 20.0), b * constants::pi / 180.0);
    }
    return {};
}

}  // namespace

FrequencyResponse parse_touchstone(std::istream& in, int port_count, const std::string& origin) {
    if (port_count < 1 || port_count > 2)
        throw std::runtime_error(origin + ": only 1- and 2-port Touchstone files are supported");

    FrequencyResponse resp;
    resp.port_count = port_count;

    OptionLine opt;
    bool have_option = false;
    const int entries = port_count * port_count;
    const std::size_t columns = 1 + 2 * static_cast<std::size_t>(entries);

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        // strip trailing comment
        if (auto bang = line.find('!'); bang != std::string::npos) line.erase(bang);
        auto toks = tokens(line);
        if (toks.empty()) continue;
        if (toks[0][0] == '[')
            fail(origin, lineno, "Touchstone v2 keyword '" + toks[0] + "' not supported (v1 only)");
        if (toks[0] == "#") {
            if (have_option) fail(origin, lineno, "duplicate option line");
            opt = parse_option_line(toks, origin, lineno);
            have_option = true;
            continue;
        }
        if (!have_option)
            fail(origin, lineno, "data before option line");
        if (toks.size() != columns) {
            std::ostringstream os;
            os << "expected " << columns << " columns, got " << toks.size();
            fail(origin, lineno, os.str());
        }
        std::vector<double> vals(columns);
        for (std::size_t i = 0; i < columns; ++i)
            if (!parse_double(toks[i], vals[i]))
                fail(origin, lineno, "invalid number '" + toks[i] + "'");
        const double f = vals[0] * opt.freq_scale;
        if (!resp.freqs.empty() && f <= resp.freqs.back())
            fail(origin, lineno, "non-monotonic frequency column");
        if (f <= 0) fail(origin, lineno, "non-positive frequency");
        resp.freqs.push_back(f);

        Complex m[4];
        for (int e = 0; e < entries; ++e) m[e] = decode(vals[1 + 2 * e], vals[2 + 2 * e], opt.format);
        if (port_count == 1) {
            resp.data.push_back(m[0]);
        } else {
            // v1 two-port column order: 11, 21, 12, 22
            resp.data.push_back(m[0]);
            resp.data.push_back(m[2]);
            resp.data.push_back(m[1]);
            resp.data.push_back(m[3]);
        }
    }
    if (!have_option) throw std::runtime_error(origin + ": missing option line");
    if (resp.freqs.empty()) throw std::runtime_error(origin + ": no data rows");
    resp.representation = opt.rep;
    resp.z_ref = opt.z_ref;
    resp.validate();
    return resp;
}

FrequencyResponse load_touchstone(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    // port count from the extension: .sNp / .yNp / .zNp
    int ports = 1;
    auto dot = path.rfind('.');
    if (dot != std::string::npos) {
        const std::string ext = upper(path.substr(dot + 1));
        if (ext.size() >= 3 && ext.back() == 'P' && std::isdigit(static_cast<unsigned char>(ext[1])))
            ports = ext[1] - '0';
    }
    return parse_touchstone(in, ports, path);
}

FrequencyResponse parse_csv(std::istream& in, const std::string& origin, Representation rep) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw std::runtime_error(origin + ": empty file");
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    // header: freq_hz followed by re,im pairs
    {
        std::istringstream hs(line);
        std::string first;
        std::getline(hs, first, ',');
        if (first != "freq_hz") fail(origin, 1, "expected header starting with 'freq_hz'");
    }
    const std::size_t ncols = 1 + std::count(line.begin(), line.end(), ',');
    if (ncols < 3 || (ncols - 1) % 2 != 0) fail(origin, 1, "expected freq_hz plus re/im column pairs");
    const std::size_t nentries = (ncols - 1) / 2;
    const int ports = static_cast<int>(std::lround(std::sqrt(static_cast<double>(nentries))));
    if (static_cast<std::size_t>(ports) * ports != nentries)
        fail(origin, 1, "column pairs do not form a square matrix");

    FrequencyResponse resp;
    resp.port_count = ports;
    resp.representation = rep;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<double> vals;
        while (std::getline(ls, cell, ',')) {
            double v;
            if (!parse_double(cell, v)) fail(origin, lineno, "invalid number '" + cell + "'");
            vals.push_back(v);
        }
        if (vals.size() != ncols) {
            std::ostringstream os;
            os << "expected " << ncols << " columns, got " << vals.size();
            fail(origin, lineno, os.str());
        }
        if (!resp.freqs.empty() && vals[0] <= resp.freqs.back())
            fail(origin, lineno, "non-monotonic frequency column");
        resp.freqs.push_back(vals[0]);
        for (std::size_t e = 0; e < nentries; ++e)
            resp.data.emplace_back(vals[1 + 2 * e], vals[2 + 2 * e]);
    }
    if (resp.freqs.empty()) throw std::runtime_error(origin + ": no data rows");
    resp.validate();
    return resp;
}

FrequencyResponse load_csv(const std::string& path, Representation rep) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_csv(in, path, rep);
}

}  // namespace qpkg
