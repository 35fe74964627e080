#pragma once

#include <iosfwd>
#include <string>

#include "qpkg/network.hpp"

namespace qpkg {

/// Touchstone v1 reader (.s1p/.s2p and the y/z equivalents).
/// The option line "# <unit> <param> <format> R <z>" is fully honored;
/// '!' comment lines are skipped. Touchstone v2 files are rejected.
/// Parse errors report the offending line number.
FrequencyResponse load_touchstone(const std::string& path);
FrequencyResponse parse_touchstone(std::istream& in, int port_count, const std::string& origin);

/// CSV alternative: header "freq_hz,re,im" with one re/im column pair per
/// matrix entry, row-major. Port count is inferred from the column count.
FrequencyResponse load_csv(const std::string& path, Representation rep = Representation::S);
FrequencyResponse parse_csv(std::istream& in, const std::string& origin,
                            Representation rep = Representation::S);

}  // namespace qpkg
