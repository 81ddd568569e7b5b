#ifndef ATC_UTIL_HPP
#define ATC_UTIL_HPP

#include <cstdio>
#include <string>

namespace atc {

// Numeric output format used across reports and the CLI: 6 significant digits.
inline std::string g6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

} // namespace atc

#endif
