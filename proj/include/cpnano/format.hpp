#pragma once

#include <cstdio>
#include <string>

namespace cpnano {

/// Locale-independent, round-trip-exact double formatting (17 significant
/// digits, '.' decimal point).  Shared by the CSV and JSON writers so that
/// re-running a command is byte-identical.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace cpnano
