#pragma once

#include <cstdio>
#include <string>

namespace fulfill {

// Shortest round-trippable decimal form; used everywhere doubles hit disk so
// repeated runs are byte-identical.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string format_fixed(double v, int places) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, v);
    return buf;
}

}  // namespace fulfill
