#pragma once

#include <cstdio>
#include <string>

namespace mcqsim {

// Shortest decimal form that round-trips a double exactly ('.' decimal
// point, no thousands separators). Used by every text emitter.
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace mcqsim
