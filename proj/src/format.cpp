#include "pairgen/format.hpp"

#include <cmath>
#include <cstdio>

namespace pairgen {

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", x);
    return buf;
}

std::string json_number(double x) {
    if (!std::isfinite(x)) return "null";
    return format_double(x);
}

std::string json_complex(std::complex<double> z) {
    return "[" + json_number(z.real()) + ", " + json_number(z.imag()) + "]";
}

std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
    return out;
}

}  // namespace pairgen
