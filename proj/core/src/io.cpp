#include "bergman/io.hpp"

#include <cstdio>

namespace bergman::io {

std::string fmt_double(double v) {
    char buf[32];
    int n = std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf, n > 0 ? static_cast<std::size_t>(n) : 0);
}

std::string fmt_complex_pair(std::complex<double> v) {
    return '[' + fmt_double(v.real()) + ',' + fmt_double(v.imag()) + ']';
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

} // namespace bergman::io
