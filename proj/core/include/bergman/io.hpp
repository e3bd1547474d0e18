#pragma once

#include <complex>
#include <string>

namespace bergman::io {

/// Fixed decimal rendering with 17 significant digits; the one formatter used
/// for every numeric output so identical runs produce identical bytes.
std::string fmt_double(double v);

/// "[re,im]" pair with fmt_double components.
std::string fmt_complex_pair(std::complex<double> v);

/// JSON string escaping (quotes, backslash, control characters).
std::string json_escape(const std::string& s);

} // namespace bergman::io
