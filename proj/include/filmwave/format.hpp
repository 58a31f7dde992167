#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

namespace filmwave {

/**
 * Fixed output format for all emitted numbers: 9 significant digits,
 * '.' decimal separator, scientific notation for |x| outside [1e-3, 1e4),
 * plain "0" for zero. Locale-independent and stable across runs.
 */
inline std::string format_g9(double x) {
    if (x == 0.0) return "0";
    char buf[48];
    const double ax = std::fabs(x);
    if (ax < 1e-3 || ax >= 1e4) {
        std::snprintf(buf, sizeof buf, "%.8e", x);
        return buf;
    }
    int exp10 = static_cast<int>(std::floor(std::log10(ax)));
    // guard against log10 landing on the wrong side of a decade boundary
    if (ax < std::pow(10.0, exp10)) --exp10;
    else if (ax >= std::pow(10.0, exp10 + 1)) ++exp10;
    std::snprintf(buf, sizeof buf, "%.*f", 8 - exp10, x);
    return buf;
}

inline std::string format_complex_g9(std::complex<double> z) {
    return "(" + format_g9(z.real()) + ", " + format_g9(z.imag()) + ")";
}

}  // namespace filmwave
