#pragma once

#include <cerrno>
#include <cstring>
#include <fstream>
#include <ostream>
#include <string>

#include "filmwave/errors.hpp"
#include "filmwave/format.hpp"
#include "filmwave/sweep.hpp"

namespace filmwave {

enum class OutputFormat { csv, gnuplot_columns };

namespace detail {

inline void emit_csv(const SweepResult& result, std::ostream& os) {
    os << "omega,d,theta,p,T,R,A,sigma_d_re,sigma_d_im\n";
    for (const auto& r : result.rows) {
        os << format_g9(r.omega) << ',' << format_g9(r.d) << ',' << format_g9(r.theta)
           << ',' << format_g9(r.p) << ',' << format_g9(r.T) << ',' << format_g9(r.R)
           << ',' << format_g9(r.A) << ',' << format_g9(r.sigma_d_re) << ','
           << format_g9(r.sigma_d_im) << '\n';
    }
}

inline void emit_gnuplot(const SweepResult& result, std::ostream& os) {
    os << "# omega d theta p T R A sigma_d_re sigma_d_im\n";
    const bool has_family = result.spec.family_param() != FamilyParam::none;
    const std::size_t per_curve = result.points_per_curve();
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        if (i % per_curve == 0) {
            if (i != 0) os << '\n';
            if (has_family)
                os << "# family: "
                   << format_g9(result.spec.family_values()[i / per_curve]) << '\n';
        }
        const auto& r = result.rows[i];
        os << format_g9(r.omega) << ' ' << format_g9(r.d) << ' ' << format_g9(r.theta)
           << ' ' << format_g9(r.p) << ' ' << format_g9(r.T) << ' ' << format_g9(r.R)
           << ' ' << format_g9(r.A) << ' ' << format_g9(r.sigma_d_re) << ' '
           << format_g9(r.sigma_d_im) << '\n';
    }
}

}  // namespace detail

inline void emit(const SweepResult& result, OutputFormat format, std::ostream& os) {
    if (format == OutputFormat::csv)
        detail::emit_csv(result, os);
    else
        detail::emit_gnuplot(result, os);
}

/// Write to a file with LF line endings; failures report errno text and path.
inline void emit(const SweepResult& result, OutputFormat format, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw io_error(std::string(std::strerror(errno)) + ": " + path);
    emit(result, format, os);
    os.flush();
    if (!os) throw io_error(std::string(std::strerror(errno)) + ": " + path);
}

}  // namespace filmwave
