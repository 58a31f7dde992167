#pragma once

#include <complex>

#include "filmwave/constants.hpp"
#include "filmwave/quadrature.hpp"
#include "filmwave/types.hpp"

namespace filmwave {

/// Bulk Drude conductivity sigma(omega) = sigma0 / (1 - i omega tau)  [1/s].
inline std::complex<double> drude_sigma(const MaterialParams& m, double omega) {
    m.validate();
    if (!(omega >= 0.0)) throw validation_error("drude_sigma: omega must be >= 0");
    return m.sigma0() / std::complex<double>(1.0, -omega * m.tau);
}

/// Complex mean free path l(omega) = v_F tau / (1 - i omega tau)  [cm].
inline std::complex<double> complex_mfp(const MaterialParams& m, double omega) {
    m.validate();
    if (!(omega >= 0.0)) throw validation_error("complex_mfp: omega must be >= 0");
    return m.v_fermi * m.tau / std::complex<double>(1.0, -omega * m.tau);
}

/// w = d / l(omega) = (d / (v_F tau)) (1 - i omega tau), dimensionless.
/// Built directly so Re(w) = d/(v_F tau) exactly, independent of omega.
inline std::complex<double> reduced_thickness(const MaterialParams& m, double omega,
                                              double d) {
    const double static_ratio = d / (m.v_fermi * m.tau);
    return {static_ratio, -static_ratio * omega * m.tau};
}

/**
 * Size- and specularity-dependent film conductivity
 *
 *   sigma_d = sigma(omega) w / Phi(w),   w = d / l(omega).
 *
 * p = 1 bypasses the quadrature: w/Phi(w) = 1 and sigma_d equals the bulk
 * Drude value exactly.
 */
inline std::complex<double> sigma_film(const MaterialParams& m, const FilmConfig& film,
                                       double omega, double rel_tol = 1e-10) {
    m.validate();
    film.validate();
    if (!(omega >= 0.0)) throw validation_error("sigma_film: omega must be >= 0");
    const std::complex<double> bulk = drude_sigma(m, omega);
    if (film.p == 1.0) return bulk;
    const std::complex<double> w = reduced_thickness(m, omega, film.d);
    return bulk * w * phi_inverse(w, film.p, rel_tol);
}

}  // namespace filmwave
