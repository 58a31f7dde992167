#pragma once

#include <cmath>
#include <complex>

#include "filmwave/conductivity.hpp"
#include "filmwave/constants.hpp"
#include "filmwave/types.hpp"

namespace filmwave {

/// True at exactly tangent incidence; the thin-film model limits apply there.
inline bool grazing_incidence(const WaveConfig& wave) { return wave.theta >= half_pi; }

/**
 * Impedance of the symmetric field configuration.
 *
 *   full_kd:  Z1 = (i k d / 2) (1 - G sin^2 theta)
 *   thin_kd:  Z1 = -(i k d / 2) G sin^2 theta
 */
inline std::complex<double> impedance_symmetric(const FilmConfig& film,
                                                const WaveConfig& wave,
                                                ModelVariant variant) {
    const double s = std::sin(wave.theta);
    const double half_kd = 0.5 * wave.wave_number() * film.d;
    const std::complex<double> i_unit{0.0, 1.0};
    switch (variant) {
        case ModelVariant::full_kd:
            return i_unit * half_kd * (1.0 - film.G * (s * s));
        case ModelVariant::thin_kd:
            return -i_unit * half_kd * film.G * (s * s);
        case ModelVariant::low_freq_simplified:
            break;
    }
    throw validation_error("impedance_symmetric: variant has no symmetric impedance");
}

/**
 * Impedance of the antisymmetric field configuration.
 *
 *   full_kd:  Z2 = 2c / (i c k d - 4 pi sigma_d d)
 *   thin_kd:  Z2 = -c / (2 pi sigma_d d)
 */
inline std::complex<double> impedance_antisymmetric(std::complex<double> sigma_d,
                                                    const FilmConfig& film,
                                                    const WaveConfig& wave,
                                                    ModelVariant variant) {
    if (variant == ModelVariant::full_kd) {
        // i c k d = i omega d since k = omega / c
        const std::complex<double> den =
            (std::complex<double>(0.0, wave.omega) - 4.0 * pi * sigma_d) * film.d;
        if (std::abs(den) < denominator_floor)
            throw numerical_error("impedance_antisymmetric: degenerate denominator");
        return 2.0 * speed_of_light / den;
    }
    const std::complex<double> den = 2.0 * pi * sigma_d * film.d;
    if (std::abs(den) < denominator_floor)
        throw numerical_error("impedance_antisymmetric: degenerate denominator");
    return -speed_of_light / den;
}

/// P = (cos theta + Z) / (cos theta - Z); unimodular for purely imaginary Z.
inline std::complex<double> p_factor(std::complex<double> Z, double theta) {
    const double c = std::cos(theta);
    const std::complex<double> den = c - Z;
    if (std::abs(den) < denominator_floor)
        throw numerical_error("p_factor: degenerate denominator (cos theta == Z)");
    return (c + Z) / den;
}

/**
 * T = |P1 - P2|^2 / 4,  R = |P1 + P2|^2 / 4,  A = 1 - T - R.
 *
 * Only the coefficients and P-factors are filled here; evaluate() attaches
 * the conductivity and impedance diagnostics.
 */
inline OpticalCoefficients tra_from_p(std::complex<double> P1, std::complex<double> P2) {
    OpticalCoefficients out;
    out.T = 0.25 * std::norm(P1 - P2);
    out.R = 0.25 * std::norm(P1 + P2);
    out.A = 1.0 - out.T - out.R;
    out.P1 = P1;
    out.P2 = P2;
    return out;
}

namespace detail {

// Tangent incidence drives both P-factors to -1, hence (T, R, A) = (0, 1, 0).
// The simplified variants lose that limit to rounding (and the G-free form
// loses it entirely), so it is pinned explicitly.
inline OpticalCoefficients grazing_coefficients(std::complex<double> sigma_d,
                                                const FilmConfig& film,
                                                const WaveConfig& wave,
                                                ModelVariant variant) {
    OpticalCoefficients out;
    out.T = 0.0;
    out.R = 1.0;
    out.A = 0.0;
    out.sigma_d = sigma_d;
    out.P2 = {-1.0, 0.0};
    out.Z2 = impedance_antisymmetric(sigma_d, film, wave, ModelVariant::thin_kd);
    if (variant == ModelVariant::thin_kd) {
        out.Z1 = impedance_symmetric(film, wave, variant);
        out.P1 = std::complex<double>{-1.0, 0.0};
    }
    return out;
}

}  // namespace detail

/**
 * Film response from a known film conductivity.
 *
 * full_kd / thin_kd run the impedance -> P-factor -> (T, R, A) chain.
 * low_freq_simplified computes, with zeta = (2 pi d sigma_d / c) cos theta,
 *
 *   T = 1 / |1 + zeta|^2,   R = |zeta / (1 + zeta)|^2,   A = 1 - T - R,
 *
 * and never reads film.G; Z1/P1 stay absent in that case.
 */
inline OpticalCoefficients evaluate_with_sigma(std::complex<double> sigma_d,
                                               const FilmConfig& film,
                                               const WaveConfig& wave,
                                               ModelVariant variant) {
    film.validate();
    wave.validate();

    if (variant == ModelVariant::low_freq_simplified) {
        if (grazing_incidence(wave))
            return detail::grazing_coefficients(sigma_d, film, wave, variant);
        const double cos_theta = std::cos(wave.theta);
        const std::complex<double> zeta =
            2.0 * pi * film.d * sigma_d / speed_of_light * cos_theta;
        const std::complex<double> den = 1.0 + zeta;
        if (std::abs(den) < denominator_floor)
            throw numerical_error("evaluate: degenerate denominator (1 + zeta == 0)");
        OpticalCoefficients out;
        out.T = 1.0 / std::norm(den);
        out.R = std::norm(zeta / den);
        out.A = 1.0 - out.T - out.R;
        out.sigma_d = sigma_d;
        out.Z2 = impedance_antisymmetric(sigma_d, film, wave, ModelVariant::thin_kd);
        out.P2 = p_factor(out.Z2, wave.theta);
        return out;
    }

    if (variant == ModelVariant::thin_kd && grazing_incidence(wave))
        return detail::grazing_coefficients(sigma_d, film, wave, variant);

    const std::complex<double> Z1 = impedance_symmetric(film, wave, variant);
    const std::complex<double> Z2 = impedance_antisymmetric(sigma_d, film, wave, variant);
    OpticalCoefficients out =
        tra_from_p(p_factor(Z1, wave.theta), p_factor(Z2, wave.theta));
    out.sigma_d = sigma_d;
    out.Z1 = Z1;
    out.Z2 = Z2;
    return out;
}

/// Full pipeline: sigma(omega) -> l(omega) -> w -> sigma_d -> impedances
/// -> P-factors -> (T, R, A).
inline OpticalCoefficients evaluate(const MaterialParams& m, const FilmConfig& film,
                                    const WaveConfig& wave, ModelVariant variant,
                                    double rel_tol = 1e-10) {
    wave.validate();
    const std::complex<double> sigma_d = sigma_film(m, film, wave.omega, rel_tol);
    return evaluate_with_sigma(sigma_d, film, wave, variant);
}

}  // namespace filmwave
