#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include "filmwave/constants.hpp"
#include "filmwave/errors.hpp"

namespace filmwave {

/**
 * Bulk electron-gas constants of a metal.
 *
 * omega_p  plasma frequency [rad/s]
 * v_fermi  Fermi velocity [cm/s]
 * tau      electron relaxation time [s]
 */
struct MaterialParams {
    double omega_p = 0.0;
    double v_fermi = 0.0;
    double tau = 0.0;

    /// Static bulk conductivity sigma0 = omega_p^2 tau / (4 pi)  [1/s].
    double sigma0() const { return omega_p * omega_p * tau / (4.0 * pi); }

    /// Infrared skin-depth floor delta0 = c / omega_p  [cm].
    double delta0() const { return speed_of_light / omega_p; }

    /// Static electron mean free path l = v_F tau  [cm].
    double mean_free_path() const { return v_fermi * tau; }

    void validate() const {
        if (!(omega_p > 0.0)) throw validation_error("omega_p must be > 0");
        if (!(v_fermi > 0.0)) throw validation_error("v_fermi must be > 0");
        if (!(tau > 0.0)) throw validation_error("tau must be > 0");
    }
};

/// Bulk sodium constants.
inline MaterialParams sodium() {
    return MaterialParams{6.5e15, 8.52e7, 1.5e-13};
}

/**
 * Film geometry and surface properties.
 *
 * d  film thickness [cm]
 * p  specularity coefficient: probability of mirror-like electron reflection
 *    at the surfaces (1 = specular, 0 = fully diffuse)
 * G  field-penetration factor: thickness-averaged normal electric field
 *    normalized by its boundary value (external input, dielectric limit G = 1)
 */
struct FilmConfig {
    double d = 0.0;
    double p = 1.0;
    std::complex<double> G{1.0, 0.0};

    void validate() const {
        if (!(d > 0.0)) throw validation_error("film thickness d must be > 0");
        if (!(p >= 0.0 && p <= 1.0)) throw validation_error("specularity p out of range [0, 1]");
    }

    /// True when the thickness stays below the material's skin-depth floor,
    /// i.e. the thin-film impedance algebra applies at all frequencies.
    bool thin_film(const MaterialParams& m) const { return d < m.delta0(); }
};

/**
 * Incident p-wave parameters.
 *
 * omega  angular frequency [rad/s] (omega = 0 is the admitted DC limit)
 * theta  incidence angle [rad], 0 = normal, pi/2 = grazing
 */
struct WaveConfig {
    double omega = 0.0;
    double theta = 0.0;

    /// Vacuum wave number k = omega / c  [1/cm].
    double wave_number() const { return omega / speed_of_light; }

    void validate() const {
        if (!(omega >= 0.0)) throw validation_error("omega must be >= 0");
        if (!(theta >= 0.0 && theta <= half_pi))
            throw validation_error("theta out of range [0, pi/2]");
    }
};

/// Which algebraic form of the film response to evaluate.
enum class ModelVariant {
    full_kd,              ///< impedances kept to all orders in kd
    thin_kd,              ///< long-wavelength impedances (kd << 1)
    low_freq_simplified,  ///< thin_kd with the penetration term dropped (|kdG| << 1); never reads G
};

inline std::string_view to_string(ModelVariant v) {
    switch (v) {
        case ModelVariant::full_kd: return "full_kd";
        case ModelVariant::thin_kd: return "thin_kd";
        case ModelVariant::low_freq_simplified: return "low_freq_simplified";
    }
    return "?";
}

inline std::optional<ModelVariant> parse_variant(std::string_view s) {
    if (s == "full_kd") return ModelVariant::full_kd;
    if (s == "thin_kd") return ModelVariant::thin_kd;
    if (s == "low_freq_simplified") return ModelVariant::low_freq_simplified;
    return std::nullopt;
}

/**
 * The (T, R, A) triple plus the intermediate quantities of the pipeline.
 *
 * A = 1 - T - R by construction. Z1/P1 are absent under
 * ModelVariant::low_freq_simplified, where the symmetric-configuration
 * impedance has no meaning; they are never silently zeroed.
 */
struct OpticalCoefficients {
    double T = 0.0;
    double R = 0.0;
    double A = 0.0;
    std::complex<double> sigma_d{};              ///< film conductivity [1/s]
    std::optional<std::complex<double>> Z1{};    ///< symmetric-configuration impedance
    std::complex<double> Z2{};                   ///< antisymmetric-configuration impedance
    std::optional<std::complex<double>> P1{};
    std::complex<double> P2{};
};

}  // namespace filmwave
