#pragma once

#include <algorithm>
#include <cstddef>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "filmwave/film_response.hpp"
#include "filmwave/types.hpp"

namespace filmwave {

enum class Quantity { transmission, reflection, absorption };

inline std::string_view to_string(Quantity q) {
    switch (q) {
        case Quantity::transmission: return "T";
        case Quantity::reflection: return "R";
        case Quantity::absorption: return "A";
    }
    return "?";
}

/// Linear frequency grid; point 0 is min, point count-1 is exactly max.
struct OmegaAxis {
    double min = 0.0;
    double max = 0.0;
    int count = 0;

    double at(int j) const {
        if (j == count - 1) return max;
        return min + (max - min) * (static_cast<double>(j) / (count - 1));
    }
};

enum class FamilyParam { none, thickness, angle, specularity };

/**
 * A sweep over omega, optionally fanned out into a curve family by giving
 * exactly one of thickness/angle/specularity more than one value.
 */
struct SweepSpec {
    MaterialParams material = sodium();
    ModelVariant variant = ModelVariant::low_freq_simplified;
    OmegaAxis omega;
    std::vector<double> thickness;    // d [cm]
    std::vector<double> angle;        // theta [rad]
    std::vector<double> specularity;  // p
    std::complex<double> penetration{1.0, 0.0};  // G
    double rel_tol = 1e-10;

    FamilyParam family_param() const {
        if (thickness.size() > 1) return FamilyParam::thickness;
        if (angle.size() > 1) return FamilyParam::angle;
        if (specularity.size() > 1) return FamilyParam::specularity;
        return FamilyParam::none;
    }

    const std::vector<double>& family_values() const {
        switch (family_param()) {
            case FamilyParam::thickness: return thickness;
            case FamilyParam::angle: return angle;
            case FamilyParam::specularity: return specularity;
            case FamilyParam::none: break;
        }
        return thickness;  // single-curve sweep: one "family" value
    }

    std::size_t family_count() const { return family_values().size(); }

    void validate() const {
        material.validate();
        if (omega.count < 2) throw validation_error("sweep: omega count must be >= 2");
        if (!(omega.min >= 0.0)) throw validation_error("sweep: omega min must be >= 0");
        if (!(omega.min < omega.max)) throw validation_error("sweep: omega min must be < max");
        if (thickness.empty() || angle.empty() || specularity.empty())
            throw validation_error("sweep: d, theta and p all need at least one value");
        int multi = 0;
        multi += thickness.size() > 1;
        multi += angle.size() > 1;
        multi += specularity.size() > 1;
        if (multi > 1)
            throw validation_error("sweep: at most one of d/theta/p may be a value list");
        for (double d : thickness) FilmConfig{d, 0.0, penetration}.validate();
        for (double p : specularity) FilmConfig{1.0, p, penetration}.validate();
        for (double t : angle) WaveConfig{0.0, t}.validate();
    }
};

struct SweepRow {
    double omega, d, theta, p;
    double T, R, A;
    double sigma_d_re, sigma_d_im;
};

/// Rows ordered by (family value in given order, then omega ascending),
/// independent of how many threads evaluated them.
struct SweepResult {
    SweepSpec spec;
    std::vector<SweepRow> rows;

    std::size_t points_per_curve() const { return static_cast<std::size_t>(spec.omega.count); }
};

namespace detail {

struct PointFailure {
    std::size_t row;
    std::string message;
};

inline SweepRow sweep_point(const SweepSpec& spec, std::size_t family_index, int omega_index) {
    const auto pick = [&](const std::vector<double>& v) {
        return v.size() > 1 ? v[family_index] : v.front();
    };
    const FilmConfig film{pick(spec.thickness), pick(spec.specularity), spec.penetration};
    const WaveConfig wave{spec.omega.at(omega_index), pick(spec.angle)};
    const OpticalCoefficients c = evaluate(spec.material, film, wave, spec.variant, spec.rel_tol);
    return {wave.omega, film.d,  wave.theta, film.p,          c.T,
            c.R,        c.A,     c.sigma_d.real(), c.sigma_d.imag()};
}

}  // namespace detail

/**
 * Evaluate the whole grid. Points are independent and are processed by
 * `threads` workers over a static partition (threads == 0 picks the
 * hardware count); the result is bit-identical for any thread count.
 *
 * Any failing point aborts the sweep: the error lists the coordinates of
 * the offending points, no partial result escapes.
 */
inline SweepResult run_sweep(const SweepSpec& spec, unsigned threads = 0) {
    spec.validate();
    const std::size_t n_family = spec.family_count();
    const std::size_t n_omega = static_cast<std::size_t>(spec.omega.count);
    const std::size_t n = n_family * n_omega;

    SweepResult result{spec, std::vector<SweepRow>(n)};

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));

    std::mutex failure_mutex;
    std::vector<detail::PointFailure> failures;

    const auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            try {
                result.rows[idx] =
                    detail::sweep_point(spec, idx / n_omega, static_cast<int>(idx % n_omega));
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failures.push_back({idx, e.what()});
            }
        }
    };

    if (threads <= 1) {
        worker(0, n);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        const std::size_t chunk = (n + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t begin = t * chunk;
            const std::size_t end = std::min(n, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    if (!failures.empty()) {
        std::sort(failures.begin(), failures.end(),
                  [](const auto& a, const auto& b) { return a.row < b.row; });
        const auto& first = failures.front();
        const std::size_t f = first.row / n_omega;
        const auto pick = [&](const std::vector<double>& v) {
            return v.size() > 1 ? v[f] : v.front();
        };
        std::string msg = "sweep aborted at omega=" +
                          std::to_string(spec.omega.at(static_cast<int>(first.row % n_omega))) +
                          ", d=" + std::to_string(pick(spec.thickness)) +
                          ", theta=" + std::to_string(pick(spec.angle)) +
                          ", p=" + std::to_string(pick(spec.specularity)) + ": " + first.message;
        if (failures.size() > 1)
            msg += " (+" + std::to_string(failures.size() - 1) + " more failing points)";
        throw numerical_error(msg);
    }
    return result;
}

struct Extremum {
    double omega;
    double value;
    bool interior;  ///< both grid neighbours strictly lower
};

/**
 * Grid maximum of the chosen quantity along omega for one family curve.
 * Ties break toward the lowest omega. Throws validation_error for a family
 * value that is not part of the result.
 */
inline Extremum find_extremum(const SweepResult& result, Quantity quantity,
                              double family_value) {
    const auto& values = result.spec.family_values();
    std::size_t family = values.size();
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] == family_value) {
            family = i;
            break;
        }
    if (family == values.size())
        throw validation_error("find_extremum: unknown family value");

    const std::size_t n_omega = result.points_per_curve();
    const auto* curve = result.rows.data() + family * n_omega;
    const auto get = [&](std::size_t j) {
        switch (quantity) {
            case Quantity::transmission: return curve[j].T;
            case Quantity::reflection: return curve[j].R;
            case Quantity::absorption: return curve[j].A;
        }
        return 0.0;
    };

    std::size_t best = 0;
    for (std::size_t j = 1; j < n_omega; ++j)
        if (get(j) > get(best)) best = j;

    const bool interior = best > 0 && best + 1 < n_omega &&
                          get(best - 1) < get(best) && get(best + 1) < get(best);
    return {curve[best].omega, get(best), interior};
}

/// A bundled sweep matching one of the nine canned figures.
struct FigurePreset {
    std::string id;
    Quantity quantity;
    SweepSpec spec;
    std::string note;
};

inline const std::vector<std::string>& figure_preset_ids() {
    static const std::vector<std::string> ids = {"fig1", "fig2", "fig3", "fig4", "fig5",
                                                 "fig6", "fig7", "fig8", "fig9"};
    return ids;
}

/**
 * fig1-3: thickness family d = {1e-6, 0.9e-6, 0.8e-6} cm at theta = 0, p = 0.3.
 * fig4-6: angle family theta = {0, pi/4, 5pi/12} at d = 1e-6 cm, p = 0.3.
 * fig7-9: specularity family p = {0, 0.5, 0.8} at d = 1e-6 cm, theta = 0.
 * All: sodium, low_freq_simplified, 400 omega points on (0, 0.2 omega_p].
 */
inline FigurePreset figure_preset(std::string_view id) {
    SweepSpec spec;
    spec.material = sodium();
    spec.variant = ModelVariant::low_freq_simplified;
    spec.omega.max = 0.2 * spec.material.omega_p;
    spec.omega.count = 400;
    spec.omega.min = spec.omega.max / spec.omega.count;

    std::string note;
    if (id == "fig1" || id == "fig2" || id == "fig3") {
        spec.thickness = {1e-6, 0.9e-6, 0.8e-6};
        spec.angle = {0.0};
        spec.specularity = {0.3};
    } else if (id == "fig4" || id == "fig5" || id == "fig6") {
        spec.thickness = {1e-6};
        spec.angle = {0.0, pi / 4.0, 5.0 * pi / 12.0};
        spec.specularity = {0.3};
        note = "thickness d = 1e-6 cm assumed for the angle family";
    } else if (id == "fig7" || id == "fig8" || id == "fig9") {
        spec.thickness = {1e-6};
        spec.angle = {0.0};
        spec.specularity = {0.0, 0.5, 0.8};
    } else {
        throw validation_error("unknown preset id: " + std::string(id) +
                               " (expected fig1..fig9)");
    }

    Quantity quantity = Quantity::transmission;
    const char last = id.back();
    if (last == '2' || last == '5' || last == '8') quantity = Quantity::reflection;
    if (last == '3' || last == '6' || last == '9') quantity = Quantity::absorption;

    return {std::string(id), quantity, std::move(spec), std::move(note)};
}

}  // namespace filmwave
