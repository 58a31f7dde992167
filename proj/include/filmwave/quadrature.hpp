#pragma once

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <queue>
#include <vector>

#include "filmwave/errors.hpp"

namespace filmwave {

/**
 * Request for the size-effect integral
 *
 *   I(w, p) = int_1^inf (1/t^3 - 1/t^5) (1 - e^{-wt}) / (1 - p e^{-wt}) dt
 *
 * with complex decay parameter w = d/l and specularity p.
 *
 * Re(w) >= 1e-6 is the validated range; p = 1 never reaches the quadrature
 * (handled analytically upstream).
 */
struct FuchsIntegralSpec {
    std::complex<double> w;
    double p = 0.0;
    double rel_tol = 1e-10;

    static constexpr double min_re_w = 1e-6;
    static constexpr double min_rel_tol = 1e-14;
    static constexpr double max_rel_tol = 1e-4;

    void validate() const {
        if (!(w.real() > 0.0)) throw validation_error("fuchs_integral: Re(w) must be > 0");
        if (w.real() < min_re_w)
            throw validation_error("fuchs_integral: Re(w) below validated range (>= 1e-6)");
        if (!(p >= 0.0 && p < 1.0))
            throw validation_error("fuchs_integral: p out of range [0, 1)");
        if (!(rel_tol >= min_rel_tol && rel_tol <= max_rel_tol))
            throw validation_error("fuchs_integral: rel_tol out of range [1e-14, 1e-4]");
    }
};

namespace detail {

inline std::atomic<std::uint64_t>& fuchs_counter() {
    static std::atomic<std::uint64_t> count{0};
    return count;
}

/// 1 - e^{-z} without cancellation for small |z|.
inline std::complex<double> one_minus_exp_neg(std::complex<double> z) {
    const double a = z.real();
    const double b = z.imag();
    if (a > 745.0) return {1.0, 0.0};  // e^{-a} underflows
    const double ea = std::exp(-a);
    const double s = std::sin(0.5 * b);
    // 1 - e^{-a} cos b = -expm1(-a) cos b + 2 sin^2(b/2)
    return {-std::expm1(-a) * std::cos(b) + 2.0 * s * s, ea * std::sin(b)};
}

struct GkEstimate {
    std::complex<double> integral;
    double error;
};

// Gauss-Kronrod 7/15 nodes and weights; odd-index abscissae carry the
// embedded 7-point Gauss rule.
inline constexpr double gk_abscissae[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
inline constexpr double gk_weights[8] = {
    0.02293532201052922, 0.06309209262997855, 0.10479001032225018, 0.14065325971552591,
    0.1690047266392679,  0.19035057806478541, 0.20443294007529889, 0.20948214108472782};
inline constexpr double gauss_weights[4] = {
    0.12948496616886969, 0.27970539148927666, 0.3818300505051189, 0.41795918367346938};

template <typename F>
GkEstimate gauss_kronrod_15(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const std::complex<double> fc = f(mid);
    std::complex<double> kronrod = gk_weights[7] * fc;
    std::complex<double> gauss = gauss_weights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * gk_abscissae[i];
        const std::complex<double> pair = f(mid - dx) + f(mid + dx);
        kronrod += gk_weights[i] * pair;
        if (i % 2 == 1) gauss += gauss_weights[i / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {kronrod, std::abs(kronrod - gauss)};
}

struct Segment {
    double a, b;
    std::complex<double> integral;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

}  // namespace detail

/// Number of fuchs_integral invocations since start (or last reset).
inline std::uint64_t fuchs_call_count() {
    return detail::fuchs_counter().load(std::memory_order_relaxed);
}

inline void reset_fuchs_call_count() {
    detail::fuchs_counter().store(0, std::memory_order_relaxed);
}

/**
 * Evaluate I(w, p) to the requested relative tolerance.
 *
 * Strategy: adaptive Gauss-Kronrod 7/15 on [1, t_cut] (geometric initial
 * segments, worst-error-first refinement) plus the analytic tail
 *
 *   int_{t_cut}^inf (t^-3 - t^-5) dt = 1/(2 t_cut^2) - 1/(4 t_cut^4),
 *
 * valid because the exponential factor deviates from 1 by less than
 * e^{-Re(w) t_cut} (1+p)/(1-p) < rel_tol/10 beyond the cut.
 *
 * Throws numerical_error when the subdivision budget (1e6 evaluations)
 * is exhausted before convergence.
 */
inline std::complex<double> fuchs_integral(const FuchsIntegralSpec& spec) {
    spec.validate();
    detail::fuchs_counter().fetch_add(1, std::memory_order_relaxed);

    const std::complex<double> w = spec.w;
    const double p = spec.p;
    const auto f = [w, p](double t) {
        const double u = 1.0 / t;
        const double u3 = u * u * u;
        const std::complex<double> num = detail::one_minus_exp_neg(w * t);
        return (u3 - u3 * u * u) * num / ((1.0 - p) + p * num);
    };

    const double t_cut =
        1.0 + std::log(10.0 * (1.0 + p) / ((1.0 - p) * spec.rel_tol)) / w.real();

    constexpr std::size_t max_evals = 1'000'000;
    std::size_t evals = 0;

    std::priority_queue<detail::Segment> queue;
    std::complex<double> total{};
    double total_err = 0.0;

    for (double a = 1.0; a < t_cut;) {
        const double b = std::min(2.0 * a, t_cut);
        const auto est = detail::gauss_kronrod_15(f, a, b);
        evals += 15;
        total += est.integral;
        total_err += est.error;
        queue.push({a, b, est.integral, est.error});
        a = b;
    }

    while (total_err > spec.rel_tol * std::max(std::abs(total), 1e-300)) {
        if (evals + 30 > max_evals)
            throw numerical_error("fuchs_integral: no convergence within evaluation budget");
        const detail::Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
            throw numerical_error("fuchs_integral: interval too small to subdivide");
        const auto left = detail::gauss_kronrod_15(f, worst.a, mid);
        const auto right = detail::gauss_kronrod_15(f, mid, worst.b);
        evals += 30;
        total += left.integral + right.integral - worst.integral;
        total_err += left.error + right.error - worst.error;
        queue.push({worst.a, mid, left.integral, left.error});
        queue.push({mid, worst.b, right.integral, right.error});
    }

    const double t2 = t_cut * t_cut;
    return total + (0.5 / t2 - 0.25 / (t2 * t2));
}

/**
 * 1/Phi(w) = 1/w - 3/(2 w^2) (1 - p) I(w, p).
 *
 * p = 1 returns 1/w exactly with no quadrature.
 */
inline std::complex<double> phi_inverse(std::complex<double> w, double p,
                                        double rel_tol = 1e-10) {
    if (!(p >= 0.0 && p <= 1.0)) throw validation_error("phi_inverse: p out of range [0, 1]");
    if (!(w.real() > 0.0)) throw validation_error("phi_inverse: Re(w) must be > 0");
    if (p == 1.0) return 1.0 / w;
    const std::complex<double> integral = fuchs_integral({w, p, rel_tol});
    return 1.0 / w - 1.5 * (1.0 - p) / (w * w) * integral;
}

}  // namespace filmwave
