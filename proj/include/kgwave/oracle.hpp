#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "kgwave/dispersion.hpp"
#include "kgwave/error.hpp"
#include "kgwave/exchange.hpp"
#include "kgwave/model.hpp"
#include "kgwave/quadrature.hpp"
#include "kgwave/special.hpp"
#include "kgwave/taylor.hpp"

namespace kgwave {

struct QuadratureControls {
    double epsilon = 1e-3;        // shift of the integration line above the real axis
    double omega_max = 0.0;       // truncation frequency; 0 selects 50 omega_sh
    int max_refinement = 40;      // bisection depth budget per initial panel
    double tol = 1e-7;            // target error relative to the field scale
    bool two_sided = false;       // integrate the full line instead of 2 Re of the right half
};

struct OracleResult {
    CVec2 u{};                    // field components; imaginary parts are the realness residue
    double error = 0.0;           // estimated absolute error
    bool converged = false;
    std::size_t evaluations = 0;
    double omega_max = 0.0;
};

/// Amplitude scale used to turn relative tolerances into absolute ones:
/// the near-front value (|f1| + |f2|) / (2 c2) of the decoupled solution.
inline double field_scale(const WaveguideParams& p)
{
    return std::max(std::fabs(p.f1) + std::fabs(p.f2), 1e-300) / (2.0 * p.c2);
}

namespace detail {

/// The two roots of D(omega, k) = 0 with Im k > 0 on the shifted line.
inline std::array<cplx, 2> upper_roots(cplx omega, const WaveguideParams& p)
{
    const auto r = roots_k(omega, p);
    std::array<cplx, 2> out{};
    int n = 0;
    for (const cplx& k : r) {
        if (k.imag() > 0.0) {
            if (n == 2) {
                n = 3;
                break;
            }
            out[static_cast<std::size_t>(n++)] = k;
        }
    }
    if (n != 2) {
        throw Error(ErrorCode::BranchTrackingFailure, "expected exactly two roots with Im k > 0");
    }
    return out;
}

/// Sum over the two decaying modes of h(omega, k) exp{i(k x - omega t)},
/// h = A / dD/dk.
inline CVec2 modal_integrand(cplx omega, double t, double x, const WaveguideParams& p)
{
    CVec2 s{};
    for (const cplx& k : upper_roots(omega, p)) {
        const cplx dk = dispersion_dk(omega, k, p);
        const auto a = amplitude_A(omega, k, p);
        const cplx e = std::exp(cplx(0.0, 1.0) * (k * x - omega * t));
        s[0] += a[0] / dk * e;
        s[1] += a[1] / dk * e;
    }
    return s;
}

/// Integral of the modal integrand from omega0 to infinity along the
/// horizontal line through omega0 (direction = +1) or from -infinity to omega0
/// (direction = -1), by two steps of integration by parts per mode.
/// Returns the value and the size of the last retained correction.
inline std::pair<CVec2, double> modal_tail(cplx omega0, double direction, double t, double x,
                                           const WaveguideParams& p)
{
    CVec2 total{};
    double correction = 0.0;
    const cplx I(0.0, 1.0);
    for (const cplx& k0 : upper_roots(omega0, p)) {
        const auto ks = branch_series<2>(omega0, k0, p);
        const auto w = Taylor<2>::variable(omega0);
        const auto dk = dispersion_dk(w, ks, p);
        const auto amp = amplitude_A(w, ks, p);
        const cplx phi1 = ks.derivative(1) * x - t;
        const cplx phi2 = ks.derivative(2) * x;
        const cplx e = std::exp(I * (k0 * x - omega0 * t));
        for (std::size_t j = 0; j < 2; ++j) {
            const auto h = amp[j] / dk;
            const cplx u0 = h[0] / (I * phi1);
            const cplx u1 = (h.derivative(1) * phi1 - h[0] * phi2) / (I * phi1 * phi1);
            const cplx second = u1 / (I * phi1);
            // F(omega0) e^{i phi} is the antiderivative at the finite end
            total[j] += -direction * e * (u0 - second);
            correction = std::max(correction, std::abs(e * second));
        }
    }
    return {total, correction};
}

inline std::vector<double> modal_breaks(double lo, double hi, double t, double x, const WaveguideParams& p)
{
    std::vector<double> pts{lo, hi};
    std::vector<double> special{p.omega1, p.omega2};
    if (p.mu < p.omega1 * p.omega2) {
        const auto cuts = cutoff_frequencies(p);
        special.insert(special.end(), cuts.begin(), cuts.end());
    }
    if (p.c1 != p.c2) {
        special.push_back(shestopalov(p).omega_sh);
    }
    for (double s : special) {
        for (double v : {s, -s}) {
            if (v > lo && v < hi) pts.push_back(v);
        }
    }
    std::sort(pts.begin(), pts.end());
    const double rate = std::max({std::fabs(t), x / p.c2, 1.0});
    const double width = std::min(0.5, 2.0 * pi / rate);
    std::vector<double> breaks;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double a = pts[i];
        const double b = pts[i + 1];
        const int n = std::max(1, static_cast<int>(std::ceil((b - a) / width)));
        for (int k = 0; k < n; ++k) {
            breaks.push_back(a + (b - a) * k / n);
        }
    }
    breaks.push_back(pts.back());
    return breaks;
}

} // namespace detail

/// Direct quadrature of the modal single-integral representation.
///
/// u = (i / 2 pi) * integral over Im omega = epsilon of the two-mode sum, which
/// by the symmetry omega -> -conj(omega) equals 2 Re of the right-half integral.
/// The line is truncated at +/- omega_max and the remainder is added by
/// integration by parts.
inline OracleResult field_modal_integral(double t, double x, const WaveguideParams& p,
                                         const QuadratureControls& controls = {})
{
    if (!(x > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "the modal representation needs x > 0");
    }
    if (!(controls.epsilon > 0.0) || !(controls.tol > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "epsilon and tol must be positive");
    }
    const double eps = controls.epsilon;
    double wmax = controls.omega_max;
    if (wmax <= 0.0) {
        const double base = p.c1 != p.c2 ? shestopalov(p).omega_sh : std::max(p.omega1, p.omega2);
        wmax = 50.0 * base;
    }
    const double scale = field_scale(p);
    const double abs_tol = pi * controls.tol * scale;
    const std::size_t budget = static_cast<std::size_t>(std::max(1, controls.max_refinement)) * 64;
    auto integrand = [&](double s) { return detail::modal_integrand(cplx(s, eps), t, x, p); };

    CVec2 body{};
    double quad_error = 0.0;
    std::size_t evaluations = 0;
    bool quad_ok = true;
    auto integrate = [&](double a, double b) {
        const auto breaks = detail::modal_breaks(a, b, t, x, p);
        const auto q = quad::adaptive_kronrod<CVec2>(integrand, breaks, abs_tol, 0.0,
                                                     (breaks.size() + 1) * budget);
        for (std::size_t j = 0; j < 2; ++j) body[j] += q.value[j];
        quad_error += q.error;
        evaluations += q.evaluations;
        quad_ok = quad_ok && q.converged;
    };
    integrate(controls.two_sided ? -wmax : 0.0, wmax);

    // Near a wave front the phase is almost stationary at large omega and the
    // tail expansion degrades; extend the window while it is not yet accurate.
    CVec2 tail{};
    double corr = 0.0;
    for (int ext = 0;; ++ext) {
        const auto [right, right_corr] = detail::modal_tail(cplx(wmax, eps), 1.0, t, x, p);
        tail = right;
        corr = right_corr;
        if (controls.two_sided) {
            const auto [left, left_corr] = detail::modal_tail(cplx(-wmax, eps), -1.0, t, x, p);
            for (std::size_t j = 0; j < 2; ++j) tail[j] += left[j];
            corr += left_corr;
        }
        if (corr <= 0.1 * abs_tol || controls.omega_max > 0.0 || ext >= 6) {
            break;
        }
        integrate(wmax, 2.0 * wmax);
        if (controls.two_sided) {
            integrate(-2.0 * wmax, -wmax);
        }
        wmax *= 2.0;
    }
    CVec2 integral{};
    for (std::size_t j = 0; j < 2; ++j) integral[j] = body[j] + tail[j];

    OracleResult r;
    const cplx factor(0.0, 1.0 / (2.0 * pi));
    for (std::size_t j = 0; j < 2; ++j) {
        const cplx v = factor * integral[j];
        r.u[j] = controls.two_sided ? v : cplx(2.0 * v.real(), 0.0);
    }
    const double mult = controls.two_sided ? 1.0 / (2.0 * pi) : 1.0 / pi;
    r.error = mult * (quad_error + corr);
    r.converged = quad_ok && r.error <= 10.0 * controls.tol * scale;
    r.evaluations = evaluations;
    r.omega_max = wmax;
    return r;
}

/// Causal solution of the scalar Klein-Gordon equation with a point impulse.
inline double scalar_kg_exact(double t, double x, double c, double omega)
{
    if (t <= 0.0 || t <= std::fabs(x) / c) {
        return 0.0;
    }
    const double z = omega * std::sqrt(t * t - x * x / (c * c));
    return -bessel_j0(z) / (2.0 * c);
}

/// Far-field form of the scalar solution, valid for z > S.
inline double scalar_kg_far(double t, double x, double c, double omega, double S = 3.0)
{
    const double arg = t * t - x * x / (c * c);
    const double z = (t > 0.0 && arg > 0.0) ? omega * std::sqrt(arg) : 0.0;
    if (!(z > S)) {
        throw Error(ErrorCode::OutsideFarZone, "scalar far field needs z > S");
    }
    const cplx e = std::exp(cplx(0.0, z - 0.25 * pi));
    const cplx v = -(e + std::conj(e)) / (2.0 * c * std::sqrt(2.0 * pi * z));
    return v.real();
}

struct JIntResult {
    CVec2 value{};
    cplx loop{};       // the cut-encircling integral itself
    double error = 0.0;
    bool converged = false;
};

/// Loop integral of exp{i(beta sqrt(1 + tau^2) - a tau)} / sqrt(1 + tau^2)
/// counter-clockwise around the cut [-i, i], with sqrt(1 + tau^2) ~ tau at
/// infinity. The loop is the ellipse tau = i sin(theta + i eta); the choice
/// tanh(eta) = -a / beta keeps |integrand| bounded by one.
inline quad::Result<cplx> cut_loop_integral(double a, double beta, double tol)
{
    double eta = 0.0;
    if (beta > 0.0 && std::fabs(a) < beta) {
        eta = std::atanh(-a / beta);
    }
    const cplx I(0.0, 1.0);
    auto f = [&](double theta) {
        const cplx th(theta, eta);
        return I * std::exp(a * std::sin(th) + I * beta * std::cos(th));
    };
    return quad::periodic_trapezoid(f, -0.5 * pi, 2.0 * pi, tol);
}

/// Quadrature of the exchange-pulse integral around the cut; the result is
/// the field-normalized right-half contribution, comparable with j_term.
inline JIntResult j_int_quadrature(double t, double x, const WaveguideParams& p,
                                   const QuadratureControls& controls = {})
{
    const auto cp = shestopalov(p);
    if (!inside_wedge(t, x, cp)) {
        throw Error(ErrorCode::OutsideWedge, "point lies outside x/v1 < t < x/v2");
    }
    const auto jp = j_parameters(t, x, p);
    const auto loop = cut_loop_integral(jp.a, jp.beta, std::min(controls.tol, 1e-12));
    if (!loop.converged) {
        throw Error(ErrorCode::NoConvergence, "cut-loop quadrature did not converge");
    }
    const auto amp = amplitude_A(cplx(cp.omega_sh), cplx(cp.k_sh), p);
    const cplx carrier = std::exp(cplx(0.0, cp.k_sh * x - cp.omega_sh * t));
    const cplx pre = j_loop_prefactor(p) * carrier * loop.value;
    JIntResult r;
    r.value = {pre * amp[0], pre * amp[1]};
    r.loop = loop.value;
    r.error = loop.error * std::abs(j_loop_prefactor(p)) * (std::abs(amp[0]) + std::abs(amp[1]));
    r.converged = true;
    return r;
}

} // namespace kgwave
