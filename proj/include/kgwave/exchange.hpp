#pragma once

#include <cmath>

#include "kgwave/error.hpp"
#include "kgwave/model.hpp"

namespace kgwave {

/// Local model of the avoided crossing at the Shestopalov point.
///
/// With omega' = omega - omega_sh the two sheets are approximated by
/// k = k_sh + s omega' +/- sqrt(delta^2 omega'^2 / 4 + gamma^2), where
/// s = (1/v1 + 1/v2) / 2, delta = 1/v2 - 1/v1 and gamma = mu / (2 c1 c2 k_sh).
/// Substituting omega' = tau / xi with xi = c1 c2 k_sh delta / mu turns the
/// square root into gamma sqrt(1 + tau^2).
struct JParameters {
    double omega_prime = 0.0; // stationary frequency offset of the local phase
    double k_prime = 0.0;     // wavenumber offset on the upper sheet at omega_prime
    double xi = 0.0;          // stretch factor
    double b = 0.0;           // Bessel argument
    double a = 0.0;           // coefficient of -i tau in the stretched phase
    double beta = 0.0;        // coefficient of i sqrt(1 + tau^2)
    double slowness_mean = 0.0;
    double slowness_gap = 0.0;
    double gamma = 0.0;
};

inline bool inside_wedge(double t, double x, const CharacteristicPoints& cp)
{
    return x > 0.0 && t > x / cp.v1 && t < x / cp.v2;
}

inline JParameters j_parameters(double t, double x, const WaveguideParams& p)
{
    if (p.mu <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "the exchange pulse needs mu > 0");
    }
    const auto cp = shestopalov(p);
    JParameters j;
    j.slowness_mean = 0.5 * (1.0 / cp.v1 + 1.0 / cp.v2);
    j.slowness_gap = 1.0 / cp.v2 - 1.0 / cp.v1;
    j.gamma = p.mu / (2.0 * p.c1 * p.c2 * cp.k_sh);
    j.xi = p.c1 * p.c2 * cp.k_sh * j.slowness_gap / p.mu;
    j.a = (t - j.slowness_mean * x) / j.xi;
    j.beta = x * j.gamma;
    const double b2 = j.beta * j.beta - j.a * j.a;
    j.b = b2 > 0.0 ? std::sqrt(b2) : 0.0;
    if (j.b > 0.0) {
        const double tau = j.a / j.b;
        j.omega_prime = tau / j.xi;
        j.k_prime = j.slowness_mean * j.omega_prime + j.gamma * std::sqrt(1.0 + tau * tau);
    }
    return j;
}

/// Two-sheet local approximation of k(omega) near the Shestopalov point.
/// sheet_sign = +1 selects the upper sheet, -1 the lower one.
inline cplx k_near_shestopalov(cplx omega, const WaveguideParams& p, int sheet_sign)
{
    const auto cp = shestopalov(p);
    const cplx w = omega - cp.omega_sh;
    const double s = 0.5 * (1.0 / cp.v1 + 1.0 / cp.v2);
    const double d = 1.0 / cp.v2 - 1.0 / cp.v1;
    const double g = p.mu / (2.0 * p.c1 * p.c2 * cp.k_sh);
    const cplx root = std::sqrt(0.25 * d * d * w * w + g * g);
    return cp.k_sh + s * w + (sheet_sign >= 0 ? 1.0 : -1.0) * root;
}

/// Constant multiplying A_j exp{i(k_sh x - omega_sh t)} times the cut-loop
/// integral in the field-normalized exchange term.
inline cplx j_loop_prefactor(const WaveguideParams& p)
{
    const auto cp = shestopalov(p);
    const double delta = 1.0 / cp.v2 - 1.0 / cp.v1;
    const double c = p.c1 * p.c1 * p.c2 * p.c2 * cp.k_sh * cp.k_sh * delta;
    return cplx(0.0, pi / (2.0 * c)) / (4.0 * pi * pi);
}

} // namespace kgwave
