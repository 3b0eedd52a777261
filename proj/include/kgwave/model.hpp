#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "kgwave/error.hpp"

namespace kgwave {

using cplx = std::complex<double>;
using CVec2 = std::array<cplx, 2>;

inline constexpr double pi = 3.14159265358979323846;

/// Physical constants of the two-layer waveguide plus the excitation vector.
///
/// Layer j carries waves of speed c_j with cut-off frequency Omega_j; the
/// layers are coupled through mu. The point source is (f1, f2) delta(t) delta(x).
struct WaveguideParams {
    double c1 = 2.0;
    double c2 = 1.8;
    double omega1 = 3.0;
    double omega2 = 3.5;
    double mu = 0.5;
    double f1 = 1.0;
    double f2 = 0.0;

    WaveguideParams with_mu(double value) const
    {
        WaveguideParams p = *this;
        p.mu = value;
        return p;
    }
};

/// Reference working example: c1 > c2, Omega1 < Omega2, v1 < c2.
inline WaveguideParams default_preset() { return WaveguideParams{}; }

/// Shestopalov point and the unperturbed group velocities taken there.
struct CharacteristicPoints {
    double omega_sh = 0.0;
    double k_sh = 0.0;
    double v1 = 0.0;
    double v2 = 0.0;
};

enum class ExchangeRegime {
    SlowExchange, // v1 < c2, the fully supported case
    Critical,     // v1 == c2
    FastExchange, // v1 > c2
};

struct ValidatedParams {
    WaveguideParams params;
    CharacteristicPoints points;
    ExchangeRegime regime = ExchangeRegime::SlowExchange;
    std::vector<std::string> warnings;

    bool fully_supported() const { return regime == ExchangeRegime::SlowExchange; }
};

inline CharacteristicPoints shestopalov(const WaveguideParams& p)
{
    const double dc = p.c1 * p.c1 - p.c2 * p.c2;
    if (dc == 0.0) {
        throw Error(ErrorCode::DegenerateSpeeds, "c1 == c2 has no Shestopalov point");
    }
    const double w1 = p.omega1 * p.omega1;
    const double w2 = p.omega2 * p.omega2;
    CharacteristicPoints cp;
    cp.omega_sh = std::sqrt((p.c1 * p.c1 * w2 - p.c2 * p.c2 * w1) / dc);
    cp.k_sh = std::sqrt(std::max(0.0, (w2 - w1) / dc));
    const double ws2 = cp.omega_sh * cp.omega_sh;
    cp.v1 = p.c1 * std::sqrt(std::max(0.0, ws2 - w1)) / cp.omega_sh;
    cp.v2 = p.c2 * std::sqrt(std::max(0.0, ws2 - w2)) / cp.omega_sh;
    return cp;
}

inline ValidatedParams validate(const WaveguideParams& p)
{
    const std::array<std::pair<const char*, double>, 7> fields{{
        {"c1", p.c1},
        {"c2", p.c2},
        {"omega1", p.omega1},
        {"omega2", p.omega2},
        {"mu", p.mu},
        {"f1", p.f1},
        {"f2", p.f2},
    }};
    for (const auto& [name, value] : fields) {
        if (!std::isfinite(value)) {
            throw Error(ErrorCode::NonFiniteParameter, std::string(name) + " is not finite");
        }
    }
    for (const auto& [name, value] : {std::pair{"c1", p.c1}, std::pair{"c2", p.c2},
                                      std::pair{"omega1", p.omega1}, std::pair{"omega2", p.omega2}}) {
        if (value <= 0.0) {
            throw Error(ErrorCode::NonPositiveParameter, std::string(name) + " must be > 0");
        }
    }
    if (p.mu < 0.0) {
        throw Error(ErrorCode::NonPositiveParameter, "mu must be >= 0");
    }
    if (p.c1 <= p.c2) {
        throw Error(ErrorCode::OrderingViolation, "c1 must exceed c2");
    }
    if (p.omega1 >= p.omega2) {
        throw Error(ErrorCode::OrderingViolation, "omega1 must be below omega2");
    }

    ValidatedParams out;
    out.params = p;
    out.points = shestopalov(p);
    const double v1 = out.points.v1;
    if (v1 < p.c2) {
        out.regime = ExchangeRegime::SlowExchange;
    } else if (v1 == p.c2) {
        out.regime = ExchangeRegime::Critical;
        out.warnings.push_back("UnsupportedRegime: v1 == c2, zone logic assumes v1 < c2");
    } else {
        out.regime = ExchangeRegime::FastExchange;
        out.warnings.push_back("UnsupportedRegime: v1 > c2, zone logic assumes v1 < c2");
    }
    return out;
}

// Unperturbed dispersion factors P_j = omega^2 - c_j^2 k^2 - Omega_j^2.
template <class T>
T factor1(const T& omega, const T& k, const WaveguideParams& p)
{
    return omega * omega - p.c1 * p.c1 * k * k - p.omega1 * p.omega1;
}

template <class T>
T factor2(const T& omega, const T& k, const WaveguideParams& p)
{
    return omega * omega - p.c2 * p.c2 * k * k - p.omega2 * p.omega2;
}

/// D(omega, k) = P1 P2 - mu^2.
template <class T>
T dispersion_D(const T& omega, const T& k, const WaveguideParams& p)
{
    return factor1(omega, k, p) * factor2(omega, k, p) - p.mu * p.mu;
}

template <class T>
T dispersion_dk(const T& omega, const T& k, const WaveguideParams& p)
{
    return -2.0 * k * (p.c1 * p.c1 * factor2(omega, k, p) + p.c2 * p.c2 * factor1(omega, k, p));
}

template <class T>
T dispersion_domega(const T& omega, const T& k, const WaveguideParams& p)
{
    return 2.0 * omega * (factor1(omega, k, p) + factor2(omega, k, p));
}

/// Numerator vector adj(L) f of the transformed field. For the default
/// excitation (1, 0) this is (omega^2 - k^2 c2^2 - Omega2^2, -mu).
template <class T>
std::array<T, 2> amplitude_A(const T& omega, const T& k, const WaveguideParams& p)
{
    const T p1 = factor1(omega, k, p);
    const T p2 = factor2(omega, k, p);
    return {p2 * p.f1 - p.mu * p.f2, p1 * p.f2 - p.mu * p.f1};
}

} // namespace kgwave
