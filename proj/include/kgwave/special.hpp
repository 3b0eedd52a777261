#pragma once

#include <cmath>

namespace kgwave {

namespace detail {

inline constexpr long double ai0 = 0.355028053887817239260063186004183176L;  // Ai(0)
inline constexpr long double aip0 = 0.258819403792806798405183560189203964L; // -Ai'(0)
inline constexpr double sqrt_pi = 1.77245385090551602729816748334114518;

inline double bessel_j0_series(double z)
{
    const long double q = -static_cast<long double>(z) * z / 4.0L;
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<long double>(k) * k);
        sum += term;
        if (std::fabs(term) < 1e-21L * std::fabs(sum) && std::fabs(term) < 1e-24L) {
            break;
        }
    }
    return static_cast<double>(sum);
}

// Hankel expansion J0(z) = sqrt(2/(pi z)) (P cos chi - Q sin chi), chi = z - pi/4.
inline double bessel_j0_asymptotic(double z)
{
    const double inv8z = 1.0 / (8.0 * z);
    double p = 0.0;
    double q = 0.0;
    double a = 1.0; // a_k / (8z)^k
    double last = 1e300;
    for (int k = 0; k < 60; ++k) {
        if (k > 0) {
            const double odd = 2.0 * k - 1.0;
            a *= odd * odd * inv8z / k;
        }
        if (std::fabs(a) > last) {
            break; // series started diverging
        }
        last = std::fabs(a);
        const double sign = (((k + 1) / 2) % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 0) {
            p += sign * a;
        } else {
            q += sign * a;
        }
        if (std::fabs(a) < 1e-18) {
            break;
        }
    }
    const double chi = z - 0.25 * 3.14159265358979323846;
    return std::sqrt(2.0 / (3.14159265358979323846 * z)) * (p * std::cos(chi) - q * std::sin(chi));
}

inline double airy_ai_maclaurin(double z)
{
    const long double x = z;
    const long double x3 = x * x * x;
    long double f = 1.0L;
    long double g = x;
    long double tf = 1.0L;
    long double tg = x;
    for (int k = 1; k < 400; ++k) {
        tf *= x3 / ((3.0L * k - 1.0L) * (3.0L * k));
        tg *= x3 / ((3.0L * k) * (3.0L * k + 1.0L));
        f += tf;
        g += tg;
        if (std::fabs(tf) + std::fabs(tg) < 1e-24L) {
            break;
        }
    }
    return static_cast<double>(ai0 * f - aip0 * g);
}

inline double airy_ai_asymptotic_decay(double z)
{
    const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
    double u = 1.0;
    double sum = 1.0;
    double term = 1.0;
    double last = 1.0;
    for (int k = 1; k < 80; ++k) {
        u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
        term = u / std::pow(zeta, k);
        if (term > last) {
            break;
        }
        last = term;
        sum += (k % 2 == 0 ? 1.0 : -1.0) * term;
        if (term < 1e-18) {
            break;
        }
    }
    return std::exp(-zeta) / (2.0 * sqrt_pi * std::pow(z, 0.25)) * sum;
}

inline double airy_ai_asymptotic_oscillatory(double z)
{
    const double x = -z;
    const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    double u = 1.0;
    double even = 1.0;
    double odd = 0.0;
    double last = 1.0;
    for (int k = 1; k < 80; ++k) {
        u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
        const double term = u / std::pow(zeta, k);
        if (term > last) {
            break;
        }
        last = term;
        // even k enter the sine series, odd k the cosine series; signs alternate in pairs
        const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 0) {
            even += sign * term;
        } else {
            odd += sign * term;
        }
        if (term < 1e-18) {
            break;
        }
    }
    const double phase = zeta + 0.25 * 3.14159265358979323846;
    return (std::sin(phase) * even - std::cos(phase) * odd) / (sqrt_pi * std::pow(x, 0.25));
}

} // namespace detail

/// Bessel function of the first kind, order zero, for real argument.
/// Power series up to |z| = 12, Hankel expansion beyond.
inline double bessel_j0(double z)
{
    const double a = std::fabs(z);
    return a <= 12.0 ? detail::bessel_j0_series(a) : detail::bessel_j0_asymptotic(a);
}

/// Airy function Ai for real argument. The Maclaurin series is summed in
/// extended precision on |z| <= 8; the exponential and oscillatory
/// asymptotic expansions take over beyond.
inline double airy_ai(double z)
{
    if (std::fabs(z) <= 8.0) {
        return detail::airy_ai_maclaurin(z);
    }
    return z > 0.0 ? detail::airy_ai_asymptotic_decay(z) : detail::airy_ai_asymptotic_oscillatory(z);
}

} // namespace kgwave
