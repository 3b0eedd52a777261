#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace kgwave {

/// Truncated power series c0 + c1 s + ... + cN s^N in a complex variable.
///
/// Used to differentiate implicitly defined branches k(omega): plugging a
/// series for k into the polynomial D and solving order by order gives the
/// Taylor coefficients of k exactly, without finite differences.
template <std::size_t N>
struct Taylor {
    std::array<std::complex<double>, N + 1> c{};

    Taylor() = default;
    Taylor(std::complex<double> value) { c[0] = value; }
    Taylor(double value) { c[0] = value; }

    static Taylor variable(std::complex<double> at)
    {
        Taylor t(at);
        if constexpr (N >= 1) {
            t.c[1] = 1.0;
        }
        return t;
    }

    std::complex<double> operator[](std::size_t i) const { return c[i]; }

    /// n-th derivative at the expansion point.
    std::complex<double> derivative(std::size_t n) const
    {
        double fact = 1.0;
        for (std::size_t i = 2; i <= n; ++i) {
            fact *= static_cast<double>(i);
        }
        return c[n] * fact;
    }

    Taylor& operator+=(const Taylor& o)
    {
        for (std::size_t i = 0; i <= N; ++i) c[i] += o.c[i];
        return *this;
    }
    Taylor& operator-=(const Taylor& o)
    {
        for (std::size_t i = 0; i <= N; ++i) c[i] -= o.c[i];
        return *this;
    }
    Taylor& operator*=(std::complex<double> s)
    {
        for (auto& v : c) v *= s;
        return *this;
    }

    friend Taylor operator+(Taylor a, const Taylor& b) { return a += b; }
    friend Taylor operator-(Taylor a, const Taylor& b) { return a -= b; }
    friend Taylor operator-(Taylor a)
    {
        for (auto& v : a.c) v = -v;
        return a;
    }
    friend Taylor operator*(const Taylor& a, const Taylor& b)
    {
        Taylor r;
        for (std::size_t i = 0; i <= N; ++i) {
            for (std::size_t j = 0; i + j <= N; ++j) {
                r.c[i + j] += a.c[i] * b.c[j];
            }
        }
        return r;
    }
    friend Taylor operator*(Taylor a, double s) { return a *= s; }
    friend Taylor operator*(double s, Taylor a) { return a *= s; }
    friend Taylor operator*(Taylor a, std::complex<double> s) { return a *= s; }
    friend Taylor operator*(std::complex<double> s, Taylor a) { return a *= s; }
    friend Taylor operator+(Taylor a, double s)
    {
        a.c[0] += s;
        return a;
    }
    friend Taylor operator-(Taylor a, double s)
    {
        a.c[0] -= s;
        return a;
    }

    /// Series of 1/a; requires a[0] != 0.
    Taylor reciprocal() const
    {
        Taylor r;
        r.c[0] = 1.0 / c[0];
        for (std::size_t n = 1; n <= N; ++n) {
            std::complex<double> acc = 0.0;
            for (std::size_t j = 1; j <= n; ++j) {
                acc += c[j] * r.c[n - j];
            }
            r.c[n] = -acc / c[0];
        }
        return r;
    }

    friend Taylor operator/(const Taylor& a, const Taylor& b) { return a * b.reciprocal(); }
};

} // namespace kgwave
