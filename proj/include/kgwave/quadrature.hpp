#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <vector>

namespace kgwave::quad {

namespace detail {

// Kronrod 15-point abscissae (non-negative half) and weights, with the
// embedded 7-point Gauss weights at the odd Kronrod nodes.
inline constexpr std::array<double, 8> xgk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> wgk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> wg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class V>
double norm_of(const V& v)
{
    if constexpr (requires { v.size(); }) {
        double s = 0.0;
        for (const auto& e : v) s += std::abs(e);
        return s;
    } else {
        return std::abs(v);
    }
}

template <class V>
V scaled(const V& v, double s)
{
    if constexpr (requires { v.size(); }) {
        V r = v;
        for (auto& e : r) e *= s;
        return r;
    } else {
        return v * s;
    }
}

template <class V>
void accumulate(V& acc, const V& v, double w)
{
    if constexpr (requires { v.size(); }) {
        for (std::size_t i = 0; i < v.size(); ++i) acc[i] += v[i] * w;
    } else {
        acc += v * w;
    }
}

template <class V>
V difference(const V& a, const V& b)
{
    if constexpr (requires { a.size(); }) {
        V r = a;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
        return r;
    } else {
        return a - b;
    }
}

template <class V>
struct Segment {
    double a;
    double b;
    V value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class V, class F>
Segment<V> kronrod15(F& f, double a, double b)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    V kron{};
    V gauss{};
    const V fc = f(c);
    accumulate(kron, fc, wgk[7]);
    accumulate(gauss, fc, wg[3]);
    for (std::size_t j = 0; j < 7; ++j) {
        const V f1 = f(c - h * xgk[j]);
        const V f2 = f(c + h * xgk[j]);
        accumulate(kron, f1, wgk[j]);
        accumulate(kron, f2, wgk[j]);
        if (j % 2 == 1) {
            accumulate(gauss, f1, wg[j / 2]);
            accumulate(gauss, f2, wg[j / 2]);
        }
    }
    kron = scaled(kron, h);
    gauss = scaled(gauss, h);
    return {a, b, kron, norm_of(difference(kron, gauss))};
}

} // namespace detail

template <class V>
struct Result {
    V value{};
    double error = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature over a partition.
///
/// The initial panels are given by `breaks` (sorted, at least two entries).
/// The panel with the largest error estimate is bisected until the summed
/// estimate drops below max(abs_tol, rel_tol * |I|) or `max_segments` is hit.
template <class V, class F>
Result<V> adaptive_kronrod(F&& f, const std::vector<double>& breaks, double abs_tol, double rel_tol,
                           std::size_t max_segments = 2'000'000)
{
    std::priority_queue<detail::Segment<V>> heap;
    Result<V> out;
    V total{};
    double err = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (breaks[i + 1] <= breaks[i]) continue;
        auto seg = detail::kronrod15<V>(f, breaks[i], breaks[i + 1]);
        detail::accumulate(total, seg.value, 1.0);
        err += seg.error;
        heap.push(seg);
    }
    out.evaluations = 15 * heap.size();
    while (!heap.empty()) {
        const double target = std::max(abs_tol, rel_tol * detail::norm_of(total));
        if (err <= target) {
            out.converged = true;
            break;
        }
        if (heap.size() >= max_segments) {
            break;
        }
        auto worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            break; // interval exhausted at machine resolution
        }
        auto left = detail::kronrod15<V>(f, worst.a, mid);
        auto right = detail::kronrod15<V>(f, mid, worst.b);
        out.evaluations += 30;
        detail::accumulate(total, worst.value, -1.0);
        detail::accumulate(total, left.value, 1.0);
        detail::accumulate(total, right.value, 1.0);
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    if (heap.empty()) {
        out.converged = true;
    }
    out.value = total;
    out.error = err;
    return out;
}

/// Trapezoid rule over one period of a smooth periodic integrand, halving
/// the step until successive estimates differ by less than `tol` (absolute).
template <class F>
Result<std::complex<double>> periodic_trapezoid(F&& f, double start, double period, double tol,
                                                int min_points = 16, int max_levels = 20)
{
    Result<std::complex<double>> out;
    int n = min_points;
    std::complex<double> sum = 0.0;
    for (int i = 0; i < n; ++i) {
        sum += f(start + period * i / n);
    }
    out.evaluations = static_cast<std::size_t>(n);
    std::complex<double> estimate = sum * (period / n);
    for (int level = 0; level < max_levels; ++level) {
        std::complex<double> extra = 0.0;
        for (int i = 0; i < n; ++i) {
            extra += f(start + period * (i + 0.5) / n);
        }
        out.evaluations += static_cast<std::size_t>(n);
        sum += extra;
        n *= 2;
        const std::complex<double> next = sum * (period / n);
        out.error = std::abs(next - estimate);
        estimate = next;
        if (out.error < tol) {
            out.converged = true;
            break;
        }
    }
    out.value = estimate;
    return out;
}

/// Trapezoid rule on [-L, L] for an analytic integrand that is negligible
/// beyond +/-L, with step halving until two levels agree to `tol`.
template <class F>
Result<std::complex<double>> line_trapezoid(F&& f, double half_length, double tol, int min_points = 64,
                                            int max_levels = 22)
{
    Result<std::complex<double>> out;
    int n = min_points;
    double h = 2.0 * half_length / n;
    std::complex<double> sum = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double w = (i == 0 || i == n) ? 0.5 : 1.0;
        sum += w * f(-half_length + h * i);
    }
    out.evaluations = static_cast<std::size_t>(n + 1);
    std::complex<double> estimate = sum * h;
    for (int level = 0; level < max_levels; ++level) {
        std::complex<double> extra = 0.0;
        for (int i = 0; i < n; ++i) {
            extra += f(-half_length + h * (i + 0.5));
        }
        out.evaluations += static_cast<std::size_t>(n);
        sum += extra;
        n *= 2;
        h *= 0.5;
        const std::complex<double> next = sum * h;
        out.error = std::abs(next - estimate);
        estimate = next;
        if (out.error < tol) {
            out.converged = true;
            break;
        }
    }
    out.value = estimate;
    return out;
}

} // namespace kgwave::quad
