#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "kgwave/dispersion.hpp"
#include "kgwave/error.hpp"
#include "kgwave/model.hpp"

namespace kgwave {

/// A stationary point of g(omega) = k(omega) - omega / V on one branch.
///
/// Indices: 1 is the branch-1 saddle; 2, 3, 4 are branch-2 saddles below the
/// group-velocity maximum, between the extrema, and above the minimum.
/// 5 and 6 are the complex saddles born where 2/3 and 3/4 merge.
struct SaddlePoint {
    cplx omega_star{};
    cplx k_star{};
    int branch = 1;
    int index = 1;
    cplx alpha{}; // d^2 k / d omega^2 at the saddle
    bool is_real = true;
    bool passed_by_contour = true;
};

struct DoiInterval {
    double a1 = 0.0;
    double a2 = 0.0;
    double direction = 0.0; // angle of the steepest-descent line through the saddle
};

inline cplx phase_g(BranchFunction& branch, cplx omega, double V)
{
    if (!(V > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "V must be positive");
    }
    return branch.evaluate(omega) - omega / V;
}

inline cplx phase_g(const SaddlePoint& sp, double V) { return sp.k_star - sp.omega_star / V; }

/// Group velocity of a branch at real omega above its cut-off.
inline double real_group_velocity(int branch, double omega, const WaveguideParams& p)
{
    const cplx k = real_branch_k(branch, omega, p);
    return group_velocity_at(cplx(omega, 0.0), k, p).real();
}

namespace detail {

inline SaddlePoint make_real_saddle(int branch, int index, double omega, const WaveguideParams& p)
{
    const cplx k = real_branch_k(branch, omega, p);
    const auto s = branch_series<2>(cplx(omega, 0.0), k, p);
    SaddlePoint sp;
    sp.omega_star = omega;
    sp.k_star = k;
    sp.branch = branch;
    sp.index = index;
    sp.alpha = cplx(s.derivative(2).real(), 0.0);
    sp.is_real = true;
    sp.passed_by_contour = true;
    return sp;
}

inline std::vector<double> real_roots_on_branch(int branch, double V, const WaveguideParams& p,
                                                const std::vector<double>& extra_nodes)
{
    const double c = branch == 1 ? p.c1 : p.c2;
    const double cut = branch_cutoff(branch, p);
    const double lo = cut * (1.0 + 1e-9);
    double hi = 50.0 * cut;
    constexpr int n = 4001;
    std::vector<double> grid;
    grid.reserve(n + extra_nodes.size());
    for (int i = 0; i < n; ++i) {
        grid.push_back(lo + (hi - lo) * i / (n - 1));
    }
    for (double w : extra_nodes) {
        if (w > lo && w < hi) grid.push_back(w);
    }
    // vg approaches c from below; push the window out until it brackets V
    if (V < c) {
        while (real_group_velocity(branch, hi, p) < V && hi < 1e12 * cut) {
            hi *= 2.0;
            grid.push_back(hi);
        }
    }
    std::sort(grid.begin(), grid.end());

    std::vector<double> roots;
    double prev_w = grid.front();
    double prev_f = real_group_velocity(branch, prev_w, p) - V;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double w = grid[i];
        const double f = real_group_velocity(branch, w, p) - V;
        if (f == 0.0) {
            roots.push_back(w);
        } else if (prev_f != 0.0 && (prev_f < 0.0) != (f < 0.0)) {
            double a = prev_w;
            double b = w;
            double fa = prev_f;
            for (int it = 0; it < 200 && b - a > 4e-16 * b; ++it) {
                const double m = 0.5 * (a + b);
                const double fm = real_group_velocity(branch, m, p) - V;
                if (fm == 0.0) {
                    a = b = m;
                    break;
                }
                if ((fm < 0.0) == (fa < 0.0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        prev_w = w;
        prev_f = f;
    }
    return roots;
}

} // namespace detail

/// Real saddle points for the ray x = V t, with indices 1..4.
inline std::vector<SaddlePoint> find_real_saddles(double V, const WaveguideParams& p)
{
    if (!(V > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "V must be positive");
    }
    std::optional<GroupVelocityExtrema> ext;
    std::vector<double> nodes;
    if (p.mu > 0.0) {
        ext = group_velocity_extrema(p);
        nodes = {ext->maximum.omega, ext->minimum.omega};
    }
    std::vector<SaddlePoint> out;
    for (double w : detail::real_roots_on_branch(1, V, p, {})) {
        out.push_back(detail::make_real_saddle(1, 1, w, p));
    }
    auto roots = detail::real_roots_on_branch(2, V, p, nodes);
    std::vector<std::pair<double, int>> degenerate;
    if (ext) {
        // V equal to an extremal velocity: the merging pair is a double root
        for (const auto* e : {&ext->maximum, &ext->minimum}) {
            if (std::fabs(e->velocity - V) > 1e-12 * V) continue;
            std::erase_if(roots, [&](double w) { return std::fabs(w - e->omega) < 1e-6 * e->omega; });
            const bool is_max = e->kind == ExtremumRecord::Kind::Maximum;
            degenerate.emplace_back(e->omega, is_max ? 2 : 3);
            degenerate.emplace_back(e->omega, is_max ? 3 : 4);
        }
    }
    for (double w : roots) {
        int index = 2;
        if (ext) {
            const double lo = std::min(ext->maximum.omega, ext->minimum.omega);
            const double hi = std::max(ext->maximum.omega, ext->minimum.omega);
            index = w < lo ? 2 : (w > hi ? 4 : 3);
        }
        out.push_back(detail::make_real_saddle(2, index, w, p));
    }
    for (const auto& [w, index] : degenerate) {
        out.push_back(detail::make_real_saddle(2, index, w, p));
    }
    std::sort(out.begin(), out.end(), [](const SaddlePoint& a, const SaddlePoint& b) { return a.index < b.index; });
    return out;
}

namespace detail {

// Newton iteration on k'(omega) = 1/V along branch 2, continued in V from the
// merge velocity so that each solve starts next to its answer.
inline std::optional<cplx> continue_complex_saddle(const ExtremumRecord& e, double V, double sign,
                                                   const WaveguideParams& p)
{
    BranchFunction branch(2, p);
    const double k3 = -2.0 * e.alpha;
    const double v0 = e.velocity;
    const int steps = std::max(1, static_cast<int>(std::ceil(std::fabs(V - v0) / 0.005)));
    cplx w;
    bool first = true;
    for (int s = 1; s <= steps; ++s) {
        const double Vs = v0 + (V - v0) * s / steps;
        if (first) {
            const double y = std::sqrt(2.0 * std::fabs(1.0 / Vs - 1.0 / v0) / std::fabs(k3));
            w = cplx(e.omega, sign * y);
            first = false;
        }
        bool ok = false;
        for (int it = 0; it < 60; ++it) {
            const auto ser = branch.series<2>(w);
            const cplx f = ser.derivative(1) - 1.0 / Vs;
            const cplx df = ser.derivative(2);
            if (std::abs(df) == 0.0) break;
            const cplx dw = f / df;
            w -= dw;
            if (std::abs(dw) < 1e-14 * std::abs(w)) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            return std::nullopt;
        }
    }
    return w;
}

} // namespace detail

/// Complex saddles continuing the merged real pair beyond a group-velocity
/// extremum: index 5 for v1' < V < c2, index 6 for V < v2'. Of each conjugate
/// pair only the saddle with Im g > 0 is returned.
inline std::vector<SaddlePoint> find_complex_saddles(double V, const WaveguideParams& p)
{
    if (!(V > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "V must be positive");
    }
    if (p.mu <= 0.0) {
        return {};
    }
    const auto ext = group_velocity_extrema(p);
    const ExtremumRecord* e = nullptr;
    int index = 0;
    if (V > ext.maximum.velocity && V < p.c2) {
        e = &ext.maximum;
        index = 5;
    } else if (V < ext.minimum.velocity) {
        e = &ext.minimum;
        index = 6;
    } else {
        return {};
    }
    std::optional<SaddlePoint> best;
    for (double sign : {1.0, -1.0}) {
        const auto w = detail::continue_complex_saddle(*e, V, sign, p);
        if (!w) {
            continue;
        }
        BranchFunction branch(2, p);
        const auto ser = branch.series<2>(*w);
        SaddlePoint sp;
        sp.omega_star = *w;
        sp.k_star = ser[0];
        sp.branch = 2;
        sp.index = index;
        sp.alpha = ser.derivative(2);
        sp.is_real = false;
        sp.passed_by_contour = true;
        if (phase_g(sp, V).imag() > 0.0) {
            best = sp;
        }
    }
    if (!best) {
        throw Error(ErrorCode::NoConvergence, "complex saddle continuation failed");
    }
    return {*best};
}

/// |Re(k_m x - omega_m t) - Re(k_n x - omega_n t)|.
inline double phase_difference(const SaddlePoint& m, const SaddlePoint& n, double t, double x)
{
    const cplx pm = m.k_star * x - m.omega_star * t;
    const cplx pn = n.k_star * x - n.omega_star * t;
    return std::fabs(pm.real() - pn.real());
}

inline DoiInterval doi_interval(const SaddlePoint& sp, double x, double S)
{
    const double a = std::abs(sp.alpha);
    if (a < 1e-12) {
        throw Error(ErrorCode::DegenerateCurvature, "vanishing curvature at the saddle");
    }
    if (!(x > 0.0) || S < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "need x > 0 and S >= 0");
    }
    const double half = std::sqrt(2.0 * S / (x * a));
    return {-half, half, 0.25 * pi - 0.5 * std::arg(sp.alpha)};
}

/// Saddles whose domains of influence can merge: adjacent branch-2 saddles
/// and the pair (1, 3) linked through the exchange region. A complex saddle
/// inherits the links of the real pair it was born from.
inline bool are_neighbors(int m, int n)
{
    auto members = [](int i) -> std::vector<int> {
        if (i == 5) return {2, 3};
        if (i == 6) return {3, 4};
        return {i};
    };
    if (m == n) {
        return false;
    }
    for (int a : members(m)) {
        for (int b : members(n)) {
            const int lo = std::min(a, b);
            const int hi = std::max(a, b);
            if ((lo == 2 && hi == 3) || (lo == 3 && hi == 4) || (lo == 1 && hi == 3)) {
                return true;
            }
        }
    }
    return false;
}

inline bool neighbors_overlap(const SaddlePoint& m, const SaddlePoint& n, double t, double x, double S)
{
    return are_neighbors(m.index, n.index) && phase_difference(m, n, t, x) < S;
}

} // namespace kgwave
