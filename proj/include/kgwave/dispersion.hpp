#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "kgwave/error.hpp"
#include "kgwave/model.hpp"
#include "kgwave/taylor.hpp"

namespace kgwave {

/// The two values of k^2 solving D(omega, k) = 0, i.e. the roots of
/// c1^2 c2^2 K^2 - (a1 c2^2 + a2 c1^2) K + a1 a2 - mu^2 with a_j = omega^2 - Omega_j^2.
inline std::array<cplx, 2> k_squared_roots(cplx omega, const WaveguideParams& p)
{
    const double c1s = p.c1 * p.c1;
    const double c2s = p.c2 * p.c2;
    const cplx w2 = omega * omega;
    const cplx a1 = w2 - p.omega1 * p.omega1;
    const cplx a2 = w2 - p.omega2 * p.omega2;
    const double lead = c1s * c2s;
    const cplx b = a1 * c2s + a2 * c1s;
    const cplx c = a1 * a2 - p.mu * p.mu;
    const cplx diff = a1 * c2s - a2 * c1s;
    const cplx disc = diff * diff + 4.0 * lead * p.mu * p.mu;
    cplx root = std::sqrt(disc);
    if (std::real(std::conj(b) * root) < 0.0) {
        root = -root;
    }
    const cplx q = 0.5 * (b + root);
    if (q == cplx(0.0)) {
        return {cplx(0.0), cplx(0.0)};
    }
    return {q / lead, c / q};
}

/// All four roots of D(omega, k) = 0 in k, as {+ka, -ka, +kb, -kb}.
inline std::array<cplx, 4> roots_k(cplx omega, const WaveguideParams& p)
{
    const auto ks = k_squared_roots(omega, p);
    const cplx ka = std::sqrt(ks[0]);
    const cplx kb = std::sqrt(ks[1]);
    return {ka, -ka, kb, -kb};
}

/// Taylor coefficients of the branch k(omega) through the point (omega0, k0).
template <std::size_t N>
Taylor<N> branch_series(cplx omega0, cplx k0, const WaveguideParams& p)
{
    const cplx dk = dispersion_dk(omega0, k0, p);
    if (std::abs(dk) == 0.0) {
        throw Error(ErrorCode::BranchPointProximity, "dD/dk vanishes on the branch");
    }
    const auto w = Taylor<N>::variable(omega0);
    Taylor<N> k(k0);
    for (std::size_t n = 1; n <= N; ++n) {
        const auto d = dispersion_D(w, k, p);
        k.c[n] = -d.c[n] / dk;
    }
    return k;
}

/// Cut-off frequencies: the positive roots of D(omega, 0) = 0, ascending.
inline std::array<double, 2> cutoff_frequencies(const WaveguideParams& p)
{
    const double w1 = p.omega1 * p.omega1;
    const double w2 = p.omega2 * p.omega2;
    if (p.mu >= p.omega1 * p.omega2) {
        throw Error(ErrorCode::OverstrongCoupling, "mu >= Omega1 Omega2 drives a cut-off to zero");
    }
    const double s = w1 + w2;
    const double r = std::sqrt((w2 - w1) * (w2 - w1) + 4.0 * p.mu * p.mu);
    const double hi = 0.5 * (s + r);
    const double lo = (w1 * w2 - p.mu * p.mu) / hi; // product of the roots in omega^2
    return {std::sqrt(lo), std::sqrt(hi)};
}

/// Lowest real frequency at which branch m propagates. For mu > 0 branch 1
/// (the lower-k curve) owns the upper cut-off; for mu = 0 mode j owns Omega_j.
inline double branch_cutoff(int branch, const WaveguideParams& p)
{
    if (p.mu == 0.0) {
        return branch == 1 ? p.omega1 : p.omega2;
    }
    const auto cuts = cutoff_frequencies(p);
    return branch == 1 ? cuts[1] : cuts[0];
}

/// Branch value at real omega in closed form. Above the branch cut-off the
/// result is real and positive; below it the decaying root i|k| is returned.
inline cplx real_branch_k(int branch, double omega, const WaveguideParams& p)
{
    if (p.mu == 0.0) {
        const double c = branch == 1 ? p.c1 : p.c2;
        const double om = branch == 1 ? p.omega1 : p.omega2;
        const double ksq = (omega * omega - om * om) / (c * c);
        return ksq >= 0.0 ? cplx(std::sqrt(ksq), 0.0) : cplx(0.0, std::sqrt(-ksq));
    }
    const auto ks = k_squared_roots(cplx(omega, 0.0), p);
    double lo = ks[0].real();
    double hi = ks[1].real();
    if (lo > hi) {
        std::swap(lo, hi);
    }
    const double ksq = branch == 1 ? lo : hi;
    return ksq >= 0.0 ? cplx(std::sqrt(ksq), 0.0) : cplx(0.0, std::sqrt(-ksq));
}

/// v_gr = (dk/domega)^-1 = -dD/dk / dD/domega at a point of the dispersion surface.
inline cplx group_velocity_at(cplx omega, cplx k, const WaveguideParams& p)
{
    const cplx dw = dispersion_domega(omega, k, p);
    const cplx dk = dispersion_dk(omega, k, p);
    if (std::abs(dw) == 0.0) {
        throw Error(ErrorCode::BranchPointProximity, "dD/domega vanishes");
    }
    return -dk / dw;
}

/// A single-valued branch k_m(omega) of the dispersion relation.
///
/// Labels follow the high-frequency asymptote k_m -> omega / c_m. Real
/// frequencies are resolved in closed form. Complex frequencies are reached
/// by nearest-root continuation: vertically from the real axis when Re(omega)
/// lies above both cut-offs, otherwise along a straight segment from the
/// last evaluated point (the anchor). Not safe for concurrent use.
class BranchFunction {
public:
    BranchFunction(int label, const WaveguideParams& params) : label_(label), params_(params)
    {
        if (label != 1 && label != 2) {
            throw Error(ErrorCode::InvalidArgument, "branch label must be 1 or 2");
        }
        const double top = std::max({branch_cutoff(1, params), branch_cutoff(2, params),
                                     params.omega1, params.omega2});
        propagating_from_ = top;
        const double w = 10.0 * top;
        anchor_ = {cplx(w, 0.0), real_branch_k(label, w, params)};
    }

    int label() const { return label_; }
    const WaveguideParams& params() const { return params_; }
    std::pair<cplx, cplx> anchor() const { return anchor_; }

    cplx operator()(cplx omega) { return evaluate(omega); }

    cplx evaluate(cplx omega)
    {
        cplx k;
        if (omega.imag() == 0.0) {
            k = real_branch_k(label_, omega.real(), params_);
        } else if (omega.real() > propagating_from_) {
            const double r = omega.real();
            k = track(cplx(r, 0.0), real_branch_k(label_, r, params_), omega);
        } else {
            k = track(anchor_.first, anchor_.second, omega);
        }
        anchor_ = {omega, k};
        return k;
    }

    /// Taylor expansion of this branch about omega.
    template <std::size_t N>
    Taylor<N> series(cplx omega)
    {
        return branch_series<N>(omega, evaluate(omega), params_);
    }

    cplx group_velocity(cplx omega)
    {
        const cplx k = evaluate(omega);
        guard_branch_point(omega, k);
        return group_velocity_at(omega, k, params_);
    }

    /// d^2 k / d omega^2 on the branch.
    cplx curvature(cplx omega) { return series<2>(omega).derivative(2); }

private:
    void guard_branch_point(cplx omega, cplx k) const
    {
        const double scale = 1.0 + std::pow(std::abs(omega), 3);
        if (std::abs(dispersion_dk(omega, k, params_)) < 1e-13 * scale) {
            throw Error(ErrorCode::BranchPointProximity, "branch point within tolerance");
        }
    }

    cplx track(cplx from_w, cplx from_k, cplx to_w) const
    {
        const double dist = std::abs(to_w - from_w);
        if (dist == 0.0) {
            return from_k;
        }
        const double h_max = 0.02 * (1.0 + params_.mu) * std::max(1.0, std::abs(from_w) * 0.05);
        int steps = std::max(1, static_cast<int>(std::ceil(dist / h_max)));
        cplx w = from_w;
        cplx k = from_k;
        const cplx dir = (to_w - from_w) / static_cast<double>(steps);
        for (int i = 0; i < steps; ++i) {
            k = step(w, k, dir, 0);
            w += dir;
        }
        return k;
    }

    cplx step(cplx w, cplx k, cplx dw, int depth) const
    {
        constexpr int max_depth = 40;
        const cplx dk = dispersion_dk(w, k, params_);
        const cplx dwd = dispersion_domega(w, k, params_);
        const cplx slope = std::abs(dk) > 0.0 ? -dwd / dk : cplx(0.0);
        const cplx predicted = k + slope * dw;
        const auto roots = roots_k(w + dw, params_);
        std::array<double, 4> dist{};
        for (std::size_t i = 0; i < 4; ++i) {
            dist[i] = std::abs(roots[i] - predicted);
        }
        std::size_t best = 0;
        for (std::size_t i = 1; i < 4; ++i) {
            if (dist[i] < dist[best]) best = i;
        }
        double second = 1e300;
        for (std::size_t i = 0; i < 4; ++i) {
            if (i != best) second = std::min(second, dist[i]);
        }
        const bool ambiguous = second < 2.0 * dist[best];
        if (!ambiguous || std::abs(dw) < 1e-14) {
            if (ambiguous) {
                throw Error(ErrorCode::BranchPointProximity, "root continuation is ambiguous");
            }
            return roots[best];
        }
        if (depth >= max_depth) {
            throw Error(ErrorCode::BranchPointProximity, "step halving exhausted near a branch point");
        }
        const cplx half = 0.5 * dw;
        const cplx mid = step(w, k, half, depth + 1);
        return step(w + half, mid, half, depth + 1);
    }

    int label_;
    WaveguideParams params_;
    double propagating_from_ = 0.0;
    std::pair<cplx, cplx> anchor_;
};

/// Exchange branch points: zeros of the k^2 discriminant with k != 0.
/// They form a +/- and complex-conjugate quadruple; empty for mu = 0.
inline std::vector<cplx> exchange_branch_points(const WaveguideParams& p)
{
    if (p.mu == 0.0) {
        return {};
    }
    const double c1s = p.c1 * p.c1;
    const double c2s = p.c2 * p.c2;
    if (c1s == c2s) {
        throw Error(ErrorCode::DegenerateSpeeds, "c1 == c2");
    }
    const double re = (p.omega2 * p.omega2 * c1s - p.omega1 * p.omega1 * c2s) / (c1s - c2s);
    const double im = 2.0 * p.c1 * p.c2 * p.mu / (c1s - c2s);
    std::vector<cplx> out;
    for (double s : {1.0, -1.0}) {
        const cplx w = std::sqrt(cplx(re, s * im));
        out.push_back(w);
        out.push_back(-w);
    }
    return out;
}

/// A local extremum of the real group velocity (an inflection point of k(omega)).
struct ExtremumRecord {
    enum class Kind { Maximum, Minimum };
    Kind kind = Kind::Maximum;
    int branch = 2;
    double omega = 0.0;
    double k = 0.0;
    double velocity = 0.0;
    /// Cubic coefficient of the local model, -k'''(omega)/2.
    double alpha = 0.0;
};

struct GroupVelocityExtrema {
    ExtremumRecord maximum; // v1'
    ExtremumRecord minimum; // v2'
};

inline double real_curvature(int branch, double omega, const WaveguideParams& p)
{
    const cplx k = real_branch_k(branch, omega, p);
    return branch_series<2>(cplx(omega, 0.0), k, p).derivative(2).real();
}

inline ExtremumRecord make_extremum(int branch, double omega, const WaveguideParams& p)
{
    const cplx k = real_branch_k(branch, omega, p);
    const auto s = branch_series<3>(cplx(omega, 0.0), k, p);
    ExtremumRecord r;
    r.branch = branch;
    r.omega = omega;
    r.k = k.real();
    r.velocity = 1.0 / s.derivative(1).real();
    r.alpha = -0.5 * s.derivative(3).real();
    r.kind = s.derivative(3).real() < 0.0 ? ExtremumRecord::Kind::Minimum : ExtremumRecord::Kind::Maximum;
    return r;
}

/// Local maximum v1' and local minimum v2' of the group velocity near the
/// avoided crossing, found as sign changes of k''(omega) on the real branches.
inline GroupVelocityExtrema group_velocity_extrema(const WaveguideParams& p)
{
    if (p.mu <= 0.0) {
        throw Error(ErrorCode::ExtremumNotFound, "no avoided crossing for mu = 0");
    }
    const auto cp = shestopalov(p);
    const auto cuts = cutoff_frequencies(p);
    const double lo = std::max(cuts[1] * (1.0 + 1e-9), 0.5 * cp.omega_sh);
    const double hi = 1.5 * cp.omega_sh;
    constexpr int n = 2001;

    std::optional<ExtremumRecord> best_max;
    std::optional<ExtremumRecord> best_min;
    for (int branch : {1, 2}) {
        double prev_w = lo;
        double prev_c = real_curvature(branch, prev_w, p);
        for (int i = 1; i < n; ++i) {
            const double w = lo + (hi - lo) * i / (n - 1);
            const double c = real_curvature(branch, w, p);
            if ((prev_c < 0.0) != (c < 0.0)) {
                double a = prev_w;
                double b = w;
                double ca = prev_c;
                while (b - a > 1e-12 * std::max(1.0, b)) {
                    const double m = 0.5 * (a + b);
                    const double cm = real_curvature(branch, m, p);
                    if ((cm < 0.0) == (ca < 0.0)) {
                        a = m;
                        ca = cm;
                    } else {
                        b = m;
                    }
                }
                const auto rec = make_extremum(branch, 0.5 * (a + b), p);
                auto& slot = rec.kind == ExtremumRecord::Kind::Maximum ? best_max : best_min;
                if (!slot || std::fabs(rec.omega - cp.omega_sh) < std::fabs(slot->omega - cp.omega_sh)) {
                    slot = rec;
                }
            }
            prev_w = w;
            prev_c = c;
        }
    }
    if (!best_max || !best_min) {
        throw Error(ErrorCode::ExtremumNotFound, "no sign change of k'' in the scan window");
    }
    return {*best_max, *best_min};
}

struct StructuralPoints {
    std::array<double, 2> cutoffs{};
    std::vector<cplx> exchange_points;
    std::optional<GroupVelocityExtrema> extrema;
};

inline StructuralPoints structural_points(const WaveguideParams& p)
{
    StructuralPoints s;
    s.cutoffs = cutoff_frequencies(p);
    s.exchange_points = exchange_branch_points(p);
    if (p.mu > 0.0) {
        s.extrema = group_velocity_extrema(p);
    }
    return s;
}

struct DiagramRow {
    double omega;
    double k1;
    double k2;
    double vg1;
    double vg2;
};

/// Real dispersion diagram and group velocities on a uniform grid.
inline std::vector<DiagramRow> sample_diagram(const WaveguideParams& p, double omega_min, double omega_max,
                                              int n)
{
    const double top = std::max(branch_cutoff(1, p), branch_cutoff(2, p));
    if (omega_min <= top) {
        throw Error(ErrorCode::InvalidArgument, "omega_min must lie above both cut-offs");
    }
    if (n < 2 || omega_max <= omega_min) {
        throw Error(ErrorCode::InvalidArgument, "need n >= 2 and omega_max > omega_min");
    }
    std::vector<DiagramRow> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double w = omega_min + (omega_max - omega_min) * i / (n - 1);
        const cplx k1 = real_branch_k(1, w, p);
        const cplx k2 = real_branch_k(2, w, p);
        const double v1 = group_velocity_at(w, k1, p).real();
        const double v2 = group_velocity_at(w, k2, p).real();
        rows.push_back({w, k1.real(), k2.real(), v1, v2});
    }
    return rows;
}

} // namespace kgwave
