#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "kgwave/dispersion.hpp"
#include "kgwave/error.hpp"
#include "kgwave/exchange.hpp"
#include "kgwave/model.hpp"
#include "kgwave/oracle.hpp"
#include "kgwave/quadrature.hpp"
#include "kgwave/saddle.hpp"
#include "kgwave/special.hpp"
#include "kgwave/zones.hpp"

namespace kgwave {

/// Modal amplitude h_j = A_j / dD/dk at a point of the dispersion surface.
inline CVec2 modal_amplitude(cplx omega, cplx k, const WaveguideParams& p)
{
    const cplx dk = dispersion_dk(omega, k, p);
    const auto a = amplitude_A(omega, k, p);
    return {a[0] / dk, a[1] / dk};
}

/// Isolated saddle contribution (right half-plane, field-normalized):
/// (i / 2 pi) h sqrt(2 pi / (|alpha| x)) exp{i(k x - omega t) + sign(alpha) i pi / 4}.
/// Complex saddles use sqrt(2 pi / (-i alpha x)) on the principal branch,
/// which reduces to the same expression for real alpha.
inline CVec2 sp_term(const SaddlePoint& sp, double t, double x, const WaveguideParams& p)
{
    if (!(x > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "saddle terms need x > 0");
    }
    if (std::abs(sp.alpha) < 1e-12) {
        throw Error(ErrorCode::DegenerateCurvature, "vanishing curvature at the saddle");
    }
    const cplx I(0.0, 1.0);
    const CVec2 h = modal_amplitude(sp.omega_star, sp.k_star, p);
    cplx factor;
    if (sp.is_real) {
        const double a = sp.alpha.real();
        const double quarter = a > 0.0 ? 0.25 * pi : -0.25 * pi;
        factor = std::sqrt(2.0 * pi / (std::fabs(a) * x)) *
                 std::exp(I * (sp.k_star.real() * x - sp.omega_star.real() * t + quarter));
    } else {
        factor = std::sqrt(2.0 * pi / (-I * sp.alpha * x)) * std::exp(I * (sp.k_star * x - sp.omega_star * t));
    }
    const cplx pre = I / (2.0 * pi) * factor;
    return {pre * h[0], pre * h[1]};
}

/// Argument of the Airy function for the extremum e on the ray V = x / t.
inline double airy_argument(const ExtremumRecord& e, double t, double x)
{
    const double V = x / t;
    const double s = e.alpha > 0.0 ? 1.0 : -1.0;
    return s * std::cbrt(x * x / std::fabs(e.alpha)) * (1.0 / V - 1.0 / e.velocity);
}

/// Uniform contribution of a merging saddle pair near a group-velocity
/// extremum, from the cubic model k = k_e + (omega - omega_e)/v' - alpha (omega - omega_e)^3 / 3.
inline CVec2 airy_term(const ExtremumRecord& e, double t, double x, const WaveguideParams& p)
{
    if (!(x > 0.0) || !(t > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "Airy terms need t > 0 and x > 0");
    }
    if (std::fabs(e.alpha) < 1e-14) {
        throw Error(ErrorCode::DegenerateCurvature, "vanishing cubic coefficient at the extremum");
    }
    const bool minimum = e.kind == ExtremumRecord::Kind::Minimum;
    if ((minimum && e.alpha < 0.0) || (!minimum && e.alpha > 0.0)) {
        throw Error(ErrorCode::WrongSignCurvature, "cubic coefficient contradicts the extremum type");
    }
    const cplx I(0.0, 1.0);
    const CVec2 h = modal_amplitude(e.omega, e.k, p);
    const double amp = 2.0 * pi / std::cbrt(x * std::fabs(e.alpha)) * airy_ai(airy_argument(e, t, x));
    const cplx pre = I / (2.0 * pi) * amp * std::exp(I * (e.k * x - e.omega * t));
    return {pre * h[0], pre * h[1]};
}

/// Exchange pulse between the rays V = v2 and V = v1 (right half-plane,
/// field-normalized): -pi^2 / (c1^2 c2^2 k_sh^2 delta) A_j exp{i(k_sh x - omega_sh t)} J0(b) / (2 pi)^2.
inline CVec2 j_term(double t, double x, const WaveguideParams& p)
{
    if (p.mu <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "the exchange pulse needs mu > 0");
    }
    const auto cp = shestopalov(p);
    if (!inside_wedge(t, x, cp)) {
        throw Error(ErrorCode::OutsideWedge, "point lies outside x/v1 < t < x/v2");
    }
    const auto jp = j_parameters(t, x, p);
    const auto a = amplitude_A(cplx(cp.omega_sh), cplx(cp.k_sh), p);
    const cplx loop = cplx(0.0, 2.0 * pi) * bessel_j0(jp.b);
    const cplx pre = j_loop_prefactor(p) * std::exp(cplx(0.0, cp.k_sh * x - cp.omega_sh * t)) * loop;
    return {pre * a[0], pre * a[1]};
}

struct QResult {
    cplx value{}; // loop + open
    cplx loop{};  // counter-clockwise loop around the cut [-i, i]
    cplx open{};  // straight line from infinity e^{5i pi/4} to infinity e^{i pi/4}, right of the cut
    double error = 0.0;
    bool converged = false;
};

namespace detail {

/// sqrt(1 + tau^2) with the cut on [-i, i] and the branch ~ tau at infinity.
inline cplx sqrt_one_plus_sq(cplx tau)
{
    return tau * std::sqrt(1.0 + 1.0 / (tau * tau));
}

} // namespace detail

/// Q(beta, z) = integral over Gamma of exp{i(sqrt(1 + tau^2) + z tau + beta tau^2)} / sqrt(1 + tau^2).
///
/// Gamma enters from infinity along arg tau = 5 pi / 4, passes the cut on its
/// right, leaves along arg tau = pi / 4, and additionally encircles the cut
/// counter-clockwise. For beta = 0 the open part diverges and only the loop is
/// returned.
inline QResult q_function(double beta, double z, const QuadratureControls& controls = {})
{
    if (beta < 0.0 || !std::isfinite(beta) || !std::isfinite(z)) {
        throw Error(ErrorCode::InvalidArgument, "Q needs finite beta >= 0 and finite z");
    }
    const double tol = std::min(controls.tol, 1e-10);
    const cplx I(0.0, 1.0);
    QResult r;

    const double eta = std::atanh(std::clamp(z, -0.95, 0.95));
    auto loop_f = [&](double theta) {
        const cplx th(theta, eta);
        const cplx tau = I * std::sin(th);
        return I * std::exp(I * (std::cos(th) + z * tau + beta * tau * tau));
    };
    const auto loop = quad::periodic_trapezoid(loop_f, -0.5 * pi, 2.0 * pi, tol, 16, 24);
    r.loop = loop.value;
    r.error = loop.error;
    r.converged = loop.converged;

    if (beta > 0.0) {
        const double d = 1.5;
        const cplx dir = std::exp(I * 0.25 * pi);
        const double c = std::sqrt(2.0) * beta * d + (1.0 + std::fabs(z)) / std::sqrt(2.0);
        const double L = (c + std::sqrt(c * c + 4.0 * beta * 40.0)) / (2.0 * beta) + 1.0;
        auto line_f = [&](double s) {
            const cplx tau = d + s * dir;
            const cplx f = detail::sqrt_one_plus_sq(tau);
            return std::exp(I * (f + z * tau + beta * tau * tau)) / f * dir;
        };
        const auto open = quad::line_trapezoid(line_f, L, tol, 64, 24);
        r.open = open.value;
        r.error += open.error;
        r.converged = r.converged && open.converged;
    }
    r.value = r.loop + r.open;
    if (!r.converged) {
        throw Error(ErrorCode::NoConvergence, "Q quadrature did not converge");
    }
    return r;
}

/// Field at one point with the per-term breakdown.
struct FieldValue {
    std::array<double, 2> u{};
    ZoneLabel label;
    std::vector<TermDescriptor> terms;
    bool from_oracle = false;
    bool converged = true;
    double oracle_error = 0.0;
};

/// Group-velocity extrema are needed for every Airy term; compute once per params.
struct FieldContext {
    WaveguideParams params;
    std::optional<GroupVelocityExtrema> extrema;
    QuadratureControls controls;

    explicit FieldContext(const WaveguideParams& p, QuadratureControls c = {}) : params(p), controls(c)
    {
        if (p.mu > 0.0) {
            extrema = group_velocity_extrema(p);
        }
    }
};

inline FieldValue assemble_field(double t, double x, const SaddleSet& set, const FieldContext& ctx, double S = 3.0)
{
    const auto& p = ctx.params;
    if (!(t > 0.0) || !(x > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "field assembly needs t > 0 and x > 0");
    }
    auto cls = classify(t, set, p, S);
    FieldValue out;
    out.label = cls.label;
    if (cls.label.kind == ZoneKind::Zero) {
        return out;
    }
    if (cls.label.kind == ZoneKind::B || cls.label.kind == ZoneKind::Q) {
        const auto o = field_modal_integral(t, x, p, ctx.controls);
        out.u = {o.u[0].real(), o.u[1].real()};
        out.from_oracle = true;
        out.converged = o.converged;
        out.oracle_error = o.error;
        for (auto& term : cls.terms) {
            term.value = {cplx(0.5 * out.u[0]), cplx(0.5 * out.u[1])};
        }
        out.terms = std::move(cls.terms);
        return out;
    }
    CVec2 sum{};
    for (auto& term : cls.terms) {
        switch (term.kind) {
        case TermKind::SP:
        case TermKind::SPe: term.value = sp_term(term.saddles.front(), t, x, p); break;
        case TermKind::Ai: {
            const auto& e = term.trigger == "overlap(2,3)" ? ctx.extrema->maximum : ctx.extrema->minimum;
            term.value = airy_term(e, t, x, p);
            break;
        }
        case TermKind::J: term.value = j_term(t, x, p); break;
        case TermKind::Q:
        case TermKind::B: break;
        }
        sum[0] += term.value[0];
        sum[1] += term.value[1];
    }
    out.u = {2.0 * sum[0].real(), 2.0 * sum[1].real()};
    out.terms = std::move(cls.terms);
    return out;
}

inline FieldValue assemble_field(double t, double x, const WaveguideParams& p, double S = 3.0,
                                 const QuadratureControls& controls = {})
{
    if (!(t > 0.0) || !(x > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "field assembly needs t > 0 and x > 0");
    }
    const FieldContext ctx(p, controls);
    return assemble_field(t, x, saddle_set(x / t, p), ctx, S);
}

} // namespace kgwave
