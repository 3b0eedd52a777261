#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kgwave/dispersion.hpp"
#include "kgwave/error.hpp"
#include "kgwave/model.hpp"
#include "kgwave/parallel.hpp"
#include "kgwave/saddle.hpp"

namespace kgwave {

enum class TermKind { SP, SPe, Ai, J, Q, B };

inline const char* to_string(TermKind k)
{
    switch (k) {
    case TermKind::SP: return "SP";
    case TermKind::SPe: return "SPe";
    case TermKind::Ai: return "Ai";
    case TermKind::J: return "J";
    case TermKind::Q: return "Q";
    case TermKind::B: return "B";
    }
    return "?";
}

/// One asymptotic term active at a point. `value` is the field-normalized
/// right-half-plane contribution and is filled in by the field assembly.
struct TermDescriptor {
    TermKind kind = TermKind::SP;
    std::vector<int> indices;
    std::vector<SaddlePoint> saddles;
    CVec2 value{};
    std::string trigger;
};

enum class ZoneKind { Zero, SP, Ai, J, Q, B };

struct ZoneLabel {
    ZoneKind kind = ZoneKind::Zero;
    int sp_count = 0;  // isolated real saddle terms
    int spe_count = 0; // isolated complex saddle terms

    std::string name() const
    {
        switch (kind) {
        case ZoneKind::Zero: return "zero";
        case ZoneKind::B: return "B";
        case ZoneKind::Q: return "Q";
        default: break;
        }
        std::string s;
        auto add = [&s](const std::string& part) {
            if (!s.empty()) s += "+";
            s += part;
        };
        if (kind == ZoneKind::J) add("J");
        if (kind == ZoneKind::Ai) add("Ai");
        if (sp_count == 1) add("SP");
        if (sp_count > 1) add(std::to_string(sp_count) + "SP");
        if (spe_count == 1) add("SPe");
        if (spe_count > 1) add(std::to_string(spe_count) + "SPe");
        return s;
    }

    bool operator==(const ZoneLabel& o) const
    {
        return kind == o.kind && sp_count == o.sp_count && spe_count == o.spe_count;
    }
    bool operator!=(const ZoneLabel& o) const { return !(*this == o); }
};

/// Letter hierarchy of the matrix diagram: SP/SPe <- Ai <- Q <- B and J <- B.
inline std::optional<TermKind> parent_of(TermKind k)
{
    switch (k) {
    case TermKind::SP:
    case TermKind::SPe: return TermKind::Ai;
    case TermKind::Ai: return TermKind::Q;
    case TermKind::Q:
    case TermKind::J: return TermKind::B;
    case TermKind::B: return std::nullopt;
    }
    return std::nullopt;
}

inline std::optional<TermKind> parent_of(const ZoneLabel& label)
{
    switch (label.kind) {
    case ZoneKind::SP: return label.sp_count > 0 ? parent_of(TermKind::SP) : parent_of(TermKind::SPe);
    case ZoneKind::Ai: return parent_of(TermKind::Ai);
    case ZoneKind::J: return parent_of(TermKind::J);
    case ZoneKind::Q: return parent_of(TermKind::Q);
    case ZoneKind::B: return std::nullopt;
    case ZoneKind::Zero: return std::nullopt;
    }
    return std::nullopt;
}

enum class ScalarZone { Zero, Far, Bessel, Near };

inline const char* to_string(ScalarZone z)
{
    switch (z) {
    case ScalarZone::Zero: return "zero";
    case ScalarZone::Far: return "far";
    case ScalarZone::Bessel: return "bessel";
    case ScalarZone::Near: return "near";
    }
    return "?";
}

inline std::optional<ScalarZone> parent_of(ScalarZone z)
{
    if (z == ScalarZone::Far || z == ScalarZone::Near) {
        return ScalarZone::Bessel;
    }
    return std::nullopt;
}

/// Parent of a letter given by name ("SP", "Ai", ..., "far", "bessel");
/// the empty string stands for the root.
inline std::string parent_of(const std::string& label)
{
    static const std::map<std::string, std::string> table{
        {"SP", "Ai"}, {"SPe", "Ai"}, {"Ai", "Q"}, {"Q", "B"}, {"J", "B"},
        {"B", ""},    {"far", "bessel"}, {"near", "bessel"}, {"bessel", ""},
    };
    const auto it = table.find(label);
    if (it == table.end()) {
        throw Error(ErrorCode::UnknownLabel, "unknown zone label '" + label + "'");
    }
    return it->second;
}

/// All saddles relevant on one ray; they depend on V only.
struct SaddleSet {
    double V = 0.0;
    std::vector<SaddlePoint> real;
    std::vector<SaddlePoint> complex;
    bool in_wedge = false;
};

inline SaddleSet saddle_set(double V, const WaveguideParams& p)
{
    SaddleSet s;
    s.V = V;
    s.real = find_real_saddles(V, p);
    if (V < p.c1) {
        s.complex = find_complex_saddles(V, p);
    }
    if (p.mu > 0.0) {
        const auto cp = shestopalov(p);
        s.in_wedge = V > cp.v2 && V < cp.v1;
    }
    return s;
}

struct Classification {
    ZoneLabel label;
    std::vector<TermDescriptor> terms;
};

namespace detail {

inline const SaddlePoint* find_index(const std::vector<const SaddlePoint*>& all, int index)
{
    for (const auto* s : all) {
        if (s->index == index) return s;
    }
    return nullptr;
}

} // namespace detail

/// Decision tree over the merge links (2,3), (3,4) and (1,3).
///
/// A complex saddle stands for the real pair it was born from: its own link
/// is active while 2 x Im g < S, and its links to other saddles are those of
/// its members, measured with real parts of the phase.
inline Classification classify(double t, const SaddleSet& set, const WaveguideParams& p, double S = 3.0)
{
    (void)p;
    Classification out;
    std::vector<const SaddlePoint*> all;
    for (const auto& s : set.real) all.push_back(&s);
    for (const auto& s : set.complex) all.push_back(&s);
    if (all.empty()) {
        out.label.kind = ZoneKind::Zero;
        return out;
    }
    const double x = set.V * t;

    bool e23 = false;
    bool e34 = false;
    bool e13 = false;
    // the nodes covered by each active link
    std::vector<int> n23;
    std::vector<int> n34;
    std::vector<int> n13;
    auto mark = [&](int a, int b, int via_a, int via_b) {
        const int lo = std::min(via_a, via_b);
        const int hi = std::max(via_a, via_b);
        if (lo == 2 && hi == 3) {
            e23 = true;
            n23 = {a, b};
        } else if (lo == 3 && hi == 4) {
            e34 = true;
            n34 = {a, b};
        } else if (lo == 1 && hi == 3) {
            e13 = true;
            n13 = {a, b};
        }
    };
    auto members = [](int i) -> std::vector<int> {
        if (i == 5) return {2, 3};
        if (i == 6) return {3, 4};
        return {i};
    };
    for (const auto* s : all) {
        if (!s->is_real && 2.0 * x * std::fabs(phase_g(*s, set.V).imag()) < S) {
            const auto m = members(s->index);
            mark(s->index, s->index, m[0], m[1]);
        }
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (!neighbors_overlap(*all[i], *all[j], t, x, S)) continue;
            for (int a : members(all[i]->index)) {
                for (int b : members(all[j]->index)) {
                    mark(all[i]->index, all[j]->index, a, b);
                }
            }
        }
    }

    auto isolated_terms = [&](const std::vector<int>& absorbed) {
        for (const auto* s : all) {
            if (std::find(absorbed.begin(), absorbed.end(), s->index) != absorbed.end()) continue;
            TermDescriptor d;
            d.kind = s->is_real ? TermKind::SP : TermKind::SPe;
            d.indices = {s->index};
            d.saddles = {*s};
            d.trigger = "isolated";
            (s->is_real ? out.label.sp_count : out.label.spe_count) += 1;
            out.terms.push_back(std::move(d));
        }
    };
    auto unique_nodes = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };

    const int links = static_cast<int>(e23) + static_cast<int>(e34) + static_cast<int>(e13);
    if (links == 3 || (e23 && e34)) {
        out.label.kind = ZoneKind::B;
        out.terms.push_back({TermKind::B, {}, {}, {}, e13 ? "overlap(all)" : "overlap(2,3)+(3,4)"});
        return out;
    }
    if (e13 && (e23 || e34)) {
        out.label.kind = ZoneKind::Q;
        std::vector<int> nodes = n13;
        const auto& other = e23 ? n23 : n34;
        nodes.insert(nodes.end(), other.begin(), other.end());
        out.terms.push_back({TermKind::Q, unique_nodes(nodes), {}, {},
                             e23 ? "overlap(1,3)+(2,3)" : "overlap(1,3)+(3,4)"});
        return out;
    }
    if (e13) {
        if (!set.in_wedge) {
            out.label.kind = ZoneKind::B;
            out.terms.push_back({TermKind::B, {}, {}, {}, "overlap(1,3) outside the exchange wedge"});
            return out;
        }
        out.label.kind = ZoneKind::J;
        const auto nodes = unique_nodes(n13);
        out.terms.push_back({TermKind::J, nodes, {}, {}, "overlap(1,3)"});
        isolated_terms(nodes);
        return out;
    }
    if (e23 || e34) {
        out.label.kind = ZoneKind::Ai;
        const auto nodes = unique_nodes(e23 ? n23 : n34);
        TermDescriptor d;
        d.kind = TermKind::Ai;
        d.indices = nodes;
        d.trigger = e23 ? "overlap(2,3)" : "overlap(3,4)";
        for (int i : nodes) {
            if (const auto* s = detail::find_index(all, i)) d.saddles.push_back(*s);
        }
        out.terms.push_back(std::move(d));
        isolated_terms(nodes);
        return out;
    }
    out.label.kind = ZoneKind::SP;
    isolated_terms({});
    return out;
}

inline Classification classify(double t, double V, const WaveguideParams& p, double S = 3.0)
{
    if (!(t > 0.0) || !(V > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "classify needs t > 0 and V > 0");
    }
    return classify(t, saddle_set(V, p), p, S);
}

struct BoundaryPoint {
    double t = 0.0;
    double V = 0.0;
    std::string from; // label on the smaller-t side
    std::string to;
};

struct BoundaryPolyline {
    std::string from;
    std::string to;
    std::vector<std::pair<double, double>> points; // (t, V)
};

struct ZoneDiagram {
    std::vector<double> t;
    std::vector<double> V;
    std::vector<std::vector<ZoneLabel>> cells; // cells[iV][it]
    std::vector<BoundaryPoint> crossings;
    std::vector<BoundaryPolyline> boundaries;
    bool monotone = true; // every boundary crossed at most once per row
};

inline std::vector<double> linspace(double a, double b, int n)
{
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        v.push_back(n == 1 ? a : a + (b - a) * i / (n - 1));
    }
    return v;
}

namespace detail {

inline std::vector<BoundaryPolyline> join_crossings(const std::vector<BoundaryPoint>& pts,
                                                    const std::vector<double>& Vs)
{
    std::map<std::pair<std::string, std::string>, std::vector<const BoundaryPoint*>> groups;
    for (const auto& b : pts) {
        groups[{b.from, b.to}].push_back(&b);
    }
    std::vector<BoundaryPolyline> out;
    for (auto& [key, list] : groups) {
        std::stable_sort(list.begin(), list.end(),
                         [](const BoundaryPoint* a, const BoundaryPoint* b) { return a->V < b->V; });
        BoundaryPolyline line{key.first, key.second, {}};
        std::size_t last_row = 0;
        for (const auto* b : list) {
            const auto row = static_cast<std::size_t>(
                std::lower_bound(Vs.begin(), Vs.end(), b->V) - Vs.begin());
            if (!line.points.empty() && row != last_row + 1) {
                out.push_back(line);
                line.points.clear();
            }
            line.points.emplace_back(b->t, b->V);
            last_row = row;
        }
        if (!line.points.empty()) out.push_back(line);
    }
    return out;
}

} // namespace detail

/// Classify one row of constant V and locate its label changes in t.
/// Returns false when some boundary is crossed more than once.
inline bool classify_row(ZoneDiagram& d, std::size_t iv, const WaveguideParams& p, double S,
                         std::vector<BoundaryPoint>& crossings)
{
    const double V = d.V[iv];
    const auto set = saddle_set(V, p);
    auto& row = d.cells[iv];
    row.resize(d.t.size());
    for (std::size_t it = 0; it < d.t.size(); ++it) {
        row[it] = classify(d.t[it], set, p, S).label;
    }
    std::map<std::pair<std::string, std::string>, int> seen;
    bool monotone = true;
    for (std::size_t it = 0; it + 1 < d.t.size(); ++it) {
        if (row[it] == row[it + 1]) continue;
        double a = d.t[it];
        double b = d.t[it + 1];
        const ZoneLabel left = row[it];
        while (b - a > 1e-3 * a) {
            const double m = 0.5 * (a + b);
            if (classify(m, set, p, S).label == left) {
                a = m;
            } else {
                b = m;
            }
        }
        const std::string from = left.name();
        const std::string to = classify(b, set, p, S).label.name();
        crossings.push_back({0.5 * (a + b), V, from, to});
        if (++seen[{from, to}] > 1) {
            monotone = false;
        }
    }
    return monotone;
}

inline ZoneDiagram zone_diagram(const WaveguideParams& p, std::pair<double, double> t_range,
                                std::pair<double, double> V_range, int nt, int nV, double S = 3.0,
                                int threads = 1)
{
    if (!(t_range.first > 0.0) || !(V_range.first > 0.0) || t_range.second < t_range.first ||
        V_range.second < V_range.first || nt < 1 || nV < 1) {
        throw Error(ErrorCode::InvalidArgument, "zone diagram ranges must be positive and ordered");
    }
    ZoneDiagram d;
    d.t = linspace(t_range.first, t_range.second, nt);
    d.V = linspace(V_range.first, V_range.second, nV);
    d.cells.resize(d.V.size());
    std::vector<std::vector<BoundaryPoint>> rows(d.V.size());
    std::vector<char> ok(d.V.size(), 1);
    parallel_for(d.V.size(), threads, [&](std::size_t iv) { ok[iv] = classify_row(d, iv, p, S, rows[iv]); });
    for (std::size_t iv = 0; iv < d.V.size(); ++iv) {
        d.crossings.insert(d.crossings.end(), rows[iv].begin(), rows[iv].end());
        d.monotone = d.monotone && ok[iv];
    }
    const auto& crossings = d.crossings;
    d.boundaries = detail::join_crossings(crossings, d.V);
    return d;
}

/// Zones of the scalar Klein-Gordon solution by z = Omega sqrt(t^2 - x^2/c^2).
inline ScalarZone scalar_zone_classify(double t, double x, double c, double omega, double S = 3.0)
{
    if (!(t > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "scalar zones need t > 0");
    }
    if (t <= std::fabs(x) / c) {
        return ScalarZone::Zero;
    }
    const double z = omega * std::sqrt(t * t - x * x / (c * c));
    if (z > S) return ScalarZone::Far;
    if (z < 1.0 / S) return ScalarZone::Near;
    return ScalarZone::Bessel;
}

struct ScalarZoneDiagram {
    std::vector<double> t;
    std::vector<double> V;
    std::vector<std::vector<ScalarZone>> cells; // cells[iV][it]
};

inline ScalarZoneDiagram scalar_zone_diagram(double c, double omega, std::pair<double, double> t_range,
                                             std::pair<double, double> V_range, int nt, int nV,
                                             double S = 3.0)
{
    ScalarZoneDiagram d;
    d.t = linspace(t_range.first, t_range.second, nt);
    d.V = linspace(V_range.first, V_range.second, nV);
    d.cells.assign(d.V.size(), std::vector<ScalarZone>(d.t.size(), ScalarZone::Zero));
    for (std::size_t iv = 0; iv < d.V.size(); ++iv) {
        for (std::size_t it = 0; it < d.t.size(); ++it) {
            d.cells[iv][it] = scalar_zone_classify(d.t[it], d.V[iv] * d.t[it], c, omega, S);
        }
    }
    return d;
}

/// t on the ray x = V t where z equals the given level (the zone boundary).
inline std::optional<double> scalar_boundary_t(double V, double c, double omega, double level)
{
    const double s = 1.0 - V * V / (c * c);
    if (s <= 0.0 || omega <= 0.0) {
        return std::nullopt;
    }
    return level / (omega * std::sqrt(s));
}

} // namespace kgwave
