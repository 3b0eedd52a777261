#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kgwave/acceptance.hpp"
#include "kgwave/asymptotics.hpp"
#include "kgwave/dispersion.hpp"
#include "kgwave/io.hpp"
#include "kgwave/model.hpp"
#include "kgwave/oracle.hpp"
#include "kgwave/parallel.hpp"
#include "kgwave/zones.hpp"

namespace {

using kgwave::io::json;
using kgwave::io::num;

struct RunConfig {
    std::string params_path;
    std::optional<double> mu;
    double S = 3.0;
    double t_min = 1.0;
    double t_max = 500.0;
    double v_min = 0.5;
    double v_max = 2.5;
    std::string grid = "500x201";
    std::string out;
    std::string format = "csv";
    int threads = 1;
    bool scalar = false;
    double omega_min = 0.0; // 0 selects just above the upper cut-off
    double omega_max = 0.0; // 0 selects 2 omega_sh
    int n = 401;
    int rays = 41;
    double t = 0.0;
    std::optional<double> v;
    bool no_oracle = false;
    double tol_factor = 1.0;
    std::vector<int> criteria;
    std::optional<double> c;
    std::optional<double> omega;
};

kgwave::WaveguideParams load(const RunConfig& cfg)
{
    auto p = cfg.params_path.empty() ? kgwave::default_preset() : kgwave::io::load_params(cfg.params_path);
    if (cfg.mu) p.mu = *cfg.mu;
    kgwave::validate(p);
    return p;
}

std::pair<int, int> parse_grid(const std::string& g)
{
    int nt = 0;
    int nv = 0;
    char sep = 0;
    std::istringstream is(g);
    if (!(is >> nt >> sep >> nv) || (sep != 'x' && sep != 'X') || nt < 2 || nv < 2 || !is.eof()) {
        throw kgwave::Error(kgwave::ErrorCode::InvalidArgument, "--grid expects NxM with N, M >= 2, got '" + g + "'");
    }
    return {nt, nv};
}

void check_ranges(const RunConfig& cfg)
{
    if (!(cfg.t_min > 0.0) || !(cfg.t_max > cfg.t_min)) {
        throw kgwave::Error(kgwave::ErrorCode::InvalidArgument, "need 0 < --t-min < --t-max");
    }
    if (!(cfg.v_min > 0.0) || !(cfg.v_max > cfg.v_min)) {
        throw kgwave::Error(kgwave::ErrorCode::InvalidArgument, "need 0 < --v-min < --v-max");
    }
    if (!(cfg.S > 0.0)) {
        throw kgwave::Error(kgwave::ErrorCode::InvalidArgument, "--S must be positive");
    }
}

json config_json(const std::string& command, const RunConfig& cfg, const kgwave::WaveguideParams& p)
{
    json j{{"command", command}, {"params", kgwave::io::params_to_json(p)}};
    if (command == "dispersion") {
        j["omega_min"] = cfg.omega_min;
        j["omega_max"] = cfg.omega_max;
        j["n"] = cfg.n;
    } else if (command == "zones" || command == "scalar") {
        j["S"] = cfg.S;
        j["t_range"] = {cfg.t_min, cfg.t_max};
        j["v_range"] = {cfg.v_min, cfg.v_max};
        j["grid"] = cfg.grid;
        j["scalar"] = cfg.scalar || command == "scalar";
        if (command == "scalar" || cfg.scalar) {
            j["c"] = cfg.c.value_or(p.c1);
            j["omega"] = cfg.omega.value_or(p.omega1);
        }
    } else if (command == "field") {
        j["S"] = cfg.S;
        j["t"] = cfg.t;
        if (cfg.v) {
            j["v"] = *cfg.v;
        } else {
            j["v_range"] = {cfg.v_min, cfg.v_max};
            j["n"] = cfg.rays;
        }
        j["oracle"] = !cfg.no_oracle;
    }
    return j;
}

std::string csv_block(const json& config, const std::string& header, const std::vector<std::string>& rows)
{
    std::string s = kgwave::io::config_header(config) + header + '\n';
    for (const auto& r : rows) s += r + '\n';
    return s;
}

// ---------------------------------------------------------------- dispersion

int cmd_dispersion(RunConfig cfg)
{
    const auto p = load(cfg);
    const double top = std::max(kgwave::branch_cutoff(1, p), kgwave::branch_cutoff(2, p));
    const auto cp = kgwave::shestopalov(p);
    if (cfg.omega_min <= 0.0) cfg.omega_min = top * (1.0 + 1e-6);
    if (cfg.omega_max <= 0.0) cfg.omega_max = 2.0 * cp.omega_sh;
    const auto rows = kgwave::sample_diagram(p, cfg.omega_min, cfg.omega_max, cfg.n);
    const auto config = config_json("dispersion", cfg, p);

    if (cfg.format == "csv") {
        std::vector<std::string> lines;
        for (const auto& r : rows) {
            lines.push_back(num(r.omega) + "," + num(r.k1) + "," + num(r.k2) + "," + num(r.vg1) + "," + num(r.vg2));
        }
        kgwave::io::write_file(cfg.out, csv_block(config, "omega,k1,k2,vg1,vg2", lines));
    } else if (cfg.format == "json") {
        json j{{"config", config}, {"omega_sh", cp.omega_sh}, {"k_sh", cp.k_sh}, {"v1", cp.v1}, {"v2", cp.v2}};
        json arr = json::array();
        for (const auto& r : rows) arr.push_back({r.omega, r.k1, r.k2, r.vg1, r.vg2});
        j["columns"] = {"omega", "k1", "k2", "vg1", "vg2"};
        j["rows"] = arr;
        if (p.mu > 0.0) {
            const auto e = kgwave::group_velocity_extrema(p);
            j["extrema"] = {{"max", {{"omega", e.maximum.omega}, {"velocity", e.maximum.velocity}}},
                            {"min", {{"omega", e.minimum.omega}, {"velocity", e.minimum.velocity}}}};
        }
        kgwave::io::write_file(cfg.out, j.dump(2) + "\n");
    } else {
        kgwave::io::Svg svg(960, 440);
        svg.comment(config.dump());
        double kmax = 0.0;
        double vmax = std::max(p.c1, p.c2);
        for (const auto& r : rows) kmax = std::max({kmax, r.k1, r.k2});
        const kgwave::io::Svg::Panel left{70, 30, 360, 340, rows.front().omega, rows.back().omega, 0.0, kmax};
        const kgwave::io::Svg::Panel right{560, 30, 360, 340, rows.front().omega, rows.back().omega, 0.0, vmax};
        svg.axes(left, "omega", "k");
        svg.axes(right, "omega", "group velocity");
        const char* colors[] = {"#1f77b4", "#d62728"};
        for (int b = 0; b < 2; ++b) {
            std::vector<std::pair<double, double>> kp;
            std::vector<std::pair<double, double>> vp;
            for (const auto& r : rows) {
                kp.emplace_back(left.px(r.omega), left.py(b == 0 ? r.k1 : r.k2));
                vp.emplace_back(right.px(r.omega), right.py(b == 0 ? r.vg1 : r.vg2));
            }
            svg.polyline(kp, colors[b]);
            svg.polyline(vp, colors[b]);
            svg.text(left.x0 + 10, left.y0 + 16 + 14 * b, "branch " + std::to_string(b + 1), 11);
        }
        kgwave::io::write_file(cfg.out, svg.str());
    }
    return 0;
}

// ---------------------------------------------------------------- zone maps

std::string zone_color(const std::string& name)
{
    if (name == "zero" || name == "Zero") return "#f2f2f2";
    if (name == "B") return "#e06666";
    if (name == "Q") return "#f6b26b";
    if (name == "far") return "#b6d7a8";
    if (name == "near") return "#9fc5e8";
    if (name == "bessel") return "#e06666";
    if (name.rfind("J", 0) == 0) return "#b4a7d6";
    if (name.rfind("Ai", 0) == 0) return "#ffe599";
    static const char* greens[] = {"#d9ead3", "#b6d7a8", "#93c47d", "#6aa84f", "#38761d"};
    std::size_t count = 1;
    if (!name.empty() && name[0] >= '2' && name[0] <= '9') count = static_cast<std::size_t>(name[0] - '0');
    if (name.find("SPe") != std::string::npos) ++count;
    return greens[std::min<std::size_t>(count, 5) - 1];
}

std::string zone_map_svg(const json& config, const std::vector<double>& ts, const std::vector<double>& Vs,
                         const std::vector<std::vector<std::string>>& names,
                         const std::vector<kgwave::BoundaryPolyline>& boundaries)
{
    kgwave::io::Svg svg(900, 560);
    svg.comment(config.dump());
    const kgwave::io::Svg::Panel panel{70, 30, 620, 470, ts.front(), ts.back(), Vs.front(), Vs.back()};
    const double dt = (ts.back() - ts.front()) / (ts.size() - 1);
    const double dv = (Vs.back() - Vs.front()) / (Vs.size() - 1);
    std::set<std::string> seen;
    for (std::size_t iv = 0; iv < Vs.size(); ++iv) {
        for (std::size_t it = 0; it < ts.size(); ++it) {
            const std::string& name = names[iv][it];
            seen.insert(name);
            const double x0 = panel.px(std::max(ts.front(), ts[it] - 0.5 * dt));
            const double x1 = panel.px(std::min(ts.back(), ts[it] + 0.5 * dt));
            const double y0 = panel.py(std::min(Vs.back(), Vs[iv] + 0.5 * dv));
            const double y1 = panel.py(std::max(Vs.front(), Vs[iv] - 0.5 * dv));
            svg.rect(x0, y0, x1 - x0, y1 - y0, zone_color(name));
        }
    }
    for (const auto& b : boundaries) {
        std::vector<std::pair<double, double>> pts;
        for (const auto& [t, V] : b.points) pts.emplace_back(panel.px(t), panel.py(V));
        svg.polyline(pts, "#000", 1.0);
    }
    svg.axes(panel, "t", "V = x / t");
    double y = 40;
    for (const auto& name : seen) {
        svg.rect(710, y - 10, 14, 12, zone_color(name), "#444");
        svg.text(730, y, name, 11);
        y += 18;
    }
    return svg.str();
}

json parent_map()
{
    json m = json::object();
    for (const char* label : {"SP", "SPe", "Ai", "J", "Q", "B"}) {
        const auto parent = kgwave::parent_of(std::string(label));
        m[label] = parent.empty() ? json(nullptr) : json(parent);
    }
    return m;
}

int cmd_scalar_zones(const RunConfig& cfg, const kgwave::WaveguideParams& p, const std::string& command)
{
    const auto [nt, nv] = parse_grid(cfg.grid);
    const double c = cfg.c.value_or(p.c1);
    const double omega = cfg.omega.value_or(p.omega1);
    const auto d = kgwave::scalar_zone_diagram(c, omega, {cfg.t_min, cfg.t_max}, {cfg.v_min, cfg.v_max}, nt, nv, cfg.S);
    const auto config = config_json(command, cfg, p);
    std::vector<std::vector<std::string>> names(d.V.size());
    for (std::size_t iv = 0; iv < d.V.size(); ++iv) {
        for (auto z : d.cells[iv]) names[iv].push_back(kgwave::to_string(z));
    }
    // Boundaries are the level sets z = S and z = 1/S.
    std::vector<kgwave::BoundaryPolyline> lines;
    for (const auto& [level, from, to] : {std::tuple{1.0 / cfg.S, "near", "bessel"}, std::tuple{cfg.S, "bessel", "far"}}) {
        kgwave::BoundaryPolyline b{from, to, {}};
        for (double V : d.V) {
            const auto t = kgwave::scalar_boundary_t(V, c, omega, level);
            if (t && *t >= cfg.t_min && *t <= cfg.t_max) b.points.emplace_back(*t, V);
        }
        if (!b.points.empty()) lines.push_back(b);
    }
    if (cfg.format == "csv") {
        std::vector<std::string> rows;
        for (std::size_t iv = 0; iv < d.V.size(); ++iv) {
            for (std::size_t it = 0; it < d.t.size(); ++it) {
                rows.push_back(num(d.t[it]) + "," + num(d.V[iv]) + "," + names[iv][it]);
            }
        }
        kgwave::io::write_file(cfg.out, csv_block(config, "t,V,label", rows));
    } else if (cfg.format == "json") {
        json j{{"config", config}, {"t", d.t}, {"V", d.V}, {"cells", names}};
        json bl = json::array();
        for (const auto& b : lines) bl.push_back({{"from", b.from}, {"to", b.to}, {"points", b.points}});
        j["boundaries"] = bl;
        j["parents"] = {{"far", "bessel"}, {"near", "bessel"}, {"bessel", nullptr}};
        kgwave::io::write_file(cfg.out, j.dump(2) + "\n");
    } else {
        kgwave::io::write_file(cfg.out, zone_map_svg(config, d.t, d.V, names, lines));
    }
    return 0;
}

int cmd_zones(const RunConfig& cfg)
{
    check_ranges(cfg);
    const auto p = load(cfg);
    if (cfg.scalar) return cmd_scalar_zones(cfg, p, "zones");
    const auto [nt, nv] = parse_grid(cfg.grid);
    const auto d = kgwave::zone_diagram(p, {cfg.t_min, cfg.t_max}, {cfg.v_min, cfg.v_max}, nt, nv, cfg.S, cfg.threads);
    const auto config = config_json("zones", cfg, p);
    std::vector<std::vector<std::string>> names(d.V.size());
    for (std::size_t iv = 0; iv < d.V.size(); ++iv) {
        for (const auto& l : d.cells[iv]) names[iv].push_back(l.name());
    }
    if (cfg.format == "csv") {
        std::vector<std::string> rows;
        for (std::size_t iv = 0; iv < d.V.size(); ++iv) {
            for (std::size_t it = 0; it < d.t.size(); ++it) {
                rows.push_back(num(d.t[it]) + "," + num(d.V[iv]) + "," + names[iv][it]);
            }
        }
        kgwave::io::write_file(cfg.out, csv_block(config, "t,V,label", rows));
    } else if (cfg.format == "json") {
        json j{{"config", config}, {"t", d.t}, {"V", d.V}, {"cells", names}, {"monotone", d.monotone}};
        json bl = json::array();
        for (const auto& b : d.boundaries) bl.push_back({{"from", b.from}, {"to", b.to}, {"points", b.points}});
        j["boundaries"] = bl;
        j["parents"] = parent_map();
        kgwave::io::write_file(cfg.out, j.dump(2) + "\n");
    } else {
        kgwave::io::write_file(cfg.out, zone_map_svg(config, d.t, d.V, names, d.boundaries));
    }
    return 0;
}

// ---------------------------------------------------------------- field

std::string term_name(const kgwave::TermDescriptor& term)
{
    std::string s = kgwave::to_string(term.kind);
    if (!term.indices.empty()) {
        s += "(";
        for (std::size_t i = 0; i < term.indices.size(); ++i) s += (i ? "," : "") + std::to_string(term.indices[i]);
        s += ")";
    }
    return s;
}

int cmd_field(const RunConfig& cfg)
{
    const auto p = load(cfg);
    if (!(cfg.t > 0.0)) {
        throw kgwave::Error(kgwave::ErrorCode::InvalidArgument, "--t must be positive");
    }
    std::vector<double> Vs;
    if (cfg.v) {
        if (!(*cfg.v > 0.0)) throw kgwave::Error(kgwave::ErrorCode::InvalidArgument, "--v must be positive");
        Vs.push_back(*cfg.v);
    } else {
        if (!(cfg.v_min > 0.0) || !(cfg.v_max > cfg.v_min)) {
            throw kgwave::Error(kgwave::ErrorCode::InvalidArgument, "need 0 < --v-min < --v-max and --n >= 2");
        }
        Vs = kgwave::linspace(cfg.v_min, cfg.v_max, cfg.rays);
    }
    const kgwave::FieldContext ctx(p);
    struct Row {
        double V;
        kgwave::FieldValue asym;
        kgwave::OracleResult oracle;
    };
    std::vector<Row> rows(Vs.size());
    kgwave::parallel_for(Vs.size(), cfg.threads, [&](std::size_t i) {
        const double V = Vs[i];
        const double x = V * cfg.t;
        rows[i].V = V;
        rows[i].asym = kgwave::assemble_field(cfg.t, x, kgwave::saddle_set(V, p), ctx, cfg.S);
        if (!cfg.no_oracle) {
            rows[i].oracle = kgwave::field_modal_integral(cfg.t, x, p, ctx.controls);
        } else {
            rows[i].oracle.converged = true;
        }
    });
    bool all_converged = true;
    for (const auto& r : rows) all_converged = all_converged && r.oracle.converged && r.asym.converged;

    const auto config = config_json("field", cfg, p);
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            json terms = json::array();
            for (const auto& term : r.asym.terms) {
                terms.push_back({{"term", term_name(term)},
                                 {"trigger", term.trigger},
                                 {"u1", 2.0 * term.value[0].real()},
                                 {"u2", 2.0 * term.value[1].real()}});
            }
            json row{{"t", cfg.t}, {"x", r.V * cfg.t}, {"V", r.V}, {"label", r.asym.label.name()},
                     {"u_asymptotic", r.asym.u}, {"from_oracle", r.asym.from_oracle}, {"terms", terms}};
            if (!cfg.no_oracle) {
                row["u_oracle"] = {r.oracle.u[0].real(), r.oracle.u[1].real()};
                row["oracle_error"] = r.oracle.error;
                row["converged"] = r.oracle.converged;
            }
            arr.push_back(row);
        }
        kgwave::io::write_file(cfg.out, json{{"config", config}, {"points", arr}}.dump(2) + "\n");
    } else if (cfg.format == "csv") {
        std::vector<std::string> lines;
        for (const auto& r : rows) {
            std::string terms;
            for (const auto& term : r.asym.terms) terms += (terms.empty() ? "" : " ") + term_name(term);
            std::string line = num(cfg.t) + "," + num(r.V * cfg.t) + "," + num(r.V) + "," + r.asym.label.name() + "," +
                               num(r.asym.u[0]) + "," + num(r.asym.u[1]) + ",";
            if (cfg.no_oracle) {
                line += ",,,";
            } else {
                line += num(r.oracle.u[0].real()) + "," + num(r.oracle.u[1].real()) + "," + num(r.oracle.error) + ",";
            }
            line += std::string(r.oracle.converged ? "1" : "0") + "," + terms;
            lines.push_back(line);
        }
        kgwave::io::write_file(
            cfg.out, csv_block(config, "t,x,V,label,u1_asym,u2_asym,u1_oracle,u2_oracle,oracle_error,converged,terms",
                               lines));
    } else {
        throw kgwave::Error(kgwave::ErrorCode::InvalidArgument, "field supports --format csv or json");
    }
    if (!all_converged) {
        std::cerr << "kgwave: some points did not converge (see the converged column)\n";
        return 1;
    }
    return 0;
}

// ---------------------------------------------------------------- compare

int cmd_compare(const RunConfig& cfg)
{
    if (!(cfg.tol_factor > 0.0)) {
        throw kgwave::Error(kgwave::ErrorCode::InvalidArgument, "--tol-factor must be positive");
    }
    kgwave::acceptance::Options opt;
    opt.tol_factor = cfg.tol_factor;
    opt.threads = cfg.threads;
    opt.only = cfg.criteria;
    const auto results = kgwave::acceptance::run(opt);
    const auto rep = kgwave::acceptance::report(results, opt);
    kgwave::io::write_file(cfg.out, rep.dump(2) + "\n");
    return rep["all_pass"].get<bool>() ? 0 : 1;
}

// ---------------------------------------------------------------- scalar

int cmd_scalar(RunConfig cfg)
{
    check_ranges(cfg);
    const auto p = load(cfg);
    if (cfg.format == "svg") {
        return cmd_scalar_zones(cfg, p, "scalar");
    }
    const auto [nt, nv] = parse_grid(cfg.grid);
    const double c = cfg.c.value_or(p.c1);
    const double omega = cfg.omega.value_or(p.omega1);
    if (!(c > 0.0) || !(omega > 0.0)) {
        throw kgwave::Error(kgwave::ErrorCode::InvalidArgument, "--c and --omega must be positive");
    }
    const auto ts = kgwave::linspace(cfg.t_min, cfg.t_max, nt);
    const auto Vs = kgwave::linspace(cfg.v_min, cfg.v_max, nv);
    const auto config = config_json("scalar", cfg, p);
    std::vector<std::string> lines;
    json arr = json::array();
    for (double V : Vs) {
        for (double t : ts) {
            const double x = V * t;
            const double arg = t * t - x * x / (c * c);
            const double z = arg > 0.0 ? omega * std::sqrt(arg) : 0.0;
            const auto zone = kgwave::scalar_zone_classify(t, x, c, omega, cfg.S);
            const double exact = kgwave::scalar_kg_exact(t, x, c, omega);
            std::optional<double> far;
            if (zone == kgwave::ScalarZone::Far) far = kgwave::scalar_kg_far(t, x, c, omega, cfg.S);
            lines.push_back(num(t) + "," + num(V) + "," + num(x) + "," + num(z) + "," + kgwave::to_string(zone) + "," +
                            num(exact) + "," + (far ? num(*far) : std::string()));
            arr.push_back({{"t", t}, {"V", V}, {"z", z}, {"zone", kgwave::to_string(zone)}, {"exact", exact},
                           {"far", far ? json(*far) : json(nullptr)}});
        }
    }
    if (cfg.format == "csv") {
        kgwave::io::write_file(cfg.out, csv_block(config, "t,V,x,z,zone,exact,far", lines));
    } else {
        kgwave::io::write_file(cfg.out, json{{"config", config}, {"points", arr}}.dump(2) + "\n");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Transient fields and asymptotic zones of a coupled two-layer Klein-Gordon waveguide"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    auto common = [&](CLI::App* sub, bool with_format) {
        sub->add_option("--params", cfg.params_path, "JSON file with c1, c2, omega1, omega2, mu, f1, f2")
            ->check(CLI::ExistingFile);
        sub->add_option("--mu", cfg.mu, "override the coupling constant");
        sub->add_option("--out", cfg.out, "output path (stdout if omitted)");
        sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
        if (with_format) {
            sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json", "svg"}));
        }
    };
    auto ranges = [&](CLI::App* sub) {
        sub->add_option("--S", cfg.S, "overlap threshold");
        sub->add_option("--t-min", cfg.t_min);
        sub->add_option("--t-max", cfg.t_max);
        sub->add_option("--v-min", cfg.v_min);
        sub->add_option("--v-max", cfg.v_max);
        sub->add_option("--grid", cfg.grid, "NxM: N points in t, M points in V");
    };

    auto* disp = app.add_subcommand("dispersion", "real dispersion diagram and group velocities");
    common(disp, true);
    disp->add_option("--omega-min", cfg.omega_min, "lowest frequency (default just above the upper cut-off)");
    disp->add_option("--omega-max", cfg.omega_max, "highest frequency (default twice the crossing frequency)");
    disp->add_option("--n", cfg.n, "number of samples")->check(CLI::Range(2, 10000000));

    auto* zones = app.add_subcommand("zones", "asymptotic zone diagram on a (t, V) grid");
    common(zones, true);
    ranges(zones);
    zones->add_flag("--scalar", cfg.scalar, "zone diagram of the scalar equation instead");
    zones->add_option("--c", cfg.c, "scalar wave speed (default c1)");
    zones->add_option("--omega", cfg.omega, "scalar cut-off (default omega1)");

    auto* field = app.add_subcommand("field", "asymptotic and oracle field along a ray fan at fixed t");
    common(field, true);
    field->add_option("--S", cfg.S, "overlap threshold");
    field->add_option("--t", cfg.t, "time")->required();
    field->add_option("--v", cfg.v, "single ray V = x / t");
    field->add_option("--v-min", cfg.v_min);
    field->add_option("--v-max", cfg.v_max);
    field->add_option("--n", cfg.rays, "number of rays")->check(CLI::Range(2, 10000000));
    field->add_flag("--no-oracle", cfg.no_oracle, "skip the modal-integral reference");

    auto* compare = app.add_subcommand("compare", "run the acceptance grid and emit a JSON report");
    compare->add_option("--out", cfg.out, "report path (stdout if omitted)");
    compare->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    compare->add_option("--tol-factor", cfg.tol_factor, "multiply every error tolerance");
    compare->add_option("--criteria", cfg.criteria, "subset of criterion numbers")->check(CLI::Range(1, 12));

    auto* scalar = app.add_subcommand("scalar", "scalar Klein-Gordon solution and its zones");
    common(scalar, true);
    ranges(scalar);
    scalar->add_option("--c", cfg.c, "wave speed (default c1)");
    scalar->add_option("--omega", cfg.omega, "cut-off (default omega1)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (disp->parsed()) return cmd_dispersion(cfg);
        if (zones->parsed()) return cmd_zones(cfg);
        if (field->parsed()) return cmd_field(cfg);
        if (compare->parsed()) return cmd_compare(cfg);
        if (scalar->parsed()) {
            cfg.scalar = true;
            return cmd_scalar(cfg);
        }
    } catch (const kgwave::Error& e) {
        std::cerr << "kgwave: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "kgwave: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
