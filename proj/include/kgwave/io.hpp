#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kgwave/error.hpp"
#include "kgwave/model.hpp"

namespace kgwave::io {

using json = nlohmann::json;

/// Parameters from a JSON object with optional keys c1, c2, omega1, omega2,
/// mu, f1, f2; absent keys keep the preset value, unknown keys are rejected.
inline WaveguideParams params_from_json(const json& j)
{
    if (!j.is_object()) {
        throw Error(ErrorCode::InvalidArgument, "params: expected a JSON object");
    }
    WaveguideParams p = default_preset();
    const std::vector<std::pair<std::string, double*>> fields{
        {"c1", &p.c1}, {"c2", &p.c2}, {"omega1", &p.omega1}, {"omega2", &p.omega2},
        {"mu", &p.mu}, {"f1", &p.f1}, {"f2", &p.f2},
    };
    for (const auto& [key, value] : j.items()) {
        double* slot = nullptr;
        for (const auto& [name, ptr] : fields) {
            if (name == key) slot = ptr;
        }
        if (slot == nullptr) {
            throw Error(ErrorCode::InvalidArgument, "params: unknown key '" + key + "'");
        }
        if (!value.is_number()) {
            throw Error(ErrorCode::InvalidArgument, "params: key '" + key + "' must be a number");
        }
        *slot = value.get<double>();
    }
    return p;
}

inline json params_to_json(const WaveguideParams& p)
{
    return json{{"c1", p.c1}, {"c2", p.c2}, {"omega1", p.omega1}, {"omega2", p.omega2},
                {"mu", p.mu}, {"f1", p.f1}, {"f2", p.f2}};
}

inline WaveguideParams load_params(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot open params file '" + path + "'");
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::InvalidArgument, "params: malformed JSON in '" + path + "': " + e.what());
    }
    return params_from_json(j);
}

/// Shortest round-trip-safe decimal form with 17 significant digits.
inline std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Comment block echoing the run configuration, one `# key: value` per line.
inline std::string config_header(const json& config)
{
    std::ostringstream os;
    for (const auto& [key, value] : config.items()) {
        os << "# " << key << ": " << value.dump() << '\n';
    }
    return os.str();
}

inline void write_file(const std::string& path, const std::string& content)
{
    if (path.empty() || path == "-") {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::Io, "cannot write '" + path + "'");
    }
    out << content;
    if (!out) {
        throw Error(ErrorCode::Io, "write failed for '" + path + "'");
    }
}

/// Minimal self-contained SVG canvas with data-to-pixel axes.
class Svg {
public:
    Svg(int width, int height) : width_(width), height_(height) {}

    struct Panel {
        double x0, y0, w, h;             // pixel box
        double xmin, xmax, ymin, ymax;   // data box
        double px(double x) const { return x0 + (x - xmin) / (xmax - xmin) * w; }
        double py(double y) const { return y0 + h - (y - ymin) / (ymax - ymin) * h; }
    };

    void comment(const std::string& text) { body_ << "<!--" << escape(text) << "-->\n"; }

    void rect(double x, double y, double w, double h, const std::string& fill, const std::string& stroke = "none")
    {
        body_ << "<rect x=\"" << f(x) << "\" y=\"" << f(y) << "\" width=\"" << f(w) << "\" height=\"" << f(h)
              << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\"/>\n";
    }

    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke, double width = 1.5,
                  const std::string& dash = "")
    {
        if (pts.empty()) return;
        body_ << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << f(width) << "\"";
        if (!dash.empty()) body_ << " stroke-dasharray=\"" << dash << "\"";
        body_ << " points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            body_ << (i ? " " : "") << f(pts[i].first) << "," << f(pts[i].second);
        }
        body_ << "\"/>\n";
    }

    void text(double x, double y, const std::string& s, int size = 12, const std::string& anchor = "start")
    {
        body_ << "<text x=\"" << f(x) << "\" y=\"" << f(y) << "\" font-family=\"sans-serif\" font-size=\"" << size
              << "\" text-anchor=\"" << anchor << "\">" << escape(s) << "</text>\n";
    }

    void axes(const Panel& p, const std::string& xlabel, const std::string& ylabel)
    {
        rect(p.x0, p.y0, p.w, p.h, "none", "#000");
        for (int i = 0; i <= 4; ++i) {
            const double xv = p.xmin + (p.xmax - p.xmin) * i / 4;
            const double yv = p.ymin + (p.ymax - p.ymin) * i / 4;
            text(p.px(xv), p.y0 + p.h + 14, tick(xv), 10, "middle");
            text(p.x0 - 4, p.py(yv) + 4, tick(yv), 10, "end");
        }
        text(p.x0 + p.w / 2, p.y0 + p.h + 30, xlabel, 12, "middle");
        text(p.x0 - 40, p.y0 + p.h / 2, ylabel, 12, "middle");
    }

    std::string str() const
    {
        std::ostringstream os;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\"" << height_
           << "\" viewBox=\"0 0 " << width_ << " " << height_ << "\">\n"
           << "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n"
           << body_.str() << "</svg>\n";
        return os.str();
    }

private:
    static std::string f(double v)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return buf;
    }
    static std::string tick(double v)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3g", v);
        return buf;
    }
    static std::string escape(const std::string& s)
    {
        std::string out;
        for (char c : s) {
            switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
            }
        }
        return out;
    }

    int width_;
    int height_;
    std::ostringstream body_;
};

} // namespace kgwave::io
