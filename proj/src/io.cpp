#include "sphtrop/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace sphtrop {

namespace {

using json = nlohmann::ordered_json;

json series_json(const PuiseuxSeries& s)
{
    json j;
    j["ramification"] = s.ramification();
    if (s.truncation())
        j["truncation"] = *s.truncation();
    else
        j["truncation"] = nullptr;
    j["terms"] = json::array();
    for (const auto& [k, c] : s.terms()) j["terms"].push_back({k, c.real(), c.imag()});
    return j;
}

PuiseuxSeries series_from(const json& j, const std::string& where)
{
    auto fail = [&](const std::string& what) { throw ParseError(where + ": " + what); };
    if (!j.is_object()) fail("expected an object");
    if (!j.contains("ramification") || !j["ramification"].is_number_integer()) fail("field 'ramification' must be an integer");
    const auto n = j["ramification"].get<std::int64_t>();
    if (n < 1) fail("field 'ramification' must be >= 1");
    std::optional<std::int64_t> trunc;
    if (j.contains("truncation") && !j["truncation"].is_null()) {
        if (!j["truncation"].is_number_integer()) fail("field 'truncation' must be an integer or null");
        trunc = j["truncation"].get<std::int64_t>();
    }
    if (!j.contains("terms") || !j["terms"].is_array()) fail("field 'terms' must be an array");
    std::map<std::int64_t, Complex> terms;
    std::size_t idx = 0;
    for (const auto& t : j["terms"]) {
        const std::string tw = "terms[" + std::to_string(idx++) + "]";
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number() || !t[2].is_number())
            fail(tw + " must be [k, re, im] with integer k");
        const auto k = t[0].get<std::int64_t>();
        if (terms.count(k)) fail(tw + " repeats exponent " + std::to_string(k));
        terms[k] = {t[1].get<double>(), t[2].get<double>()};
    }
    return PuiseuxSeries(n, std::move(terms), trunc);
}

json parse(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

void write_row(std::ostream& os, const Vec& v)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << format_double(v[i]);
    }
    os << '\n';
}

}  // namespace

std::string format_double(double v)
{
    char buf[40];
    if (v == 0.0) v = 0.0;  // no "-0"
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string series_to_json(const PuiseuxSeries& s) { return series_json(s).dump(); }

PuiseuxSeries series_from_json(std::string_view text) { return series_from(parse(text), "series"); }

std::string curve_to_json(const Curve& c)
{
    json j;
    j["family"] = c.ambient.name();
    j["coords"] = json::array();
    for (const auto& s : c.coords) j["coords"].push_back(series_json(s));
    return j.dump(2);
}

Curve curve_from_json(std::string_view text)
{
    const json j = parse(text);
    if (!j.is_object()) throw ParseError("curve: expected an object");
    if (!j.contains("family") || !j["family"].is_string()) throw ParseError("curve: field 'family' must be a string");
    Curve c;
    try {
        c.ambient = CurveAmbient::parse(j["family"].get<std::string>());
        c.ambient.n_coords();
    } catch (const Error& e) {
        throw ParseError(std::string("curve: field 'family': ") + e.what());
    }
    if (!j.contains("coords") || !j["coords"].is_array()) throw ParseError("curve: field 'coords' must be an array");
    std::size_t idx = 0;
    for (const auto& s : j["coords"]) {
        c.coords.push_back(series_from(s, "curve: coords[" + std::to_string(idx) + "]"));
        ++idx;
    }
    validate_curve(c);
    return c;
}

void write_cloud_csv(std::ostream& os, std::size_t dim, const std::vector<Vec>& points)
{
    for (std::size_t i = 0; i < dim; ++i) os << (i ? "," : "") << 'q' << (i + 1);
    os << '\n';
    for (const auto& p : points) write_row(os, p);
}

std::vector<Vec> read_cloud_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line)) throw ParseError("csv: missing header");
    const std::size_t dim = static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
    std::vector<Vec> out;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        Vec v;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t used = 0;
                v.push_back(std::stod(cell, &used));
                if (used != cell.size()) throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                throw ParseError("csv: line " + std::to_string(lineno) + ": bad number '" + cell + "'");
            }
        }
        if (v.size() != dim) throw ParseError("csv: line " + std::to_string(lineno) + ": wrong column count");
        out.push_back(std::move(v));
    }
    return out;
}

void write_boundary_csv(std::ostream& os, const BoundaryCurves& b)
{
    os << "x,q1,q2\n";
    for (const auto* curve : {&b.first, &b.second})
        for (std::size_t i = 0; i < b.x.size(); ++i) write_row(os, {b.x[i], (*curve)[i][0], (*curve)[i][1]});
}

std::string cone_to_json(const PolyCone& cone)
{
    json j;
    j["dimension"] = cone.dim();
    j["rays"] = cone.rays();
    j["halfspaces"] = cone.normals();
    j["note"] = cone.note();
    return j.dump(2);
}

std::string render_svg(const std::vector<Vec>& points, const SvgOptions& o)
{
    constexpr double size = 600.0;
    const double w = o.window;
    auto px = [&](double v) { return format_double((v + w) / (2.0 * w) * size); };
    auto py = [&](double v) { return format_double((w - v) / (2.0 * w) * size); };
    auto coord = [](const Vec& p, std::size_t i) { return i < p.size() ? p[i] : 0.0; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
    os << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
    os << "<line x1=\"0\" y1=\"" << py(0) << "\" x2=\"600\" y2=\"" << py(0) << "\" stroke=\"#bbb\"/>\n";
    os << "<line x1=\"" << px(0) << "\" y1=\"0\" x2=\"" << px(0) << "\" y2=\"600\" stroke=\"#bbb\"/>\n";
    os << "<g class=\"points\" fill=\"#1f77b4\">\n";
    for (const auto& p : points) {
        const double a = coord(p, 0);
        const double b = coord(p, 1);
        if (std::abs(a) > w || std::abs(b) > w) continue;
        os << "<circle cx=\"" << px(a) << "\" cy=\"" << py(b) << "\" r=\"1.2\"/>\n";
    }
    os << "</g>\n";
    if (o.cone) {
        os << "<g class=\"cone\" stroke=\"#d62728\" stroke-width=\"1.5\">\n";
        for (const auto& r : o.cone->rays()) {
            Vec v(r.begin(), r.end());
            const double m = max_norm(v);
            if (m == 0.0) continue;
            os << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(coord(v, 0) / m * w)
               << "\" y2=\"" << py(coord(v, 1) / m * w) << "\"/>\n";
        }
        os << "</g>\n";
    }
    if (o.boundary) {
        for (const auto* curve : {&o.boundary->first, &o.boundary->second}) {
            os << "<polyline class=\"boundary\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"1.5\" points=\"";
            bool first = true;
            for (const auto& q : *curve) {
                if (std::abs(q[0]) > w || std::abs(q[1]) > w) continue;
                os << (first ? "" : " ") << px(q[0]) << ',' << py(q[1]);
                first = false;
            }
            os << "\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace sphtrop
