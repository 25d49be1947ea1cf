#include "sphtrop/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sphtrop/io.hpp"
#include "sphtrop/kuratowski.hpp"
#include "sphtrop/selftest.hpp"
#include "sphtrop/slog.hpp"
#include "sphtrop/tropical.hpp"

namespace sphtrop {

namespace {

class IoError : public Error {
public:
    using Error::Error;
};

struct RunConfig {
    std::string family;
    std::vector<double> t{0.1};
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    std::optional<double> window;
    double grid = 0.25;
    bool stratified = false;
    std::string out;
    std::string svg;
    std::string curve;
    std::size_t trials = 8;
};

void write_text(const std::string& path, const std::string& text, std::ostream& fallback)
{
    if (path.empty() || path == "-") {
        fallback << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw IoError("write to '" + path + "' failed");
}

std::string read_text(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

double single_t(const RunConfig& c)
{
    if (c.t.size() != 1) throw InvalidArgument("this command takes a single --t value");
    return c.t.front();
}

std::string rational_string(const Rational& r)
{
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

BoundaryCurves default_boundary(double t, double window, std::size_t n)
{
    // x from 1 to t^{-window}, geometric spacing
    const double lmax = -window * std::log(t);
    std::vector<double> xs;
    for (std::size_t k = 0; k < n; ++k)
        xs.push_back(std::exp(lmax * static_cast<double>(k) / static_cast<double>(std::max<std::size_t>(n - 1, 1))));
    return boundary_group3(t, xs);
}

void cmd_amoeba(const RunConfig& c, std::ostream& out)
{
    const auto family = SphericalFamily::from_name(c.family);
    const double t = single_t(c);
    AmoebaOptions o;
    o.n_samples = c.samples;
    o.seed = c.seed;
    o.window = c.window;
    o.stratified = c.stratified;
    const auto cloud = amoeba(family, t, o);
    std::ostringstream csv;
    write_cloud_csv(csv, family.rank(), cloud.points);
    write_text(c.out, csv.str(), out);
    if (!c.svg.empty()) {
        SvgOptions so;
        so.window = c.window.value_or(3.0);
        so.cone = &family.cone();
        std::optional<BoundaryCurves> b;
        if (family.id() == FamilyId{FamilyKind::Group, 3}) {
            b = default_boundary(t, so.window, 200);
            so.boundary = &*b;
        }
        write_text(c.svg, render_svg(cloud.points, so), out);
    }
}

void cmd_boundary(const RunConfig& c, std::ostream& out)
{
    const auto b = default_boundary(single_t(c), c.window.value_or(3.0), c.samples);
    std::ostringstream csv;
    write_boundary_csv(csv, b);
    write_text(c.out, csv.str(), out);
}

void cmd_cone(const RunConfig& c, std::ostream& out)
{
    write_text(c.out, cone_to_json(SphericalFamily::from_name(c.family).cone()) + "\n", out);
}

void cmd_tropicalize(const RunConfig& c, std::ostream& out)
{
    if (c.curve.empty()) throw InvalidArgument("--curve is required");
    Curve curve;
    try {
        curve = curve_from_json(read_text(c.curve));
    } catch (const ParseError& e) {
        throw ParseError(c.curve + ": " + e.what());
    }
    if (!c.family.empty() && CurveAmbient::parse(c.family).name() != curve.ambient.name())
        throw InvalidArgument("--family does not match the curve file");
    Rng rng(c.seed);
    const auto v = strop(curve, rng, c.trials);
    std::vector<std::string> labels;
    if (curve.ambient.family)
        labels = SphericalFamily(*curve.ambient.family).generator_labels();
    else
        labels = {"y"};
    nlohmann::ordered_json j;
    j["family"] = curve.ambient.name();
    j["strop"] = nlohmann::ordered_json::array();
    j["valuations"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < v.size(); ++i) {
        j["strop"].push_back(boost::rational_cast<double>(v[i]));
        j["valuations"].push_back({{"generator", labels[i]}, {"value", rational_string(v[i])}});
    }
    write_text(c.out, j.dump(2) + "\n", out);
}

void cmd_converge(const RunConfig& c, std::ostream& out)
{
    const auto family = SphericalFamily::from_name(c.family);
    ConvergenceOptions o;
    o.n_samples = c.samples;
    o.seed = c.seed;
    o.window = c.window.value_or(3.0);
    o.grid_step = c.grid;
    o.stratified = c.stratified;
    write_text(c.out, convergence_report(family, c.t, o).to_json() + "\n", out);
}

int cmd_selftest(const RunConfig& c, std::ostream& out)
{
    bool ok = true;
    std::ostringstream os;
    for (const auto& r : run_selftest(c.seed == 0 ? 1 : c.seed)) {
        os << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.passed) os << ": " << r.detail;
        os << '\n';
        ok = ok && r.passed;
    }
    write_text(c.out, os.str(), out);
    return ok ? kExitOk : kExitNumeric;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Spherical amoebae, valuation cones and tropicalization"};
    app.require_subcommand(1);
    RunConfig c;

    auto add_family = [&](CLI::App* s, bool required) {
        auto* o = s->add_option("--family", c.family, "group3, group4, affineU2, affineU3, pointed3, pointed4, triangles, sl2t");
        if (required) o->required();
    };
    auto add_t = [&](CLI::App* s) {
        s->add_option("--t", c.t, "t in (0, 1); comma-separated list for converge")->delimiter(',');
    };
    auto add_out = [&](CLI::App* s) { s->add_option("--out", c.out, "output path (default stdout)"); };
    auto add_seed = [&](CLI::App* s) { s->add_option("--seed", c.seed, "RNG seed"); };

    auto* amoeba_cmd = app.add_subcommand("amoeba", "sample an sLog point cloud as CSV");
    add_family(amoeba_cmd, true);
    add_t(amoeba_cmd);
    amoeba_cmd->add_option("--samples", c.samples, "number of draws");
    add_seed(amoeba_cmd);
    amoeba_cmd->add_option("--window", c.window, "keep points with max-norm <= R");
    amoeba_cmd->add_flag("--stratified", c.stratified, "use the constructed-point sampler");
    add_out(amoeba_cmd);
    amoeba_cmd->add_option("--svg", c.svg, "also write an SVG scatter");

    auto* boundary_cmd = app.add_subcommand("boundary", "group3 boundary curves as CSV (x,q1,q2)");
    add_t(boundary_cmd);
    boundary_cmd->add_option("--samples", c.samples, "grid points per curve");
    boundary_cmd->add_option("--window", c.window, "x runs from 1 to t^-R");
    add_out(boundary_cmd);

    auto* cone_cmd = app.add_subcommand("cone", "valuation cone rays and halfspaces as JSON");
    add_family(cone_cmd, true);
    add_out(cone_cmd);

    auto* trop_cmd = app.add_subcommand("tropicalize", "spherical tropicalization of a curve file");
    add_family(trop_cmd, false);
    trop_cmd->add_option("--curve", c.curve, "curve JSON")->required();
    add_seed(trop_cmd);
    trop_cmd->add_option("--trials", c.trials, "generic translates per round");
    add_out(trop_cmd);

    auto* conv_cmd = app.add_subcommand("converge", "discrepancy / coverage report as JSON");
    add_family(conv_cmd, true);
    add_t(conv_cmd);
    conv_cmd->add_option("--samples", c.samples, "draws per t");
    add_seed(conv_cmd);
    conv_cmd->add_option("--window", c.window, "max-norm window R (default 3)");
    conv_cmd->add_option("--grid", c.grid, "coverage grid step h");
    conv_cmd->add_flag("--stratified", c.stratified, "use the constructed-point sampler");
    add_out(conv_cmd);

    auto* self_cmd = app.add_subcommand("selftest", "run the invariant suites");
    add_seed(self_cmd);
    add_out(self_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*amoeba_cmd) cmd_amoeba(c, out);
        else if (*boundary_cmd) cmd_boundary(c, out);
        else if (*cone_cmd) cmd_cone(c, out);
        else if (*trop_cmd) cmd_tropicalize(c, out);
        else if (*conv_cmd) cmd_converge(c, out);
        else if (*self_cmd) return cmd_selftest(c, out);
        return kExitOk;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitIo;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Unsupported& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "numeric error: " << e.what() << '\n';
        return kExitNumeric;
    }
}

}  // namespace sphtrop
