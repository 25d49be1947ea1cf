#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sphtrop/kuratowski.hpp"
#include "sphtrop/slog.hpp"
#include "sphtrop/tropical.hpp"

namespace sphtrop {

/// Malformed input file; the message names the line/field at fault.
class ParseError : public Error {
public:
    using Error::Error;
};

/// %.17g
std::string format_double(double v);

/// { "ramification": N, "truncation": K | null, "terms": [[k, re, im], ...] }
std::string series_to_json(const PuiseuxSeries& s);
PuiseuxSeries series_from_json(std::string_view text);

/// { "family": name, "coords": [series, ...] }; the curve is validated on load.
std::string curve_to_json(const Curve& c);
Curve curve_from_json(std::string_view text);

/// Header q1,...,qs then one row per point.
void write_cloud_csv(std::ostream& os, std::size_t dim, const std::vector<Vec>& points);
std::vector<Vec> read_cloud_csv(std::istream& is);

/// Columns x,q1,q2: first curve rows, then the swapped curve.
void write_boundary_csv(std::ostream& os, const BoundaryCurves& b);

/// { "dimension", "rays", "halfspaces", "note" }
std::string cone_to_json(const PolyCone& cone);

struct SvgOptions {
    double window = 3.0;
    const PolyCone* cone = nullptr;
    const BoundaryCurves* boundary = nullptr;
};

/// Static scatter of the first two coordinates over [-window, window]^2.
std::string render_svg(const std::vector<Vec>& points, const SvgOptions& options);

}  // namespace sphtrop
