#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sphtrop/polynomial.hpp"
#include "sphtrop/spaces.hpp"

namespace sphtrop {

/// Ambient of a formal curve: a shipped family, or the plane C^2 \ 0
/// (coordinates (x, y), the SL2 orbit of (1, 0)).
struct CurveAmbient {
    std::optional<FamilyId> family;  ///< nullopt = sl2plane

    static CurveAmbient plane() { return {}; }
    static CurveAmbient of(FamilyId id) { return {id}; }
    /// Family names plus "sl2plane".
    static CurveAmbient parse(std::string_view name);
    std::string name() const;
    /// group/affine: n^2 (row-major), pointed: 2n (x then y), triangles: 12
    /// (three row-major 2x2 blocks), sl2plane: 2. sl2t curves are unsupported.
    std::size_t n_coords() const;
};

/// gamma(t): one Puiseux series per ambient coordinate.
struct Curve {
    CurveAmbient ambient;
    std::vector<PuiseuxSeries> coords;
};

/// Checks the defining equations as series identities (residual
/// coefficients < 1e-9); throws InvalidArgument otherwise.
void validate_curve(const Curve& c);

/// ord_t f(gamma(t)).
Rational curve_order(const Polynomial& f, const Curve& gamma);

/// Element of the acting group, one matrix per factor.
struct GroupElement {
    std::vector<ComplexMatrix> factors;
};

/// Random element with Gaussian real entries rounded to multiples of 2^-16.
GroupElement random_translate(const CurveAmbient& ambient, Rng& rng);
/// g . gamma, coordinate-wise linear substitution.
Curve translate(const Curve& gamma, const GroupElement& g);

/// min over m random translates h of ord f(h . gamma). The minimum must be
/// attained by at least two trials; otherwise further rounds are drawn.
Rational generic_valuation(const Polynomial& f, const Curve& gamma, Rng& rng, std::size_t m = 8);

/// Highest-weight functions f_{lambda_i} in the ambient coordinates.
std::vector<Polynomial> highest_weight_functions(const CurveAmbient& ambient);

/// (v_gamma(f_1), ..., v_gamma(f_s)); checked against the valuation cone exactly.
std::vector<Rational> strop(const Curve& gamma, Rng& rng, std::size_t m = 8);

/// Numerical point gamma(t0) of the ambient family.
SpacePoint evaluate_curve(const Curve& gamma, double t0);

struct LimitRow {
    double t;
    double value;   ///< log_t phi_i(gamma(t))
    double target;  ///< 2 v_gamma(f_i)
    double deviation() const { return value - target; }
};

/// Rows for each t in t_list; throws NumericError naming t on overflow/underflow.
std::vector<LimitRow> limit_check(const Curve& gamma, std::size_t i, const std::vector<double>& t_list,
                                  Rng& rng, std::size_t m = 8);

struct NamedCurve {
    std::string name;
    Curve curve;
};

/// Well-conditioned test curves across families (group3, affineU2/U3,
/// pointed3/4, triangles).
std::vector<NamedCurve> shipped_curves();

/// Diagonal curve diag(t^{a_1}, ..., t^{a_n}) in the group family (sum a_i = 0).
Curve group_diagonal_curve(const std::vector<Rational>& a);

}  // namespace sphtrop
