#include "sphtrop/tropical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace sphtrop {

namespace {

constexpr double kResidualTol = 1e-9;
constexpr int kExtraRounds = 4;
constexpr double kGridScale = 65536.0;  // 2^16

const FamilyId& require_family(const CurveAmbient& a, const char* what)
{
    if (!a.family) throw Unsupported(std::string(what) + ": not available on sl2plane");
    return *a.family;
}

using SeriesVec = std::vector<PuiseuxSeries>;

// out_i = sum_j m(i, j) v_j
SeriesVec linear(const ComplexMatrix& m, const SeriesVec& v)
{
    const std::size_t n = m.size();
    SeriesVec out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m(i, j) != Complex{0.0, 0.0}) out[i] = out[i] + scale(v[j], m(i, j));
    return out;
}

// Series matrix stored row-major in coords[offset .. offset + n*n).
SeriesVec left_multiply(const ComplexMatrix& h, const SeriesVec& coords, std::size_t offset, std::size_t n)
{
    SeriesVec out(n * n);
    for (std::size_t c = 0; c < n; ++c) {
        SeriesVec col(n);
        for (std::size_t r = 0; r < n; ++r) col[r] = coords[offset + r * n + c];
        const auto mixed = linear(h, col);
        for (std::size_t r = 0; r < n; ++r) out[r * n + c] = mixed[r];
    }
    return out;
}

SeriesVec right_multiply(const SeriesVec& coords, const ComplexMatrix& h, std::size_t n)
{
    SeriesVec out(n * n);
    const auto ht = h.transpose();
    for (std::size_t r = 0; r < n; ++r) {
        SeriesVec row(coords.begin() + static_cast<std::ptrdiff_t>(r * n),
                      coords.begin() + static_cast<std::ptrdiff_t>((r + 1) * n));
        const auto mixed = linear(ht, row);
        for (std::size_t c = 0; c < n; ++c) out[r * n + c] = mixed[c];
    }
    return out;
}

std::vector<std::vector<std::size_t>> principal_vars(std::size_t n, std::size_t k, std::size_t offset = 0)
{
    std::vector<std::vector<std::size_t>> vars(k, std::vector<std::size_t>(k));
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) vars[r][c] = offset + r * n + c;
    return vars;
}

std::vector<Polynomial> defining_residuals(const Curve& c)
{
    const std::size_t nv = c.ambient.n_coords();
    std::vector<Polynomial> eqs;
    const auto one = Polynomial::constant(nv, 1.0);
    if (!c.ambient.family) return eqs;
    const auto id = *c.ambient.family;
    switch (id.kind) {
    case FamilyKind::Group:
    case FamilyKind::BasicAffine:
        eqs.push_back(Polynomial::determinant(nv, principal_vars(id.n, id.n)) - one);
        break;
    case FamilyKind::PointedPairs: {
        Polynomial pairing(nv);
        for (std::size_t i = 0; i < id.n; ++i)
            pairing = pairing + Polynomial::variable(nv, i) * Polynomial::variable(nv, id.n + i);
        eqs.push_back(pairing - one);
        break;
    }
    case FamilyKind::Triangles:
        for (std::size_t b = 0; b < 3; ++b)
            eqs.push_back(Polynomial::determinant(nv, principal_vars(2, 2, 4 * b)) - one);
        break;
    case FamilyKind::Sl2ModT: throw Unsupported("curves on sl2t are not supported");
    }
    return eqs;
}

ComplexMatrix rounded_gaussian(std::size_t n, Rng& rng)
{
    std::normal_distribution<double> g(0.0, 1.0);
    for (;;) {
        ComplexMatrix h(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) h(i, j) = std::round(g(rng) * kGridScale) / kGridScale;
        if (std::abs(det(h)) > 1e-6) return h;
    }
}

PuiseuxSeries monomial_q(double c, Rational e) { return PuiseuxSeries::monomial(c, e); }

Curve group3_dm_curve(const std::vector<Rational>& a)
{
    // Rows of M: orthogonal, norms^2 = 1/3, 1, 3; det M = 1.
    const double s2 = std::numbers::sqrt2;
    const double m[3][3] = {{-1.0 / (3.0 * s2), -1.0 / (3.0 * s2), 2.0 / (3.0 * s2)},
                            {1.0 / s2, -1.0 / s2, 0.0},
                            {1.0, 1.0, 1.0}};
    Curve c{CurveAmbient::of({FamilyKind::Group, 3}), SeriesVec(9)};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t col = 0; col < 3; ++col)
            if (m[r][col] != 0.0) c.coords[r * 3 + col] = monomial_q(m[r][col], a[r]);
    return c;
}

Curve pointed_preimage_curve(std::size_t n, Rational a, Rational b)
{
    // x = (t^{a/2}, 0, ...), y = (t^{-a/2}, t^{b/2} (1 - t^{-a-b})^{1/2}, 0, ...)
    Curve c{CurveAmbient::of({FamilyKind::PointedPairs, n}), SeriesVec(2 * n)};
    c.coords[0] = monomial_q(1.0, a / 2);
    c.coords[n] = monomial_q(1.0, -a / 2);
    const auto inner = PuiseuxSeries::constant(1.0) - monomial_q(1.0, -a - b);
    c.coords[n + 1] = monomial_q(1.0, b / 2) * power(inner, Rational(1, 2));
    return c;
}

Curve matrix_curve(FamilyId id, const std::vector<std::vector<PuiseuxSeries>>& rows)
{
    Curve c{CurveAmbient::of(id), {}};
    for (const auto& row : rows)
        for (const auto& s : row) c.coords.push_back(s);
    return c;
}

PuiseuxSeries mono(double c, long e) { return PuiseuxSeries::monomial(c, e); }

}  // namespace

CurveAmbient CurveAmbient::parse(std::string_view name)
{
    if (name == "sl2plane") return plane();
    return of(parse_family(name));
}

std::string CurveAmbient::name() const { return family ? family_name(*family) : "sl2plane"; }

std::size_t CurveAmbient::n_coords() const
{
    if (!family) return 2;
    switch (family->kind) {
    case FamilyKind::Group:
    case FamilyKind::BasicAffine: return family->n * family->n;
    case FamilyKind::PointedPairs: return 2 * family->n;
    case FamilyKind::Triangles: return 12;
    case FamilyKind::Sl2ModT: break;
    }
    throw Unsupported("curves on sl2t are not supported");
}

void validate_curve(const Curve& c)
{
    if (c.coords.size() != c.ambient.n_coords())
        throw InvalidArgument("curve on " + c.ambient.name() + " needs " +
                              std::to_string(c.ambient.n_coords()) + " coordinates");
    if (!c.ambient.family) {
        if (c.coords[0].empty() && c.coords[1].empty())
            throw InvalidArgument("curve on sl2plane must not be identically zero");
        return;
    }
    for (const auto& eq : defining_residuals(c)) {
        const auto r = eq.compose(c.coords);
        for (const auto& [k, v] : r.terms())
            if (std::abs(v) >= kResidualTol)
                throw InvalidArgument("curve violates the defining equation of " + c.ambient.name());
    }
}

Rational curve_order(const Polynomial& f, const Curve& gamma) { return f.compose(gamma.coords).order(); }

GroupElement random_translate(const CurveAmbient& ambient, Rng& rng)
{
    if (!ambient.family) return {{rounded_gaussian(2, rng)}};
    const auto id = *ambient.family;
    switch (id.kind) {
    case FamilyKind::Group: return {{rounded_gaussian(id.n, rng), rounded_gaussian(id.n, rng)}};
    case FamilyKind::BasicAffine:
    case FamilyKind::PointedPairs: return {{rounded_gaussian(id.n, rng)}};
    case FamilyKind::Triangles:
        return {{rounded_gaussian(2, rng), rounded_gaussian(2, rng), rounded_gaussian(2, rng)}};
    case FamilyKind::Sl2ModT: break;
    }
    throw Unsupported("curves on sl2t are not supported");
}

Curve translate(const Curve& gamma, const GroupElement& g)
{
    if (gamma.coords.size() != gamma.ambient.n_coords()) throw InvalidArgument("curve has wrong arity");
    Curve out{gamma.ambient, {}};
    const auto& h = g.factors;
    auto need = [&](std::size_t k) {
        if (h.size() != k) throw InvalidArgument("group element has wrong number of factors");
    };
    if (!gamma.ambient.family) {
        need(1);
        out.coords = linear(h[0], gamma.coords);
        return out;
    }
    const auto id = *gamma.ambient.family;
    switch (id.kind) {
    case FamilyKind::Group:
        need(2);
        out.coords = right_multiply(left_multiply(h[0], gamma.coords, 0, id.n), h[1], id.n);
        break;
    case FamilyKind::BasicAffine:
        need(1);
        out.coords = left_multiply(h[0], gamma.coords, 0, id.n);
        break;
    case FamilyKind::PointedPairs: {
        need(1);
        const SeriesVec x(gamma.coords.begin(), gamma.coords.begin() + static_cast<std::ptrdiff_t>(id.n));
        const SeriesVec y(gamma.coords.begin() + static_cast<std::ptrdiff_t>(id.n), gamma.coords.end());
        out.coords = linear(h[0], x);
        const auto ydual = linear(h[0].inverse().transpose(), y);
        out.coords.insert(out.coords.end(), ydual.begin(), ydual.end());
        break;
    }
    case FamilyKind::Triangles:
        need(3);
        for (std::size_t b = 0; b < 3; ++b) {
            const auto blk = left_multiply(h[b], gamma.coords, 4 * b, 2);
            out.coords.insert(out.coords.end(), blk.begin(), blk.end());
        }
        break;
    case FamilyKind::Sl2ModT: throw Unsupported("curves on sl2t are not supported");
    }
    return out;
}

Rational generic_valuation(const Polynomial& f, const Curve& gamma, Rng& rng, std::size_t m)
{
    if (m == 0) throw InvalidArgument("generic_valuation needs m >= 1");
    std::vector<Rational> orders;
    for (int round = 0; round <= kExtraRounds; ++round) {
        for (std::size_t trial = 0; trial < m; ++trial) {
            const auto moved = translate(gamma, random_translate(gamma.ambient, rng));
            try {
                orders.push_back(curve_order(f, moved));
            } catch (const IndeterminateOrder&) {
            }
        }
        if (orders.empty()) continue;
        const Rational best = *std::min_element(orders.begin(), orders.end());
        if (std::count(orders.begin(), orders.end(), best) >= 2) return best;
    }
    if (orders.empty())
        throw InconclusiveValuation("every trial order ran past the truncation bound; raise the truncation");
    throw InconclusiveValuation("minimum order was attained by a single trial only");
}

std::vector<Polynomial> highest_weight_functions(const CurveAmbient& ambient)
{
    const std::size_t nv = ambient.n_coords();
    std::vector<Polynomial> out;
    if (!ambient.family) {
        out.push_back(Polynomial::variable(nv, 1));
        return out;
    }
    const auto id = *ambient.family;
    switch (id.kind) {
    case FamilyKind::Group:
    case FamilyKind::BasicAffine:
        for (std::size_t k = 1; k < id.n; ++k) out.push_back(Polynomial::determinant(nv, principal_vars(id.n, k)));
        break;
    case FamilyKind::PointedPairs:
        out.push_back(Polynomial::variable(nv, id.n - 1));
        out.push_back(Polynomial::variable(nv, id.n));
        break;
    case FamilyKind::Triangles: {
        const std::size_t pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
        for (const auto& p : pairs)
            out.push_back(Polynomial::determinant(
                nv, {{4 * p[0], 4 * p[0] + 1}, {4 * p[1], 4 * p[1] + 1}}));
        break;
    }
    case FamilyKind::Sl2ModT: throw Unsupported("curves on sl2t are not supported");
    }
    return out;
}

std::vector<Rational> strop(const Curve& gamma, Rng& rng, std::size_t m)
{
    validate_curve(gamma);
    std::vector<Rational> v;
    for (const auto& f : highest_weight_functions(gamma.ambient)) v.push_back(generic_valuation(f, gamma, rng, m));
    if (gamma.ambient.family && !SphericalFamily(*gamma.ambient.family).cone().contains_exact(v))
        throw NumericError("tropicalization left the valuation cone");
    return v;
}

SpacePoint evaluate_curve(const Curve& gamma, double t0)
{
    const auto& id = require_family(gamma.ambient, "evaluate_curve");
    if (gamma.coords.size() != gamma.ambient.n_coords()) throw InvalidArgument("curve has wrong arity");
    std::vector<Complex> v;
    for (const auto& s : gamma.coords) {
        const Complex z = s.evaluate(t0);
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw NumericError("curve evaluation overflowed at t = " + std::to_string(t0));
        v.push_back(z);
    }
    auto block = [&](std::size_t offset, std::size_t n) {
        ComplexMatrix m(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) = v[offset + r * n + c];
        return m;
    };
    switch (id.kind) {
    case FamilyKind::Group: return GroupPoint{block(0, id.n)};
    case FamilyKind::BasicAffine: return AffinePoint{block(0, id.n)};
    case FamilyKind::PointedPairs:
        return PairPoint{{v.begin(), v.begin() + static_cast<std::ptrdiff_t>(id.n)},
                         {v.begin() + static_cast<std::ptrdiff_t>(id.n), v.end()}};
    case FamilyKind::Triangles: return TrianglePoint{{block(0, 2), block(4, 2), block(8, 2)}};
    case FamilyKind::Sl2ModT: break;
    }
    throw Unsupported("curves on sl2t are not supported");
}

std::vector<LimitRow> limit_check(const Curve& gamma, std::size_t i, const std::vector<double>& t_list,
                                  Rng& rng, std::size_t m)
{
    const auto& id = require_family(gamma.ambient, "limit_check");
    validate_curve(gamma);
    const SphericalFamily family(id);
    if (i >= family.rank()) throw InvalidArgument("generator index out of range");
    const auto f = highest_weight_functions(gamma.ambient)[i];
    const double target = 2.0 * boost::rational_cast<double>(generic_valuation(f, gamma, rng, m));
    std::vector<LimitRow> rows;
    for (double t : t_list) {
        if (!(t > 0.0 && t < 1.0)) throw InvalidArgument("t must lie in (0, 1)");
        double value = 0.0;
        try {
            const double ph = phi(family, i, evaluate_curve(gamma, t));
            value = std::log(ph) / std::log(t);
        } catch (const InvalidArgument& e) {
            throw NumericError("curve evaluation at t = " + std::to_string(t) + " failed: " + e.what());
        }
        if (!std::isfinite(value)) throw NumericError("log_t phi is not finite at t = " + std::to_string(t));
        rows.push_back({t, value, target});
    }
    return rows;
}

Curve group_diagonal_curve(const std::vector<Rational>& a)
{
    const std::size_t n = a.size();
    Rational sum(0);
    for (const auto& e : a) sum += e;
    if (sum != Rational(0)) throw InvalidArgument("diagonal exponents must sum to zero");
    Curve c{CurveAmbient::of({FamilyKind::Group, n}), SeriesVec(n * n)};
    for (std::size_t k = 0; k < n; ++k) c.coords[k * n + k] = monomial_q(1.0, a[k]);
    return c;
}

std::vector<NamedCurve> shipped_curves()
{
    using R = Rational;
    const PuiseuxSeries zero;
    const PuiseuxSeries one = PuiseuxSeries::constant(1.0);
    std::vector<NamedCurve> out;

    out.push_back({"group3 D.M (1,0,-1)", group3_dm_curve({R(1), R(0), R(-1)})});
    out.push_back({"group3 D.M (2,-1,-1)", group3_dm_curve({R(2), R(-1), R(-1)})});
    out.push_back({"group3 D.M (1,1,-2)", group3_dm_curve({R(1), R(1), R(-2)})});
    out.push_back({"group3 D.M (1/2,0,-1/2)", group3_dm_curve({R(1, 2), R(0), R(-1, 2)})});

    out.push_back({"pointed3 preimage (-2,1)", pointed_preimage_curve(3, R(-2), R(1))});
    out.push_back({"pointed3 preimage (-2,0)", pointed_preimage_curve(3, R(-2), R(0))});
    out.push_back({"pointed3 preimage (-1,-1)", pointed_preimage_curve(3, R(-1), R(-1))});
    out.push_back({"pointed4 preimage (-3,1)", pointed_preimage_curve(4, R(-3), R(1))});

    const FamilyId tri{FamilyKind::Triangles, 2};
    out.push_back({"triangles (I, B, I)",
                   matrix_curve(tri, {{one, zero, zero, one},
                                      {mono(1, -1), mono(1, -1), zero, mono(1, 1)},
                                      {one, zero, zero, one}})});
    out.push_back({"triangles (I, B, C)",
                   matrix_curve(tri, {{one, zero, zero, one},
                                      {mono(1, -1), mono(1, -1), zero, mono(1, 1)},
                                      {mono(1, 1), zero, mono(1, -1), mono(1, -1)}})});

    const FamilyId u3{FamilyKind::BasicAffine, 3};
    out.push_back({"affineU3 diag(t, t^-2, t)",
                   matrix_curve(u3, {{mono(1, 1), zero, zero}, {zero, mono(1, -2), zero}, {zero, zero, mono(1, 1)}})});
    // L * diag(t, t^-2, t) with L lower unipotent
    out.push_back({"affineU3 L.diag(t, t^-2, t)",
                   matrix_curve(u3, {{mono(1, 1), zero, zero},
                                     {mono(0.5, 1), mono(1, -2), zero},
                                     {mono(0.25, 1), mono(0.5, -2), mono(1, 1)}})});
    out.push_back({"affineU2 [[t^-1, 0], [1, t]]",
                   matrix_curve({FamilyKind::BasicAffine, 2}, {{mono(1, -1), zero}, {one, mono(1, 1)}})});

    out.push_back({"group3 constant base point", group_diagonal_curve({R(0), R(0), R(0)})});
    {
        Curve c{CurveAmbient::of({FamilyKind::PointedPairs, 3}), SeriesVec(6)};
        c.coords[0] = one;
        c.coords[3] = one;
        out.push_back({"pointed3 constant base point", c});
    }
    out.push_back({"triangles constant base point",
                   matrix_curve(tri, {{one, zero, zero, one}, {one, zero, zero, one}, {one, zero, zero, one}})});
    return out;
}

}  // namespace sphtrop
