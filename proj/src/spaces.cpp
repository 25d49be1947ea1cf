#include "sphtrop/spaces.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace sphtrop {

namespace {

constexpr double kDetTol = 1e-9;
constexpr double kPairingTol = 1e-10;
constexpr double kDistinctLinesTol = 1e-10;
constexpr int kSampleRetries = 64;

std::vector<std::string> make_labels(FamilyId id)
{
    std::vector<std::string> labels;
    switch (id.kind) {
    case FamilyKind::Group:
        for (std::size_t i = 1; i < id.n; ++i)
            labels.push_back("(omega_" + std::to_string(i) + ",-omega_" + std::to_string(i) + ")");
        break;
    case FamilyKind::BasicAffine:
        for (std::size_t i = 1; i < id.n; ++i) labels.push_back("omega_" + std::to_string(i));
        break;
    case FamilyKind::PointedPairs:
        labels = {"omega_" + std::to_string(id.n - 1), "omega_1"};
        break;
    case FamilyKind::Triangles:
        labels = {"Omega_12", "Omega_13", "Omega_23"};
        break;
    case FamilyKind::Sl2ModT:
        labels = {"2*omega"};
        break;
    }
    return labels;
}

long gcd_of(const IntVec& v)
{
    long g = 0;
    for (long x : v) g = std::gcd(g, std::abs(x));
    return g == 0 ? 1 : g;
}

PolyCone make_cone(FamilyId id)
{
    switch (id.kind) {
    case FamilyKind::Group: {
        // Antidominant chamber in generator coordinates. Ray k has entries
        // -<coweight_k, omega_i> = -(min(i,k) - ik/n), scaled to be primitive;
        // facets are the rows of the Cartan matrix.
        const std::size_t s = id.n - 1;
        std::vector<IntVec> rays, normals;
        for (std::size_t k = 1; k <= s; ++k) {
            IntVec r(s);
            for (std::size_t i = 1; i <= s; ++i)
                r[i - 1] = -static_cast<long>(id.n * std::min(i, k) - i * k);
            const long g = gcd_of(r);
            for (auto& v : r) v /= g;
            rays.push_back(r);
        }
        for (std::size_t i = 0; i < s; ++i) {
            IntVec nrm(s, 0);
            nrm[i] = 2;
            if (i > 0) nrm[i - 1] = -1;
            if (i + 1 < s) nrm[i + 1] = -1;
            normals.push_back(nrm);
        }
        return PolyCone(s, rays, normals);
    }
    case FamilyKind::BasicAffine:
        return PolyCone::whole_space(id.n - 1);
    case FamilyKind::PointedPairs:
        return PolyCone(2, {{1, -1}, {-1, 1}, {-1, -1}}, {{1, 1}});
    case FamilyKind::Triangles:
        return PolyCone(3, {{-1, -1, 0}, {-1, 0, -1}, {0, -1, -1}},
                        {{1, 1, -1}, {1, -1, 1}, {-1, 1, 1}});
    case FamilyKind::Sl2ModT:
        return PolyCone(1, {{-1}}, {{1}},
                        "stored in sLog coordinates (q <= 0); the -log(rho) parametrization of the "
                        "same orbit space uses the opposite sign");
    }
    throw InvalidArgument("unknown family");
}

std::vector<TailInequality> make_tails(FamilyId id)
{
    std::vector<TailInequality> tails;
    if (id.kind == FamilyKind::PointedPairs) {
        const double c = static_cast<double>(id.n - 1) / static_cast<double>(id.n);
        tails.push_back({{1, 0}, {0, 1}, {1, 1}, c});
    } else if (id.kind == FamilyKind::BasicAffine && id.n == 2) {
        // Horospherical: the product of isotypic components is a single component.
        for (long k = 1; k <= 4; ++k)
            for (long l = k; l <= 4; ++l) tails.push_back({{k}, {l}, {k + l}, 1.0});
    }
    return tails;
}

void require_det_one(const ComplexMatrix& a, std::size_t n)
{
    if (a.size() != n) throw InvalidArgument("matrix has the wrong dimension for this family");
    if (std::abs(det(a) - 1.0) >= kDetTol) throw InvalidArgument("matrix is not in SL_n (|det - 1| >= 1e-9)");
}

template <class T>
const T& expect(const SpacePoint& p, const char* what)
{
    const T* v = std::get_if<T>(&p);
    if (!v) throw InvalidArgument(std::string("point is not a ") + what);
    return *v;
}

double phi_group(const ComplexMatrix& a, std::size_t i)
{
    const auto n = a.size();
    const auto sets = subsets(n, i);
    double s = 0.0;
    for (const auto& rows : sets)
        for (const auto& cols : sets) s += std::norm(minor(a, rows, cols));
    return s / static_cast<double>(binomial(n, i));
}

double phi_affine(const ComplexMatrix& a, std::size_t i)
{
    double s = 0.0;
    for (const auto& rows : subsets(a.size(), i)) s += std::norm(flag_minor(a, rows));
    return s;
}

double squared_norm(const std::vector<Complex>& v)
{
    double s = 0.0;
    for (const auto& c : v) s += std::norm(c);
    return s;
}

// (1/2) sum_{r,s} |det(row r of P; row s of Q)|^2
double phi_triangle_pair(const ComplexMatrix& p, const ComplexMatrix& q)
{
    double s = 0.0;
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) s += std::norm(p(r, 0) * q(c, 1) - p(r, 1) * q(c, 0));
    return 0.5 * s;
}

std::vector<Complex> gaussian_vector(std::size_t n, Rng& rng)
{
    std::vector<Complex> v(n);
    for (auto& c : v) c = standard_complex_normal(rng);
    return v;
}

}  // namespace

FamilyId parse_family(std::string_view name)
{
    if (name == "group3") return {FamilyKind::Group, 3};
    if (name == "group4") return {FamilyKind::Group, 4};
    if (name == "affineU2") return {FamilyKind::BasicAffine, 2};
    if (name == "affineU3") return {FamilyKind::BasicAffine, 3};
    if (name == "pointed3") return {FamilyKind::PointedPairs, 3};
    if (name == "pointed4") return {FamilyKind::PointedPairs, 4};
    if (name == "triangles") return {FamilyKind::Triangles, 2};
    if (name == "sl2t") return {FamilyKind::Sl2ModT, 2};
    throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

std::string family_name(FamilyId id)
{
    switch (id.kind) {
    case FamilyKind::Group: return "group" + std::to_string(id.n);
    case FamilyKind::BasicAffine: return "affineU" + std::to_string(id.n);
    case FamilyKind::PointedPairs: return "pointed" + std::to_string(id.n);
    case FamilyKind::Triangles: return "triangles";
    case FamilyKind::Sl2ModT: return "sl2t";
    }
    return "?";
}

std::vector<FamilyId> shipped_families()
{
    return {{FamilyKind::Group, 3},        {FamilyKind::Group, 4},
            {FamilyKind::BasicAffine, 2},  {FamilyKind::BasicAffine, 3},
            {FamilyKind::PointedPairs, 3}, {FamilyKind::PointedPairs, 4},
            {FamilyKind::Triangles, 2},    {FamilyKind::Sl2ModT, 2}};
}

SphericalFamily::SphericalFamily(FamilyId id)
    : id_(id), labels_(make_labels(id)), cone_(make_cone(id)), tails_(make_tails(id))
{
    if ((id.kind == FamilyKind::Group || id.kind == FamilyKind::BasicAffine) && id.n < 2)
        throw InvalidArgument("n must be >= 2");
    if (id.kind == FamilyKind::PointedPairs && id.n < 3) throw InvalidArgument("pointed pairs need n >= 3");
}

void validate(const SphericalFamily& family, const SpacePoint& p)
{
    const auto id = family.id();
    switch (id.kind) {
    case FamilyKind::Group:
        require_det_one(expect<GroupPoint>(p, "group point").a, id.n);
        break;
    case FamilyKind::BasicAffine:
        require_det_one(expect<AffinePoint>(p, "basic affine point").a, id.n);
        break;
    case FamilyKind::PointedPairs: {
        const auto& pp = expect<PairPoint>(p, "pointed pair");
        if (pp.x.size() != id.n || pp.y.size() != id.n)
            throw InvalidArgument("pointed pair has the wrong dimension");
        Complex pairing{0.0, 0.0};
        for (std::size_t i = 0; i < id.n; ++i) pairing += pp.x[i] * pp.y[i];
        if (std::abs(pairing - 1.0) >= kPairingTol)
            throw InvalidArgument("pointed pair violates sum x_i y_i = 1");
        break;
    }
    case FamilyKind::Triangles:
        for (const auto& m : expect<TrianglePoint>(p, "triangle point").m) require_det_one(m, 2);
        break;
    case FamilyKind::Sl2ModT: {
        const auto& lp = expect<LinePairPoint>(p, "line pair");
        if (std::abs(lp.z[0] * lp.w[1] - lp.z[1] * lp.w[0]) <= kDistinctLinesTol)
            throw InvalidArgument("line pair lies on the diagonal");
        break;
    }
    }
}

double phi(const SphericalFamily& family, std::size_t i, const SpacePoint& p)
{
    if (i >= family.rank()) throw InvalidArgument("generator index out of range");
    validate(family, p);
    switch (family.id().kind) {
    case FamilyKind::Group: return phi_group(std::get<GroupPoint>(p).a, i + 1);
    case FamilyKind::BasicAffine: return phi_affine(std::get<AffinePoint>(p).a, i + 1);
    case FamilyKind::PointedPairs: {
        const auto& pp = std::get<PairPoint>(p);
        return squared_norm(i == 0 ? pp.x : pp.y);
    }
    case FamilyKind::Triangles: {
        const auto& m = std::get<TrianglePoint>(p).m;
        static constexpr std::size_t pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
        return phi_triangle_pair(m[pairs[i][0]], m[pairs[i][1]]);
    }
    case FamilyKind::Sl2ModT:
        return 2.0 * phi2_sl2t_closed_form(std::get<LinePairPoint>(p));
    }
    throw InvalidArgument("unknown family");
}

Vec phi_all(const SphericalFamily& family, const SpacePoint& p)
{
    Vec out(family.rank());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = phi(family, i, p);
    return out;
}

double phi_weight(const SphericalFamily& family, const IntVec& weight, const SpacePoint& p)
{
    if (weight.size() != family.rank()) throw InvalidArgument("weight has the wrong rank");
    long total = 0;
    std::size_t nonzero = 0, last = 0;
    for (std::size_t i = 0; i < weight.size(); ++i) {
        if (weight[i] < 0) throw InvalidArgument("weight must be dominant");
        total += weight[i];
        if (weight[i] != 0) {
            ++nonzero;
            last = i;
        }
    }
    if (total == 0) return 1.0;
    if (nonzero == 1 && weight[last] == 1) return phi(family, last, p);

    const auto id = family.id();
    if (id.kind == FamilyKind::PointedPairs && weight == IntVec{1, 1}) {
        validate(family, p);
        return phi_extended_pointed_pairs(std::get<PairPoint>(p));
    }
    if (id.kind == FamilyKind::BasicAffine && id.n == 2) {
        // Degree-k forms in the first column (x, y); the monomials x^a y^b have
        // squared norm a! b! / k! for the SU2-invariant inner product.
        validate(family, p);
        const auto& a = std::get<AffinePoint>(p).a;
        const Complex x = a(0, 0), y = a(1, 0);
        const auto k = static_cast<std::size_t>(weight[0]);
        double s = 0.0;
        for (std::size_t e = 0; e <= k; ++e) {
            const double mono = std::pow(std::abs(x), 2.0 * e) * std::pow(std::abs(y), 2.0 * (k - e));
            s += static_cast<double>(binomial(k, e)) * mono;
        }
        return s;
    }
    throw Unsupported("no spherical function implemented for this weight on " + family.name());
}

double phi_extended_pointed_pairs(const PairPoint& p)
{
    const double n = static_cast<double>(p.x.size());
    return (squared_norm(p.x) * squared_norm(p.y) - 1.0 / n) * n / (n - 1.0);
}

double phi2_sl2t_closed_form(const LinePairPoint& p)
{
    const auto& z = p.z;
    const auto& w = p.w;
    const double d = std::norm(z[0] * w[1] - z[1] * w[0]);
    if (d <= kDistinctLinesTol * kDistinctLinesTol) throw InvalidArgument("line pair lies on the diagonal");
    return (std::norm(z[0] * w[0]) + 0.5 * std::norm(z[0] * w[1] + w[0] * z[1]) + std::norm(z[1] * w[1])) / d;
}

double rho_sl2t(const LinePairPoint& p)
{
    const Complex inner = std::conj(p.z[0]) * p.w[0] + std::conj(p.z[1]) * p.w[1];
    const double nz = std::norm(p.z[0]) + std::norm(p.z[1]);
    const double nw = std::norm(p.w[0]) + std::norm(p.w[1]);
    if (nz == 0.0 || nw == 0.0) throw InvalidArgument("line representative is zero");
    return 1.0 - std::norm(inner) / (nz * nw);
}

double kirwan_sl2t(const LinePairPoint& p)
{
    const auto& z = p.z;
    const auto& w = p.w;
    const double nz = std::norm(z[0]) + std::norm(z[1]);
    const double nw = std::norm(w[0]) + std::norm(w[1]);
    if (nz == 0.0 || nw == 0.0) throw InvalidArgument("line representative is zero");
    const double diag = std::norm(z[0]) / nz + std::norm(w[0]) / nw - 1.0;
    const double cross = std::norm(z[0]) * std::norm(z[1]) / (nz * nz) +
                         2.0 * (z[0] * std::conj(w[0]) * std::conj(z[1]) * w[1]).real() / (nz * nw) +
                         std::norm(w[0]) * std::norm(w[1]) / (nw * nw);
    return 0.5 * std::sqrt(std::max(diag * diag + cross, 0.0));
}

LinePairPoint involution_sl2t(const LinePairPoint& p) { return {p.w, p.z}; }

SpacePoint base_point(const SphericalFamily& family)
{
    const auto id = family.id();
    switch (id.kind) {
    case FamilyKind::Group: return GroupPoint{ComplexMatrix::identity(id.n)};
    case FamilyKind::BasicAffine: return AffinePoint{ComplexMatrix::identity(id.n)};
    case FamilyKind::PointedPairs: {
        PairPoint p{std::vector<Complex>(id.n), std::vector<Complex>(id.n)};
        p.x[0] = 1.0;
        p.y[0] = 1.0;
        return p;
    }
    case FamilyKind::Triangles: {
        const auto i2 = ComplexMatrix::identity(2);
        return TrianglePoint{{i2, i2, i2}};
    }
    case FamilyKind::Sl2ModT: return LinePairPoint{{1.0, 0.0}, {0.0, 1.0}};
    }
    throw InvalidArgument("unknown family");
}

SpacePoint sample_point(const SphericalFamily& family, Rng& rng)
{
    const auto id = family.id();
    switch (id.kind) {
    case FamilyKind::Group: return GroupPoint{random_special_linear(id.n, rng)};
    case FamilyKind::BasicAffine: return AffinePoint{random_special_linear(id.n, rng)};
    case FamilyKind::PointedPairs: {
        for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
            auto x = gaussian_vector(id.n, rng);
            auto y = gaussian_vector(id.n, rng);
            const double nx = squared_norm(x);
            if (nx < 1e-6) continue;
            Complex pairing{0.0, 0.0};
            for (std::size_t i = 0; i < id.n; ++i) pairing += x[i] * y[i];
            const Complex shift = (1.0 - pairing) / nx;
            for (std::size_t i = 0; i < id.n; ++i) y[i] += shift * std::conj(x[i]);
            return PairPoint{std::move(x), std::move(y)};
        }
        throw NumericError("pointed pair sampler: retry budget exhausted");
    }
    case FamilyKind::Triangles:
        return TrianglePoint{{random_special_linear(2, rng), random_special_linear(2, rng),
                              random_special_linear(2, rng)}};
    case FamilyKind::Sl2ModT: {
        for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
            const auto z = gaussian_vector(2, rng);
            const auto w = gaussian_vector(2, rng);
            if (std::abs(z[0] * w[1] - z[1] * w[0]) > kDistinctLinesTol)
                return LinePairPoint{{z[0], z[1]}, {w[0], w[1]}};
        }
        throw NumericError("line pair sampler: retry budget exhausted");
    }
    }
    throw InvalidArgument("unknown family");
}

CompactElement sample_compact(const SphericalFamily& family, Rng& rng)
{
    const auto id = family.id();
    switch (id.kind) {
    case FamilyKind::Group:
        return {{random_special_unitary(id.n, rng), random_special_unitary(id.n, rng)}};
    case FamilyKind::BasicAffine:
    case FamilyKind::PointedPairs:
        return {{random_special_unitary(id.n, rng)}};
    case FamilyKind::Triangles:
        return {{random_special_unitary(2, rng), random_special_unitary(2, rng), random_special_unitary(2, rng)}};
    case FamilyKind::Sl2ModT:
        return {{random_special_unitary(2, rng)}};
    }
    throw InvalidArgument("unknown family");
}

SpacePoint act_compact(const SphericalFamily& family, const CompactElement& k, const SpacePoint& p)
{
    const auto id = family.id();
    const auto& f = k.factors;
    switch (id.kind) {
    case FamilyKind::Group:
        return GroupPoint{f.at(0) * expect<GroupPoint>(p, "group point").a * f.at(1).adjoint()};
    case FamilyKind::BasicAffine:
        return AffinePoint{f.at(0) * expect<AffinePoint>(p, "basic affine point").a};
    case FamilyKind::PointedPairs: {
        const auto& pp = expect<PairPoint>(p, "pointed pair");
        // (A, v, w) -> (A v, A^{-T} w); for unitary A, A^{-T} = conj(A).
        return PairPoint{f.at(0).apply(pp.x), f.at(0).conjugate().apply(pp.y)};
    }
    case FamilyKind::Triangles: {
        const auto& m = expect<TrianglePoint>(p, "triangle point").m;
        return TrianglePoint{{f.at(0) * m[0], f.at(1) * m[1], f.at(2) * m[2]}};
    }
    case FamilyKind::Sl2ModT: {
        const auto& lp = expect<LinePairPoint>(p, "line pair");
        const auto z = f.at(0).apply(lp.z);
        const auto w = f.at(0).apply(lp.w);
        return LinePairPoint{{z[0], z[1]}, {w[0], w[1]}};
    }
    }
    throw InvalidArgument("unknown family");
}

}  // namespace sphtrop
