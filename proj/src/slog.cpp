#include "sphtrop/slog.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <random>
#include <thread>

namespace sphtrop {

namespace {

constexpr std::size_t kChunk = 1024;
constexpr double kDefaultExtent = 3.0;

void require_t(double t)
{
    if (!(t > 0.0 && t < 1.0)) throw InvalidArgument("t must lie in (0, 1)");
}

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Complex unit_phase(Rng& rng)
{
    return std::polar(1.0, uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

ComplexMatrix diag_real(const std::vector<double>& d)
{
    std::vector<Complex> c(d.begin(), d.end());
    return ComplexMatrix::diagonal(c);
}

SpacePoint stratified_group(std::size_t n, double t, double extent, Rng& rng)
{
    std::vector<double> c(n);
    double mean = 0.0;
    for (auto& v : c) {
        v = uniform(rng, -extent, extent);
        mean += v;
    }
    mean /= static_cast<double>(n);
    std::vector<double> d(n);
    for (std::size_t k = 0; k < n; ++k) d[k] = std::pow(t, (c[k] - mean) / 2.0);
    return GroupPoint{diag_real(d)};
}

SpacePoint stratified_affine(std::size_t n, double t, double extent, Rng& rng)
{
    std::vector<Complex> params(n - 1);
    for (auto& p : params) p = std::pow(t, uniform(rng, -extent, extent) / 2.0) * unit_phase(rng);
    const auto base = diagonal_coset_basic_affine(params);
    return AffinePoint{random_special_unitary(n, rng) * base.a};
}

SpacePoint stratified_pairs(std::size_t n, double t, double extent, Rng& rng)
{
    double a = 0.0;
    double b = 0.0;
    do {
        a = uniform(rng, -extent, extent);
        b = uniform(rng, -extent, extent);
    } while (a + b > 0.0);
    return preimage_pointed_pairs(n, t, a, b);
}

SpacePoint stratified_triangles(double t, double extent, Rng& rng)
{
    const double smax = extent * std::abs(std::log(t)) / 2.0;
    TrianglePoint p;
    for (auto& m : p.m) {
        const double s = uniform(rng, 0.0, smax);
        m = diag_real({std::exp(s), std::exp(-s)}) * random_special_unitary(2, rng);
    }
    return p;
}

SpacePoint stratified_sl2t(double t, double extent, Rng& rng)
{
    // phi = 1 + 2/eps^2 for z = (1, 0), w = (1, eps).
    double q = 0.0;
    do q = uniform(rng, -extent, 0.0);
    while (q == 0.0);
    const double eps = std::sqrt(2.0 / (std::pow(t, q) - 1.0));
    const auto u = random_special_unitary(2, rng);
    const auto z = u.apply(std::vector<Complex>{1.0, 0.0});
    const auto w = u.apply(std::vector<Complex>{1.0, eps});
    return LinePairPoint{{z[0], z[1]}, {w[0], w[1]}};
}

std::vector<Vec> run_chunk(const SphericalFamily& family, double t, const AmoebaOptions& o,
                           double extent, std::size_t index, std::size_t count)
{
    Rng rng(substream_seed(o.seed, index));
    std::vector<Vec> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const SpacePoint p = o.stratified ? sample_stratified(family, t, extent, rng)
                                          : sample_point(family, rng);
        Vec q = slog(family, t, p);
        if (o.window && max_norm(q) > *o.window) continue;
        out.push_back(std::move(q));
    }
    return out;
}

// log of (2x^3+1)/(3x^2) and (2+x^3)/(3x) in terms of L = ln x, overflow-free.
double log_fa1(double L) { return L + std::log(2.0 + std::exp(-3.0 * L)) - std::log(3.0); }
double log_fa2(double L) { return 2.0 * L + std::log1p(2.0 * std::exp(-3.0 * L)) - std::log(3.0); }

// Solves f(L) = target for L >= 0 with f increasing and f(0) = 0.
template <class F>
double invert_increasing(F f, double target)
{
    if (target <= 0.0) return 0.0;
    double lo = 0.0;
    double hi = 1.0;
    while (f(hi) < target) {
        lo = hi;
        hi *= 2.0;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

bool group3_contains(double t, const Vec& q, double slack)
{
    if (q[0] > slack || q[1] > slack) return false;
    const double lt = std::log(t);
    const double u1 = std::min(q[0], 0.0) * lt;
    const double la = invert_increasing(log_fa1, u1);
    const double lb = invert_increasing(log_fa2, u1);
    const double q2a = log_fa2(la) / lt;
    const double q2b = log_fa1(lb) / lt;
    const double lo = std::min(q2a, q2b);
    const double hi = std::max(q2a, q2b);
    return q[1] >= lo - slack && q[1] <= hi + slack;
}

}  // namespace

Vec slog(const SphericalFamily& family, double t, const SpacePoint& p)
{
    require_t(t);
    const Vec ph = phi_all(family, p);
    const double lt = std::log(t);
    Vec q(ph.size());
    for (std::size_t i = 0; i < ph.size(); ++i) {
        if (!(ph[i] > 0.0) || !std::isfinite(ph[i]))
            throw NumericError("spherical function is not a positive finite number");
        q[i] = std::log(ph[i]) / lt;
    }
    return q;
}

std::size_t AmoebaCloud::dim() const { return SphericalFamily(family).rank(); }

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index)
{
    // splitmix64 finalizer over (seed, index)
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

SpacePoint sample_stratified(const SphericalFamily& family, double t, double extent, Rng& rng)
{
    require_t(t);
    if (!(extent > 0.0)) throw InvalidArgument("stratified extent must be positive");
    const auto id = family.id();
    switch (id.kind) {
    case FamilyKind::Group: return stratified_group(id.n, t, extent, rng);
    case FamilyKind::BasicAffine: return stratified_affine(id.n, t, extent, rng);
    case FamilyKind::PointedPairs: return stratified_pairs(id.n, t, extent, rng);
    case FamilyKind::Triangles: return stratified_triangles(t, extent, rng);
    case FamilyKind::Sl2ModT: return stratified_sl2t(t, extent, rng);
    }
    throw InvalidArgument("unknown family");
}

AmoebaCloud amoeba(const SphericalFamily& family, double t, const AmoebaOptions& options)
{
    require_t(t);
    if (options.n_samples == 0) throw InvalidArgument("n_samples must be >= 1");
    if (options.window && !(*options.window > 0.0)) throw InvalidArgument("window must be positive");
    const double extent = options.stratified_extent.value_or(options.window.value_or(kDefaultExtent));

    const std::size_t n_chunks = (options.n_samples + kChunk - 1) / kChunk;
    const std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    std::vector<std::vector<Vec>> parts(n_chunks);
    for (std::size_t start = 0; start < n_chunks; start += workers) {
        std::vector<std::future<std::vector<Vec>>> jobs;
        const std::size_t stop = std::min(n_chunks, start + workers);
        for (std::size_t c = start; c < stop; ++c) {
            const std::size_t count = std::min(kChunk, options.n_samples - c * kChunk);
            jobs.push_back(std::async(std::launch::async, run_chunk, std::cref(family), t,
                                      std::cref(options), extent, c, count));
        }
        for (std::size_t c = start; c < stop; ++c) parts[c] = jobs[c - start].get();
    }

    AmoebaCloud cloud{family.id(), t, {}, options.seed, options.n_samples, options.stratified, options.window};
    for (auto& part : parts)
        for (auto& q : part) cloud.points.push_back(std::move(q));
    return cloud;
}

bool image_contains(const SphericalFamily& family, double t, const Vec& q, double slack)
{
    require_t(t);
    if (q.size() != family.rank()) throw InvalidArgument("point has wrong dimension");
    const auto id = family.id();
    switch (id.kind) {
    case FamilyKind::PointedPairs: return q[0] + q[1] <= slack;
    case FamilyKind::BasicAffine: return true;
    case FamilyKind::Sl2ModT: return q[0] <= slack;
    case FamilyKind::Triangles: {
        const double x = std::pow(t, q[0]);
        const double y = std::pow(t, q[1]);
        const double z = std::pow(t, q[2]);
        if (x < 1.0 - slack || y < 1.0 - slack || z < 1.0 - slack) return false;
        // the Gram determinant loses absolute precision like max(x, y, z)^2
        const double scale = std::max({1.0, x * x, y * y, z * z});
        return 1.0 + 2.0 * x * y * z - x * x - y * y - z * z >= -slack * scale;
    }
    case FamilyKind::Group:
        if (id.n == 3) return group3_contains(t, q, slack);
        break;
    }
    throw Unsupported("image_contains: no closed form for " + family.name());
}

BoundaryCurves boundary_group3(double t, const std::vector<double>& x_grid)
{
    require_t(t);
    const double lt = std::log(t);
    BoundaryCurves out;
    for (double x : x_grid) {
        if (!(x >= 1.0)) throw InvalidArgument("boundary grid must lie in [1, inf)");
        const double a = std::log((2.0 * x * x * x + 1.0) / (3.0 * x * x)) / lt;
        const double b = std::log((2.0 + x * x * x) / (3.0 * x)) / lt;
        out.x.push_back(x);
        out.first.push_back({a, b});
        out.second.push_back({b, a});
    }
    return out;
}

PairPoint preimage_pointed_pairs(std::size_t n, double t, double a, double b)
{
    require_t(t);
    if (n < 2) throw InvalidArgument("pointed pairs need n >= 2");
    if (a + b > 0.0) throw InvalidArgument("preimage requires a + b <= 0");
    PairPoint p{std::vector<Complex>(n, 0.0), std::vector<Complex>(n, 0.0)};
    p.x[0] = std::pow(t, a / 2.0);
    p.y[0] = std::pow(t, -a / 2.0);
    p.y[1] = std::sqrt(std::max(0.0, std::pow(t, b) - std::pow(t, -a)));
    return p;
}

AffinePoint diagonal_coset_basic_affine(const std::vector<Complex>& params)
{
    const std::size_t n = params.size() + 1;
    std::vector<Complex> d(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex v = k < params.size() ? params[k] : Complex{1.0, 0.0};
        if (k > 0) v /= params[k - 1];
        d[k] = v;
    }
    return AffinePoint{ComplexMatrix::diagonal(d)};
}

}  // namespace sphtrop
