#include "sphtrop/cone.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

namespace sphtrop {

namespace {

constexpr double kCoefficientSlack = 1e-12;
constexpr double kSingularGram = 1e-12;

// Solves the k x k system g c = r (k <= 3) by Gaussian elimination with
// partial pivoting; nullopt when g is numerically singular.
std::optional<Vec> solve_small(std::vector<Vec> g, Vec r)
{
    const std::size_t k = r.size();
    double scale = 0.0;
    for (const auto& row : g)
        for (double v : row) scale = std::max(scale, std::abs(v));
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < k; ++i)
            if (std::abs(g[i][col]) > std::abs(g[piv][col])) piv = i;
        if (std::abs(g[piv][col]) <= kSingularGram * std::max(scale, 1.0)) return std::nullopt;
        std::swap(g[piv], g[col]);
        std::swap(r[piv], r[col]);
        for (std::size_t i = col + 1; i < k; ++i) {
            const double f = g[i][col] / g[col][col];
            for (std::size_t j = col; j < k; ++j) g[i][j] -= f * g[col][j];
            r[i] -= f * r[col];
        }
    }
    Vec c(k);
    for (std::size_t i = k; i-- > 0;) {
        double s = r[i];
        for (std::size_t j = i + 1; j < k; ++j) s -= g[i][j] * c[j];
        c[i] = s / g[i][i];
    }
    return c;
}

Vec to_vec(const IntVec& v) { return Vec(v.begin(), v.end()); }

}  // namespace

double dot(const Vec& a, const Vec& b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

double max_norm(const Vec& a)
{
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
}

PolyCone::PolyCone(std::size_t dim, std::vector<IntVec> rays, std::vector<IntVec> normals,
                   std::string note)
    : dim_(dim), rays_(std::move(rays)), normals_(std::move(normals)), note_(std::move(note))
{
    if (dim_ == 0) throw InvalidArgument("cone dimension must be >= 1");
    for (const auto& r : rays_)
        if (r.size() != dim_) throw InvalidArgument("ray has wrong dimension");
    for (const auto& n : normals_)
        if (n.size() != dim_) throw InvalidArgument("halfspace normal has wrong dimension");
    check_consistency();
}

PolyCone PolyCone::whole_space(std::size_t dim)
{
    std::vector<IntVec> rays;
    for (std::size_t i = 0; i < dim; ++i) {
        IntVec e(dim, 0);
        e[i] = 1;
        rays.push_back(e);
        e[i] = -1;
        rays.push_back(e);
    }
    return PolyCone(dim, std::move(rays), {});
}

bool PolyCone::contains(const Vec& q, double tol) const
{
    if (q.size() != dim_) throw InvalidArgument("point has wrong dimension");
    for (const auto& n : normals_)
        if (dot(to_vec(n), q) > tol) return false;
    return true;
}

bool PolyCone::contains_exact(const std::vector<Rational>& q) const
{
    if (q.size() != dim_) throw InvalidArgument("point has wrong dimension");
    for (const auto& n : normals_) {
        Rational s(0);
        for (std::size_t i = 0; i < dim_; ++i) s += Rational(n[i]) * q[i];
        if (s > Rational(0)) return false;
    }
    return true;
}

Vec PolyCone::project(const Vec& q) const
{
    if (q.size() != dim_) throw InvalidArgument("point has wrong dimension");
    Vec best(dim_, 0.0);
    double best_d = norm2(q);

    const std::size_t m = rays_.size();
    std::vector<Vec> rv;
    rv.reserve(m);
    for (const auto& r : rays_) rv.push_back(to_vec(r));

    // Enumerate subsets as bitmasks; only sizes 1..dim are needed (Caratheodory).
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        if (idx.size() > dim_) continue;
        const std::size_t k = idx.size();
        std::vector<Vec> gram(k, Vec(k));
        Vec rhs(k);
        for (std::size_t a = 0; a < k; ++a) {
            rhs[a] = dot(rv[idx[a]], q);
            for (std::size_t b = 0; b < k; ++b) gram[a][b] = dot(rv[idx[a]], rv[idx[b]]);
        }
        const auto c = solve_small(gram, rhs);
        if (!c) continue;
        if (std::any_of(c->begin(), c->end(), [](double v) { return v < -kCoefficientSlack; })) continue;
        Vec p(dim_, 0.0);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t i = 0; i < dim_; ++i) p[i] += std::max((*c)[a], 0.0) * rv[idx[a]][i];
        Vec diff(dim_);
        for (std::size_t i = 0; i < dim_; ++i) diff[i] = q[i] - p[i];
        const double d = norm2(diff);
        if (d < best_d) {
            best_d = d;
            best = std::move(p);
        }
    }
    return best;
}

void PolyCone::check_consistency() const
{
    for (const auto& r : rays_)
        for (const auto& n : normals_) {
            long s = 0;
            for (std::size_t i = 0; i < dim_; ++i) s += r[i] * n[i];
            if (s > 0) throw InvalidArgument("cone ray violates a halfspace");
        }

    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 256; ++trial) {
        Vec q(dim_);
        for (auto& v : q) v = u(rng);
        // Skip points too close to a facet for either test to be decisive.
        bool near_boundary = false;
        for (const auto& n : normals_) {
            const Vec nv = to_vec(n);
            if (std::abs(dot(nv, q)) / norm2(nv) < 1e-6) near_boundary = true;
        }
        if (near_boundary) continue;
        const Vec p = project(q);
        Vec diff(dim_);
        for (std::size_t i = 0; i < dim_; ++i) diff[i] = q[i] - p[i];
        const bool by_rays = norm2(diff) < 1e-9;
        if (by_rays != contains(q)) throw InvalidArgument("ray and halfspace descriptions disagree");
    }
}

}  // namespace sphtrop
