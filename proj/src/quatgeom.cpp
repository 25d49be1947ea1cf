#include "sphtrop/quatgeom.hpp"

#include <cmath>

namespace sphtrop::quat {

namespace {

void require_sl2(const ComplexMatrix& g)
{
    if (g.size() != 2) throw InvalidArgument("expected a 2x2 matrix");
    if (std::abs(det(g) - 1.0) >= 1e-9) throw InvalidArgument("matrix is not in SL2 (|det - 1| >= 1e-9)");
}

Quaternion scalar(Complex c) { return {c, 0.0}; }

}  // namespace

Quaternion Quaternion::inverse() const
{
    const double n = norm_sq();
    if (n < 1e-28) throw NumericError("quaternion is not invertible");
    const Quaternion c = conjugate();
    return {c.z / n, c.w / n};
}

HPoint act(const HPoint& p, const ComplexMatrix& g)
{
    require_sl2(g);
    if (!(p.r > 0.0)) throw InvalidArgument("point must lie in the interior (r > 0)");
    const Complex a = g(0, 0), b = g(0, 1), c = g(1, 0), d = g(1, 1);
    const Quaternion pq{p.z, p.r};
    const Quaternion num = scalar(d) * pq - scalar(b);
    const Quaternion den = scalar(a) - scalar(c) * pq;
    if (std::sqrt(den.norm_sq()) < 1e-14) throw NumericError("(a - cP) is not invertible");
    const Quaternion out = num * den.inverse();
    // The j-component of the image is real for interior points; keep its real part.
    return {out.z, out.w.real()};
}

double cosh_dist_j(const ComplexMatrix& g)
{
    require_sl2(g);
    return 0.5 * g.frobenius_sq();
}

double cosh_dist_pair(const ComplexMatrix& a, const ComplexMatrix& b)
{
    require_sl2(a);
    require_sl2(b);
    const ComplexMatrix a_inv{{a(1, 1), -a(0, 1)}, {-a(1, 0), a(0, 0)}};
    return cosh_dist_j(b * a_inv);
}

double cosh_dist_points(const HPoint& p, const HPoint& q)
{
    if (!(p.r > 0.0) || !(q.r > 0.0)) throw InvalidArgument("points must lie in the interior");
    const double dr = p.r - q.r;
    return 1.0 + (std::norm(p.z - q.z) + dr * dr) / (2.0 * p.r * q.r);
}

}  // namespace sphtrop::quat
