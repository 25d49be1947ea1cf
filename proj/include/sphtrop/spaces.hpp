#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sphtrop/cone.hpp"
#include "sphtrop/matrixkit.hpp"

namespace sphtrop {

enum class FamilyKind {
    Group,         ///< SL_n x SL_n / diagonal SL_n
    BasicAffine,   ///< SL_n / U
    PointedPairs,  ///< SL_n / SL_{n-1}
    Triangles,     ///< SL_2^3 / diagonal SL_2
    Sl2ModT,       ///< SL_2 / T
};

struct FamilyId {
    FamilyKind kind;
    std::size_t n;  ///< matrix size; 2 for triangles and sl2t

    friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

/// CLI names: group3, group4, affineU2, affineU3, pointed3, pointed4, triangles, sl2t.
FamilyId parse_family(std::string_view name);
std::string family_name(FamilyId id);
std::vector<FamilyId> shipped_families();

struct GroupPoint {
    ComplexMatrix a;
};
/// Coset representative A of A U.
struct AffinePoint {
    ComplexMatrix a;
};
/// (x, y) with sum x_i y_i = 1.
struct PairPoint {
    std::vector<Complex> x;
    std::vector<Complex> y;
};
struct TrianglePoint {
    std::array<ComplexMatrix, 3> m;
};
/// Unnormalized representatives of two distinct lines in C^2.
struct LinePairPoint {
    std::array<Complex, 2> z;
    std::array<Complex, 2> w;
};

using SpacePoint = std::variant<GroupPoint, AffinePoint, PairPoint, TrianglePoint, LinePairPoint>;

/// Element of the maximal compact subgroup K, one special unitary per factor.
struct CompactElement {
    std::vector<ComplexMatrix> factors;
};

/// Instance of  phi_lambda * phi_mu >= c * phi_gamma  (weights in generator coordinates).
struct TailInequality {
    IntVec lambda;
    IntVec mu;
    IntVec gamma;
    double c;
};

class SphericalFamily {
public:
    explicit SphericalFamily(FamilyId id);
    static SphericalFamily from_name(std::string_view name) { return SphericalFamily(parse_family(name)); }

    FamilyId id() const { return id_; }
    std::string name() const { return family_name(id_); }
    /// Rank r = number of generators s for every shipped family.
    std::size_t rank() const { return labels_.size(); }
    const std::vector<std::string>& generator_labels() const { return labels_; }
    const PolyCone& cone() const { return cone_; }
    const std::vector<TailInequality>& tail_triples() const { return tails_; }

private:
    FamilyId id_;
    std::vector<std::string> labels_;
    PolyCone cone_;
    std::vector<TailInequality> tails_;
};

/// Throws InvalidArgument when p is not a valid point of the family.
void validate(const SphericalFamily& family, const SpacePoint& p);

/// Spherical function of the i-th generator (0-based), normalized to 1 at the base point.
double phi(const SphericalFamily& family, std::size_t i, const SpacePoint& p);
Vec phi_all(const SphericalFamily& family, const SpacePoint& p);

/// Spherical function for a weight given in generator coordinates. Supports
/// the generators, chi1 + chi2 on pointed pairs, and every k on SL2/U.
double phi_weight(const SphericalFamily& family, const IntVec& weight, const SpacePoint& p);

/// (||x||^2 ||y||^2 - 1/n) * n/(n-1): the adjoint-representation function,
/// rescaled to 1 at the base point.
double phi_extended_pointed_pairs(const PairPoint& p);

/// (|z1 w1|^2 + |z1 w2 + w1 z2|^2 / 2 + |z2 w2|^2) / |z1 w2 - z2 w1|^2;
/// image [1/2, inf). phi() for sl2t returns twice this value.
double phi2_sl2t_closed_form(const LinePairPoint& p);
/// 1 - |<z,w>|^2 / (||z||^2 ||w||^2), the squared sine of the angle between the lines.
double rho_sl2t(const LinePairPoint& p);
/// Kirwan map value in [0, 1/2]; also defined on the diagonal.
double kirwan_sl2t(const LinePairPoint& p);
/// Swaps the two lines (the N(T)/T involution).
LinePairPoint involution_sl2t(const LinePairPoint& p);

SpacePoint base_point(const SphericalFamily& family);
SpacePoint sample_point(const SphericalFamily& family, Rng& rng);
CompactElement sample_compact(const SphericalFamily& family, Rng& rng);
/// Left action of K on the family's points.
SpacePoint act_compact(const SphericalFamily& family, const CompactElement& k, const SpacePoint& p);

inline const PolyCone& valuation_cone(const SphericalFamily& family) { return family.cone(); }

}  // namespace sphtrop
