#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sphtrop/spaces.hpp"

namespace sphtrop {

/// sLog_{Gamma,t}(p)_i = ln(phi_i(p)) / ln(t)
Vec slog(const SphericalFamily& family, double t, const SpacePoint& p);

struct AmoebaOptions {
    std::size_t n_samples = 1000;
    std::uint64_t seed = 0;
    /// Keep only points with max-norm <= window.
    std::optional<double> window;
    /// Draw from the family's constructed-point sampler instead of the
    /// Gaussian-induced one (diagonal cosets, explicit preimages, ...).
    bool stratified = false;
    /// Box half-width the stratified sampler aims to cover; defaults to the window or 3.
    std::optional<double> stratified_extent;
};

struct AmoebaCloud {
    FamilyId family;
    double t = 0.5;
    std::vector<Vec> points;
    std::uint64_t seed = 0;
    std::size_t n_drawn = 0;
    bool stratified = false;
    std::optional<double> window;

    std::size_t dim() const;
};

/// Samples are drawn in fixed-size chunks, each from its own RNG substream
/// derived from the seed, and evaluated concurrently; the cloud order is the
/// chunk order, so the output only depends on the seed.
AmoebaCloud amoeba(const SphericalFamily& family, double t, const AmoebaOptions& options);

/// Deterministic substream seed for chunk `index` of a run seeded by `seed`.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

/// Point whose sLog image at parameter t is roughly uniform over the part of
/// the cone inside [-extent, extent]^s.
SpacePoint sample_stratified(const SphericalFamily& family, double t, double extent, Rng& rng);

/// Closed-form image predicate: pointed pairs, triangles, group3, basic affine, sl2t.
/// For triangles the Gram-determinant slack is scaled by max(1, x^2, y^2, z^2).
bool image_contains(const SphericalFamily& family, double t, const Vec& q, double slack = 1e-9);

struct BoundaryCurves {
    std::vector<double> x;
    std::vector<Vec> first;   ///< (log_t((2x^3+1)/(3x^2)), log_t((2+x^3)/(3x)))
    std::vector<Vec> second;  ///< same with coordinates swapped
};

/// Boundary of the group3 amoeba, parametrized by x >= 1.
BoundaryCurves boundary_group3(double t, const std::vector<double>& x_grid);

/// x = (t^{a/2}, 0, ...), y = (t^{-a/2}, sqrt(t^b - t^{-a}), 0, ...); requires a + b <= 0.
PairPoint preimage_pointed_pairs(std::size_t n, double t, double a, double b);

/// diag(t_1, t_1^{-1} t_2, ..., t_{n-1}^{-1}) in SL_n.
AffinePoint diagonal_coset_basic_affine(const std::vector<Complex>& params);

}  // namespace sphtrop
