#pragma once

#include "skelcollar/exact/laurent_poly.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace skelcollar::birmaps {

using exact::LaurentPoly;
using exact::Rational;

/// Homogeneous coordinates per projective factor.
using ProjPoint = std::vector<std::vector<Rational>>;

/// Coordinate names for a product of projective spaces: x0..xr for a single
/// factor, y0..ya and z0..zb for two factors.
std::vector<std::vector<std::string>> factor_variables(const std::vector<int>& dims);

struct RationalMap {
    std::vector<int> source;
    std::vector<int> target;
    /// components[f] is the homogeneous tuple for target factor f.
    std::vector<std::vector<LaurentPoly>> components;
    std::string indeterminacy;
    std::vector<std::string> notes;

    std::vector<std::vector<std::string>> source_variables() const { return factor_variables(source); }
    int source_dimension() const;
    int target_dimension() const;
};

/// Image of a point, or nullopt when some target factor vanishes identically there.
std::optional<ProjPoint> apply(const RationalMap& f, const ProjPoint& p);

/// outer after inner; outer.source must equal inner.target.
RationalMap compose(const RationalMap& outer, const RationalMap& inner);

RationalMap identity_map(const std::vector<int>& dims);

/// P^a x P^b -> P^r by u_{ij} = y_i z_j, lexicographic in (i, j).
RationalMap segre(int a, int b);

/// Segre index of u_{ij}.
inline int segre_index(int i, int j, int b) { return i * (b + 1) + j; }

/// P^r -> P^{|keep|-1}, keeping the listed coordinates in the given order.
RationalMap linear_projection(int r, const std::vector<int>& keep);

struct ProjectivePair {
    RationalMap forward;
    RationalMap inverse;
    /// Segre indices kept by the projection, sorted.
    std::vector<int> keep_set;
};

/// P^a x P^b -> P^{a+b} through the Segre embedding, keeping u_{00}, u_{i0}
/// (i = 1..a), u_{0j} (j = 1..b) in that order; inverse y = [X_0 : X_1..X_a],
/// z = [X_0 : X_{a+1}..X_{a+b}].
ProjectivePair product_to_projective(int a, int b);

/// P^j x P^{n-j-1} -> P^{j+1} x P^{n-j-2} through P^{n-1}. Requires 0 < j+1 < n.
ProjectivePair bir_step(int n, int j);

/// Deterministic exact sampler over a minstd linear congruential stream: p/q with |p| <= 97 and 1 <= q <= 97.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed);
    Rational next();
    ProjPoint point(const std::vector<int>& dims);

private:
    std::minstd_rand engine_;
};

/// Default seed, overridden by SKELCOLLAR_SEED when set.
std::uint64_t default_seed();

/// Projective equality factor by factor (cross-multiplication).
bool projectively_equal(const ProjPoint& p, const ProjPoint& q);

struct Verdict {
    int checked = 0;
    int skipped = 0;
    int failed = 0;
    std::string first_failure;
    bool ok() const { return checked > 0 && failed == 0; }
};

/// Checks inverse(forward(p)) = p on sampled points of forward.source.
/// Throws DegenerateSampler when every sample hits an indeterminacy locus.
Verdict verify_birational(const RationalMap& forward, const RationalMap& inverse, int samples,
                          std::uint64_t seed);

}  // namespace skelcollar::birmaps
