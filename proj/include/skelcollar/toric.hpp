#pragma once

#include "skelcollar/exact/laurent_poly.hpp"
#include "skelcollar/exact/rational.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace skelcollar::toric {

using Vec2 = std::array<long, 2>;

long det(const Vec2& a, const Vec2& b);

/// The cyclic quotient 1/n(1,a): C^2 modulo (x, y) -> (rho x, rho^a y).
struct QuotientSingularity {
    int n = 1;
    int a = 1;

    /// Validates gcd(a, n) = 1 and 1 <= a < n (n = 1 with a = 1 is the trivial group).
    static QuotientSingularity make(int n, int a);

    /// Diagonal generator (rho, rho^a), rho a formal primitive n-th root of unity.
    std::pair<std::string, std::string> generator() const;
    /// Type (n,1) or its degenerate n <= 2 cases.
    bool is_type_one() const { return a == 1; }
    bool is_type_dual() const { return a == n - 1 && n > 2; }
};

/// Two-dimensional strictly convex lattice cone with primitive rays stored in
/// counterclockwise order (det(ray1, ray2) > 0).
struct Cone2D {
    Vec2 ray1{};
    Vec2 ray2{};

    /// Makes rays primitive and orders them counterclockwise; throws on dependence.
    static Cone2D make(Vec2 a, Vec2 b);
    /// Index of the cone, |det(ray1, ray2)|.
    long index() const { return det(ray1, ray2); }
    /// Whether v lies in the closed cone.
    bool contains(const Vec2& v) const;

    friend bool operator==(const Cone2D&, const Cone2D&) = default;
};

/// Normal form (n', q') after an SL2(Z) change of basis taking the cone to
/// <(1,0), (-q', n')> with 0 <= q' < n'.
struct ConeNormalForm {
    long n = 1;
    long q = 0;
    friend bool operator==(const ConeNormalForm&, const ConeNormalForm&) = default;
};

ConeNormalForm normal_form(const Cone2D& c);

/// Equality up to GL2(Z): same index and q' equal or mutually inverse mod n'.
bool unimodular_equivalent(const Cone2D& a, const Cone2D& b);

Cone2D quotient_cone(const QuotientSingularity& s);
Cone2D dual_cone(const Cone2D& c);

/// Hirzebruch-Jung continued fraction of n/q; all entries >= 2.
std::vector<int> hj_expansion(long n, long q);
/// Evaluates a_1 - 1/(a_2 - 1/(...)).
exact::Rational hj_evaluate(const std::vector<int>& entries);

struct ResolutionChain {
    Cone2D cone;
    /// Interior rays, counterclockwise from cone.ray1.
    std::vector<Vec2> rays;
    std::vector<int> self_intersections;
    std::vector<std::vector<int>> intersection_matrix;
};

ResolutionChain minimal_resolution(const QuotientSingularity& s);
/// Subdivision of an arbitrary cone; used by minimal_resolution.
ResolutionChain resolve_cone(const Cone2D& c);

struct DualGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
};

DualGraph dynkin_dual_graph(const ResolutionChain& r);

/// Invariants of 1/n(1,1): generators a^{n-i} b^i for symbols x_i and the
/// binomial relations x_i x_{j+1} - x_{i+1} x_j.
struct InvariantRing {
    int n = 1;
    std::vector<std::string> symbols;
    std::vector<exact::LaurentPoly> generators;
    std::vector<exact::LaurentPoly> relations;
};

InvariantRing invariant_generators(const QuotientSingularity& s);

/// Whether a^p b^q is fixed by the 1/n(1,a) action.
bool is_invariant_monomial(const QuotientSingularity& s, int p, int q);

/// Symbol name x_i.
std::string generator_symbol(int i);

/// Collar monomials z^i u paired with x_i, i = 0..n.
std::vector<std::pair<exact::LaurentPoly, std::string>> contraction_map(int n);

/// Pulls a polynomial in x_0..x_n back along z^i u -> x_i.
exact::LaurentPoly contraction_pullback(const exact::LaurentPoly& p, int n);

/// Substitutes x_i -> generator_i.
exact::LaurentPoly parametrize(const InvariantRing& ring, const exact::LaurentPoly& p);

}  // namespace skelcollar::toric
