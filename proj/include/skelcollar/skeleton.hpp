#pragma once

#include "skelcollar/exact/laurent_poly.hpp"
#include "skelcollar/exact/poly_matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace skelcollar::skeleton {

using exact::LaurentPoly;
using exact::PolyMatrix;

/// Symbol names of the V_0 chart: x1..xn (base), y1..yn (fiber), t (torus).
std::string x_name(int k);
std::string y_name(int k);
inline const std::string kTorus = "t";

/// Chart V_j of T*P^n. Every coordinate is recorded as a function of the V_0
/// coordinates. Base: 1/x_j followed by x_k/x_j (k != j); fiber: the entries of T_{0j} y.
struct Chart {
    int index = 0;
    std::vector<LaurentPoly> base;
    std::vector<std::string> base_labels;
    std::vector<LaurentPoly> fiber;
    std::vector<std::string> fiber_labels;
};

struct CotangentAtlas {
    int n = 0;
    std::vector<Chart> charts;
    /// t0[j] = T_{0j}, the fiber transition from V_0 to V_j.
    std::vector<PolyMatrix> t0;

    /// Jacobian d(base of V_j)/d(x_1..x_n).
    PolyMatrix jacobian(int j) const;
    /// T_{ij} = T_{0j} J_{0i}^T, in V_0 coordinates.
    PolyMatrix transition(int i, int j) const;
};

CotangentAtlas build_atlas(int n);

/// Weights w_k of x_k -> t^{-w_k} x_k, y_k -> t^{w_k} y_k on V_0.
struct TorusAction {
    std::vector<int> weights;

    static TorusAction standard(int n);
    /// Zero or repeated weights give non-isolated fixed points.
    bool isolated() const;
    /// Weight of homogeneous coordinate x_k, with x_0 of weight 0.
    int weight(int k) const { return k == 0 ? 0 : weights.at(k - 1); }
};

/// Acted coordinate as a sum over powers of t: sum_k coeff[k] * t^k.
using TExpansion = std::map<int, LaurentPoly>;

struct ActionChartExpr {
    int chart = 0;
    std::vector<TExpansion> base;
    std::vector<TExpansion> fiber;
};

ActionChartExpr act(const CotangentAtlas& atlas, const TorusAction& action, int chart);

/// Sum of the coefficients, i.e. the expansion at t = 1.
LaurentPoly at_t_one(const TExpansion& e);

/// Form of a skeleton component.
struct Classification {
    enum class Kind { AffineFiber, TwistedBundle, ZeroSection };
    Kind kind = Kind::AffineFiber;
    int base_dim = 0;
    int rank = 0;
    std::vector<int> twists;

    static Classification affine_fiber(int dim) { return {Kind::AffineFiber, 0, dim, {}}; }
    static Classification zero_section(int dim) { return {Kind::ZeroSection, dim, 0, {}}; }
    static Classification twisted_bundle(int base_dim, std::vector<int> twists);

    std::string to_string() const;
    friend bool operator==(const Classification&, const Classification&) = default;
};

struct SkeletonComponent {
    int index = 0;
    /// Limit-rule constraints before reduction, as functions of V_0 coordinates.
    std::vector<LaurentPoly> chart_equations;
    /// Variables forced to vanish, in V_0 coordinates (sorted by name).
    std::vector<std::string> forced_zero;
    std::vector<std::string> free_base;
    std::vector<std::string> free_fiber;
    Classification classification;

    /// The closed component as equations on V_0: one coordinate per forced zero.
    std::vector<LaurentPoly> equations() const;
};

/// Limit rule plus unit-rule reduction. Records forced zeros and free variables;
/// classification is left to classify_component.
SkeletonComponent stable_manifold(const CotangentAtlas& atlas, const TorusAction& action, int j);

Classification classify_component(const SkeletonComponent& c, const CotangentAtlas& atlas);

std::vector<SkeletonComponent> skeleton(int n);
std::vector<SkeletonComponent> skeleton(int n, const TorusAction& action);

/// Closed form of the components: C^n, O_{P^j}(-1)^{n-j}, P^n.
Classification closed_form(int n, int j);
/// Forced zeros of the closed form: x_{j+1..n} and y_{1..j}.
std::vector<std::string> closed_form_forced_zero(int n, int j);

}  // namespace skelcollar::skeleton
