#pragma once

#include "skelcollar/exact/laurent_poly.hpp"
#include "skelcollar/exact/rat_matrix.hpp"
#include "skelcollar/skeleton.hpp"

#include <string>
#include <vector>

namespace skelcollar::potential {

using exact::LaurentPoly;
using exact::Rational;

/// Components along x_1..x_n then y_1..y_n.
struct VectorField {
    int n = 0;
    std::vector<LaurentPoly> components;

    const LaurentPoly& along_x(int i) const { return components.at(static_cast<std::size_t>(i - 1)); }
    const LaurentPoly& along_y(int i) const { return components.at(static_cast<std::size_t>(n + i - 1)); }
    /// Fully symbolic field (a_1..a_n, b_1..b_n).
    static VectorField symbolic(int n);
    friend bool operator==(const VectorField&, const VectorField&) = default;
};

/// sum_i dx_i ^ dy_i on the V_0 chart of T*P^n.
struct SymplecticStructure {
    int n = 0;
    /// omega(X, Z) = sum_i X_{x_i} Z_{y_i} - X_{y_i} Z_{x_i}.
    LaurentPoly pair(const VectorField& x, const VectorField& z) const;
};

inline const std::string kConstant = "c";

struct Potential {
    int n = 0;
    /// Includes the symbolic constant c.
    LaurentPoly h;
    Rational kappa{2};
};

VectorField action_vector_field(const skeleton::TorusAction& action);

/// Integrates dh = kappa * iota_X omega. Throws NotHamiltonian when that
/// 1-form is not closed. X must be polynomial.
Potential solve_potential(const VectorField& x, const SymplecticStructure& omega, const Rational& kappa = 2);

/// dh(Z) - kappa * omega(X, Z).
LaurentPoly hamiltonian_residual(const Potential& h, const VectorField& x, const SymplecticStructure& omega,
                                 const VectorField& z);

/// (dh/dy, -dh/dx); equals kappa * X for a solved potential.
VectorField symplectic_gradient(const Potential& h);

/// Kernel of the linear system dh = 0 for a quadratic h; empty means the
/// origin is the only critical point.
std::vector<exact::RatVector> critical_points(const Potential& h);

}  // namespace skelcollar::potential
