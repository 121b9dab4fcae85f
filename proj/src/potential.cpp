#include "skelcollar/potential.hpp"

#include "skelcollar/error.hpp"

#include <algorithm>
#include <numeric>

namespace skelcollar::potential {

using exact::var;
using skeleton::x_name;
using skeleton::y_name;

namespace {

std::vector<std::string> coordinates(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back(x_name(i));
    for (int i = 1; i <= n; ++i) v.push_back(y_name(i));
    return v;
}

int total_degree(const exact::Exponent& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

}  // namespace

LaurentPoly SymplecticStructure::pair(const VectorField& x, const VectorField& z) const {
    LaurentPoly s;
    for (int i = 1; i <= n; ++i) s += x.along_x(i) * z.along_y(i) - x.along_y(i) * z.along_x(i);
    return s;
}

VectorField VectorField::symbolic(int n) {
    VectorField z;
    z.n = n;
    for (int i = 1; i <= n; ++i) z.components.push_back(var("a" + std::to_string(i)));
    for (int i = 1; i <= n; ++i) z.components.push_back(var("b" + std::to_string(i)));
    return z;
}

VectorField action_vector_field(const skeleton::TorusAction& action) {
    VectorField x;
    x.n = static_cast<int>(action.weights.size());
    for (int i = 1; i <= x.n; ++i) x.components.push_back(Rational(-action.weight(i)) * var(x_name(i)));
    for (int i = 1; i <= x.n; ++i) x.components.push_back(Rational(action.weight(i)) * var(y_name(i)));
    return x;
}

Potential solve_potential(const VectorField& x, const SymplecticStructure& omega, const Rational& kappa) {
    const int n = omega.n;
    if (x.n != n || x.components.size() != static_cast<std::size_t>(2 * n)) {
        throw Error(Errc::InvalidInput, "vector field dimension does not match the symplectic structure");
    }
    const auto coords = coordinates(n);
    // alpha = kappa * iota_X omega: the coefficient of Z along each coordinate.
    std::vector<LaurentPoly> alpha;
    for (int i = 1; i <= n; ++i) alpha.push_back(-(x.along_y(i).scaled(kappa)));
    for (int i = 1; i <= n; ++i) alpha.push_back(x.along_x(i).scaled(kappa));

    for (std::size_t p = 0; p < coords.size(); ++p) {
        for (const auto& v : alpha[p].variables()) {
            if (alpha[p].min_degree(v) < 0) {
                throw Error(Errc::InvalidInput, "vector field must be polynomial");
            }
        }
        for (std::size_t q = p + 1; q < coords.size(); ++q) {
            if (alpha[p].derivative(coords[q]) != alpha[q].derivative(coords[p])) {
                throw Error(Errc::NotHamiltonian, "mixed partials of the potential disagree for " + coords[p] +
                                                      ", " + coords[q]);
            }
        }
    }
    // Radial homotopy: h = sum_a q_a * integral_0^1 alpha_a(s q) ds.
    LaurentPoly h;
    for (std::size_t a = 0; a < coords.size(); ++a) {
        const auto& vars = alpha[a].variables();
        std::vector<std::pair<exact::Exponent, Rational>> terms;
        for (const auto& [e, c] : alpha[a].terms()) {
            terms.emplace_back(e, c / Rational(total_degree(e) + 1));
        }
        h += LaurentPoly::from_terms(vars, terms) * var(coords[a]);
    }
    return {n, h + var(kConstant), kappa};
}

LaurentPoly hamiltonian_residual(const Potential& h, const VectorField& x, const SymplecticStructure& omega,
                                 const VectorField& z) {
    LaurentPoly dh;
    for (int i = 1; i <= omega.n; ++i) {
        dh += h.h.derivative(x_name(i)) * z.along_x(i) + h.h.derivative(y_name(i)) * z.along_y(i);
    }
    return dh - omega.pair(x, z).scaled(h.kappa);
}

VectorField symplectic_gradient(const Potential& h) {
    VectorField s;
    s.n = h.n;
    for (int i = 1; i <= h.n; ++i) s.components.push_back(h.h.derivative(y_name(i)));
    for (int i = 1; i <= h.n; ++i) s.components.push_back(-h.h.derivative(x_name(i)));
    return s;
}

std::vector<exact::RatVector> critical_points(const Potential& h) {
    const auto coords = coordinates(h.n);
    exact::RatMatrix m(coords.size(), coords.size());
    for (std::size_t r = 0; r < coords.size(); ++r) {
        const LaurentPoly g = h.h.derivative(coords[r]);
        for (const auto& [powers, c] : g.monomials()) {
            if (powers.size() != 1 || powers.begin()->second != 1) {
                throw Error(Errc::Unsupported, "critical points are computed for quadratic potentials only");
            }
            const auto it = std::find(coords.begin(), coords.end(), powers.begin()->first);
            if (it == coords.end()) {
                throw Error(Errc::Unsupported, "gradient involves a non-coordinate symbol");
            }
            m(r, static_cast<std::size_t>(it - coords.begin())) = c;
        }
    }
    return exact::kernel(m);
}

}  // namespace skelcollar::potential
