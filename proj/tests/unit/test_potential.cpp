#include "skelcollar/error.hpp"
#include "skelcollar/potential.hpp"

#include <doctest.h>

#include <random>

using namespace skelcollar;
using namespace skelcollar::potential;
using exact::var;
using skeleton::TorusAction;

namespace {

LaurentPoly x(int k) { return var(skeleton::x_name(k)); }
LaurentPoly y(int k) { return var(skeleton::y_name(k)); }

}  // namespace

TEST_CASE("action vector fields") {
    const auto f = action_vector_field(TorusAction::standard(3));
    CHECK(f.components == std::vector<LaurentPoly>{-x(1), Rational(-2) * x(2), Rational(-3) * x(3), y(1),
                                                   Rational(2) * y(2), Rational(3) * y(3)});
    const auto zero = action_vector_field(TorusAction{{0, 0}});
    for (const auto& c : zero.components) CHECK(c.is_zero());
    CHECK(action_vector_field(TorusAction{{1}}).components == std::vector<LaurentPoly>{-x(1), y(1)});
}

TEST_CASE("solved potentials") {
    for (int n = 1; n <= 6; ++n) {
        const auto p = solve_potential(action_vector_field(TorusAction::standard(n)), {n});
        LaurentPoly expected = var(kConstant);
        for (int i = 1; i <= n; ++i) expected += Rational(-2 * i) * x(i) * y(i);
        CHECK(p.h == expected);
    }
    const auto zero = solve_potential(action_vector_field(TorusAction{{0, 0}}), {2});
    CHECK(zero.h == var(kConstant));
    const auto p35 = solve_potential(action_vector_field(TorusAction{{3, 5}}), {2}, 1);
    CHECK(p35.h == Rational(-3) * x(1) * y(1) - Rational(5) * x(2) * y(2) + var(kConstant));
    // Independent check by differentiation.
    CHECK(p35.h.derivative("x1") == Rational(-3) * y(1));
    CHECK(p35.h.derivative("y2") == Rational(-5) * x(2));
}

TEST_CASE("residuals") {
    for (int n = 1; n <= 6; ++n) {
        const SymplecticStructure w{n};
        const auto f = action_vector_field(TorusAction::standard(n));
        const auto p = solve_potential(f, w);
        CHECK(hamiltonian_residual(p, f, w, VectorField::symbolic(n)).is_zero());
    }
    const SymplecticStructure w2{2};
    const auto zero_field = action_vector_field(TorusAction{{0, 0}});
    CHECK(hamiltonian_residual(Potential{2, var(kConstant), 2}, zero_field, w2, VectorField::symbolic(2)).is_zero());

    const auto f = action_vector_field(TorusAction::standard(2));
    auto p = solve_potential(f, w2);
    p.h += x(2) * y(2);
    const auto r = hamiltonian_residual(p, f, w2, VectorField::symbolic(2));
    CHECK(r == y(2) * var("a2") + x(2) * var("b2"));
}

TEST_CASE("property: random weights, residual vanishes and gradient matches") {
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> w(-10, 10);
    std::uniform_int_distribution<int> dim(1, 6);
    std::uniform_int_distribution<int> kap(1, 5);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = dim(rng);
        TorusAction act;
        for (int i = 0; i < n; ++i) act.weights.push_back(w(rng));
        const Rational kappa(kap(rng), kap(rng));
        const SymplecticStructure om{n};
        const auto f = action_vector_field(act);
        const auto p = solve_potential(f, om, kappa);
        CHECK(hamiltonian_residual(p, f, om, VectorField::symbolic(n)).is_zero());
        const auto g = symplectic_gradient(p);
        for (std::size_t i = 0; i < f.components.size(); ++i) {
            CHECK(g.components[i] == f.components[i].scaled(kappa));
        }
        const bool all_nonzero =
            std::all_of(act.weights.begin(), act.weights.end(), [](int v) { return v != 0; });
        const auto crit = critical_points(p);
        if (all_nonzero) {
            CHECK(crit.empty());
        } else {
            const auto zeros = std::count(act.weights.begin(), act.weights.end(), 0);
            CHECK(crit.size() == static_cast<std::size_t>(2 * zeros));
        }
    }
}

TEST_CASE("non-hamiltonian field is rejected") {
    VectorField f{1, {x(1), LaurentPoly()}};
    try {
        (void)solve_potential(f, {1});
        FAIL("expected NotHamiltonian");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotHamiltonian);
    }
}
