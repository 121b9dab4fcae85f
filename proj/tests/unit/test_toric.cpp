#include "skelcollar/error.hpp"
#include "skelcollar/exact/rat_matrix.hpp"
#include "skelcollar/toric.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace skelcollar;
using namespace skelcollar::toric;
using exact::Rational;
using exact::var;

namespace {

std::set<Vec2> as_set(const std::vector<Vec2>& v) {
    return {v.begin(), v.end()};
}

// Determinant by cofactor expansion, independent of the elimination code.
long cofactor_det(const std::vector<std::vector<int>>& m) {
    const std::size_t k = m.size();
    if (k == 0) return 1;
    if (k == 1) return m[0][0];
    long total = 0;
    for (std::size_t c = 0; c < k; ++c) {
        if (m[0][c] == 0) continue;
        std::vector<std::vector<int>> minor;
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<int> row;
            for (std::size_t cc = 0; cc < k; ++cc) {
                if (cc != c) row.push_back(m[r][cc]);
            }
            minor.push_back(row);
        }
        total += (c % 2 == 0 ? 1 : -1) * m[0][c] * cofactor_det(minor);
    }
    return total;
}

// Brute-force dual: primitive vectors in a box pairing nonnegatively with both rays,
// then the two extreme ones.
Cone2D brute_dual(const Cone2D& c, long box) {
    std::vector<Vec2> in;
    for (long x = -box; x <= box; ++x) {
        for (long y = -box; y <= box; ++y) {
            if ((x == 0 && y == 0) || std::gcd(x, y) != 1) continue;
            const auto pair = [&](const Vec2& r) { return x * r[0] + y * r[1]; };
            if (pair(c.ray1) >= 0 && pair(c.ray2) >= 0) in.push_back({x, y});
        }
    }
    Vec2 lo = in.front();
    Vec2 hi = in.front();
    for (const auto& v : in) {
        if (det(v, lo) > 0) lo = v;
        if (det(hi, v) > 0) hi = v;
    }
    return Cone2D::make(lo, hi);
}

}  // namespace

TEST_CASE("quotient cones") {
    CHECK(quotient_cone(QuotientSingularity::make(3, 1)) == Cone2D::make({1, 0}, {-1, 3}));
    const auto c = quotient_cone(QuotientSingularity::make(3, 2));
    CHECK(as_set({c.ray1, c.ray2}) == as_set({{0, 1}, {3, 1}}));
    const auto two = quotient_cone(QuotientSingularity::make(2, 1));
    CHECK(unimodular_equivalent(two, dual_cone(two)));
    CHECK_THROWS_AS(QuotientSingularity::make(6, 4), Error);
}

TEST_CASE("dual cone examples and biduality") {
    CHECK(dual_cone(Cone2D::make({1, 0}, {-1, 3})) == Cone2D::make({0, 1}, {3, 1}));
    CHECK(dual_cone(Cone2D::make({1, 0}, {0, 1})) == Cone2D::make({1, 0}, {0, 1}));
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int trial = 0; trial < 300; ++trial) {
        const Vec2 a{d(rng), d(rng)};
        const Vec2 b{d(rng), d(rng)};
        if (det(a, b) == 0) continue;
        const auto c = Cone2D::make(a, b);
        CHECK(dual_cone(dual_cone(c)) == c);
        const auto dc = dual_cone(c);
        for (const auto& u : {c.ray1, c.ray2}) {
            CHECK(dc.ray1[0] * u[0] + dc.ray1[1] * u[1] >= 0);
            CHECK(dc.ray2[0] * u[0] + dc.ray2[1] * u[1] >= 0);
        }
        CHECK(dc == brute_dual(c, 20));
    }
}

TEST_CASE("hj expansion examples") {
    CHECK(hj_expansion(5, 1) == std::vector<int>{5});
    CHECK(hj_expansion(5, 4) == std::vector<int>{2, 2, 2, 2});
    CHECK(hj_expansion(7, 3) == std::vector<int>{3, 2, 2});
    CHECK(hj_evaluate({3, 2, 2}) == Rational(7, 3));
    CHECK_THROWS_AS(hj_expansion(6, 4), Error);
    CHECK_THROWS_AS(hj_expansion(5, 5), Error);
}

TEST_CASE("hj round trip for n <= 50") {
    for (long n = 2; n <= 50; ++n) {
        for (long q = 1; q < n; ++q) {
            if (std::gcd(n, q) != 1) continue;
            const auto a = hj_expansion(n, q);
            CHECK(hj_evaluate(a) == Rational(n, q));
            CHECK(std::all_of(a.begin(), a.end(), [](int x) { return x >= 2; }));
        }
    }
}

TEST_CASE("minimal resolution examples") {
    const auto r43 = minimal_resolution(QuotientSingularity::make(4, 3));
    CHECK(as_set(r43.rays) == as_set({{1, 1}, {2, 1}, {3, 1}}));
    CHECK(r43.self_intersections == std::vector<int>{-2, -2, -2});
    CHECK(r43.intersection_matrix ==
          std::vector<std::vector<int>>{{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}});
    const auto r41 = minimal_resolution(QuotientSingularity::make(4, 1));
    CHECK(r41.rays == std::vector<Vec2>{{0, 1}});
    CHECK(r41.self_intersections == std::vector<int>{-4});
    const auto r21 = minimal_resolution(QuotientSingularity::make(2, 1));
    CHECK(r21.self_intersections == std::vector<int>{-2});
    CHECK(resolve_cone(dual_cone(quotient_cone(QuotientSingularity::make(2, 1)))).self_intersections ==
          std::vector<int>{-2});
}

TEST_CASE("resolution properties for all weights") {
    for (int n = 2; n <= 12; ++n) {
        for (int a = 1; a < n; ++a) {
            if (std::gcd(a, n) != 1) continue;
            const auto r = minimal_resolution(QuotientSingularity::make(n, a));
            std::vector<Vec2> all{r.cone.ray1};
            all.insert(all.end(), r.rays.begin(), r.rays.end());
            all.push_back(r.cone.ray2);
            for (std::size_t i = 0; i + 1 < all.size(); ++i) {
                CHECK(std::abs(det(all[i], all[i + 1])) == 1);
            }
            for (const auto& v : r.rays) CHECK(r.cone.contains(v));
            for (int s : r.self_intersections) CHECK(s <= -2);
            // Leading principal minors alternate in sign: negative definite.
            const auto& m = r.intersection_matrix;
            for (std::size_t k = 1; k <= m.size(); ++k) {
                std::vector<std::vector<int>> lead(k, std::vector<int>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) lead[i][j] = m[i][j];
                const long d = cofactor_det(lead);
                CHECK((k % 2 == 1 ? d < 0 : d > 0));
            }
            // The product over the chain determinant equals the group order.
            CHECK(std::abs(cofactor_det(m)) == n);
        }
    }
}

TEST_CASE("dual cones exchange the two singularity types") {
    for (int n = 2; n <= 12; ++n) {
        const auto x = quotient_cone(QuotientSingularity::make(n, 1));
        const auto y = quotient_cone(QuotientSingularity::make(n, n - 1));
        if (n == 2) {
            // Both types are the same singularity; exchange holds up to GL2(Z).
            CHECK(x == y);
            CHECK(unimodular_equivalent(dual_cone(x), y));
        } else {
            CHECK(dual_cone(x) == y);
            CHECK(dual_cone(y) == x);
        }
        CHECK(normal_form(x) == ConeNormalForm{n, 1});
        CHECK(normal_form(y) == ConeNormalForm{n, n == 2 ? 1 : n - 1});
        CHECK(unimodular_equivalent(x, y) == (n == 2));
    }
}

TEST_CASE("dynkin graphs") {
    const auto g = dynkin_dual_graph(minimal_resolution(QuotientSingularity::make(5, 4)));
    CHECK(g.vertices == 4);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(dynkin_dual_graph(minimal_resolution(QuotientSingularity::make(3, 1))).vertices == 1);
    CHECK(dynkin_dual_graph(minimal_resolution(QuotientSingularity::make(2, 1))).edges.empty());
}

TEST_CASE("invariant ring examples") {
    const auto r3 = invariant_generators(QuotientSingularity::make(3, 1));
    CHECK(r3.generators.size() == 4);
    CHECK(r3.generators[0] == var("a", 3));
    CHECK(r3.generators[1] == var("a", 2) * var("b"));
    const auto x = [](int i) { return var(generator_symbol(i)); };
    CHECK(r3.relations == std::vector<exact::LaurentPoly>{x(0) * x(2) - x(1) * x(1),
                                                          x(0) * x(3) - x(1) * x(2),
                                                          x(1) * x(3) - x(2) * x(2)});
    const auto r1 = invariant_generators(QuotientSingularity::make(1, 1));
    CHECK(r1.generators == std::vector<exact::LaurentPoly>{var("a"), var("b")});
    CHECK(r1.relations.empty());
    CHECK(invariant_generators(QuotientSingularity::make(2, 1)).relations.size() == 1);
    try {
        (void)invariant_generators(QuotientSingularity::make(5, 2));
        FAIL("expected Unsupported");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Unsupported);
    }
}

TEST_CASE("invariance brute force and relation vanishing") {
    for (int n = 1; n <= 8; ++n) {
        const auto s = QuotientSingularity::make(n, 1);
        const auto ring = invariant_generators(s);
        CHECK(ring.relations.size() == static_cast<std::size_t>(n * (n - 1) / 2));
        for (const auto& g : ring.generators) {
            const auto [m, c] = g.monomials().front();
            const int p = m.count("a") ? m.at("a") : 0;
            const int q = m.count("b") ? m.at("b") : 0;
            CHECK(is_invariant_monomial(s, p, q));
            CHECK(p + q == n);
        }
        // No invariant monomial of positive degree below n.
        for (int deg = 1; deg < n; ++deg) {
            for (int p = 0; p <= deg; ++p) CHECK_FALSE(is_invariant_monomial(s, p, deg - p));
        }
        // Every invariant of degree n is listed.
        for (int p = 0; p <= n; ++p) {
            CHECK(is_invariant_monomial(s, p, n - p));
            CHECK(std::find(ring.generators.begin(), ring.generators.end(),
                            var("a", p) * var("b", n - p)) != ring.generators.end());
        }
        for (const auto& rel : ring.relations) {
            CHECK(parametrize(ring, rel).is_zero());
            CHECK(contraction_pullback(rel, n).is_zero());
        }
    }
}

TEST_CASE("contraction map") {
    const auto m = contraction_map(2);
    REQUIRE(m.size() == 3);
    CHECK(m[0].first == var("u"));
    CHECK(m[1].first == var("z") * var("u"));
    CHECK(m[2] == std::make_pair(var("z", 2) * var("u"), std::string("x2")));
    CHECK(contraction_map(1).size() == 2);
    // Independent expansion for n = 2.
    const auto u = var("u");
    const auto z = var("z");
    CHECK((u * (z.pow(2) * u) - (z * u) * (z * u)).is_zero());
}
