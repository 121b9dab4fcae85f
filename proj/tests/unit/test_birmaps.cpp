#include "skelcollar/birmaps.hpp"
#include "skelcollar/error.hpp"

#include <doctest.h>

using namespace skelcollar;
using namespace skelcollar::birmaps;
using exact::var;

namespace {

LaurentPoly yz(int i, int j) {
    return var("y" + std::to_string(i)) * var("z" + std::to_string(j));
}

// Independent inverse check: recover ([y], [z]) from a Segre point by reading
// a nonzero row and column of the rank-one matrix u_{ij}.
ProjPoint segre_section(const std::vector<Rational>& u, int a, int b) {
    for (int i0 = 0; i0 <= a; ++i0) {
        for (int j0 = 0; j0 <= b; ++j0) {
            if (u[segre_index(i0, j0, b)].is_zero()) continue;
            std::vector<Rational> y;
            std::vector<Rational> z;
            for (int i = 0; i <= a; ++i) y.push_back(u[segre_index(i, j0, b)]);
            for (int j = 0; j <= b; ++j) z.push_back(u[segre_index(i0, j, b)]);
            return {y, z};
        }
    }
    return {};
}

}  // namespace

TEST_CASE("segre embeddings") {
    const auto s11 = segre(1, 1);
    CHECK(s11.target == std::vector<int>{3});
    CHECK(s11.components[0] == std::vector<LaurentPoly>{yz(0, 0), yz(0, 1), yz(1, 0), yz(1, 1)});
    const auto s21 = segre(2, 1);
    CHECK(s21.components[0] ==
          std::vector<LaurentPoly>{yz(0, 0), yz(0, 1), yz(1, 0), yz(1, 1), yz(2, 0), yz(2, 1)});
    const auto s0b = segre(0, 3);
    CHECK(s0b.target == std::vector<int>{3});
    Sampler smp(4);
    for (int t = 0; t < 20; ++t) {
        const auto p = smp.point({0, 3});
        CHECK(projectively_equal(ProjPoint{birmaps::apply(s0b, p)->at(0)}, ProjPoint{p[1]}));
    }
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
            const auto s = segre(a, b);
            for (int t = 0; t < 10; ++t) {
                const auto p = smp.point({a, b});
                CHECK(projectively_equal(segre_section(birmaps::apply(s, p)->at(0), a, b), p));
            }
        }
    }
}

TEST_CASE("linear projections") {
    const auto p = linear_projection(3, {0, 1, 2});
    CHECK(p.indeterminacy == "center M: x0 = x1 = x2 = 0");
    CHECK_FALSE(birmaps::apply(p, {{0, 0, 0, 1}}).has_value());
    const auto q = linear_projection(5, {0, 1, 2, 4});
    CHECK(q.indeterminacy == "center M: x0 = x1 = x2 = x4 = 0");
    CHECK(q.target == std::vector<int>{3});
    const auto id = linear_projection(2, {0, 1, 2});
    Sampler smp(9);
    for (int t = 0; t < 10; ++t) {
        const auto pt = smp.point({2});
        CHECK(*birmaps::apply(id, pt) == pt);
    }
    CHECK_THROWS_AS(linear_projection(3, {}), Error);
    CHECK_THROWS_AS(linear_projection(3, {0, 4}), Error);
}

TEST_CASE("product to projective keep-sets and forms") {
    const auto p11 = product_to_projective(1, 1);
    CHECK(p11.keep_set == std::vector<int>{0, 1, 2});
    CHECK(p11.forward.components[0] == std::vector<LaurentPoly>{yz(0, 0), yz(1, 0), yz(0, 1)});
    const auto p21 = product_to_projective(2, 1);
    CHECK(p21.keep_set == std::vector<int>{0, 1, 2, 4});
    const auto p01 = product_to_projective(0, 1);
    Sampler smp(3);
    for (int t = 0; t < 10; ++t) {
        const auto pt = smp.point({0, 1});
        CHECK(projectively_equal(ProjPoint{birmaps::apply(p01.forward, pt)->at(0)}, ProjPoint{pt[1]}));
    }
}

TEST_CASE("round trips in both directions for a + b <= 5") {
    for (int a = 0; a <= 5; ++a) {
        for (int b = 0; a + b <= 5; ++b) {
            if (a + b == 0) continue;
            const auto pp = product_to_projective(a, b);
            const auto fwd = verify_birational(pp.forward, pp.inverse, 100, 1);
            CHECK(fwd.ok());
            CHECK(fwd.checked == 100);
            const auto back = verify_birational(pp.inverse, pp.forward, 100, 1);
            CHECK(back.ok());
            CHECK(back.checked == 100);
        }
    }
}

TEST_CASE("projective well-definedness under rescaling") {
    Sampler smp(21);
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; a + b <= 4; ++b) {
            if (a + b == 0) continue;
            const auto pp = product_to_projective(a, b);
            for (int t = 0; t < 10; ++t) {
                auto p = smp.point({a, b});
                auto img = birmaps::apply(pp.forward, p);
                if (!img) continue;
                for (auto& c : p[0]) c *= Rational(-7, 3);
                for (auto& c : p[1]) c *= Rational(5, 2);
                CHECK(projectively_equal(*img, *birmaps::apply(pp.forward, p)));
            }
        }
    }
}

TEST_CASE("bir steps") {
    const auto s41 = bir_step(4, 1);
    CHECK(s41.forward.source == std::vector<int>{1, 2});
    CHECK(s41.forward.target == std::vector<int>{2, 1});
    CHECK(verify_birational(s41.forward, s41.inverse, 50, 1).ok());
    const auto s20 = bir_step(2, 0);
    CHECK(s20.forward.source == std::vector<int>{0, 1});
    CHECK(s20.forward.target == std::vector<int>{1, 0});
    Sampler smp(2);
    for (int t = 0; t < 10; ++t) {
        const auto p = smp.point({0, 1});
        CHECK(projectively_equal(ProjPoint{birmaps::apply(s20.forward, p)->at(0)}, ProjPoint{p[1]}));
    }
    const auto s52 = bir_step(5, 2);
    CHECK(s52.forward.target == std::vector<int>{3, 1});
    CHECK(verify_birational(s52.forward, s52.inverse, 100, 1).ok());
    CHECK(verify_birational(s52.inverse, s52.forward, 100, 1).ok());
    for (int n = 2; n <= 8; ++n) {
        for (int j = 0; j + 1 < n; ++j) {
            const auto s = bir_step(n, j);
            CHECK(s.forward.source_dimension() == n - 1);
            CHECK(s.forward.target_dimension() == n - 1);
            CHECK_FALSE(s.forward.notes.empty());
        }
    }
    try {
        (void)bir_step(3, 2);
        FAIL("expected IndexOutOfRange");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::IndexOutOfRange);
    }
    CHECK_THROWS_AS(bir_step(1, 0), Error);
}

TEST_CASE("verifier is falsifiable and handles degenerate samplers") {
    CHECK(verify_birational(identity_map({2}), identity_map({2}), 30, 1).ok());
    // Keeping two Segre coordinates forgets the y factor: no inverse can exist.
    const auto lossy = compose(linear_projection(3, {0, 1}), segre(1, 1));
    RationalMap guess;
    guess.source = {1};
    guess.target = {1, 1};
    guess.components = {{var("x0"), var("x1")}, {var("x0"), var("x1")}};
    const auto v = verify_birational(lossy, guess, 40, 1);
    CHECK_FALSE(v.ok());
    CHECK(v.failed > 0);
    CHECK_FALSE(v.first_failure.empty());

    RationalMap zero;
    zero.source = {1};
    zero.target = {1};
    zero.components = {{LaurentPoly(), LaurentPoly()}};
    try {
        (void)verify_birational(zero, identity_map({1}), 5, 1);
        FAIL("expected DegenerateSampler");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DegenerateSampler);
    }
}

TEST_CASE("sampler determinism and range") {
    Sampler a(1);
    Sampler b(1);
    for (int i = 0; i < 200; ++i) {
        const auto r = a.next();
        CHECK(r == b.next());
        CHECK(r.denominator() <= 97);
        CHECK(abs(r.numerator()) <= 97);
    }
}
