#include "skelcollar/deform.hpp"
#include "skelcollar/error.hpp"
#include "skelcollar/exact/rat_matrix.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace skelcollar;
using namespace skelcollar::deform;
using exact::var;

namespace {

LaurentPoly zu(int a, int b) { return var("z", a) * var("u", b); }

int count_oracle(int n, int j) {
    int total = 0;
    for (int b = 0; n * b < 2 * j; ++b) total += std::max(0, 2 * j - 1 - n * b);
    return total;
}

// Rank deficit of the Cech coboundary map restricted to a window, with the V
// side pulled back through the chart substitution.
int cech_rank_deficit(int n, int j, int cutoff) {
    const int zmin = -2 * j - n * cutoff;
    const int zmax = 2 * j + n * cutoff;
    std::map<std::pair<int, int>, std::size_t> index;
    for (int b = 0; b <= cutoff; ++b) {
        for (int a = zmin; a <= zmax; ++a) index.emplace(std::pair{a, b}, index.size());
    }
    const bundles::SurfaceChartPair charts{n, false};
    std::vector<LaurentPoly> images;
    for (int b = 0; b <= cutoff; ++b) {
        for (int a = 0; a <= zmax; ++a) images.push_back(zu(a, b));
    }
    for (int beta = 0; beta <= cutoff; ++beta) {
        for (int alpha = 0; alpha <= 4 * j + 2 * n * cutoff; ++alpha) {
            const auto g = var("xi", alpha) * var("v", beta);
            images.push_back(var("z", -2 * j) * charts.to_u(g));
        }
    }
    exact::RatMatrix m(index.size(), images.size());
    for (std::size_t c = 0; c < images.size(); ++c) {
        for (const auto& [powers, coeff] : images[c].monomials()) {
            const int a = powers.count("z") ? powers.at("z") : 0;
            const int b = powers.count("u") ? powers.at("u") : 0;
            const auto it = index.find({a, b});
            if (it != index.end()) m(it->second, c) = coeff;
        }
    }
    return static_cast<int>(index.size() - exact::rank(m));
}

const std::vector<Rational> kTaus{0, 1, 2, Rational(1, 3)};

}  // namespace

TEST_CASE("ext1 bases") {
    for (int n = 1; n <= 4; ++n) CHECK(ext1_basis(n, 0).monomials.empty());
    const auto b11 = ext1_basis(1, 1);
    CHECK(b11.monomials == std::vector<LaurentPoly>{var("z", -1)});
    CHECK(b11.monomials.size() == static_cast<std::size_t>(cech_rank_deficit(1, 1, 2)));
    const auto b21 = ext1_basis(2, 1);
    CHECK(b21.monomials.size() == static_cast<std::size_t>(cech_rank_deficit(2, 1, 2)));
    for (int n = 1; n <= 4; ++n) {
        for (int j = 0; j <= 3; ++j) {
            const auto b = ext1_basis(n, j);
            CHECK(b.monomials.size() == static_cast<std::size_t>(count_oracle(n, j)));
            CHECK(b.monomials == ext1_basis(n, j, 2 * b.cutoff).monomials);
        }
    }
    for (int n = 1; n <= 3; ++n) {
        for (int j = 0; j <= 2; ++j) CHECK(ext1_basis(n, j).monomials.size() == std::size_t(cech_rank_deficit(n, j, 4)));
    }
    try {
        (void)ext1_basis(1, 3, 1);
        FAIL("expected WindowUnstable");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::WindowUnstable);
    }
}

TEST_CASE("classes and inclusions") {
    const auto zero = make_class(1, 1, LaurentPoly());
    CHECK(zero.is_zero());
    CHECK(include_class(zero, 1).is_zero());
    const auto reduced = make_class(1, 2, var("z", -1) * var("u") + var("z", 3) + var("z", -7));
    CHECK(reduced.q == var("z", -1) * var("u"));
    CHECK(reduced.p() == var("z") * var("u"));
    const auto gen = make_class(1, 1, var("z", -1));
    const auto up = include_class(gen, 1);
    CHECK(up.j == 2);
    CHECK_FALSE(up.is_zero());
    CHECK(std::any_of(up.coordinates.begin(), up.coordinates.end(), [](const Rational& r) { return !r.is_zero(); }));
    CHECK(include_class(include_class(gen, 1), 1).q == include_class(gen, 2).q);
    CHECK(include_class(include_class(gen, 1), 1).coordinates == include_class(gen, 2).coordinates);
    for (int n = 1; n <= 3; ++n) {
        for (int j = 0; j <= 2; ++j) {
            for (int s = 1; s <= 2; ++s) {
                const auto basis = ext1_basis(n, j);
                std::vector<exact::RatVector> rows;
                for (const auto& m : basis.monomials) rows.push_back(include_class(make_class(n, j, m), s).coordinates);
                if (rows.empty()) continue;
                CHECK(exact::rank(exact::RatMatrix::from_rows(rows, rows.front().size())) == rows.size());
            }
        }
    }
    CHECK_THROWS_AS(make_class(1, 1, var("u", -1)), Error);
}

TEST_CASE("deformation families of non-split classes") {
    for (int n = 1; n <= 2; ++n) {
        const auto p = make_class(n, 2, zu(-1, 1));
        for (int s = 1; s <= 2; ++s) {
            const auto fam = deformation_family(p, s);
            CHECK(fam.endpoint_verified);
            CHECK(family_splitting_profile(fam, kTaus) == std::vector<int>{2 + s, 2, 2, 2});
            CHECK(family_splitting_profile(fam, {5}) == family_splitting_profile(fam, {1}));
        }
    }
}

TEST_CASE("split sources and the literal family") {
    const auto zero = make_class(3, 1, LaurentPoly());
    const auto fam = deformation_family(zero, 1);
    CHECK(fam.endpoint_verified);
    CHECK(family_splitting_profile(fam, {0}) == std::vector<int>{2});
    CHECK(family_splitting_profile(fam, {1}) == std::vector<int>{1});
    const auto lit = literal_family(zero, 1);
    CHECK(family_splitting_profile(lit, kTaus) == std::vector<int>{2, 2, 2, 2});
    CHECK_THROWS_AS(deformation_family(zero, 0), Error);
}

TEST_CASE("classes supported on the line are not generic") {
    const auto p = make_class(1, 1, var("z", -1));
    CHECK(bundles::splitting_type(p.transition()).first == 0);
    try {
        (void)deformation_family(p, 1);
        FAIL("expected ClassNotGeneric");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ClassNotGeneric);
    }
}

TEST_CASE("property: induction chain for n <= 3, j <= 2, s <= 2") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int n = 1; n <= 3; ++n) {
        for (int j = 0; j <= 2; ++j) {
            const auto basis = ext1_basis(n, j);
            std::vector<LaurentPoly> reps{LaurentPoly()};
            for (const auto& m : basis.monomials) reps.push_back(m);
            for (int t = 0; t < 3; ++t) {
                LaurentPoly r;
                for (const auto& m : basis.monomials) r += m.scaled(coef(rng));
                reps.push_back(r);
            }
            for (const auto& q : reps) {
                const auto cls = make_class(n, j, q);
                const int split = bundles::splitting_type(cls.transition()).first;
                for (int s = 1; s <= 2; ++s) {
                    if (split != j) {
                        CHECK_THROWS_AS(deformation_family(cls, s), Error);
                        continue;
                    }
                    const auto fam = deformation_family(cls, s);
                    CHECK(fam.endpoint_verified);
                    CHECK(family_splitting_profile(fam, kTaus) == std::vector<int>{j + s, j, j, j});
                }
            }
        }
    }
}
