#include "skelcollar/deform.hpp"

#include "skelcollar/error.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace skelcollar::deform {

using exact::var;

namespace {

LaurentPoly zu(const Rational& c, int a, int b) {
    return LaurentPoly::monomial(c, {{bundles::kZ, a}, {bundles::kU, b}});
}

std::vector<std::pair<int, int>> window_basis(int n, int j, int cutoff) {
    const int zmin = -2 * j - n * cutoff;
    const int zmax = 2 * j + n * cutoff;
    std::set<std::pair<int, int>> hit;
    for (int b = 0; b <= cutoff; ++b) {
        for (int a = 0; a <= zmax; ++a) hit.insert({b, a});
        for (int a = n * b - 2 * j; a >= zmin; --a) {
            if (a <= zmax) hit.insert({b, a});
        }
    }
    std::vector<std::pair<int, int>> basis;
    for (int b = 0; b <= cutoff; ++b) {
        for (int a = zmin; a <= zmax; ++a) {
            if (!hit.count({b, a})) basis.emplace_back(b, a);
        }
    }
    return basis;
}

void check_nj(int n, int j) {
    if (n < 1) throw Error(Errc::InvalidInput, "n must be at least 1");
    if (j < 0) throw Error(Errc::InvalidInput, "j must be nonnegative");
}

}  // namespace

int default_cutoff(int j) { return std::max(3, 2 * j); }

bool is_coboundary(int n, int j, int a, int b) { return a >= 0 || a <= n * b - 2 * j; }

Ext1Basis ext1_basis(int n, int j, int cutoff) {
    check_nj(n, j);
    if (cutoff < 0) throw Error(Errc::InvalidInput, "cutoff must be nonnegative");
    const auto small = window_basis(n, j, cutoff);
    const auto large = window_basis(n, j, 2 * cutoff);
    if (small != large) {
        throw Error(Errc::WindowUnstable, "ext1 basis changed when doubling cutoff " + std::to_string(cutoff));
    }
    Ext1Basis out{n, j, cutoff, {}};
    for (const auto& [b, a] : small) out.monomials.push_back(zu(1, a, b));
    return out;
}

LaurentPoly ExtClass::p() const { return q * var(bundles::kZ, j); }

BundleTransition ExtClass::transition() const { return BundleTransition::canonical(n, j, p()); }

ExtClass make_class(int n, int j, const LaurentPoly& cochain) {
    check_nj(n, j);
    ExtClass c;
    c.n = n;
    c.j = j;
    for (const auto& [powers, coeff] : cochain.monomials()) {
        int a = 0;
        int b = 0;
        for (const auto& [name, e] : powers) {
            if (name == bundles::kZ) {
                a = e;
            } else if (name == bundles::kU) {
                b = e;
            } else {
                throw Error(Errc::InvalidInput, "cochain uses variable " + name + " outside (z, u)");
            }
        }
        if (b < 0) throw Error(Errc::InvalidInput, "cochain must be polynomial in u");
        if (!is_coboundary(n, j, a, b)) c.q += zu(coeff, a, b);
    }
    const auto basis = ext1_basis(n, j);
    for (const auto& m : basis.monomials) c.coordinates.push_back(c.q.coefficient(m.monomials().front().first));
    return c;
}

ExtClass include_class(const ExtClass& p, int s) {
    if (s < 0) throw Error(Errc::InvalidInput, "inclusion step must be nonnegative");
    return make_class(p.n, p.j + s, p.q);
}

BundleTransition DeformationFamily::at(const Rational& tau) const {
    BundleTransition m;
    m.n = n;
    m.matrix = exact::substitute(matrix, {{kTau, LaurentPoly(tau)}});
    return m;
}

DeformationFamily literal_family(const ExtClass& p, int s) {
    if (s < 1) throw Error(Errc::InvalidInput, "s must be positive");
    DeformationFamily f;
    f.n = p.n;
    f.j = p.j;
    f.s = s;
    f.source = p;
    const int big = p.j + s;
    f.matrix = {{var(bundles::kZ, big), var(kTau) * p.p()}, {LaurentPoly(), var(bundles::kZ, -big)}};
    return f;
}

DeformationFamily deformation_family(const ExtClass& p, int s) {
    if (s < 1) throw Error(Errc::InvalidInput, "s must be positive");
    const auto splitting = bundles::splitting_type(p.transition());
    if (splitting.first != p.j) {
        throw Error(Errc::ClassNotGeneric, "class has splitting type " + std::to_string(splitting.first) +
                                               " instead of " + std::to_string(p.j));
    }
    const int j = p.j;
    const int big = j + s;
    const int terms = big + j;
    const auto z = [](int k) { return var(bundles::kZ, k); };
    const LaurentPoly q = p.q * z(-s);
    const LaurentPoly minus_q = -q;
    LaurentPoly y;
    LaurentPoly power(1);
    for (int k = 0; k < terms; ++k) {
        y += power;
        power *= minus_q;
    }
    DeformationFamily f;
    f.n = p.n;
    f.j = j;
    f.s = s;
    f.source = p;
    f.matrix = {{z(big), -(var(kTau) * z(j) * y)}, {LaurentPoly(), z(-big)}};

    bundles::IsoCertificate cert;
    cert.a = {{LaurentPoly(1) + q, -(z(terms) * power)}, {z(-terms), y}};
    cert.b = {{z(s), LaurentPoly(-1)}, {LaurentPoly(1), LaurentPoly()}};
    f.endpoint_verified = bundles::certificate_verifies(f.at(1), p.transition(), cert);
    f.endpoint_certificate = std::move(cert);
    return f;
}

std::vector<int> family_splitting_profile(const DeformationFamily& fam, const std::vector<Rational>& taus) {
    std::vector<int> out;
    out.reserve(taus.size());
    for (const auto& t : taus) out.push_back(bundles::splitting_type(fam.at(t)).first);
    return out;
}

}  // namespace skelcollar::deform
