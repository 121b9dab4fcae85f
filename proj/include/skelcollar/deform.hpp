#pragma once

#include "skelcollar/bundles.hpp"

#include <optional>
#include <string>
#include <vector>

namespace skelcollar::deform {

using bundles::BundleTransition;
using exact::LaurentPoly;
using exact::PolyMatrix;
using exact::Rational;

/// Deformation parameter symbol.
inline constexpr const char* kTau = "tau";

/// Monomial basis z^a u^b of H^1(Z_n, O(-2j)) on the two-chart cover.
struct Ext1Basis {
    int n = 1;
    int j = 0;
    int cutoff = 0;
    /// Cochains q in the U-trivialization, sorted by (b, a).
    std::vector<LaurentPoly> monomials;
};

/// Default cutoff max(3, 2j).
int default_cutoff(int j);

/// Window: z-exponents in [-2j - n c, 2j + n c], u-exponents in [0, c].
/// Throws WindowUnstable when doubling the cutoff changes the basis.
Ext1Basis ext1_basis(int n, int j, int cutoff);
inline Ext1Basis ext1_basis(int n, int j) { return ext1_basis(n, j, default_cutoff(j)); }

/// Whether z^a u^b is a coboundary: it extends to U (a >= 0) or, after the
/// twist z^-2j and v = z^n u, to V (a <= n b - 2j).
bool is_coboundary(int n, int j, int a, int b);

struct ExtClass {
    int n = 1;
    int j = 0;
    /// Reduced cochain: no monomial lies in the coboundary span.
    LaurentPoly q;
    /// Coordinates on ext1_basis(n, j).
    std::vector<Rational> coordinates;

    /// Off-diagonal entry z^j q of [[z^j, p], [0, z^-j]].
    LaurentPoly p() const;
    bool is_zero() const { return q.is_zero(); }
    BundleTransition transition() const;
};

/// Reduces an arbitrary overlap cochain in (z, u) to its class.
ExtClass make_class(int n, int j, const LaurentPoly& cochain);

/// The same cochain viewed in the (n, j + s) window.
ExtClass include_class(const ExtClass& p, int s);

struct DeformationFamily {
    int n = 1;
    int j = 0;
    int s = 0;
    ExtClass source;
    /// [[z^(j+s), tau P], [0, z^-(j+s)]].
    PolyMatrix matrix;
    /// Certificate that the tau = 1 member is [[z^j, p], [0, z^-j]] on Z_n.
    std::optional<bundles::IsoCertificate> endpoint_certificate;
    bool endpoint_verified = false;

    BundleTransition at(const Rational& tau) const;
};

/// Lifted family: with J = j + s and Q = z^-J p, the off-diagonal is
/// P = -z^j sum_{k < J + j} (-Q)^k. Throws ClassNotGeneric unless the class
/// has splitting type j.
DeformationFamily deformation_family(const ExtClass& p, int s);

/// The unmodified family [[z^(j+s), tau p], [0, z^-(j+s)]].
DeformationFamily literal_family(const ExtClass& p, int s);

/// Splitting integer j of each member.
std::vector<int> family_splitting_profile(const DeformationFamily& fam, const std::vector<Rational>& taus);

}  // namespace skelcollar::deform
