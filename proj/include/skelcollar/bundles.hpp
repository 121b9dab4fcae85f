#pragma once

#include "skelcollar/exact/laurent_poly.hpp"
#include "skelcollar/exact/poly_matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skelcollar::bundles {

using exact::LaurentPoly;
using exact::PolyMatrix;
using exact::Rational;

inline constexpr const char* kZ = "z";
inline constexpr const char* kU = "u";
inline constexpr const char* kXi = "xi";
inline constexpr const char* kV = "v";

/// Canonical charts U = (z, u) and V = (xi, v) of Z_n glued by xi = 1/z, v = z^n u.
struct SurfaceChartPair {
    int n = 1;
    /// On the collar u and v are units.
    bool collar = false;

    /// Rewrites a function of (xi, v) in the U coordinates.
    LaurentPoly to_u(const LaurentPoly& f) const;
    /// Rewrites a function of (z, u) in the V coordinates.
    LaurentPoly to_v(const LaurentPoly& f) const;
    /// Polynomial in z, u (u^-1 allowed on the collar).
    bool regular_on_u(const LaurentPoly& f) const;
    /// Polynomial in xi, v after rewriting (v^-1 allowed on the collar); f is given in (z, u).
    bool regular_on_v(const LaurentPoly& f) const;
};

/// L_n(j): transition z^-j, with sections s_V = z^-j s_U.
struct CollarLineBundle {
    int n = 1;
    int j = 0;
    LaurentPoly transition() const { return exact::var(kZ, -j); }
};

/// Unit cochain turning z^-j into z^-residue: v^k z^-j u^-k = z^-residue.
struct LineCertificate {
    int n = 1;
    int j = 0;
    int residue = 0;
    int k = 0;
    /// v^k, in the V coordinates.
    LaurentPoly v_side;
    /// u^-k, in the U coordinates.
    LaurentPoly u_side;

    bool verifies() const;
};

LineCertificate line_bundle_normal_form(int n, int j);

/// Tensor table of {L_n(0), ..., L_n(n-1)}.
struct PicardTable {
    int n = 1;
    /// table[a][b] is the residue of L(a) tensor L(b).
    std::vector<std::vector<int>> table;
    /// Certificates for every entry, in the same layout.
    std::vector<std::vector<LineCertificate>> certificates;
    /// First Chern class mod n of L(0..n-1).
    std::vector<int> chern_residues;

    /// Order of L(1) in the table.
    int generator_order() const;
};

PicardTable picard_group(int n);

struct CollarTopology {
    int n = 1;
    int pi1 = 1;
    int h1 = 1;
    int h2 = 1;
    std::vector<std::string> steps;
};

CollarTopology collar_topology(int n);

/// Rank r transition over the overlap, s_V = M s_U, entries in z^+-1 and u.
struct BundleTransition {
    int n = 1;
    PolyMatrix matrix;
    std::optional<int> declared_splitting;
    int c1 = 0;

    /// [[z^j, p], [0, z^-j]].
    static BundleTransition canonical(int n, int j, const LaurentPoly& p = LaurentPoly());
    /// Diagonal z^-j (rank one).
    static BundleTransition line(int n, int j);

    std::size_t rank() const { return matrix.size(); }
};

/// First Chern class read off the determinant c z^a u^b, that is n b - a.
int chern_class(const BundleTransition& m);

/// Dimension of pairs (s_U, s_V) with s_V = z^-m M s_U, on the D-th order
/// neighbourhood of the zero section (D = 0 is the line itself). Throws
/// BoundTooSmall when doubling the z-degree window changes the count.
int h0_twist(const BundleTransition& m, int twist, int order = 0);

/// Expected count h0(O(j+m)) + h0(O(-j+m)) on the line.
int split_h0(int j, int twist);

/// Returns (j, -j) for a rank 2 bundle with trivial determinant on the line.
std::pair<int, int> splitting_type(const BundleTransition& m);

struct PhiStage {
    std::string name;
    std::pair<int, int> splitting;
    int c1 = 0;
    int collar_class = 0;
};

struct PhiTransform {
    int n = 1;
    int j = 0;
    int j_out = 0;
    std::vector<PhiStage> stages;
};

PhiTransform phi_transform(int n, int j);

/// A and B with M2 B = A M1: A regular on V, B regular on U, unit determinants.
struct IsoCertificate {
    PolyMatrix a;
    PolyMatrix b;
};

/// Default search bound max(n, |j1| + |j2|) + 1.
int default_iso_bound(int n, int j1, int j2);

/// Searches for a collar isomorphism. Empty when none is found within the bound.
std::optional<IsoCertificate> collar_iso_certificate(const BundleTransition& m1, const BundleTransition& m2,
                                                     int bound);

/// Exact check of a certificate on the collar of Z_n.
bool certificate_verifies(const BundleTransition& m1, const BundleTransition& m2, const IsoCertificate& c);

enum class IsoStatus { Isomorphic, NotIsomorphic, Inconclusive };

struct IsoVerdict {
    IsoStatus status = IsoStatus::Inconclusive;
    std::optional<IsoCertificate> certificate;
    std::string reason;
};

std::string to_string(IsoStatus s);

/// Certificate search plus the first-Chern-class-mod-n obstruction.
IsoVerdict collar_iso_verdict(const BundleTransition& m1, const BundleTransition& m2, int bound);

/// Renders a (z, u) polynomial in the V coordinates (xi, v).
std::string v_chart_string(int n, const LaurentPoly& f);

struct ModuliDimension {
    std::optional<int> value;
    std::string note;
};

ModuliDimension moduli_dimension(int n, int j);

}  // namespace skelcollar::bundles
