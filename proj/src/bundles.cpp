#include "skelcollar/bundles.hpp"

#include "skelcollar/error.hpp"
#include "skelcollar/exact/rat_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <tuple>

namespace skelcollar::bundles {

using exact::var;

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

void require_n(int n) {
    if (n < 1) throw Error(Errc::InvalidInput, "n must be at least 1");
}

/// Term of a polynomial in z and u.
struct ZuTerm {
    int a = 0;
    int b = 0;
    Rational c;
};

std::vector<ZuTerm> zu_terms(const LaurentPoly& f) {
    std::vector<ZuTerm> out;
    for (const auto& [powers, c] : f.monomials()) {
        ZuTerm t{0, 0, c};
        for (const auto& [name, e] : powers) {
            if (name == kZ) {
                t.a = e;
            } else if (name == kU) {
                t.b = e;
            } else {
                throw Error(Errc::InvalidInput, "transition entry uses variable " + name + " outside (z, u)");
            }
        }
        out.push_back(std::move(t));
    }
    return out;
}

LaurentPoly zu(const Rational& c, int a, int b) { return LaurentPoly::monomial(c, {{kZ, a}, {kU, b}}); }

/// Monomial c z^a u^b, or nullopt for a non-monomial.
std::optional<ZuTerm> as_monomial(const LaurentPoly& f) {
    if (!f.is_monomial()) return std::nullopt;
    return zu_terms(f).front();
}

PolyMatrix inverse(const PolyMatrix& m) {
    const auto det = exact::determinant(m);
    const auto d = as_monomial(det);
    if (!d) throw Error(Errc::NotInvertible, "transition determinant is not a unit monomial");
    const auto inv_det = zu(d->c.inverse(), -d->a, -d->b);
    if (m.size() == 1) return {{inv_det}};
    if (m.size() != 2) throw Error(Errc::Unsupported, "only ranks 1 and 2 are supported");
    return {{m[1][1] * inv_det, -m[0][1] * inv_det}, {-m[1][0] * inv_det, m[0][0] * inv_det}};
}

/// Largest positive z exponent over all entries.
int max_positive_z(const PolyMatrix& m) {
    int e = 0;
    for (const auto& row : m) {
        for (const auto& x : row) {
            for (const auto& t : zu_terms(x)) e = std::max(e, t.a);
        }
    }
    return e;
}

int max_z_degree(const PolyMatrix& m) {
    int e = 0;
    for (const auto& row : m) {
        for (const auto& x : row) {
            for (const auto& t : zu_terms(x)) e = std::max(e, std::abs(t.a));
        }
    }
    return e;
}

int h0_window(const PolyMatrix& m, int order, int n, int window) {
    const std::size_t r = m.size();
    // terms[k][i]: entry (k, i) of the twisted transition.
    std::vector<std::vector<std::vector<ZuTerm>>> terms(r, std::vector<std::vector<ZuTerm>>(r));
    for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t i = 0; i < r; ++i) {
            terms[k][i] = zu_terms(m[k][i]);
            for (const auto& t : terms[k][i]) {
                if (t.b < 0) throw Error(Errc::InvalidInput, "transition entries must be polynomial in u");
            }
        }
    }
    std::map<std::tuple<std::size_t, int, int>, std::size_t> rows;
    std::vector<std::map<std::size_t, Rational>> columns;
    for (std::size_t i = 0; i < r; ++i) {
        for (int b = 0; b <= order; ++b) {
            for (int a = 0; a <= window + n * b; ++a) {
                std::map<std::size_t, Rational> col;
                for (std::size_t k = 0; k < r; ++k) {
                    for (const auto& t : terms[k][i]) {
                        const int za = t.a + a;
                        const int ub = t.b + b;
                        if (ub > order || za <= n * ub) continue;
                        const auto key = std::make_tuple(k, za, ub);
                        auto it = rows.try_emplace(key, rows.size()).first;
                        col[it->second] += t.c;
                    }
                }
                columns.push_back(std::move(col));
            }
        }
    }
    exact::RatMatrix sys(rows.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        for (const auto& [row, v] : columns[c]) sys(row, c) = v;
    }
    return static_cast<int>(columns.size() - (rows.empty() ? 0 : exact::rank(sys)));
}

bool only_zu(const LaurentPoly& f) {
    return std::all_of(f.variables().begin(), f.variables().end(),
                       [](const std::string& v) { return v == kZ || v == kU; });
}

bool unit_on_u(const LaurentPoly& det) {
    const auto d = as_monomial(det);
    return d && d->a == 0;
}

bool unit_on_v(int n, const LaurentPoly& det) {
    const auto d = as_monomial(det);
    return d && n * d->b - d->a == 0;
}

}  // namespace

LaurentPoly SurfaceChartPair::to_u(const LaurentPoly& f) const {
    return f.substitute({{kXi, var(kZ, -1)}, {kV, var(kZ, n) * var(kU)}});
}

LaurentPoly SurfaceChartPair::to_v(const LaurentPoly& f) const {
    return f.substitute({{kZ, var(kXi, -1)}, {kU, var(kXi, n) * var(kV)}});
}

bool SurfaceChartPair::regular_on_u(const LaurentPoly& f) const {
    if (!only_zu(f)) return false;
    for (const auto& t : zu_terms(f)) {
        if (t.a < 0 || (!collar && t.b < 0)) return false;
    }
    return true;
}

bool SurfaceChartPair::regular_on_v(const LaurentPoly& f) const {
    if (!only_zu(f)) return false;
    for (const auto& t : zu_terms(f)) {
        if (n * t.b - t.a < 0 || (!collar && t.b < 0)) return false;
    }
    return true;
}

bool LineCertificate::verifies() const {
    const SurfaceChartPair charts{n, true};
    return charts.to_u(v_side) * var(kZ, -j) * u_side == var(kZ, -residue);
}

LineCertificate line_bundle_normal_form(int n, int j) {
    require_n(n);
    LineCertificate c;
    c.n = n;
    c.j = j;
    c.residue = mod(j, n);
    c.k = (j - c.residue) / n;
    c.v_side = var(kV, c.k);
    c.u_side = var(kU, -c.k);
    return c;
}

int PicardTable::generator_order() const {
    const int g = mod(1, n);
    int x = g;
    int order = 1;
    while (x != 0) {
        x = table[x][g];
        ++order;
        if (order > n) break;
    }
    return order;
}

PicardTable picard_group(int n) {
    require_n(n);
    PicardTable t;
    t.n = n;
    t.table.assign(n, std::vector<int>(n));
    t.certificates.assign(n, std::vector<LineCertificate>(n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            auto c = line_bundle_normal_form(n, a + b);
            t.table[a][b] = c.residue;
            t.certificates[a][b] = std::move(c);
        }
        t.chern_residues.push_back(mod(chern_class(BundleTransition::line(n, a)), n));
    }
    return t;
}

CollarTopology collar_topology(int n) {
    require_n(n);
    CollarTopology t;
    t.n = n;
    t.pi1 = t.h1 = t.h2 = n;
    const auto zn = "Z/" + std::to_string(n);
    t.steps = {
        "homotopy type: S^1-bundle over S^2 glued by z^" + std::to_string(n) + " of degree " + std::to_string(n),
        "pi1 = " + zn,
        "H1 = abelianization of pi1 = " + zn,
        "H2 = " + zn + " by Poincare duality",
        "c1: H^1(O*) -> H^2(Z) = " + zn + " from the exponential sheaf sequence, L(j) -> j mod " + std::to_string(n),
    };
    return t;
}

BundleTransition BundleTransition::canonical(int n, int j, const LaurentPoly& p) {
    require_n(n);
    BundleTransition m;
    m.n = n;
    m.matrix = {{var(kZ, j), p}, {LaurentPoly(), var(kZ, -j)}};
    m.declared_splitting = j;
    m.c1 = 0;
    return m;
}

BundleTransition BundleTransition::line(int n, int j) {
    require_n(n);
    BundleTransition m;
    m.n = n;
    m.matrix = {{var(kZ, -j)}};
    m.declared_splitting = j;
    m.c1 = j;
    return m;
}

int chern_class(const BundleTransition& m) {
    const auto d = as_monomial(exact::determinant(m.matrix));
    if (!d) throw Error(Errc::NotInvertible, "transition determinant is not a unit monomial");
    return m.n * d->b - d->a;
}

int h0_twist(const BundleTransition& m, int twist, int order) {
    require_n(m.n);
    if (order < 0) throw Error(Errc::InvalidInput, "truncation order must be nonnegative");
    for (const auto& row : m.matrix) {
        if (row.size() != m.matrix.size()) throw Error(Errc::InvalidInput, "transition must be square");
    }
    const auto twisted = exact::scaled(m.matrix, var(kZ, -twist));
    const int window = max_positive_z(inverse(twisted)) + 1;
    const int small = h0_window(twisted, order, m.n, window);
    const int large = h0_window(twisted, order, m.n, 2 * window);
    if (small != large) {
        throw Error(Errc::BoundTooSmall, "section count changed from " + std::to_string(small) + " to " +
                                             std::to_string(large) + " when doubling the degree window");
    }
    return small;
}

int split_h0(int j, int twist) { return std::max(0, j + twist + 1) + std::max(0, -j + twist + 1); }

std::pair<int, int> splitting_type(const BundleTransition& m) {
    if (m.rank() != 2) throw Error(Errc::InvalidInput, "splitting_type needs a rank 2 transition");
    BundleTransition line = m;
    line.matrix = exact::substitute(m.matrix, {{kU, LaurentPoly()}});
    const auto det = exact::determinant(line.matrix).constant_value();
    if (!det || det->is_zero()) {
        throw Error(Errc::InvalidInput, "determinant on the zero section must be a nonzero constant");
    }
    const int bound = std::max(max_z_degree(line.matrix), max_z_degree(inverse(line.matrix))) + 1;
    int j = -1;
    for (int twist = -bound; twist <= bound; ++twist) {
        if (h0_twist(line, twist) > 0) {
            j = -twist;
            break;
        }
    }
    if (j < 0) throw Error(Errc::UnrecognizedForm, "no twist with sections inside the degree bound");
    for (int twist = -j - 1; twist <= j + 1; ++twist) {
        if (h0_twist(line, twist) != split_h0(j, twist)) {
            throw Error(Errc::UnrecognizedForm, "section counts do not match a (j, -j) splitting");
        }
    }
    return {j, -j};
}

PhiTransform phi_transform(int n, int j) {
    require_n(n);
    if (j < 0) throw Error(Errc::InvalidInput, "splitting type must be nonnegative");
    PhiTransform t;
    t.n = n;
    t.j = j;
    t.j_out = j + n;
    const auto stage = [&](std::string name, int a, int b, int c1) {
        t.stages.push_back({std::move(name), {a, b}, c1, mod(a, n)});
    };
    stage("E", j, -j, 0);
    stage("Elm_O(j)(E)", j + n, -n, j);
    stage("Elm_O(j+n)(Elm_O(j)(E))", j + 2 * n, -j, 2 * n);
    stage("Phi(E) = Elm_O(j+n)(Elm_O(j)(E)) (x) O(-n)", j + n, -j - n, 0);
    return t;
}

int default_iso_bound(int n, int j1, int j2) { return std::max(n, std::abs(j1) + std::abs(j2)) + 1; }

bool certificate_verifies(const BundleTransition& m1, const BundleTransition& m2, const IsoCertificate& c) {
    if (m1.n != m2.n || m1.rank() != m2.rank()) return false;
    const std::size_t r = m1.rank();
    if (c.a.size() != r || c.b.size() != r) return false;
    const SurfaceChartPair charts{m1.n, true};
    for (std::size_t i = 0; i < r; ++i) {
        if (c.a[i].size() != r || c.b[i].size() != r) return false;
        for (std::size_t k = 0; k < r; ++k) {
            if (!charts.regular_on_v(c.a[i][k]) || !charts.regular_on_u(c.b[i][k])) return false;
        }
    }
    if (!unit_on_v(m1.n, exact::determinant(c.a)) || !unit_on_u(exact::determinant(c.b))) return false;
    return exact::multiply(m2.matrix, c.b) == exact::multiply(c.a, m1.matrix);
}

namespace {

std::optional<IsoCertificate> rank_one_search(const BundleTransition& m1, const BundleTransition& m2, int bound) {
    const auto inv2 = inverse(m2.matrix);
    for (int step = 0; step <= 2 * bound; ++step) {
        const int k = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
        IsoCertificate c;
        c.a = {{zu(1, m1.n * k, k)}};
        c.b = exact::multiply(exact::multiply(inv2, c.a), m1.matrix);
        if (certificate_verifies(m1, m2, c)) return c;
    }
    return std::nullopt;
}

/// A = P + X E_free with P a monomial pattern and X unknown inside the window;
/// B = M2^-1 A M1 is then linear in X and must be regular on U.
std::optional<IsoCertificate> pattern_solve(const BundleTransition& m1, const BundleTransition& m2,
                                            const PolyMatrix& inv2, const PolyMatrix& pattern,
                                            std::pair<int, int> free, int bound) {
    const int n = m1.n;
    std::vector<LaurentPoly> unknowns;
    for (int beta = -bound; beta <= bound; ++beta) {
        for (int alpha = 0; alpha <= bound; ++alpha) unknowns.push_back(zu(1, n * beta - alpha, beta));
    }
    const auto base = exact::multiply(exact::multiply(inv2, pattern), m1.matrix);
    std::vector<PolyMatrix> parts;
    for (const auto& x : unknowns) {
        PolyMatrix e(2, std::vector<LaurentPoly>(2));
        e[free.first][free.second] = x;
        parts.push_back(exact::multiply(exact::multiply(inv2, e), m1.matrix));
    }
    std::map<std::tuple<int, int, int, int>, std::size_t> rows;
    const auto row_of = [&](int i, int k, const ZuTerm& t) {
        return rows.try_emplace(std::make_tuple(i, k, t.a, t.b), rows.size()).first->second;
    };
    std::map<std::size_t, Rational> rhs;
    std::vector<std::map<std::size_t, Rational>> cols(unknowns.size());
    for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) {
            for (const auto& t : zu_terms(base[i][k])) {
                if (t.a < 0) rhs[row_of(i, k, t)] -= t.c;
            }
            for (std::size_t u = 0; u < unknowns.size(); ++u) {
                for (const auto& t : zu_terms(parts[u][i][k])) {
                    if (t.a < 0) cols[u][row_of(i, k, t)] += t.c;
                }
            }
        }
    }
    std::vector<Rational> x(unknowns.size());
    if (!rows.empty()) {
        exact::RatMatrix sys(rows.size(), unknowns.size());
        for (std::size_t u = 0; u < cols.size(); ++u) {
            for (const auto& [row, v] : cols[u]) sys(row, u) = v;
        }
        exact::RatVector b(rows.size());
        for (const auto& [row, v] : rhs) b[row] = v;
        try {
            x = exact::solve(sys, b);
        } catch (const Error& e) {
            if (e.code() == Errc::InconsistentSystem) return std::nullopt;
            throw;
        }
    }
    IsoCertificate c;
    c.a = pattern;
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        if (!x[u].is_zero()) c.a[free.first][free.second] += unknowns[u].scaled(x[u]);
    }
    c.b = exact::multiply(exact::multiply(inv2, c.a), m1.matrix);
    if (!certificate_verifies(m1, m2, c)) return std::nullopt;
    return c;
}

std::optional<IsoCertificate> rank_two_search(const BundleTransition& m1, const BundleTransition& m2, int bound) {
    const int n = m1.n;
    const auto inv2 = inverse(m2.matrix);
    const auto d1 = as_monomial(exact::determinant(m1.matrix));
    const auto d2 = as_monomial(exact::determinant(m2.matrix));
    if (!d1) throw Error(Errc::NotInvertible, "transition determinant is not a unit monomial");
    // det B = det A det M1 / det M2 must be free of z; det A = +-v^s.
    const int shift = d2->a - d1->a;
    if (shift % n != 0) return std::nullopt;
    const int s = shift / n;
    for (int step = 0; step <= 4 * bound; ++step) {
        const int k1 = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
        const int k2 = s - k1;
        if (std::abs(k1) > 2 * bound || std::abs(k2) > 2 * bound) continue;
        const auto p1 = zu(1, n * k1, k1);
        const auto p2 = zu(1, n * k2, k2);
        const PolyMatrix diag{{p1, LaurentPoly()}, {LaurentPoly(), p2}};
        const PolyMatrix anti{{LaurentPoly(), p1}, {p2, LaurentPoly()}};
        const std::vector<std::pair<const PolyMatrix*, std::pair<int, int>>> patterns{
            {&diag, {0, 1}}, {&diag, {1, 0}}, {&anti, {0, 0}}, {&anti, {1, 1}}};
        for (const auto& [pattern, free] : patterns) {
            if (auto c = pattern_solve(m1, m2, inv2, *pattern, free, bound)) return c;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<IsoCertificate> collar_iso_certificate(const BundleTransition& m1, const BundleTransition& m2,
                                                     int bound) {
    if (m1.n != m2.n) throw Error(Errc::InvalidInput, "transitions live on different surfaces");
    if (m1.rank() != m2.rank()) throw Error(Errc::InvalidInput, "transitions have different ranks");
    if (bound < 0) throw Error(Errc::InvalidInput, "search bound must be nonnegative");
    if (m1.rank() == 1) return rank_one_search(m1, m2, bound);
    if (m1.rank() == 2) return rank_two_search(m1, m2, bound);
    throw Error(Errc::Unsupported, "only ranks 1 and 2 are supported");
}

std::string to_string(IsoStatus s) {
    switch (s) {
        case IsoStatus::Isomorphic: return "isomorphic";
        case IsoStatus::NotIsomorphic: return "not isomorphic";
        case IsoStatus::Inconclusive: return "not found within bound";
    }
    return "";
}

IsoVerdict collar_iso_verdict(const BundleTransition& m1, const BundleTransition& m2, int bound) {
    IsoVerdict v;
    v.certificate = collar_iso_certificate(m1, m2, bound);
    if (v.certificate) {
        v.status = IsoStatus::Isomorphic;
        v.reason = "certificate verified";
        return v;
    }
    const int r1 = mod(chern_class(m1), m1.n);
    const int r2 = mod(chern_class(m2), m2.n);
    if (r1 != r2) {
        v.status = IsoStatus::NotIsomorphic;
        v.reason = "c1 mod " + std::to_string(m1.n) + " differs: " + std::to_string(r1) + " vs " + std::to_string(r2);
    } else {
        v.status = IsoStatus::Inconclusive;
        v.reason = "no certificate within bound " + std::to_string(bound) + " and equal c1 mod n";
    }
    return v;
}

std::string v_chart_string(int n, const LaurentPoly& f) { return SurfaceChartPair{n, true}.to_v(f).to_string(); }

ModuliDimension moduli_dimension(int n, int j) {
    require_n(n);
    if (j < 0) throw Error(Errc::InvalidInput, "splitting type must be nonnegative");
    const int d = 2 * j - n - 2;
    ModuliDimension m;
    if (d >= 0) {
        m.value = d;
        m.note = "2j - n - 2 = " + std::to_string(d);
    } else {
        m.note = "Empty: 2j - n - 2 = " + std::to_string(d) + " < 0, no irreducible instantons at this charge";
    }
    return m;
}

}  // namespace skelcollar::bundles
