#include "skelcollar/skeleton.hpp"

#include "skelcollar/error.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace skelcollar::skeleton {

using exact::var;

std::string x_name(int k) {
    return "x" + std::to_string(k);
}

std::string y_name(int k) {
    return "y" + std::to_string(k);
}

namespace {

std::vector<std::string> all_variables(int n) {
    std::vector<std::string> v;
    for (int k = 1; k <= n; ++k) v.push_back(x_name(k));
    for (int k = 1; k <= n; ++k) v.push_back(y_name(k));
    return v;
}

PolyMatrix t0_matrix(int n, int j) {
    if (j == 0) return exact::poly_identity(static_cast<std::size_t>(n));
    PolyMatrix t(n, std::vector<LaurentPoly>(n));
    const LaurentPoly xj = var(x_name(j));
    for (int k = 1; k <= n; ++k) t[0][k - 1] = -(xj * var(x_name(k)));
    int row = 1;
    for (int k = 1; k <= n; ++k) {
        if (k == j) continue;
        t[row++][k - 1] = xj;
    }
    return t;
}

// Divides out the largest power of each unit variable dividing every term.
LaurentPoly strip_units(const LaurentPoly& e, const std::set<std::string>& units) {
    exact::PowerMap shift;
    for (const auto& u : units) {
        if (!e.contains(u)) continue;
        shift[u] = -e.min_degree(u);
    }
    return shift.empty() ? e : e.shifted(shift);
}

}  // namespace

PolyMatrix CotangentAtlas::jacobian(int j) const {
    const Chart& c = charts.at(static_cast<std::size_t>(j));
    PolyMatrix m(n, std::vector<LaurentPoly>(n));
    for (int l = 0; l < n; ++l) {
        for (int k = 1; k <= n; ++k) m[l][k - 1] = c.base[l].derivative(x_name(k));
    }
    return m;
}

PolyMatrix CotangentAtlas::transition(int i, int j) const {
    return exact::multiply(t0.at(static_cast<std::size_t>(j)), exact::transpose(jacobian(i)));
}

CotangentAtlas build_atlas(int n) {
    if (n < 1) throw Error(Errc::InvalidInput, "projective dimension must be positive");
    CotangentAtlas atlas;
    atlas.n = n;
    std::vector<LaurentPoly> y;
    for (int k = 1; k <= n; ++k) y.push_back(var(y_name(k)));
    for (int j = 0; j <= n; ++j) {
        Chart c;
        c.index = j;
        if (j == 0) {
            for (int k = 1; k <= n; ++k) {
                c.base.push_back(var(x_name(k)));
                c.base_labels.push_back(x_name(k));
            }
        } else {
            c.base.push_back(var(x_name(j), -1));
            c.base_labels.push_back("1/" + x_name(j));
            for (int k = 1; k <= n; ++k) {
                if (k == j) continue;
                c.base.push_back(var(x_name(k)) * var(x_name(j), -1));
                c.base_labels.push_back(x_name(k) + "/" + x_name(j));
            }
        }
        PolyMatrix t = t0_matrix(n, j);
        for (int r = 0; r < n; ++r) {
            LaurentPoly eta;
            for (int k = 0; k < n; ++k) eta += t[r][k] * y[k];
            c.fiber_labels.push_back(eta.to_string());
            c.fiber.push_back(std::move(eta));
        }
        atlas.charts.push_back(std::move(c));
        atlas.t0.push_back(std::move(t));
    }
    return atlas;
}

TorusAction TorusAction::standard(int n) {
    TorusAction a;
    for (int k = 1; k <= n; ++k) a.weights.push_back(k);
    return a;
}

bool TorusAction::isolated() const {
    std::set<int> seen;
    for (int w : weights) {
        if (w == 0 || !seen.insert(w).second) return false;
    }
    return true;
}

ActionChartExpr act(const CotangentAtlas& atlas, const TorusAction& action, int chart) {
    if (chart < 0 || chart > atlas.n) {
        throw Error(Errc::IndexOutOfRange, "chart index " + std::to_string(chart) + " outside 0.." +
                                               std::to_string(atlas.n));
    }
    if (static_cast<int>(action.weights.size()) != atlas.n) {
        throw Error(Errc::InvalidInput, "action needs one weight per coordinate");
    }
    std::map<std::string, LaurentPoly> bindings;
    for (int k = 1; k <= atlas.n; ++k) {
        const int w = action.weight(k);
        bindings.emplace(x_name(k), var(kTorus, -w) * var(x_name(k)));
        bindings.emplace(y_name(k), var(kTorus, w) * var(y_name(k)));
    }
    const Chart& c = atlas.charts[static_cast<std::size_t>(chart)];
    ActionChartExpr out;
    out.chart = chart;
    for (const auto& f : c.base) out.base.push_back(f.substitute(bindings).collect(kTorus));
    for (const auto& f : c.fiber) out.fiber.push_back(f.substitute(bindings).collect(kTorus));
    return out;
}

LaurentPoly at_t_one(const TExpansion& e) {
    LaurentPoly s;
    for (const auto& [k, c] : e) s += c;
    return s;
}

Classification Classification::twisted_bundle(int base_dim, std::vector<int> twists) {
    Classification c;
    c.kind = Kind::TwistedBundle;
    c.base_dim = base_dim;
    c.rank = static_cast<int>(twists.size());
    c.twists = std::move(twists);
    return c;
}

std::string Classification::to_string() const {
    switch (kind) {
        case Kind::AffineFiber: return "C^" + std::to_string(rank);
        case Kind::ZeroSection: return "P^" + std::to_string(base_dim);
        case Kind::TwistedBundle: {
            std::string s;
            for (std::size_t i = 0; i < twists.size(); ++i) {
                if (i != 0) s += " + ";
                s += "O_P^" + std::to_string(base_dim) + "(" + std::to_string(twists[i]) + ")";
            }
            return s;
        }
    }
    return "?";
}

std::vector<LaurentPoly> SkeletonComponent::equations() const {
    std::vector<LaurentPoly> eqs;
    for (const auto& v : forced_zero) eqs.push_back(var(v));
    return eqs;
}

SkeletonComponent stable_manifold(const CotangentAtlas& atlas, const TorusAction& action, int j) {
    if (!action.isolated()) {
        throw Error(Errc::NonIsolatedFixedPoint, "weights must be pairwise distinct and nonzero");
    }
    const ActionChartExpr acted = act(atlas, action, j);
    SkeletonComponent comp;
    comp.index = j;
    const auto collect_constraints = [&](const std::vector<TExpansion>& coords) {
        for (const auto& e : coords) {
            for (const auto& [k, c] : e) {
                if (k <= 0) comp.chart_equations.push_back(c);
            }
        }
    };
    collect_constraints(acted.base);
    collect_constraints(acted.fiber);

    std::set<std::string> units;
    if (j > 0) units.insert(x_name(j));
    std::set<std::string> forced;
    std::vector<LaurentPoly> pending = comp.chart_equations;
    bool changed = true;
    while (changed && !pending.empty()) {
        changed = false;
        std::map<std::string, LaurentPoly> zeros;
        for (const auto& v : forced) zeros.emplace(v, LaurentPoly());
        std::vector<LaurentPoly> next;
        for (const auto& eq : pending) {
            const LaurentPoly e = strip_units(eq.substitute(zeros), units);
            if (e.is_zero()) {
                changed = true;
                continue;
            }
            if (e.is_constant()) {
                throw Error(Errc::UnrecognizedForm,
                            "limit constraint reduces to a nonzero constant in chart V_" + std::to_string(j));
            }
            if (e.is_monomial() && e.variables().size() == 1) {
                forced.insert(e.variables().front());
                changed = true;
                continue;
            }
            next.push_back(e);
        }
        pending = std::move(next);
    }
    if (!pending.empty()) {
        throw Error(Errc::UnrecognizedForm, "limit constraints do not reduce to coordinate vanishing in chart V_" +
                                                std::to_string(j) + ": " + pending.front().to_string());
    }
    for (const auto& v : all_variables(atlas.n)) {
        const bool is_x = v[0] == 'x';
        if (forced.count(v)) comp.forced_zero.push_back(v);
        else if (is_x) comp.free_base.push_back(v);
        else comp.free_fiber.push_back(v);
    }
    return comp;
}

Classification classify_component(const SkeletonComponent& c, const CotangentAtlas& atlas) {
    const int n = atlas.n;
    const auto free_count = static_cast<int>(c.free_base.size() + c.free_fiber.size());
    if (free_count != n) {
        throw Error(Errc::UnrecognizedForm, "component is not of middle dimension");
    }
    if (c.free_base.empty()) return Classification::affine_fiber(n);
    if (c.free_fiber.empty()) return Classification::zero_section(n);

    std::vector<int> base_idx;
    for (const auto& v : c.free_base) base_idx.push_back(std::stoi(v.substr(1)));
    std::vector<int> fiber_idx;
    for (const auto& v : c.free_fiber) fiber_idx.push_back(std::stoi(v.substr(1)));

    std::map<std::string, LaurentPoly> zeros;
    for (const auto& v : c.forced_zero) zeros.emplace(v, LaurentPoly());

    // Gluing exponent of each surviving fiber coordinate, per chart.
    std::vector<std::optional<int>> degree(fiber_idx.size());
    for (int i : base_idx) {
        const PolyMatrix t = exact::substitute(atlas.t0.at(static_cast<std::size_t>(i)), zeros);
        const std::string glue = x_name(i);
        std::set<std::size_t> used_rows;
        for (std::size_t s = 0; s < fiber_idx.size(); ++s) {
            const auto col = static_cast<std::size_t>(fiber_idx[s] - 1);
            std::optional<std::size_t> row;
            for (std::size_t r = 0; r < t.size(); ++r) {
                if (t[r][col].is_zero()) continue;
                if (row) throw Error(Errc::UnrecognizedForm, "restricted transition mixes fiber coordinates");
                row = r;
            }
            if (!row || !used_rows.insert(*row).second) {
                throw Error(Errc::UnrecognizedForm, "restricted transition is not monomial-diagonal");
            }
            for (int other : fiber_idx) {
                const auto oc = static_cast<std::size_t>(other - 1);
                if (oc != col && !t[*row][oc].is_zero()) {
                    throw Error(Errc::UnrecognizedForm, "restricted transition mixes fiber coordinates");
                }
            }
            const LaurentPoly& e = t[*row][col];
            if (!e.is_monomial() || e.variables() != std::vector<std::string>{glue}) {
                throw Error(Errc::UnrecognizedForm,
                            "transition entry " + e.to_string() + " is not a power of " + glue);
            }
            const int d = e.max_degree(glue);
            if (degree[s] && *degree[s] != d) {
                throw Error(Errc::UnrecognizedForm, "inconsistent gluing degrees across charts");
            }
            degree[s] = d;
        }
    }
    std::vector<int> twists;
    for (const auto& d : degree) twists.push_back(-*d);
    return Classification::twisted_bundle(static_cast<int>(base_idx.size()), twists);
}

std::vector<SkeletonComponent> skeleton(int n, const TorusAction& action) {
    const CotangentAtlas atlas = build_atlas(n);
    std::vector<SkeletonComponent> out;
    for (int j = 0; j <= n; ++j) {
        SkeletonComponent c = stable_manifold(atlas, action, j);
        c.classification = classify_component(c, atlas);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<SkeletonComponent> skeleton(int n) {
    return skeleton(n, TorusAction::standard(n));
}

Classification closed_form(int n, int j) {
    if (j < 0 || j > n) throw Error(Errc::IndexOutOfRange, "component index outside 0..n");
    if (j == 0) return Classification::affine_fiber(n);
    if (j == n) return Classification::zero_section(n);
    return Classification::twisted_bundle(j, std::vector<int>(static_cast<std::size_t>(n - j), -1));
}

std::vector<std::string> closed_form_forced_zero(int n, int j) {
    std::vector<std::string> v;
    for (int k = j + 1; k <= n; ++k) v.push_back(x_name(k));
    for (int k = 1; k <= j; ++k) v.push_back(y_name(k));
    return v;
}

}  // namespace skelcollar::skeleton
