#include "skelcollar/birmaps.hpp"

#include "skelcollar/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace skelcollar::birmaps {

using exact::var;

std::vector<std::vector<std::string>> factor_variables(const std::vector<int>& dims) {
    static const char* kSingle = "x";
    static const char* kPair[] = {"y", "z"};
    if (dims.size() > 2) throw Error(Errc::Unsupported, "at most two projective factors");
    std::vector<std::vector<std::string>> out;
    for (std::size_t f = 0; f < dims.size(); ++f) {
        const std::string stem = dims.size() == 1 ? kSingle : kPair[f];
        std::vector<std::string> names;
        for (int i = 0; i <= dims[f]; ++i) names.push_back(stem + std::to_string(i));
        out.push_back(std::move(names));
    }
    return out;
}

int RationalMap::source_dimension() const {
    return std::accumulate(source.begin(), source.end(), 0);
}

int RationalMap::target_dimension() const {
    return std::accumulate(target.begin(), target.end(), 0);
}

std::optional<ProjPoint> apply(const RationalMap& f, const ProjPoint& p) {
    const auto names = f.source_variables();
    if (p.size() != names.size()) throw Error(Errc::InvalidInput, "point has the wrong number of factors");
    std::map<std::string, Rational> at;
    for (std::size_t k = 0; k < names.size(); ++k) {
        if (p[k].size() != names[k].size()) throw Error(Errc::InvalidInput, "point factor has the wrong length");
        for (std::size_t i = 0; i < names[k].size(); ++i) at[names[k][i]] = p[k][i];
    }
    ProjPoint image;
    for (const auto& factor : f.components) {
        std::vector<Rational> coords;
        bool nonzero = false;
        for (const auto& c : factor) {
            std::map<std::string, Rational> local;
            for (const auto& v : c.variables()) local.emplace(v, at.at(v));
            coords.push_back(c.evaluate(local));
            nonzero = nonzero || !coords.back().is_zero();
        }
        if (!nonzero) return std::nullopt;
        image.push_back(std::move(coords));
    }
    return image;
}

RationalMap compose(const RationalMap& outer, const RationalMap& inner) {
    if (outer.source != inner.target) {
        throw Error(Errc::InvalidInput, "composition of maps with mismatched spaces");
    }
    const auto names = outer.source_variables();
    std::map<std::string, LaurentPoly> bindings;
    for (std::size_t f = 0; f < names.size(); ++f) {
        for (std::size_t i = 0; i < names[f].size(); ++i) bindings.emplace(names[f][i], inner.components[f][i]);
    }
    RationalMap out;
    out.source = inner.source;
    out.target = outer.target;
    for (const auto& factor : outer.components) {
        std::vector<LaurentPoly> comps;
        for (const auto& c : factor) comps.push_back(c.substitute(bindings));
        out.components.push_back(std::move(comps));
    }
    out.indeterminacy = "points where some target factor vanishes: (" + inner.indeterminacy + ") or preimage of (" +
                        outer.indeterminacy + ")";
    out.notes = inner.notes;
    out.notes.insert(out.notes.end(), outer.notes.begin(), outer.notes.end());
    return out;
}

RationalMap identity_map(const std::vector<int>& dims) {
    RationalMap m;
    m.source = dims;
    m.target = dims;
    for (const auto& names : factor_variables(dims)) {
        std::vector<LaurentPoly> comps;
        for (const auto& v : names) comps.push_back(var(v));
        m.components.push_back(std::move(comps));
    }
    m.indeterminacy = "empty";
    return m;
}

RationalMap segre(int a, int b) {
    if (a < 0 || b < 0) throw Error(Errc::InvalidInput, "projective dimensions must be nonnegative");
    RationalMap m;
    m.source = {a, b};
    const int r = (a + 1) * (b + 1) - 1;
    m.target = {r};
    std::vector<LaurentPoly> comps;
    for (int i = 0; i <= a; ++i) {
        for (int j = 0; j <= b; ++j) comps.push_back(var("y" + std::to_string(i)) * var("z" + std::to_string(j)));
    }
    m.components.push_back(std::move(comps));
    m.indeterminacy = "empty (morphism)";
    return m;
}

RationalMap linear_projection(int r, const std::vector<int>& keep) {
    if (keep.empty()) throw Error(Errc::InvalidInput, "projection must keep at least one coordinate");
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 0 || sorted.back() > r) {
        throw Error(Errc::InvalidInput, "kept coordinates must be distinct indices in 0..r");
    }
    RationalMap m;
    m.source = {r};
    m.target = {static_cast<int>(keep.size()) - 1};
    std::vector<LaurentPoly> comps;
    std::string center;
    for (int k : keep) comps.push_back(var("x" + std::to_string(k)));
    for (int k : sorted) center += (center.empty() ? "x" : " = x") + std::to_string(k);
    m.components.push_back(std::move(comps));
    m.indeterminacy = "center M: " + center + " = 0";
    return m;
}

ProjectivePair product_to_projective(int a, int b) {
    if (a < 0 || b < 0 || a + b < 1) throw Error(Errc::InvalidInput, "need a, b >= 0 with a + b >= 1");
    std::vector<int> keep{segre_index(0, 0, b)};
    for (int i = 1; i <= a; ++i) keep.push_back(segre_index(i, 0, b));
    for (int j = 1; j <= b; ++j) keep.push_back(segre_index(0, j, b));
    const int r = (a + 1) * (b + 1) - 1;

    ProjectivePair pp;
    pp.forward = compose(linear_projection(r, keep), segre(a, b));
    pp.forward.indeterminacy = "y0 = z0 = 0";
    pp.keep_set = keep;
    std::sort(pp.keep_set.begin(), pp.keep_set.end());

    RationalMap inv;
    inv.source = {a + b};
    inv.target = {a, b};
    const auto x = [](int k) { return var("x" + std::to_string(k)); };
    std::vector<LaurentPoly> ys;
    std::vector<LaurentPoly> zs;
    if (a == 0) {
        ys.push_back(LaurentPoly(1));
    } else {
        for (int i = 0; i <= a; ++i) ys.push_back(x(i));
    }
    if (b == 0) {
        zs.push_back(LaurentPoly(1));
    } else {
        zs.push_back(x(0));
        for (int j = 1; j <= b; ++j) zs.push_back(x(a + j));
    }
    inv.components = {ys, zs};
    inv.indeterminacy = (a > 0 && b > 0) ? "x0 = 0" : "empty";
    pp.inverse = std::move(inv);
    return pp;
}

ProjectivePair bir_step(int n, int j) {
    if (!(0 < j + 1 && j + 1 < n)) {
        throw Error(Errc::IndexOutOfRange,
                    "bir_step needs 0 < j+1 < n; got n=" + std::to_string(n) + ", j=" + std::to_string(j));
    }
    const auto from = product_to_projective(j, n - j - 1);
    const auto to = product_to_projective(j + 1, n - j - 2);
    ProjectivePair pp;
    pp.forward = compose(to.inverse, from.forward);
    pp.inverse = compose(from.inverse, to.forward);
    pp.keep_set = from.keep_set;
    const std::string note = "twist: defined up to tensoring by O(+1) before projectivizing; absorbed by projectivization";
    pp.forward.notes.push_back(note);
    pp.inverse.notes.push_back(note);
    return pp;
}

Sampler::Sampler(std::uint64_t seed) : engine_(static_cast<std::minstd_rand::result_type>(seed)) {}

Rational Sampler::next() {
    const long p = static_cast<long>(engine_() % 195) - 97;
    const long q = static_cast<long>(engine_() % 97) + 1;
    return Rational(p, q);
}

ProjPoint Sampler::point(const std::vector<int>& dims) {
    ProjPoint p;
    for (int d : dims) {
        std::vector<Rational> coords;
        bool nonzero = false;
        while (!nonzero) {
            coords.clear();
            for (int i = 0; i <= d; ++i) {
                coords.push_back(next());
                nonzero = nonzero || !coords.back().is_zero();
            }
        }
        p.push_back(std::move(coords));
    }
    return p;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SKELCOLLAR_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return v;
        throw Error(Errc::InvalidInput, std::string("SKELCOLLAR_SEED is not an integer: ") + env);
    }
    return 1;
}

bool projectively_equal(const ProjPoint& p, const ProjPoint& q) {
    if (p.size() != q.size()) return false;
    for (std::size_t f = 0; f < p.size(); ++f) {
        if (p[f].size() != q[f].size()) return false;
        for (std::size_t i = 0; i < p[f].size(); ++i) {
            for (std::size_t k = i + 1; k < p[f].size(); ++k) {
                if (p[f][i] * q[f][k] != p[f][k] * q[f][i]) return false;
            }
        }
    }
    return true;
}

Verdict verify_birational(const RationalMap& forward, const RationalMap& inverse, int samples,
                          std::uint64_t seed) {
    if (forward.target != inverse.source || forward.source != inverse.target) {
        throw Error(Errc::InvalidInput, "forward and inverse maps have mismatched spaces");
    }
    constexpr int kRetries = 10;
    Sampler sampler(seed);
    Verdict v;
    for (int s = 0; s < samples; ++s) {
        bool done = false;
        for (int attempt = 0; attempt <= kRetries && !done; ++attempt) {
            const ProjPoint p = sampler.point(forward.source);
            const auto image = apply(forward, p);
            if (!image) continue;
            const auto back = apply(inverse, *image);
            if (!back) continue;
            done = true;
            ++v.checked;
            if (!projectively_equal(p, *back)) {
                if (v.failed == 0) {
                    std::string desc;
                    for (const auto& f : p) {
                        desc += "[";
                        for (std::size_t i = 0; i < f.size(); ++i) desc += (i ? ":" : "") + f[i].to_string();
                        desc += "]";
                    }
                    v.first_failure = "round trip differs at " + desc;
                }
                ++v.failed;
            }
        }
        if (!done) ++v.skipped;
    }
    if (v.checked == 0) {
        throw Error(Errc::DegenerateSampler, "every sample landed on an indeterminacy locus");
    }
    return v;
}

}  // namespace skelcollar::birmaps
