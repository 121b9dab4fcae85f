#include "skelcollar/exact/laurent_poly.hpp"

#include "skelcollar/error.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace skelcollar::exact {

namespace {

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Position of each entry of `from` inside the sorted list `to`.
std::vector<int> index_into(const std::vector<std::string>& from,
                            const std::vector<std::string>& to) {
    std::vector<int> idx(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) {
        auto it = std::lower_bound(to.begin(), to.end(), from[i]);
        idx[i] = static_cast<int>(it - to.begin());
    }
    return idx;
}

}  // namespace

LaurentPoly::LaurentPoly(const Rational& constant) {
    if (!constant.is_zero()) {
        terms_.emplace(Exponent{}, constant);
    }
}

LaurentPoly LaurentPoly::variable(const std::string& name, int power) {
    return monomial(Rational(1), PowerMap{{name, power}});
}

LaurentPoly LaurentPoly::monomial(const Rational& coefficient, const PowerMap& powers) {
    LaurentPoly p;
    if (coefficient.is_zero()) {
        return p;
    }
    Exponent e;
    for (const auto& [name, k] : powers) {
        if (k != 0) {
            p.vars_.push_back(name);
            e.push_back(k);
        }
    }
    p.terms_.emplace(std::move(e), coefficient);
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<std::string> vars,
                                    const std::vector<std::pair<Exponent, Rational>>& terms) {
    std::vector<std::string> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const auto idx = index_into(vars, sorted);

    LaurentPoly p;
    p.vars_ = std::move(sorted);
    for (const auto& [e, c] : terms) {
        if (e.size() != vars.size()) {
            throw Error(Errc::InvalidInput, "exponent vector length does not match variable count");
        }
        Exponent target(p.vars_.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            target[idx[i]] += e[i];
        }
        p.terms_[target] += c;
    }
    p.canonicalize();
    return p;
}

void LaurentPoly::canonicalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            used[i] = used[i] || e[i] != 0;
        }
    }
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) {
        return;
    }
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (used[i]) kept.push_back(vars_[i]);
    }
    std::map<Exponent, Rational> compact;
    for (auto& [e, c] : terms_) {
        Exponent f;
        f.reserve(kept.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (used[i]) f.push_back(e[i]);
        }
        compact.emplace(std::move(f), std::move(c));
    }
    vars_ = std::move(kept);
    terms_ = std::move(compact);
}

Exponent LaurentPoly::remap(const Exponent& e, const std::vector<int>& index_map,
                            std::size_t width) const {
    Exponent out(width, 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
        out[index_map[i]] = e[i];
    }
    return out;
}

std::optional<Rational> LaurentPoly::constant_value() const {
    if (!vars_.empty()) {
        return std::nullopt;
    }
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

bool LaurentPoly::contains(const std::string& var) const {
    return std::binary_search(vars_.begin(), vars_.end(), var);
}

PowerMap LaurentPoly::powers_of(const Exponent& e) const {
    PowerMap m;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 0) m[vars_[i]] = e[i];
    }
    return m;
}

std::vector<std::pair<PowerMap, Rational>> LaurentPoly::monomials() const {
    std::vector<std::pair<PowerMap, Rational>> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
        out.emplace_back(powers_of(e), c);
    }
    return out;
}

Rational LaurentPoly::coefficient(const PowerMap& powers) const {
    Exponent e(vars_.size(), 0);
    for (const auto& [name, k] : powers) {
        if (k == 0) continue;
        auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
        if (it == vars_.end() || *it != name) {
            return Rational(0);
        }
        e[it - vars_.begin()] = k;
    }
    auto found = terms_.find(e);
    return found == terms_.end() ? Rational(0) : found->second;
}

int LaurentPoly::max_degree(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var || terms_.empty()) return 0;
    const auto i = static_cast<std::size_t>(it - vars_.begin());
    int best = terms_.begin()->first[i];
    for (const auto& [e, c] : terms_) best = std::max(best, e[i]);
    return best;
}

int LaurentPoly::min_degree(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var || terms_.empty()) return 0;
    const auto i = static_cast<std::size_t>(it - vars_.begin());
    int best = terms_.begin()->first[i];
    for (const auto& [e, c] : terms_) best = std::min(best, e[i]);
    return best;
}

std::map<int, LaurentPoly> LaurentPoly::collect(const std::string& var) const {
    std::map<int, LaurentPoly> out;
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) {
        if (!is_zero()) out.emplace(0, *this);
        return out;
    }
    const auto i = static_cast<std::size_t>(it - vars_.begin());
    std::map<int, std::vector<std::pair<Exponent, Rational>>> buckets;
    for (const auto& [e, c] : terms_) {
        Exponent rest = e;
        rest[i] = 0;
        buckets[e[i]].emplace_back(std::move(rest), c);
    }
    for (auto& [k, ts] : buckets) {
        out.emplace(k, from_terms(vars_, ts));
    }
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (vars_ == o.vars_) {
        for (const auto& [e, c] : o.terms_) terms_[e] += c;
        canonicalize();
        return *this;
    }
    auto merged = merge_vars(vars_, o.vars_);
    const auto mine = index_into(vars_, merged);
    const auto theirs = index_into(o.vars_, merged);
    std::map<Exponent, Rational> out;
    for (const auto& [e, c] : terms_) out[remap(e, mine, merged.size())] += c;
    for (const auto& [e, c] : o.terms_) out[remap(e, theirs, merged.size())] += c;
    vars_ = std::move(merged);
    terms_ = std::move(out);
    canonicalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    return *this += (-o);
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    auto merged = merge_vars(a.vars_, b.vars_);
    const auto ia = index_into(a.vars_, merged);
    const auto ib = index_into(b.vars_, merged);
    std::vector<std::pair<Exponent, Rational>> left;
    std::vector<std::pair<Exponent, Rational>> right;
    left.reserve(a.terms_.size());
    right.reserve(b.terms_.size());
    for (const auto& [e, c] : a.terms_) left.emplace_back(a.remap(e, ia, merged.size()), c);
    for (const auto& [e, c] : b.terms_) right.emplace_back(b.remap(e, ib, merged.size()), c);
    r.vars_ = std::move(merged);
    Exponent sum(r.vars_.size());
    for (const auto& [ea, ca] : left) {
        for (const auto& [eb, cb] : right) {
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
            r.terms_[sum] += ca * cb;
        }
    }
    r.canonicalize();
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    LaurentPoly r = *this;
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
}

LaurentPoly LaurentPoly::shifted(const PowerMap& powers) const {
    return *this * monomial(Rational(1), powers);
}

LaurentPoly LaurentPoly::pow(int exponent) const {
    if (exponent < 0) {
        if (is_zero()) {
            throw Error(Errc::ZeroIntoNegativePower, "zero raised to power " + std::to_string(exponent));
        }
        if (!is_monomial()) {
            throw Error(Errc::NotInvertible, "negative power of non-monomial " + to_string());
        }
        LaurentPoly inv;
        inv.vars_ = vars_;
        Exponent e = terms_.begin()->first;
        for (auto& k : e) k = -k;
        inv.terms_.emplace(std::move(e), terms_.begin()->second.inverse());
        return inv.pow(-exponent);
    }
    LaurentPoly result(1);
    LaurentPoly base = *this;
    unsigned k = static_cast<unsigned>(exponent);
    while (k != 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k != 0) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::substitute(const std::map<std::string, LaurentPoly>& bindings) const {
    // Per variable: the replacement (bound or the variable itself) and cached powers.
    std::vector<const LaurentPoly*> bound(vars_.size(), nullptr);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = bindings.find(vars_[i]);
        if (it != bindings.end()) bound[i] = &it->second;
    }
    std::vector<std::map<int, LaurentPoly>> cache(vars_.size());
    auto power_of = [&](std::size_t i, int k) -> const LaurentPoly& {
        auto it = cache[i].find(k);
        if (it != cache[i].end()) return it->second;
        const LaurentPoly& b = *bound[i];
        if (k < 0 && b.is_zero()) {
            throw Error(Errc::ZeroIntoNegativePower,
                        "substituting 0 for " + vars_[i] + " which occurs with exponent " +
                            std::to_string(k));
        }
        return cache[i].emplace(k, b.pow(k)).first->second;
    };

    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
        PowerMap kept;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0 && bound[i] == nullptr) kept[vars_[i]] = e[i];
        }
        LaurentPoly term = monomial(c, kept);
        for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i) {
            if (e[i] != 0 && bound[i] != nullptr) term *= power_of(i, e[i]);
        }
        // A zero factor with a later negative power must still raise.
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 && bound[i] != nullptr) (void)power_of(i, e[i]);
        }
        out += term;
    }
    return out;
}

Rational LaurentPoly::evaluate(const std::map<std::string, Rational>& point) const {
    std::vector<const Rational*> values(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = point.find(vars_[i]);
        if (it == point.end()) {
            throw Error(Errc::InvalidInput, "no value supplied for variable " + vars_[i]);
        }
        if (it->second.is_zero() && min_degree(vars_[i]) < 0) {
            throw Error(Errc::ZeroIntoNegativePower, "evaluating at " + vars_[i] + " = 0");
        }
        values[i] = &it->second;
    }
    Rational total;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) t *= values[i]->pow(e[i]);
        }
        total += t;
    }
    return total;
}

LaurentPoly LaurentPoly::derivative(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return {};
    const auto i = static_cast<std::size_t>(it - vars_.begin());
    std::vector<std::pair<Exponent, Rational>> out;
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponent d = e;
        d[i] -= 1;
        out.emplace_back(std::move(d), c * Rational(e[i]));
    }
    return from_terms(vars_, out);
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool is_const = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (!mag.is_one() || is_const) {
            os << mag;
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << vars_[i];
            if (e[i] != 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.to_string();
}

}  // namespace skelcollar::exact
