#include "skelcollar/toric.hpp"

#include "skelcollar/error.hpp"

#include <numeric>

namespace skelcollar::toric {

using exact::LaurentPoly;
using exact::Rational;

namespace {

struct Bezout {
    long g;
    long s;
    long t;
};

// s*a + t*b = g = gcd(a, b) >= 0.
Bezout ext_gcd(long a, long b) {
    long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const long q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
        old_t = std::exchange(t, old_t - q * t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

long mod(long a, long m) {
    const long r = a % m;
    return r < 0 ? r + m : r;
}

Vec2 primitive(Vec2 v) {
    const long g = std::gcd(v[0], v[1]);
    if (g == 0) throw Error(Errc::InvalidInput, "zero ray");
    return {v[0] / g, v[1] / g};
}

// 2x2 integer matrix acting on column vectors.
struct Mat2 {
    long a, b, c, d;
    Vec2 operator()(const Vec2& v) const { return {a * v[0] + b * v[1], c * v[0] + d * v[1]}; }
    Mat2 inverse() const {  // determinant 1
        return {d, -b, -c, a};
    }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

// SL2(Z) map taking the cone to <(1,0), (-q', n')>.
Mat2 normalizing_map(const Cone2D& c) {
    const auto [g, s, t] = ext_gcd(c.ray1[0], c.ray1[1]);
    (void)g;
    const Mat2 m{s, t, -c.ray1[1], c.ray1[0]};
    const Vec2 w = m(c.ray2);
    // Shear (x, y) -> (x + k y, y) fixes (1,0); pick k so that -w0 - k*w1 lands in [0, w1).
    const long beta = w[1];
    const long target = -mod(-w[0], beta);
    const long k = (target - w[0]) / beta;
    return Mat2{1, k, 0, 1} * m;
}

}  // namespace

long det(const Vec2& a, const Vec2& b) {
    return a[0] * b[1] - a[1] * b[0];
}

QuotientSingularity QuotientSingularity::make(int n, int a) {
    if (n < 1) throw Error(Errc::InvalidInput, "group order must be positive");
    if (n == 1) {
        if (a != 1) throw Error(Errc::InvalidInput, "trivial group takes weight a = 1");
        return {1, 1};
    }
    if (a < 1 || a >= n || std::gcd(a, n) != 1) {
        throw Error(Errc::InvalidInput,
                    "weight a must satisfy 1 <= a < n and gcd(a, n) = 1; got n=" + std::to_string(n) +
                        ", a=" + std::to_string(a));
    }
    return {n, a};
}

std::pair<std::string, std::string> QuotientSingularity::generator() const {
    return {"rho", a == 1 ? "rho" : "rho^" + std::to_string(a)};
}

Cone2D Cone2D::make(Vec2 a, Vec2 b) {
    a = primitive(a);
    b = primitive(b);
    const long d = det(a, b);
    if (d == 0) throw Error(Errc::InvalidInput, "cone rays are linearly dependent");
    return d > 0 ? Cone2D{a, b} : Cone2D{b, a};
}

bool Cone2D::contains(const Vec2& v) const {
    return det(ray1, v) >= 0 && det(v, ray2) >= 0;
}

ConeNormalForm normal_form(const Cone2D& c) {
    const Vec2 w = normalizing_map(c)(c.ray2);
    return {w[1], -w[0]};
}

bool unimodular_equivalent(const Cone2D& a, const Cone2D& b) {
    const auto na = normal_form(a);
    const auto nb = normal_form(b);
    if (na.n != nb.n) return false;
    if (na.q == nb.q) return true;
    // Orientation-reversing equivalence swaps the rays: q -> q^{-1} mod n.
    if (na.n == 1) return true;
    return mod(na.q * nb.q, na.n) == 1;
}

Cone2D quotient_cone(const QuotientSingularity& s) {
    if (s.is_type_dual()) {
        return Cone2D::make({s.n, 1}, {0, 1});
    }
    return Cone2D::make({1, 0}, {-s.a, s.n});
}

Cone2D dual_cone(const Cone2D& c) {
    return Cone2D::make({c.ray2[1], -c.ray2[0]}, {-c.ray1[1], c.ray1[0]});
}

std::vector<int> hj_expansion(long n, long q) {
    if (q <= 0 || q >= n || std::gcd(n, q) != 1) {
        throw Error(Errc::InvalidInput, "hj_expansion needs 0 < q < n with gcd(q, n) = 1; got n=" +
                                            std::to_string(n) + ", q=" + std::to_string(q));
    }
    std::vector<int> out;
    while (q > 0) {
        const long a = (n + q - 1) / q;
        out.push_back(static_cast<int>(a));
        n = std::exchange(q, a * q - n);
    }
    return out;
}

Rational hj_evaluate(const std::vector<int>& entries) {
    if (entries.empty()) throw Error(Errc::InvalidInput, "empty continued fraction");
    Rational value(entries.back());
    for (auto it = entries.rbegin() + 1; it != entries.rend(); ++it) {
        value = Rational(*it) - value.inverse();
    }
    return value;
}

ResolutionChain resolve_cone(const Cone2D& c) {
    ResolutionChain r;
    r.cone = c;
    const auto nf = normal_form(c);
    if (nf.n == 1) return r;
    const Mat2 back = normalizing_map(c).inverse();
    const auto a = hj_expansion(nf.n, nf.q);
    Vec2 prev{1, 0};
    Vec2 cur{0, 1};
    for (int ai : a) {
        r.rays.push_back(back(cur));
        r.self_intersections.push_back(-ai);
        const Vec2 next{ai * cur[0] - prev[0], ai * cur[1] - prev[1]};
        prev = cur;
        cur = next;
    }
    if (back(cur) != c.ray2) {
        throw Error(Errc::InvalidInput, "resolution chain failed to close on the second ray");
    }
    const std::size_t k = a.size();
    r.intersection_matrix.assign(k, std::vector<int>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        r.intersection_matrix[i][i] = -a[i];
        if (i + 1 < k) {
            r.intersection_matrix[i][i + 1] = 1;
            r.intersection_matrix[i + 1][i] = 1;
        }
    }
    return r;
}

ResolutionChain minimal_resolution(const QuotientSingularity& s) {
    return resolve_cone(quotient_cone(s));
}

DualGraph dynkin_dual_graph(const ResolutionChain& r) {
    DualGraph g;
    g.vertices = static_cast<int>(r.intersection_matrix.size());
    for (int i = 0; i < g.vertices; ++i) {
        for (int j = i + 1; j < g.vertices; ++j) {
            if (r.intersection_matrix[i][j] == 1) g.edges.emplace_back(i, j);
        }
    }
    return g;
}

std::string generator_symbol(int i) {
    return "x" + std::to_string(i);
}

bool is_invariant_monomial(const QuotientSingularity& s, int p, int q) {
    return mod(static_cast<long>(p) + static_cast<long>(s.a) * q, s.n) == 0;
}

InvariantRing invariant_generators(const QuotientSingularity& s) {
    if (s.a != 1) {
        throw Error(Errc::Unsupported, "invariant generators are implemented for a = 1 only");
    }
    InvariantRing ring;
    ring.n = s.n;
    for (int i = 0; i <= s.n; ++i) {
        ring.symbols.push_back(generator_symbol(i));
        ring.generators.push_back(exact::var("a", s.n - i) * exact::var("b", i));
    }
    const auto x = [](int i) { return exact::var(generator_symbol(i)); };
    for (int i = 0; i < s.n; ++i) {
        for (int j = i + 1; j < s.n; ++j) {
            ring.relations.push_back(x(i) * x(j + 1) - x(i + 1) * x(j));
        }
    }
    return ring;
}

std::vector<std::pair<LaurentPoly, std::string>> contraction_map(int n) {
    if (n < 1) throw Error(Errc::InvalidInput, "n must be positive");
    std::vector<std::pair<LaurentPoly, std::string>> out;
    for (int i = 0; i <= n; ++i) {
        out.emplace_back(exact::var("z", i) * exact::var("u"), generator_symbol(i));
    }
    return out;
}

LaurentPoly contraction_pullback(const LaurentPoly& p, int n) {
    std::map<std::string, LaurentPoly> bindings;
    for (const auto& [mono, sym] : contraction_map(n)) bindings.emplace(sym, mono);
    return p.substitute(bindings);
}

LaurentPoly parametrize(const InvariantRing& ring, const LaurentPoly& p) {
    std::map<std::string, LaurentPoly> bindings;
    for (std::size_t i = 0; i < ring.symbols.size(); ++i) {
        bindings.emplace(ring.symbols[i], ring.generators[i]);
    }
    return p.substitute(bindings);
}

}  // namespace skelcollar::toric
