#include "skelcollar/exact/poly_matrix.hpp"

#include "skelcollar/error.hpp"
#include "skelcollar/exact/poly_json.hpp"

namespace skelcollar::exact {

PolyMatrix poly_identity(std::size_t n) {
    PolyMatrix m(n, std::vector<LaurentPoly>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
    const std::size_t inner = b.size();
    const std::size_t cols = inner == 0 ? 0 : b[0].size();
    PolyMatrix c(a.size(), std::vector<LaurentPoly>(cols));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != inner) throw Error(Errc::InvalidInput, "matrix product shape mismatch");
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    }
    return c;
}

PolyMatrix transpose(const PolyMatrix& a) {
    if (a.empty()) return {};
    PolyMatrix t(a[0].size(), std::vector<LaurentPoly>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    }
    return t;
}

PolyMatrix substitute(const PolyMatrix& a, const std::map<std::string, LaurentPoly>& bindings) {
    PolyMatrix out = a;
    for (auto& row : out) {
        for (auto& e : row) e = e.substitute(bindings);
    }
    return out;
}

PolyMatrix scaled(const PolyMatrix& a, const LaurentPoly& factor) {
    PolyMatrix out = a;
    for (auto& row : out) {
        for (auto& e : row) e *= factor;
    }
    return out;
}

LaurentPoly determinant(const PolyMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) return LaurentPoly(1);
    for (const auto& row : a) {
        if (row.size() != n) throw Error(Errc::InvalidInput, "determinant of a non-square matrix");
    }
    if (n == 1) return a[0][0];
    if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    LaurentPoly total;
    for (std::size_t c = 0; c < n; ++c) {
        if (a[0][c].is_zero()) continue;
        PolyMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<LaurentPoly> row;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != c) row.push_back(a[r][k]);
            }
            minor.push_back(std::move(row));
        }
        const LaurentPoly term = a[0][c] * determinant(minor);
        if (c % 2 == 0) total += term;
        else total -= term;
    }
    return total;
}

bool is_identity(const PolyMatrix& a) {
    return a == poly_identity(a.size());
}

std::string to_string(const PolyMatrix& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += i == 0 ? "[" : ", [";
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            if (j != 0) s += ", ";
            s += a[i][j].to_string();
        }
        s += "]";
    }
    return s + "]";
}

nlohmann::json matrix_to_json(const PolyMatrix& a) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : a) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& e : row) r.push_back(poly_to_json(e));
        rows.push_back(r);
    }
    return rows;
}

PolyMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw Error(Errc::ParseError, "matrix must be an array of rows");
    PolyMatrix m;
    for (const auto& row : j) {
        if (!row.is_array()) throw Error(Errc::ParseError, "matrix row must be an array");
        std::vector<LaurentPoly> r;
        for (const auto& e : row) r.push_back(poly_from_json(e));
        if (!m.empty() && r.size() != m[0].size()) {
            throw Error(Errc::ParseError, "ragged matrix");
        }
        m.push_back(std::move(r));
    }
    return m;
}

}  // namespace skelcollar::exact
