#include "skelcollar/exact/rat_matrix.hpp"

#include "skelcollar/error.hpp"

#include <ostream>
#include <utility>

namespace skelcollar::exact {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw Error(Errc::InvalidInput, "ragged matrix literal");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw Error(Errc::InvalidInput, "row length does not match column count");
        }
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RatVector RatMatrix::row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

RatVector RatMatrix::apply(const RatVector& x) const {
    if (x.size() != cols_) {
        throw Error(Errc::InvalidInput, "vector length does not match column count");
    }
    RatVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!x[j].is_zero()) y[i] += (*this)(i, j) * x[j];
        }
    }
    return y;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw Error(Errc::InvalidInput, "matrix product shape mismatch");
    }
    RatMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "[" : ", [");
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j != 0) os << ", ";
            os << m(i, j);
        }
        os << "]";
    }
    return os << "]";
}

namespace {

using IntRows = std::vector<std::vector<mpz_class>>;

IntRows integerize(const RatMatrix& a) {
    IntRows out(a.rows(), std::vector<mpz_class>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const mpz_class& d = a(i, j).raw().get_den();
            if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const mpq_class& q = a(i, j).raw();
            out[i][j] = q.get_num() * (l / q.get_den());
        }
    }
    return out;
}

}  // namespace

Echelon echelon(const RatMatrix& a) {
    IntRows m = integerize(a);
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<std::size_t> pivots;
    mpz_class prev = 1;
    mpz_class t;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const mpz_class piv = m[r][c];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const mpz_class f = m[i][c];
            for (std::size_t k = 0; k < cols; ++k) {
                t = piv * m[i][k];
                if (f != 0 && m[r][k] != 0) t -= f * m[r][k];
                if (prev != 1) {
                    if (!mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t())) {
                        throw Error(Errc::InvalidInput, "fraction-free elimination lost exactness");
                    }
                    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                }
                m[i][k] = t;
            }
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }

    Echelon e{RatMatrix(rows, cols), pivots};
    for (std::size_t i = 0; i < r; ++i) {
        const mpz_class& d = m[i][pivots[i]];
        for (std::size_t k = 0; k < cols; ++k) {
            if (m[i][k] != 0) e.reduced(i, k) = Rational(m[i][k], d);
        }
    }
    return e;
}

std::size_t rank(const RatMatrix& a) {
    return echelon(a).pivots.size();
}

std::vector<RatVector> kernel(const RatMatrix& a) {
    const Echelon e = echelon(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVector v(a.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) {
            v[e.pivots[i]] = -e.reduced(i, f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RatVector solve(const RatMatrix& a, const RatVector& b) {
    if (b.size() != a.rows()) {
        throw Error(Errc::InvalidInput, "right-hand side length does not match row count");
    }
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const Echelon e = echelon(aug);
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) {
        throw Error(Errc::InconsistentSystem, "linear system has no solution");
    }
    RatVector x(a.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        x[e.pivots[i]] = e.reduced(i, a.cols());
    }
    return x;
}

}  // namespace skelcollar::exact
