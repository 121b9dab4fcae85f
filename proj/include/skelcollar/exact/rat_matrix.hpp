#pragma once

#include "skelcollar/exact/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace skelcollar::exact {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatVector row(std::size_t i) const;
    RatMatrix transpose() const;
    RatVector apply(const RatVector& x) const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

/// Reduced row echelon form together with the pivot columns.
struct Echelon {
    RatMatrix reduced;
    std::vector<std::size_t> pivots;
};

/// Fraction-free (Bareiss) Gauss-Jordan elimination. Each row is first scaled
/// to integers; every intermediate entry is then a minor of that integer
/// matrix, so all divisions are exact.
Echelon echelon(const RatMatrix& a);

std::size_t rank(const RatMatrix& a);

/// Basis of {x : A x = 0}; one vector per free column, with 1 in that column.
std::vector<RatVector> kernel(const RatMatrix& a);

/// One solution of A x = b (free variables set to 0). Throws InconsistentSystem.
RatVector solve(const RatMatrix& a, const RatVector& b);

}  // namespace skelcollar::exact
