#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigonal/scalar.hpp"

namespace trigonal {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Q(w).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    /// Throws DomainError on ragged input.
    static Matrix from_rows(const std::vector<Vector>& rows);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    Matrix transpose() const;
    /// Columns selected in the given order.
    Matrix select_columns(const std::vector<std::size_t>& cols) const;
    void append_row(const Vector& row);

    Matrix operator*(const Matrix& o) const;
    Vector operator*(const Vector& v) const;
    friend bool operator==(const Matrix&, const Matrix&) = default;

    bool is_zero() const;

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> a_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Exact basis of the right null space, one vector per free column; m * v = 0 for each.
std::vector<Vector> kernel_basis(const Matrix& m);
/// Throws DomainError for non-square input.
Scalar determinant(Matrix m);
/// Throws DegenerateInput for a singular matrix.
Matrix inverse(const Matrix& m);
/// Some x with m x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// row-vector times matrix: v^T m.
Vector left_multiply(const Vector& v, const Matrix& m);
Scalar dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);

/// True when span(a) == span(b) (both given as lists of vectors of equal length).
bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b);

}  // namespace trigonal
