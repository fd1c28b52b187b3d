#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "configres/arith/scalar.hpp"

namespace configres {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Q or F_p.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const Scalar& fill = Scalar());

    static Matrix from_rows(const std::vector<Vector>& rows);
    static Matrix identity(std::size_t n, const Scalar& one = Scalar(1));

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;

    Matrix transpose() const;
    Matrix select_columns(std::span<const std::size_t> columns) const;
    Matrix select_rows(std::span<const std::size_t> rows) const;
    /// Horizontal concatenation [*this | rhs].
    Matrix hcat(const Matrix& rhs) const;

    /// Modulus of the entries (0 when rational); throws FieldMismatch on mixed entries.
    std::uint64_t modulus() const;
    /// Entrywise reduction into F_p.
    Matrix mod(std::uint64_t p) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix diagonal(const Vector& d);

std::size_t matrix_rank(const Matrix& m);

/// Fraction-free (Bareiss) determinant; throws NonSquare.
Scalar det(const Matrix& m);

struct RowEchelon {
    Matrix reduced;                   // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row
};

RowEchelon row_echelon(const Matrix& m);

/// Basis of the right kernel as rows; over Q each row is scaled to coprime integers.
Matrix kernel_basis(const Matrix& m);

/// Some solution of a x = b, if one exists.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Scales a rational vector to a primitive integer vector (no-op over F_p).
Vector clear_denominators(const Vector& v);

}  // namespace configres
