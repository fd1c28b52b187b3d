#include "configres/arith/matrix.hpp"

#include <sstream>
#include <utility>

#include "configres/errors.hpp"

namespace configres {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Scalar& fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::identity(std::size_t n, const Scalar& one) {
    Matrix m(n, n, one - one);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const {
    Matrix s(rows_, columns.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < columns.size(); ++k) s(i, k) = (*this)(i, columns[k]);
    return s;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
    Matrix s(rows.size(), cols_);
    for (std::size_t k = 0; k < rows.size(); ++k)
        for (std::size_t j = 0; j < cols_; ++j) s(k, j) = (*this)(rows[k], j);
    return s;
}

Matrix Matrix::hcat(const Matrix& rhs) const {
    if (rows_ != rhs.rows_) throw Error(ErrorCode::InvalidArgument, "hcat: row counts differ");
    Matrix out(rows_, cols_ + rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, cols_ + j) = rhs(i, j);
    }
    return out;
}

std::uint64_t Matrix::modulus() const {
    std::uint64_t p = 0;
    for (const auto& s : data_) {
        if (!s.is_fp()) continue;
        if (p != 0 && s.modulus() != p) throw Error(ErrorCode::FieldMismatch, "matrix mixes primes");
        p = s.modulus();
    }
    return p;
}

Matrix Matrix::mod(std::uint64_t p) const {
    Scalar unit = Scalar::fp(1, p);
    Matrix out = *this;
    for (auto& s : out.data_) s = s.in_field_of(unit);
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw Error(ErrorCode::InvalidArgument, "matrix-vector product: shape mismatch");
    Vector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << "]\n";
    }
    return os.str();
}

Matrix diagonal(const Vector& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

RowEchelon row_echelon(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(row, j));
        Scalar inv = a(row, col).inverse();
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            Scalar factor = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    std::vector<std::size_t> keep(row);
    for (std::size_t i = 0; i < row; ++i) keep[i] = i;
    return {a.select_rows(keep), std::move(pivots)};
}

std::size_t matrix_rank(const Matrix& m) {
    if (m.empty()) return 0;
    return row_echelon(m).pivots.size();
}

Scalar det(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::NonSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    const std::size_t n = m.rows();
    if (n == 0) return Scalar(1);
    Matrix a = m;
    Scalar prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a(swap_row, k).is_zero()) ++swap_row;
            if (swap_row == n) return a(k, k) - a(k, k);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        }
        prev = a(k, k);
    }
    return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

Vector clear_denominators(const Vector& v) {
    if (v.empty() || v.front().is_fp()) return v;
    mpz_class lcm = 1;
    for (const auto& s : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), s.rational_value().get_den_mpz_t());
    mpz_class g = 0;
    for (const auto& s : v) {
        mpz_class num = s.rational_value().get_num() * (lcm / s.rational_value().get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    if (g == 0) return v;
    Vector out;
    out.reserve(v.size());
    for (const auto& s : v) {
        mpz_class num = s.rational_value().get_num() * (lcm / s.rational_value().get_den()) / g;
        out.emplace_back(mpq_class(num));
    }
    return out;
}

Matrix kernel_basis(const Matrix& m) {
    const std::size_t n = m.cols();
    if (m.rows() == 0) return Matrix::identity(n);
    RowEchelon ech = row_echelon(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    Scalar zero = m(0, 0) - m(0, 0);
    Scalar one = zero + Scalar(1);
    std::vector<Vector> rows;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vector v(n, zero);
        v[free] = one;
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, free);
        rows.push_back(clear_denominators(v));
    }
    if (rows.empty()) return Matrix(0, n);
    return Matrix::from_rows(rows);
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    Matrix col(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) col(i, 0) = b[i];
    RowEchelon ech = row_echelon(a.hcat(col));
    const std::size_t n = a.cols();
    if (!ech.pivots.empty() && ech.pivots.back() == n) return std::nullopt;
    Scalar zero = b.empty() ? Scalar() : b[0] - b[0];
    Vector x(n, zero);
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) x[ech.pivots[i]] = ech.reduced(i, n);
    return x;
}

}  // namespace configres
