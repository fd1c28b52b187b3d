#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace configres {

/// Univariate integer polynomial, coefficients low degree first. Used for
/// characteristic polynomials (symbol t) and classes in the Lefschetz symbol L.
class ClassPoly {
public:
    ClassPoly() = default;
    explicit ClassPoly(std::vector<std::int64_t> coeffs);

    static ClassPoly monomial(unsigned degree, std::int64_t coeff = 1);
    /// 1 + t + ... + t^k, the class of P^k; zero for k < 0.
    static ClassPoly projective_space(int k);

    const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    std::int64_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

    ClassPoly& operator+=(const ClassPoly& rhs);
    ClassPoly& operator-=(const ClassPoly& rhs);
    friend ClassPoly operator+(ClassPoly a, const ClassPoly& b) { return a += b; }
    friend ClassPoly operator-(ClassPoly a, const ClassPoly& b) { return a -= b; }
    friend ClassPoly operator*(const ClassPoly& a, const ClassPoly& b);
    friend bool operator==(const ClassPoly&, const ClassPoly&) = default;

    std::int64_t evaluate(std::int64_t t) const;

    /// Exact quotient by (t - 1); returns false (and leaves `out` untouched) on a nonzero remainder.
    bool divide_by_t_minus_one(ClassPoly& out) const;

    /// "L^3+4L^2+2L+1" style rendering.
    std::string to_string(char symbol = 'L') const;

private:
    void trim();
    std::vector<std::int64_t> coeffs_;
};

ClassPoly parse_class_poly(const std::string& text, char symbol = 'L');

}  // namespace configres
