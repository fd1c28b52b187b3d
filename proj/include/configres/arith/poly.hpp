#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "configres/arith/scalar.hpp"

namespace configres {

/// Dense exponent vector over an ambient variable list.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

    std::size_t size() const noexcept { return exps_.size(); }
    unsigned operator[](std::size_t i) const { return exps_[i]; }
    unsigned& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<unsigned>& exponents() const noexcept { return exps_; }

    unsigned degree() const;
    bool is_one() const;
    bool is_squarefree() const;
    bool divides(const Monomial& other) const;
    bool coprime(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    /// other / *this; requires divides(other).
    Monomial quotient_of(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<unsigned> exps_;
};

/// Monomial order given by blocks of variable indices, each compared lexicographically
/// in the listed priority; earlier blocks dominate. A single block is plain lex.
class TermOrder {
public:
    static TermOrder lex(std::size_t nvars);
    static TermOrder lex(std::vector<std::size_t> priority);
    static TermOrder block(std::vector<std::size_t> first, std::vector<std::size_t> second, std::string name = "");

    /// true iff a < b.
    bool less(const Monomial& a, const Monomial& b) const;
    const std::string& name() const noexcept { return name_; }

private:
    std::vector<std::vector<std::size_t>> blocks_;
    std::string name_;
};

using VariableList = std::shared_ptr<const std::vector<std::string>>;

VariableList make_variables(std::vector<std::string> names);
/// x1..xn followed by u1..ur.
VariableList ux_variables(std::size_t n, std::size_t r);
VariableList indexed_variables(std::string_view stem, std::size_t count);

/// Sparse multivariate polynomial; zero coefficients are never stored.
class MultiPoly {
public:
    using Terms = std::map<Monomial, Scalar>;

    MultiPoly() = default;
    explicit MultiPoly(VariableList vars);

    static MultiPoly constant(VariableList vars, const Scalar& c);
    static MultiPoly variable(VariableList vars, std::size_t index);
    static MultiPoly term(VariableList vars, Monomial m, const Scalar& c);

    const VariableList& variables() const noexcept { return vars_; }
    std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    unsigned total_degree() const;

    Scalar coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const Scalar& c);

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);
    MultiPoly& operator*=(const Scalar& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
    friend MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }
    MultiPoly operator-() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    MultiPoly pow(unsigned e) const;
    MultiPoly derivative(std::size_t var) const;
    Scalar evaluate(const std::vector<Scalar>& point) const;
    /// Image under the variable map old index i -> new index map[i].
    MultiPoly rename(VariableList target, const std::vector<std::size_t>& map) const;
    /// Coefficients reduced into F_p.
    MultiPoly mod(std::uint64_t p) const;

    /// Terms ascending in lex order with the last variable most significant,
    /// e.g. "x1*x2*x3+x1*x3*x4"; coefficients as "3*x1", "-1/2*x2^2".
    std::string to_string() const;

private:
    void require_same_ring(const MultiPoly& other) const;

    VariableList vars_;
    Terms terms_;
};

std::pair<Monomial, Scalar> lead_term(const MultiPoly& p, const TermOrder& ord);

/// Multivariate division remainder of p by the list g.
MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& g, const TermOrder& ord);
MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const TermOrder& ord);

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Symbolic determinant by cofactor expansion, memoized over column subsets (size <= 20).
MultiPoly poly_det(const PolyMatrix& m, VariableList vars);

std::string monomial_string(const Monomial& m, const std::vector<std::string>& names);
/// Parses the output format of to_string (also accepts spaces and a leading '-').
MultiPoly parse_poly(std::string_view text, VariableList vars, std::uint64_t p = 0);

}  // namespace configres
