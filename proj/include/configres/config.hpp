#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "configres/arith/matrix.hpp"
#include "configres/arith/poly.hpp"
#include "configres/matroid.hpp"

namespace configres {

/// A configuration W in K^n given by a full-row-rank r x n matrix, 0 < r < n.
class Configuration {
public:
    /// Throws RankDeficient or Degenerate.
    explicit Configuration(Matrix a);

    const Matrix& matrix() const noexcept { return a_; }
    std::size_t rank() const noexcept { return a_.rows(); }
    std::size_t size() const noexcept { return a_.cols(); }
    std::uint64_t modulus() const noexcept { return p_; }
    const Matroid& matroid() const noexcept { return m_; }
    /// The variables x1..xn of psi and Q_W.
    const VariableList& x_variables() const noexcept { return xvars_; }

private:
    Matrix a_;
    std::uint64_t p_ = 0;
    Matroid m_;
    VariableList xvars_;
};

/// Rows span the kernel of the matrix (integer-cleared over Q).
Configuration dual_config(const Configuration& c);

/// Row-reduced matrix (I|B) up to the column order and its partner (-B^T|I), whose
/// complementary maximal minors agree exactly.
std::pair<Configuration, Configuration> normalized_dual_pair(const Configuration& c);

/// Sum over bases of det(A_B)^2 prod_{i in B} x_i.
MultiPoly psi_basis_expansion(const Configuration& c);
/// A diag(x) A^T with linear entries in x1..xn.
PolyMatrix qw_matrix(const Configuration& c);
/// det(Q_W), cross-checked against the basis expansion; throws Mismatch.
MultiPoly psi_det(const Configuration& c);

/// The forms q_i = (A D_x A^T u)_i in K[x1..xn, u1..ur].
struct LambdaSystem {
    VariableList vars;  // x1..xn, u1..ur
    std::vector<MultiPoly> q;
};
LambdaSystem lambda_system(const Configuration& c);
LambdaSystem lambda_system(const Matrix& a);

/// w in basis coordinates of W (length r), beta in V* (length n).
struct Point {
    Vector w;
    Vector beta;
};

/// A^T w: the point of V with coordinates l_i(w).
Vector to_ambient(const Configuration& c, const Vector& w);
/// F(w) = {i : l_i(w) = 0}.
Subset zero_flat(const Configuration& c, const Vector& w);

/// A D_beta A^T.
Matrix beta_q_matrix(const Configuration& c, const Vector& beta);
/// (A D_beta A^T | A D_{A^T w}).
Matrix jacobian(const Configuration& c, const Point& p);
std::size_t jacobian_rank(const Configuration& c, const Point& p);
bool on_lambda(const Configuration& c, const Point& p);

/// Bounds rank(M \ F) <= rank J <= rank({i in F : beta_i != 0} u E \ F) with F = F(w).
struct JacobianBounds {
    int lower;
    int upper;
};
JacobianBounds jacobian_bounds(const Configuration& c, const Point& p);

enum class XRankClass { Smooth, SingularOnX, OffX };
std::string_view to_string(XRankClass k);
/// Classifies beta by rank(A D_beta A^T): r is OffX, r-1 Smooth, less SingularOnX. Throws ZeroVector.
XRankClass x_rank_class(const Configuration& c, const Vector& beta);

/// Proper flats F with rank(E \ F) < r; throws NotConnected.
std::vector<Subset> nonround_flats(const Configuration& c);

/// (l_1(w)^2, ..., l_n(w)^2); throws ZeroVector.
Vector hadamard_square(const Configuration& c, const Vector& w);

/// Point of the torus part: v in W as a vector of V, beta in V* with no zero coordinate.
struct TorusPoint {
    Vector v;
    Vector beta;
};
/// v in the row span of A and A D_beta v = 0.
bool on_lambda(const Configuration& c, const TorusPoint& p);
/// (v, beta) -> (beta o v, 1/beta), landing on the Lambda of dual_config(c).
/// Throws ZeroCoordinate or NotOnLambda.
TorusPoint duality_map(const Configuration& c, const TorusPoint& p);
/// The inverse, applied on the dual side (same formula); checks membership for `dual`.
TorusPoint duality_inverse(const Configuration& dual, const TorusPoint& p);

/// Checks beta(d Q_W(w,w) / d z_i) = 2 (A D_beta A^T w)_i for every i.
bool iota_differential_check(const Configuration& c, const Vector& w, const Vector& beta);

/// Image of x^S under x^S -> x^(E \ S), i.e. f(1/x) * prod x_i for squarefree f.
MultiPoly complement_monomials(const MultiPoly& f);
/// lambda with psi_W(x) = lambda * psi_{W_perp}(1/x) prod x_i, if the two sides are proportional.
std::optional<Scalar> psi_duality_ratio(const Configuration& c, const Configuration& dual);

using Rng = std::mt19937_64;

/// Nonzero integer in [-bound, bound], embedded into the field of the configuration.
Scalar random_unit(Rng& rng, const Configuration& c, int bound = 9);
/// Generic w with F(w) = F; throws NotAFlat.
Vector sample_stratum_point(const Configuration& c, Subset flat, Rng& rng);
/// (w, beta) on Lambda with F(w) = F and random nonzero beta in ker(A D_{A^T w}).
std::optional<Point> sample_lambda_point(const Configuration& c, Subset flat, Rng& rng);
/// (w, delta_j) with F(w) = F and j in F inside the closure of E \ F, if such j exists.
std::optional<Point> singular_witness(const Configuration& c, Subset flat, Rng& rng);
/// (v, beta) on Lambda with all beta_i nonzero, found by restricting psi to a coordinate line.
TorusPoint sample_torus_point(const Configuration& c, Rng& rng);
/// A point of V(psi) on the line beta + t e_j, where psi is linear in t.
std::optional<Vector> psi_root_on_line(const Configuration& c, Vector beta, std::size_t j);

/// Random full-rank r x n integer matrix with entries in [-bound, bound].
Matrix random_configuration_matrix(std::size_t r, std::size_t n, Rng& rng, int bound = 3);

}  // namespace configres
