#include "configres/config.hpp"

#include <algorithm>

#include "configres/errors.hpp"

namespace configres {

namespace {

std::uint64_t checked_modulus(const Matrix& a) { return a.modulus(); }

Scalar field_one(std::uint64_t p) { return p ? Scalar::fp(1, p) : Scalar(1); }
Scalar field_zero(std::uint64_t p) { return p ? Scalar::fp(0, p) : Scalar(0); }

bool is_zero_vector(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::vector<std::size_t> indices_of(Subset s, std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= n; ++i)
        if (s & element(i)) out.push_back(i - 1);
    return out;
}

Vector hadamard(const Vector& a, const Vector& b) {
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return out;
}

Vector combine_rows(const Matrix& basis, Rng& rng, const Configuration& c) {
    Vector out(basis.cols(), field_zero(c.modulus()));
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        Scalar t = random_unit(rng, c);
        for (std::size_t j = 0; j < basis.cols(); ++j) out[j] += t * basis(i, j);
    }
    return out;
}

}  // namespace

Configuration::Configuration(Matrix a)
    : a_(std::move(a)), p_(checked_modulus(a_)), m_(matroid_from_matrix(a_)), xvars_(indexed_variables("x", a_.cols())) {}

Configuration dual_config(const Configuration& c) { return Configuration(kernel_basis(c.matrix())); }

std::pair<Configuration, Configuration> normalized_dual_pair(const Configuration& c) {
    RowEchelon ech = row_echelon(c.matrix());
    const std::size_t r = c.rank(), n = c.size();
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (std::find(ech.pivots.begin(), ech.pivots.end(), j) == ech.pivots.end()) free_cols.push_back(j);
    Matrix d(n - r, n, field_zero(c.modulus()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        d(k, free_cols[k]) = field_one(c.modulus());
        for (std::size_t i = 0; i < r; ++i) d(k, ech.pivots[i]) = -ech.reduced(i, free_cols[k]);
    }
    return {Configuration(ech.reduced), Configuration(d)};
}

MultiPoly psi_basis_expansion(const Configuration& c) {
    MultiPoly psi(c.x_variables());
    for (Subset b : c.matroid().bases()) {
        std::vector<std::size_t> cols = indices_of(b, c.size());
        Scalar d = det(c.matrix().select_columns(cols));
        Monomial m(c.size());
        for (std::size_t i : cols) m[i] = 1;
        psi.add_term(m, d * d);
    }
    return psi;
}

PolyMatrix qw_matrix(const Configuration& c) {
    const Matrix& a = c.matrix();
    PolyMatrix q(c.rank(), std::vector<MultiPoly>(c.rank(), MultiPoly(c.x_variables())));
    for (std::size_t i = 0; i < c.rank(); ++i)
        for (std::size_t j = 0; j < c.rank(); ++j)
            for (std::size_t k = 0; k < c.size(); ++k) {
                Scalar coeff = a(i, k) * a(j, k);
                if (!coeff.is_zero()) q[i][j].add_term(Monomial::variable(c.size(), k), coeff);
            }
    return q;
}

MultiPoly psi_det(const Configuration& c) {
    MultiPoly d = poly_det(qw_matrix(c), c.x_variables());
    if (!(d == psi_basis_expansion(c)))
        throw Error(ErrorCode::Mismatch, "det(Q_W) differs from the basis expansion");
    return d;
}

LambdaSystem lambda_system(const Matrix& a) {
    const std::size_t r = a.rows(), n = a.cols();
    LambdaSystem sys{ux_variables(n, r), {}};
    const std::size_t nv = n + r;
    for (std::size_t i = 0; i < r; ++i) {
        MultiPoly q(sys.vars);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < r; ++j) {
                Scalar coeff = a(i, k) * a(j, k);
                if (coeff.is_zero()) continue;
                Monomial m(nv);
                m[k] = 1;
                m[n + j] = 1;
                q.add_term(m, coeff);
            }
        sys.q.push_back(std::move(q));
    }
    return sys;
}

LambdaSystem lambda_system(const Configuration& c) { return lambda_system(c.matrix()); }

Vector to_ambient(const Configuration& c, const Vector& w) {
    if (w.size() != c.rank()) throw Error(ErrorCode::InvalidArgument, "w must have length r");
    return c.matrix().transpose() * w;
}

Subset zero_flat(const Configuration& c, const Vector& w) {
    Vector v = to_ambient(c, w);
    Subset f = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i].is_zero()) f |= element(i + 1);
    return f;
}

Matrix beta_q_matrix(const Configuration& c, const Vector& beta) {
    if (beta.size() != c.size()) throw Error(ErrorCode::InvalidArgument, "beta must have length n");
    const Matrix& a = c.matrix();
    return a * diagonal(beta) * a.transpose();
}

Matrix jacobian(const Configuration& c, const Point& p) {
    return beta_q_matrix(c, p.beta).hcat(c.matrix() * diagonal(to_ambient(c, p.w)));
}

std::size_t jacobian_rank(const Configuration& c, const Point& p) { return matrix_rank(jacobian(c, p)); }

bool on_lambda(const Configuration& c, const Point& p) { return is_zero_vector(beta_q_matrix(c, p.beta) * p.w); }

JacobianBounds jacobian_bounds(const Configuration& c, const Point& p) {
    const Subset f = zero_flat(c, p.w);
    const Subset rest = c.matroid().ground() & ~f;
    Subset support = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!p.beta[i].is_zero()) support |= element(i + 1);
    return {rank_of(c.matroid(), rest), rank_of(c.matroid(), (support & f) | rest)};
}

std::string_view to_string(XRankClass k) {
    switch (k) {
        case XRankClass::Smooth: return "Smooth";
        case XRankClass::SingularOnX: return "SingularOnX";
        case XRankClass::OffX: return "OffX";
    }
    return "?";
}

XRankClass x_rank_class(const Configuration& c, const Vector& beta) {
    if (is_zero_vector(beta)) throw Error(ErrorCode::ZeroVector, "beta = 0");
    const std::size_t rk = matrix_rank(beta_q_matrix(c, beta));
    if (rk == c.rank()) return XRankClass::OffX;
    return rk + 1 == c.rank() ? XRankClass::Smooth : XRankClass::SingularOnX;
}

std::vector<Subset> nonround_flats(const Configuration& c) {
    const Matroid& m = c.matroid();
    if (!is_connected(m)) throw Error(ErrorCode::NotConnected, "matroid is not connected");
    std::vector<Subset> out;
    for (Subset f : flats(m).proper())
        if (rank_of(m, m.ground() & ~f) < m.rank()) out.push_back(f);
    return out;
}

Vector hadamard_square(const Configuration& c, const Vector& w) {
    if (is_zero_vector(w)) throw Error(ErrorCode::ZeroVector, "w = 0");
    Vector v = to_ambient(c, w);
    return hadamard(v, v);
}

bool on_lambda(const Configuration& c, const TorusPoint& p) {
    if (p.v.size() != c.size() || p.beta.size() != c.size()) return false;
    if (!solve(c.matrix().transpose(), p.v)) return false;
    return is_zero_vector(c.matrix() * hadamard(p.beta, p.v));
}

namespace {

TorusPoint apply_duality(const Configuration& c, const TorusPoint& p) {
    for (const Scalar& b : p.beta)
        if (b.is_zero()) throw Error(ErrorCode::ZeroCoordinate, "beta has a zero coordinate");
    if (!on_lambda(c, p)) throw Error(ErrorCode::NotOnLambda, "point is not on Lambda_W");
    TorusPoint out{hadamard(p.beta, p.v), Vector(p.beta.size())};
    for (std::size_t i = 0; i < p.beta.size(); ++i) out.beta[i] = p.beta[i].inverse();
    return out;
}

}  // namespace

TorusPoint duality_map(const Configuration& c, const TorusPoint& p) { return apply_duality(c, p); }

TorusPoint duality_inverse(const Configuration& dual, const TorusPoint& p) { return apply_duality(dual, p); }

bool iota_differential_check(const Configuration& c, const Vector& w, const Vector& beta) {
    if (c.modulus() == 2) throw Error(ErrorCode::InvalidArgument, "identity needs characteristic != 2");
    const std::size_t r = c.rank(), n = c.size();
    const Matrix& a = c.matrix();
    // Q_W(z, z) = sum_k (sum_i a_ik z_i)^2 x_k over the ring K[z1..zr, x1..xn]
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= r; ++i) names.push_back("z" + std::to_string(i));
    for (std::size_t k = 1; k <= n; ++k) names.push_back("x" + std::to_string(k));
    VariableList vars = make_variables(names);
    MultiPoly qww(vars);
    for (std::size_t k = 0; k < n; ++k) {
        MultiPoly lin(vars);
        for (std::size_t i = 0; i < r; ++i)
            if (!a(i, k).is_zero()) lin.add_term(Monomial::variable(r + n, i), a(i, k));
        qww += lin * lin * MultiPoly::variable(vars, r + k);
    }
    Vector point(w);
    point.insert(point.end(), beta.begin(), beta.end());
    Vector rhs = beta_q_matrix(c, beta) * w;
    for (std::size_t i = 0; i < r; ++i)
        if (!(qww.derivative(i).evaluate(point) == Scalar(2) * rhs[i])) return false;
    return true;
}

MultiPoly complement_monomials(const MultiPoly& f) {
    MultiPoly out(f.variables());
    for (const auto& [m, c] : f.terms()) {
        if (!m.is_squarefree()) throw Error(ErrorCode::InvalidArgument, "complement needs a squarefree polynomial");
        Monomial comp(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) comp[i] = 1 - m[i];
        out.add_term(comp, c);
    }
    return out;
}

std::optional<Scalar> psi_duality_ratio(const Configuration& c, const Configuration& dual) {
    if (c.size() != dual.size()) throw Error(ErrorCode::InvalidArgument, "ground sets differ");
    MultiPoly lhs = psi_basis_expansion(c);
    MultiPoly rhs = complement_monomials(psi_basis_expansion(dual));
    if (lhs.size() != rhs.size() || lhs.is_zero()) return std::nullopt;
    std::optional<Scalar> ratio;
    for (const auto& [m, coeff] : lhs.terms()) {
        Scalar other = rhs.coefficient(m);
        if (other.is_zero()) return std::nullopt;
        Scalar q = coeff / other;
        if (ratio && !(*ratio == q)) return std::nullopt;
        ratio = q;
    }
    return ratio;
}

Scalar random_unit(Rng& rng, const Configuration& c, int bound) {
    std::uniform_int_distribution<int> dist(1, bound);
    std::bernoulli_distribution negative(0.5);
    for (;;) {
        int k = dist(rng) * (negative(rng) ? -1 : 1);
        Scalar s = c.modulus() ? Scalar::fp(k, c.modulus()) : Scalar(k);
        if (!s.is_zero()) return s;
    }
}

Vector sample_stratum_point(const Configuration& c, Subset flat, Rng& rng) {
    const Matroid& m = c.matroid();
    if (!is_flat(m, flat) || flat == m.ground()) throw Error(ErrorCode::NotAFlat, subset_label(flat, c.size()) + " is not a proper flat");
    Matrix basis;
    if (flat == 0) {
        basis = Matrix::identity(c.rank(), field_one(c.modulus()));
    } else {
        std::vector<std::size_t> cols = indices_of(flat, c.size());
        basis = kernel_basis(c.matrix().select_columns(cols).transpose());
    }
    for (int attempt = 0; attempt < 200; ++attempt) {
        Vector w = combine_rows(basis, rng, c);
        if (zero_flat(c, w) != flat) continue;
        // normalize the first nonzero coordinate to 1
        auto lead = std::find_if(w.begin(), w.end(), [](const Scalar& s) { return !s.is_zero(); });
        Scalar inv = lead->inverse();
        for (Scalar& s : w) s *= inv;
        return w;
    }
    throw Error(ErrorCode::EmptyResult, "no point found on the stratum of " + subset_label(flat, c.size()));
}

std::optional<Point> sample_lambda_point(const Configuration& c, Subset flat, Rng& rng) {
    Vector w = sample_stratum_point(c, flat, rng);
    Matrix k = kernel_basis(c.matrix() * diagonal(to_ambient(c, w)));
    if (k.rows() == 0) return std::nullopt;
    for (int attempt = 0; attempt < 50; ++attempt) {
        Vector beta = combine_rows(k, rng, c);
        if (!is_zero_vector(beta)) return Point{w, beta};
    }
    return std::nullopt;
}

std::optional<Point> singular_witness(const Configuration& c, Subset flat, Rng& rng) {
    const Matroid& m = c.matroid();
    const Subset rest = m.ground() & ~flat;
    const int base = rank_of(m, rest);
    if (base >= m.rank()) return std::nullopt;
    for (std::size_t j = 1; j <= c.size(); ++j) {
        if (!(flat & element(j)) || rank_of(m, rest | element(j)) != base) continue;
        Vector beta(c.size(), field_zero(c.modulus()));
        beta[j - 1] = field_one(c.modulus());
        return Point{sample_stratum_point(c, flat, rng), beta};
    }
    return std::nullopt;
}

std::optional<Vector> psi_root_on_line(const Configuration& c, Vector beta, std::size_t j) {
    MultiPoly psi = psi_basis_expansion(c);
    beta[j] = field_zero(c.modulus());
    Scalar psi0 = psi.evaluate(beta);
    beta[j] = field_one(c.modulus());
    Scalar psi1 = psi.evaluate(beta) - psi0;
    if (psi1.is_zero()) return std::nullopt;
    beta[j] = -psi0 / psi1;
    return beta;
}

TorusPoint sample_torus_point(const Configuration& c, Rng& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
    for (int attempt = 0; attempt < 500; ++attempt) {
        Vector beta(c.size());
        for (Scalar& b : beta) b = random_unit(rng, c);
        auto root = psi_root_on_line(c, beta, pick(rng));
        if (!root || std::any_of(root->begin(), root->end(), [](const Scalar& s) { return s.is_zero(); })) continue;
        Matrix k = kernel_basis(beta_q_matrix(c, *root));
        if (k.rows() == 0) continue;
        Vector w = combine_rows(k, rng, c);
        if (is_zero_vector(w)) continue;
        return TorusPoint{to_ambient(c, w), *root};
    }
    throw Error(ErrorCode::EmptyResult, "no torus point of Lambda found");
}

Matrix random_configuration_matrix(std::size_t r, std::size_t n, Rng& rng, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    for (;;) {
        Matrix a(r, n);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = Scalar(dist(rng));
        if (matrix_rank(a) != r) continue;
        bool zero_column = false;
        for (std::size_t j = 0; j < n; ++j) zero_column = zero_column || is_zero_vector(a.col(j));
        if (!zero_column) return a;
    }
}

}  // namespace configres
