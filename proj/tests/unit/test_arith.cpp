#include <random>

#include "doctest.h"

#include "configres/arith/class_poly.hpp"
#include "configres/arith/matrix.hpp"
#include "configres/arith/poly.hpp"
#include "configres/errors.hpp"

using namespace configres;

namespace {

Matrix fig1() {
    return Matrix::from_rows({{1, 0, 0, 1, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}});
}

Matrix int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(dist(rng));
    return m;
}

// Leibniz formula over all permutations; independent of elimination.
Scalar leibniz_det(const Matrix& m) {
    std::vector<std::size_t> perm(m.rows());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    Scalar total(0);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inversions;
        Scalar term(inversions % 2 ? -1 : 1);
        for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace

TEST_CASE("scalar rationals are canonical") {
    Scalar a = Scalar::rational(6, -4);
    CHECK(a.to_string() == "-3/2");
    CHECK(a.rational_value().get_den() == 2);
    CHECK((a + Scalar::rational(3, 2)).is_zero());
    CHECK(Scalar::parse("-2/5") * Scalar(5) == Scalar(-2));
    CHECK_THROWS_AS(Scalar(0).inverse(), Error);
}

TEST_CASE("prime field arithmetic") {
    Scalar a = Scalar::fp(5, 7);
    CHECK(a.residue() == 5);
    CHECK((a * a.inverse()).is_one());
    CHECK(Scalar::fp(-1, 7).residue() == 6);
    CHECK((a + Scalar(3)).residue() == 1);  // rational constants embed
    CHECK((Scalar::rational(1, 2) * Scalar::fp(2, 7)).is_one());
    try {
        (void)(Scalar::fp(1, 7) + Scalar::fp(1, 11));
        FAIL("expected FieldMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FieldMismatch);
    }
    CHECK_THROWS_AS(Scalar::fp(1, 8), Error);
    const std::uint64_t big = 2305843009213693951ULL;  // 2^61 - 1
    Scalar x = Scalar::fp(123456789, big);
    CHECK((x * x.inverse()).is_one());
}

TEST_CASE("matrix rank") {
    CHECK(matrix_rank(fig1()) == 3);
    CHECK(matrix_rank(Matrix(3, 4)) == 0);
    std::vector<std::size_t> cols{2, 4};
    CHECK(matrix_rank(fig1().select_columns(cols)) == 2);
}

TEST_CASE("determinant") {
    CHECK(det(Matrix::identity(3)) == Scalar(1));
    CHECK(det(Matrix::from_rows({{1, 1}, {1, 1}})).is_zero());
    Matrix a = fig1();
    CHECK(det(a * a.transpose()) == Scalar(8));
    try {
        (void)det(a);
        FAIL("expected NonSquare");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonSquare);
    }
}

TEST_CASE("determinant agrees with the Leibniz formula and with rank") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + trial % 5;
        Matrix m = int_matrix(rng, n, n, -2, 2);
        Scalar d = det(m);
        CHECK(d == leibniz_det(m));
        CHECK((!d.is_zero()) == (matrix_rank(m) == n));
        Matrix mp = m.mod(101);
        CHECK(det(mp) == leibniz_det(mp));
    }
}

TEST_CASE("kernel basis") {
    Matrix k = kernel_basis(fig1());
    CHECK(k.rows() == 2);
    Matrix expected = Matrix::from_rows({{1, 1, 0, -1, 0}, {1, 0, 1, 0, -1}});
    CHECK(matrix_rank(k) == 2);
    CHECK(matrix_rank(k.transpose().hcat(expected.transpose())) == 2);  // same row span
    CHECK(kernel_basis(Matrix::identity(3)).rows() == 0);
    Matrix k1 = kernel_basis(Matrix::from_rows({{1, 1}}));
    REQUIRE(k1.rows() == 1);
    CHECK(k1(0, 0) == -k1(0, 1));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Matrix m = int_matrix(rng, 1 + trial % 4, 2 + trial % 5, -1, 1);
        Matrix kb = kernel_basis(m);
        CHECK(kb.rows() == m.cols() - matrix_rank(m));
        if (kb.rows() == 0) continue;
        CHECK(matrix_rank(kb) == kb.rows());
        Matrix prod = m * kb.transpose();
        CHECK(prod == Matrix(m.rows(), kb.rows()));
    }
}

TEST_CASE("solve") {
    Matrix a = fig1();
    Vector b{Scalar(2), Scalar(1), Scalar(1)};
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
    CHECK_FALSE(solve(Matrix::from_rows({{1, 1}, {1, 1}}), Vector{Scalar(1), Scalar(2)}).has_value());
}

TEST_CASE("polynomial arithmetic and lead terms") {
    auto vars = indexed_variables("x", 5);
    auto x = [&](std::size_t i) { return MultiPoly::variable(vars, i - 1); };
    MultiPoly psi = parse_poly("x1*x2*x3+x1*x3*x4+x2*x3*x4+x1*x2*x5+x2*x3*x5+x1*x4*x5+x2*x4*x5+x3*x4*x5", vars);
    CHECK(psi.size() == 8);
    CHECK(psi.to_string() == "x1*x2*x3+x1*x3*x4+x2*x3*x4+x1*x2*x5+x2*x3*x5+x1*x4*x5+x2*x4*x5+x3*x4*x5");
    auto [lead, coeff] = lead_term(psi, TermOrder::lex(5));
    CHECK(lead == (x(1) * x(2) * x(3)).terms().begin()->first);
    CHECK(coeff == Scalar(1));

    auto [one, five] = lead_term(MultiPoly::constant(vars, 5), TermOrder::lex(5));
    CHECK(one.is_one());
    CHECK(five == Scalar(5));
    try {
        (void)lead_term(MultiPoly(vars), TermOrder::lex(5));
        FAIL("expected ZeroPolynomial");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroPolynomial);
    }

    std::vector<Scalar> ones(5, Scalar(1));
    CHECK(psi.evaluate(ones) == Scalar(8));
    CHECK(psi.derivative(0).size() == 4);
    CHECK(parse_poly("3*x2-1/2*x1^2", vars).to_string() == "-1/2*x1^2+3*x2");
}

TEST_CASE("polynomial properties on random inputs") {
    auto vars = indexed_variables("x", 3);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coef(-3, 3), expo(0, 2);
    auto random_poly = [&] {
        MultiPoly p(vars);
        for (int t = 0; t < 4; ++t) {
            Monomial m(std::vector<unsigned>{static_cast<unsigned>(expo(rng)), static_cast<unsigned>(expo(rng)),
                                             static_cast<unsigned>(expo(rng))});
            p.add_term(m, Scalar(coef(rng)));
        }
        return p;
    };
    std::vector<TermOrder> orders{TermOrder::lex(3), TermOrder::lex(std::vector<std::size_t>{2, 0, 1}),
                                  TermOrder::block({0}, {1, 2})};
    for (int trial = 0; trial < 50; ++trial) {
        MultiPoly p = random_poly(), q = random_poly();
        CHECK((p + q) - q == p);
        if (p.is_zero() || q.is_zero()) continue;
        for (const auto& ord : orders) {
            auto [lp, cp] = lead_term(p, ord);
            auto [lq, cq] = lead_term(q, ord);
            auto [lpq, cpq] = lead_term(p * q, ord);
            CHECK(lpq == lp * lq);
            CHECK(cpq == cp * cq);
        }
    }
}

TEST_CASE("symbolic determinant of the Fig-1 Q matrix") {
    auto vars = indexed_variables("x", 5);
    Matrix a = fig1();
    PolyMatrix q(3, std::vector<MultiPoly>(3, MultiPoly(vars)));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 5; ++k)
                q[i][j] += MultiPoly::variable(vars, k) * (a(i, k) * a(j, k));
    CHECK(poly_det(q, vars).to_string() ==
          "x1*x2*x3+x1*x3*x4+x2*x3*x4+x1*x2*x5+x2*x3*x5+x1*x4*x5+x2*x4*x5+x3*x4*x5");
}

TEST_CASE("division and s-polynomials") {
    auto vars = indexed_variables("x", 2);
    MultiPoly f = parse_poly("x1^2+x2", vars);
    MultiPoly g = parse_poly("x1*x2-1", vars);
    TermOrder ord = TermOrder::lex(2);
    MultiPoly s = s_polynomial(f, g, ord);
    CHECK(reduce(f * g, {f}, ord).is_zero());
    CHECK(reduce(s, {f, g}, ord) == reduce(reduce(s, {f, g}, ord), {f, g}, ord));
}

TEST_CASE("class polynomials") {
    ClassPoly p = parse_class_poly("L^3+4L^2+2L+1");
    CHECK(p.to_string() == "L^3+4L^2+2L+1");
    CHECK(p.evaluate(2) == 29);
    CHECK(ClassPoly::projective_space(2).to_string() == "L^2+L+1");
    ClassPoly q;
    CHECK(ClassPoly({2, -3, 1}).divide_by_t_minus_one(q));
    CHECK(q == ClassPoly({-2, 1}));
    CHECK_FALSE(ClassPoly({1, 1}).divide_by_t_minus_one(q));
    CHECK(q.to_string('t') == "t-2");
    CHECK(parse_class_poly("-L^2+3").to_string() == "-L^2+3");
}
