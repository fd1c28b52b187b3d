#include <set>

#include "doctest.h"

#include "configres/config.hpp"
#include "configres/errors.hpp"

using namespace configres;

namespace {

const char* kPsiFig1 = "x1*x2*x3+x1*x3*x4+x2*x3*x4+x1*x2*x5+x2*x3*x5+x1*x4*x5+x2*x4*x5+x3*x4*x5";

Configuration fig1() { return Configuration(Matrix::from_rows({{1, 0, 0, 1, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}})); }
Configuration u34() { return Configuration(Matrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 2, 4, 8}})); }

Vector vec(std::initializer_list<int> xs) {
    Vector v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

Subset S(const char* label) { return parse_subset(label, 5); }

template <typename F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;  // sentinel: nothing thrown
}

}  // namespace

TEST_CASE("configuration validation") {
    Configuration c = fig1();
    CHECK(c.rank() == 3);
    CHECK(c.size() == 5);
    CHECK(u34().matroid() == Matroid::uniform(3, 4));
    CHECK(code_of([] { Configuration(Matrix::identity(2)); }) == ErrorCode::Degenerate);
    CHECK(code_of([] { Configuration(Matrix::from_rows({{1, 2, 3}, {2, 4, 6}})); }) == ErrorCode::RankDeficient);
}

TEST_CASE("dual configuration") {
    Configuration c = fig1();
    Configuration d = dual_config(c);
    CHECK(d.rank() == 2);
    CHECK(d.matroid() == dual(c.matroid()));
    Matrix expected = Matrix::from_rows({{1, 1, 0, -1, 0}, {1, 0, 1, 0, -1}});
    CHECK(matrix_rank(d.matrix().transpose().hcat(expected.transpose())) == 2);
    Configuration dd = dual_config(d);
    CHECK(matrix_rank(dd.matrix().transpose().hcat(c.matrix().transpose())) == 3);
    CHECK(dual_config(Configuration(Matrix::from_rows({{1, 0, 2}, {0, 1, 3}}))).matroid() == Matroid::uniform(1, 3));
}

TEST_CASE("configuration polynomial") {
    Configuration c = fig1();
    CHECK(psi_basis_expansion(c).to_string() == kPsiFig1);
    CHECK(psi_det(c).to_string() == kPsiFig1);
    CHECK(psi_det(Configuration(Matrix::from_rows({{1, 1}}))).to_string() == "x1+x2");

    MultiPoly psi = psi_det(u34());
    auto coeff = [&](std::vector<unsigned> e) { return psi.coefficient(Monomial(std::move(e))); };
    // minors worked by hand: det A_123 = det A_124 = -1, det A_134 = det A_234 = 4
    CHECK(coeff({1, 1, 1, 0}) == Scalar(1));
    CHECK(coeff({1, 1, 0, 1}) == Scalar(1));
    CHECK(coeff({1, 0, 1, 1}) == Scalar(16));
    CHECK(coeff({0, 1, 1, 1}) == Scalar(16));
    CHECK(psi.evaluate(Vector(4, Scalar(1))) == Scalar(34));

    // Matrix-Tree: the Fig-1 graph has 8 spanning trees
    CHECK(psi_det(c).evaluate(Vector(5, Scalar(1))) == Scalar(8));
}

TEST_CASE("psi is squarefree and its support avoids exactly the loops") {
    Rng rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t r = 1 + trial % 3, n = r + 1 + trial % 4;
        Matrix a = random_configuration_matrix(r, n, rng, 2);
        if (trial % 5 == 0) {
            for (std::size_t i = 0; i < r; ++i) a(i, n - 1) = Scalar(0);  // force a loop
            if (matrix_rank(a) != r) continue;
        }
        Configuration c(a);
        MultiPoly psi = psi_det(c);
        Subset used = 0;
        for (const auto& [m, coef] : psi.terms()) {
            CHECK(m.is_squarefree());
            CHECK(m.degree() == r);
            for (std::size_t i = 0; i < n; ++i)
                if (m[i]) used |= element(i + 1);
        }
        CHECK((c.matroid().ground() & ~used) == loops(c.matroid()));
    }
}

TEST_CASE("Lambda system") {
    LambdaSystem sys = lambda_system(fig1());
    REQUIRE(sys.q.size() == 3);
    CHECK(sys.q[1] == parse_poly("x4*u1+x2*u2+x4*u2", sys.vars));
    CHECK(sys.q[2] == parse_poly("x5*u1+x3*u3+x5*u3", sys.vars));
    CHECK(sys.q[0] == parse_poly("x1*u1+x4*u1+x5*u1+x4*u2+x5*u3", sys.vars));
    LambdaSystem one = lambda_system(Configuration(Matrix::from_rows({{1, 1}})));
    CHECK(one.q[0] == parse_poly("x1*u1+x2*u1", one.vars));
}

TEST_CASE("Jacobian at the singular points of the Fig-1 example") {
    Configuration c = fig1();
    Vector beta0 = vec({1, 0, 0, 0, 0});
    for (Vector w : {vec({0, 0, 1}), vec({0, 1, 0})}) {
        Point p{w, beta0};
        CHECK(on_lambda(c, p));
        CHECK(jacobian_rank(c, p) == 2);
    }
    CHECK(zero_flat(c, vec({0, 0, 1})) == S("124"));
    CHECK(zero_flat(c, vec({0, 1, 0})) == S("135"));
    CHECK(on_lambda(c, Point{vec({1, 2, 3}), Vector(5, Scalar(0))}));

    Rng rng(1);
    for (Subset f : {S("124"), S("135")}) {
        auto witness = singular_witness(c, f, rng);
        REQUIRE(witness.has_value());
        CHECK(witness->beta == beta0);
        CHECK(zero_flat(c, witness->w) == f);
        CHECK(jacobian_rank(c, *witness) == 2);
    }
    auto a124 = singular_witness(c, S("124"), rng);
    CHECK(a124->w == vec({0, 0, 1}));
    auto a135 = singular_witness(c, S("135"), rng);
    CHECK(a135->w == vec({0, 1, 0}));
}

TEST_CASE("Jacobian rank on sampled points of every stratum") {
    Configuration c = fig1();
    Rng rng(2024);
    for (Subset f : flats(c.matroid()).proper()) {
        for (int k = 0; k < 5; ++k) {
            auto p = sample_lambda_point(c, f, rng);
            REQUIRE(p.has_value());
            CHECK(on_lambda(c, *p));
            CHECK(zero_flat(c, p->w) == f);
            const int rk = static_cast<int>(jacobian_rank(c, *p));
            JacobianBounds b = jacobian_bounds(c, *p);
            CHECK(b.lower <= rk);
            CHECK(rk <= b.upper);
            if (rank_of(c.matroid(), c.matroid().ground() & ~f) == c.matroid().rank()) CHECK(rk == 3);
        }
    }
    Point generic = *sample_lambda_point(c, 0, rng);
    CHECK(jacobian_rank(c, generic) == 3);
}

TEST_CASE("singular witnesses exist exactly for the nonround flats of Fig-1") {
    Configuration c = fig1();
    Rng rng(3);
    std::vector<Subset> nonround = nonround_flats(c);
    CHECK(nonround == std::vector<Subset>{S("124"), S("135")});
    for (Subset f : flats(c.matroid()).proper()) {
        bool is_nonround = std::find(nonround.begin(), nonround.end(), f) != nonround.end();
        CHECK(singular_witness(c, f, rng).has_value() == is_nonround);
    }
}

TEST_CASE("U_{3,4}: a nonround flat whose complement is a flat has no delta witness") {
    // F = {1,2}: E \ F = {3,4} is closed, so no j in F lies in its closure.
    Configuration c = u34();
    Rng rng(4);
    std::vector<Subset> nonround = nonround_flats(c);
    CHECK(nonround.size() == 6);
    for (Subset f : nonround) CHECK(cardinality(f) == 2);
    CHECK_FALSE(singular_witness(c, parse_subset("12", 4), rng).has_value());
    // every sampled point over that stratum has a full-rank Jacobian
    for (int k = 0; k < 20; ++k) {
        auto p = sample_lambda_point(c, parse_subset("12", 4), rng);
        REQUIRE(p.has_value());
        CHECK(jacobian_rank(c, *p) == 3);
    }
}

TEST_CASE("rank classification of beta") {
    Configuration c = fig1();
    CHECK(x_rank_class(c, vec({1, 0, 0, 0, 0})) == XRankClass::SingularOnX);
    CHECK(x_rank_class(c, vec({1, 1, 1, 1, 1})) == XRankClass::OffX);
    CHECK(code_of([&] { x_rank_class(c, Vector(5, Scalar(0))); }) == ErrorCode::ZeroVector);
    Rng rng(5);
    for (int k = 0; k < 10; ++k) {
        TorusPoint t = sample_torus_point(c, rng);
        CHECK(psi_det(c).evaluate(t.beta).is_zero());
        CHECK(x_rank_class(c, t.beta) == XRankClass::Smooth);
    }
}

TEST_CASE("root of psi on the line (1,1,1,1,t)") {
    Configuration c = fig1();
    auto root = psi_root_on_line(c, vec({1, 1, 1, 1, 1}), 4);
    REQUIRE(root.has_value());
    CHECK((*root)[4] == Scalar::rational(-3, 5));
    CHECK(psi_det(c).evaluate(*root).is_zero());
    // the value -1/2 does not lie on X_G
    Vector half = vec({1, 1, 1, 1, 1});
    half[4] = Scalar::rational(-1, 2);
    CHECK_FALSE(psi_det(c).evaluate(half).is_zero());
}

TEST_CASE("nonround flats") {
    CHECK(nonround_flats(Configuration(Matrix::from_rows({{1, 0, 1}, {0, 1, 1}}))).empty());
    CHECK(code_of([] { nonround_flats(Configuration(Matrix::from_rows({{1, 0}, {0, 1}, {0, 0}}).transpose())); }) ==
          ErrorCode::NotConnected);
    Rng rng(6);
    for (int trial = 0; trial < 15; ++trial) {
        Configuration c(random_configuration_matrix(2 + trial % 2, 4 + trial % 3, rng, 2));
        if (!is_connected(c.matroid())) continue;
        CHECK(nonround_flats(c).empty() == is_round(c.matroid()));
    }
}

TEST_CASE("Hadamard square") {
    Configuration c = fig1();
    CHECK(hadamard_square(c, vec({0, 0, 1})) == vec({0, 0, 1, 0, 1}));
    CHECK(hadamard_square(c, vec({1, 1, 1})) == vec({1, 1, 1, 4, 4}));
    Vector sq = hadamard_square(c, vec({3, 3, 3}));
    for (std::size_t i = 0; i < 5; ++i) CHECK(sq[i] == Scalar(9) * hadamard_square(c, vec({1, 1, 1}))[i]);
    CHECK(code_of([&] { hadamard_square(c, vec({0, 0, 0})); }) == ErrorCode::ZeroVector);
}

TEST_CASE("duality map round trip") {
    Configuration c = fig1();
    Configuration d = dual_config(c);
    Rng rng(8);
    for (int k = 0; k < 10; ++k) {
        TorusPoint p = sample_torus_point(c, rng);
        CHECK(on_lambda(c, p));
        TorusPoint q = duality_map(c, p);
        CHECK(on_lambda(d, q));
        TorusPoint back = duality_inverse(d, q);
        CHECK(back.v == p.v);
        CHECK(back.beta == p.beta);
    }
    TorusPoint zero{vec({1, 0, 0, 1, 1}), vec({1, 0, 1, 1, 1})};
    CHECK(code_of([&] { duality_map(c, zero); }) == ErrorCode::ZeroCoordinate);
    TorusPoint off{vec({1, 0, 0, 1, 1}), vec({1, 1, 1, 1, 1})};
    CHECK(code_of([&] { duality_map(c, off); }) == ErrorCode::NotOnLambda);
}

TEST_CASE("psi duality identity") {
    Configuration c = fig1();
    auto [normal, partner] = normalized_dual_pair(c);
    auto ratio = psi_duality_ratio(normal, partner);
    REQUIRE(ratio.has_value());
    CHECK(*ratio == Scalar(1));
    CHECK(psi_duality_ratio(c, dual_config(c)).has_value());

    Rng rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        Configuration rc(random_configuration_matrix(2 + trial % 3, 5 + trial % 2, rng, 3));
        auto [a, b] = normalized_dual_pair(rc);
        CHECK(matrix_rank(a.matrix().transpose().hcat(rc.matrix().transpose())) == rc.rank());
        CHECK(psi_duality_ratio(a, b) == std::optional<Scalar>(Scalar(1)));
        CHECK(psi_duality_ratio(rc, dual_config(rc)).has_value());
    }
}

TEST_CASE("differential identity of the Hadamard square") {
    Configuration c = fig1();
    Rng rng(10);
    for (int k = 0; k < 10; ++k) {
        Vector w(3), beta(5);
        for (auto& s : w) s = random_unit(rng, c);
        for (auto& s : beta) s = random_unit(rng, c);
        CHECK(iota_differential_check(c, w, beta));
    }
    CHECK(iota_differential_check(c, vec({1, 0, 0}), vec({2, -1, 3, 5, 7})));
    CHECK(iota_differential_check(c, vec({1, 2, 3}), Vector(5, Scalar(0))));
}

TEST_CASE("configurations over a prime field") {
    Matrix a = Matrix::from_rows({{1, 0, 0, 1, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}}).mod(1000003);
    Configuration c(a);
    CHECK(c.modulus() == 1000003);
    CHECK(psi_det(c) == psi_basis_expansion(c));
    Rng rng(11);
    TorusPoint p = sample_torus_point(c, rng);
    TorusPoint back = duality_inverse(dual_config(c), duality_map(c, p));
    CHECK(back.v == p.v);
}
