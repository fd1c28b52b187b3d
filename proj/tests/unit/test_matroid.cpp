#include <random>

#include "doctest.h"

#include "configres/errors.hpp"
#include "configres/matroid.hpp"

using namespace configres;

namespace {

const std::vector<std::pair<int, int>> kFig1Edges{{1, 3}, {1, 2}, {3, 4}, {2, 3}, {4, 1}};

Matrix fig1_matrix() { return Matrix::from_rows({{1, 0, 0, 1, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}}); }

Subset S(const char* label, std::size_t n = 5) { return parse_subset(label, n); }

// Whitney's rank generating sum, an oracle independent of the flat lattice.
ClassPoly whitney_char_poly(const Matroid& m) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(m.rank()) + 1, 0);
    for (Subset s = 0;; ++s) {
        c[static_cast<std::size_t>(m.rank() - rank_of(m, s))] += cardinality(s) % 2 ? -1 : 1;
        if (s == m.ground()) break;
    }
    return ClassPoly(c);
}

std::vector<Matroid> sample_matroids() {
    std::vector<Matroid> out{matroid_from_graph(kFig1Edges), Matroid::uniform(2, 3), Matroid::uniform(1, 2),
                             Matroid::uniform(3, 4), Matroid::uniform(2, 5), Matroid::uniform(3, 6),
                             Matroid::from_bases(2, {0b11})};
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-1, 1);
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t r = 2 + trial % 2, n = r + 2 + trial % 3;
        Matrix a(r, n);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = Scalar(d(rng));
        if (matrix_rank(a) != r) continue;
        out.push_back(matroid_from_matrix(a));
    }
    return out;
}

}  // namespace

TEST_CASE("subset labels") {
    CHECK(subset_label(S("124"), 5) == "124");
    CHECK(subset_label(0, 5) == "∅");
    CHECK(subset_label(full_set(5), 5) == "E");
    CHECK(subset_label(element(2) | element(11), 12) == "2,11");
    CHECK(parse_subset("2,11", 12) == (element(2) | element(11)));
    CHECK_THROWS_AS(parse_subset("17", 5), Error);
}

TEST_CASE("matroid from matrix") {
    Matroid m = matroid_from_matrix(fig1_matrix());
    CHECK(m.rank() == 3);
    CHECK(m.bases().size() == 8);
    CHECK_FALSE(m.is_basis(S("124")));
    CHECK_FALSE(m.is_basis(S("135")));
    CHECK(m.is_basis(S("123")));
    CHECK(matroid_from_matrix(Matrix::from_rows({{1, 1}})) == Matroid::uniform(1, 2));
    CHECK(matroid_from_matrix(Matrix::from_rows({{1, 2, 3}, {1, 5, 7}})) == Matroid::uniform(2, 3));
    try {
        (void)matroid_from_matrix(Matrix::identity(2));
        FAIL("expected Degenerate");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Degenerate);
    }
    try {
        (void)matroid_from_matrix(Matrix::from_rows({{1, 1, 0}, {2, 2, 0}}));
        FAIL("expected RankDeficient");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::RankDeficient);
    }
}

TEST_CASE("matroid from graph") {
    Matroid g = matroid_from_graph(kFig1Edges);
    CHECK(g == matroid_from_matrix(fig1_matrix()));
    CHECK(g == matroid_from_matrix(graph_incidence_matrix(kFig1Edges)));
    CHECK(matroid_from_graph({{1, 2}, {2, 3}, {3, 1}}) == Matroid::uniform(2, 3));
    CHECK(matroid_from_graph({{1, 2}, {1, 2}}) == Matroid::uniform(1, 2));
    try {
        (void)matroid_from_graph({{1, 2}, {3, 4}});
        FAIL("expected DisconnectedGraph");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DisconnectedGraph);
    }
}

TEST_CASE("invalid basis lists are rejected") {
    CHECK_THROWS_AS(Matroid::from_bases(4, {0b0011, 0b1100}), Error);  // exchange fails
    CHECK_THROWS_AS(Matroid::from_bases(3, {0b011, 0b001}), Error);
    CHECK_THROWS_AS(Matroid::from_bases(3, {0b011, 0b011}), Error);
}

TEST_CASE("rank and closure") {
    Matroid m = matroid_from_graph(kFig1Edges);
    CHECK(rank_of(m, S("35")) == 2);
    CHECK(rank_of(m, 0) == 0);
    CHECK(rank_of(m, m.ground()) == 3);
    CHECK(closure(m, S("12")) == S("124"));
    CHECK(closure(m, m.ground()) == m.ground());
    CHECK(closure(Matroid::uniform(2, 3), element(1)) == element(1));
}

TEST_CASE("flats") {
    Matroid m = matroid_from_graph(kFig1Edges);
    FlatLattice lat = flats(m);
    std::vector<Subset> proper = lat.proper();
    CHECK(proper.size() == 12);
    for (const char* f : {"1", "2", "3", "4", "5", "124", "135", "23", "25", "34", "45"})
        CHECK(std::find(proper.begin(), proper.end(), S(f)) != proper.end());
    CHECK(std::find(proper.begin(), proper.end(), Subset{0}) != proper.end());

    std::vector<Subset> dual_proper = flats(dual(m)).proper();
    std::vector<Subset> expected{0, S("1"), S("24"), S("35")};
    std::sort(dual_proper.begin(), dual_proper.end());
    std::sort(expected.begin(), expected.end());
    CHECK(dual_proper == expected);

    CHECK(flats(Matroid::uniform(1, 2)).flats == std::vector<Subset>{0, 0b11});
}

TEST_CASE("duality and minors") {
    Matroid m = matroid_from_graph(kFig1Edges);
    CHECK(dual(Matroid::uniform(2, 3)) == Matroid::uniform(1, 3));
    CHECK(dual(dual(m)) == m);
    CHECK(dual(m).rank() == 2);

    Matroid del = delete_elements(m, S("1"));
    CHECK(del.size() == 4);
    CHECK(del.rank() == 3);
    CHECK(contract(m, 0) == m);
    CHECK(contract(Matroid::uniform(2, 3), S("1", 3)) == Matroid::uniform(1, 2));
    try {
        (void)delete_elements(m, m.ground());
        FAIL("expected EmptyResult");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptyResult);
    }
}

TEST_CASE("connectivity and roundness") {
    Matroid m = matroid_from_graph(kFig1Edges);
    CHECK(is_connected(m));
    CHECK_FALSE(is_connected(Matroid::from_bases(2, {0b11})));
    CHECK(is_connected(Matroid::uniform(2, 3)));
    CHECK(is_round(Matroid::uniform(2, 3)));
    CHECK_FALSE(is_round(m));
    CHECK_FALSE(is_round(Matroid::uniform(3, 4)));
    CHECK(is_round(Matroid::uniform(2, 5)));
}

TEST_CASE("characteristic polynomials") {
    CHECK(char_poly(Matroid::uniform(2, 3)) == ClassPoly({2, -3, 1}));
    CHECK(reduced_char_poly(Matroid::uniform(2, 3)) == ClassPoly({-2, 1}));
    CHECK(char_poly(Matroid::uniform(1, 2)) == ClassPoly({-1, 1}));
    CHECK(reduced_char_poly(Matroid::uniform(1, 2)) == ClassPoly({1}));
    CHECK(char_poly(Matroid::uniform(1, 1)) == ClassPoly({-1, 1}));
    try {
        (void)char_poly(Matroid::uniform(0, 2));
        FAIL("expected HasLoops");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::HasLoops);
    }
}

TEST_CASE("matroid invariants over a sample family") {
    for (const Matroid& m : sample_matroids()) {
        CAPTURE(m.size());
        const Matroid d = dual(m);
        for (Subset s = 0;; ++s) {
            const Subset rest = m.ground() & ~s;
            CHECK(rank_of(d, rest) == cardinality(rest) - m.rank() + rank_of(m, s));
            const Subset c = closure(m, s);
            CHECK(is_subset(s, c));
            CHECK(closure(m, c) == c);
            if (s == m.ground()) break;
        }
        FlatLattice lat = flats(m);
        std::size_t fixed = 0;
        for (Subset s = 0;; ++s) {
            if (closure(m, s) == s) {
                ++fixed;
                CHECK(lat.contains(s));
            }
            if (s == m.ground()) break;
        }
        CHECK(fixed == lat.size());
        for (std::size_t i = 0; i < lat.size(); ++i)
            for (std::size_t j = 0; j < lat.size(); ++j) CHECK(lat.contains(lat.flats[i] & lat.flats[j]));
        if (loops(m) == 0 && is_round(m)) CHECK(is_connected(m));
        if (loops(m) == 0) CHECK(char_poly(m) == whitney_char_poly(m));
    }
}
