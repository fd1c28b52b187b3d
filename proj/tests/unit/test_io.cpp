#include "doctest.h"

#include "configres/errors.hpp"
#include "configres/io.hpp"

using namespace configres;

namespace {

ErrorCode parse_failure(const std::string& text, InputFormat format) {
    try {
        parse_input(text, format);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidArgument;
}

Configuration fig1() { return Configuration(Matrix::from_rows({{1, 0, 0, 1, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}})); }

}  // namespace

TEST_CASE("format detection") {
    CHECK(detect_format("a/b/fig1.graph") == InputFormat::Graph);
    CHECK(detect_format("x.mat.json") == InputFormat::Matrix);
    CHECK(detect_format("x.bases.json") == InputFormat::Bases);
    CHECK_THROWS_AS(detect_format("x.json"), Error);
    CHECK(parse_format_name("bases") == InputFormat::Bases);
}

TEST_CASE("graph input matches the matrix input") {
    LoadedInput g = parse_input("# fig 1\n1 3\n1 2\n3 4\n2 3\n4 1\n", InputFormat::Graph);
    LoadedInput a = parse_input(R"({"rows": [["1","0","0","1","1"],["0","1","0","1","0"],["0","0","1","0","1"]]})",
                                InputFormat::Matrix);
    CHECK(g.matroid == a.matroid);
    REQUIRE(g.config);
    CHECK(psi_basis_expansion(*g.config) == psi_basis_expansion(*a.config));
    CHECK(g.edges.size() == 5);
}

TEST_CASE("matrix input over F_p and rationals") {
    Matrix m = parse_matrix_json(R"({"rows": [["1/2", 3], ["0", "-4/6"]]})");
    CHECK(m(0, 0) == Scalar::rational(1, 2));
    CHECK(m(0, 1) == Scalar(3));
    CHECK(m(1, 1) == Scalar::rational(-2, 3));
    Matrix f = parse_matrix_json(R"({"rows": [["1","6"]], "field": "Fp", "p": 5})");
    CHECK(f.modulus() == 5);
    CHECK(f(0, 1) == Scalar::fp(1, 5));
}

TEST_CASE("bases input") {
    Matroid m = parse_bases_json(R"({"n": 3, "bases": ["12", [1,3], "23"]})");
    CHECK(m == Matroid::uniform(2, 3));
    LoadedInput in = parse_input(R"({"n": 3, "bases": ["12","13","23"]})", InputFormat::Bases);
    CHECK_FALSE(in.config.has_value());
}

TEST_CASE("parse errors") {
    CHECK(parse_failure("1 2 3\n", InputFormat::Graph) == ErrorCode::ParseError);
    CHECK(parse_failure("# nothing\n", InputFormat::Graph) == ErrorCode::ParseError);
    CHECK(parse_failure("{\"rows\": [[\"1\",\"x\"]]}", InputFormat::Matrix) == ErrorCode::ParseError);
    CHECK(parse_failure("{\"rows\": [[\"1\"],[\"1\",\"2\"]]}", InputFormat::Matrix) == ErrorCode::ParseError);
    CHECK(parse_failure("{\"rows\": [[\"1\"]], \"field\": \"Fp\", \"p\": 4}", InputFormat::Matrix) == ErrorCode::ParseError);
    CHECK(parse_failure("{not json", InputFormat::Bases) == ErrorCode::ParseError);
    CHECK(parse_failure("{\"bases\": []}", InputFormat::Bases) == ErrorCode::ParseError);
    CHECK(parse_failure("1 2\n3 4\n", InputFormat::Graph) == ErrorCode::DisconnectedGraph);
}

TEST_CASE("fan JSON round trip") {
    for (const Matroid& m : {Matroid::uniform(2, 3), fig1().matroid()}) {
        for (const Fan& fan : {delta_tilde_fan(m), delta_fan(m), bergman_fan(m)}) {
            Json j = to_json(fan);
            Fan back = fan_from_json(Json::parse(j.dump()));
            CHECK(back.rays == fan.rays);
            CHECK(back.cones == fan.cones);
            CHECK(back.labels == fan.labels);
            CHECK(to_json(back) == j);
        }
    }
    Json bad = to_json(delta_tilde_fan(Matroid::uniform(2, 3)));
    bad["cones"][0][0] = 99;
    CHECK_THROWS_AS(fan_from_json(bad), Error);
}

TEST_CASE("polynomial JSON round trip") {
    MultiPoly psi = psi_basis_expansion(fig1());
    CHECK(poly_from_json(Json::parse(to_json(psi).dump())) == psi);
    Configuration u(Matrix::from_rows({{1, 0, Scalar::rational(1, 2)}, {0, 1, Scalar::rational(-3, 7)}}));
    MultiPoly q = psi_basis_expansion(u);
    CHECK(poly_from_json(to_json(q)) == q);
    MultiPoly qp = q.mod(11);
    CHECK(to_json(qp)["p"] == 11);
    CHECK(poly_from_json(to_json(qp)) == qp);
}

TEST_CASE("certificate JSON round trip") {
    for (const Certificate& c : {lead_term_certificate(fig1()), fedder_witness(fig1(), 5), linkage_certificate(fig1())}) {
        Json j = to_json(c);
        CHECK(j["verdict"] == "pass");
        CHECK(certificate_from_json(Json::parse(j.dump())) == c);
    }
    Json j = to_json(fedder_witness(fig1(), 5));
    CHECK(j["kind"] == "FPurity");
    CHECK(j["order"] == "x-lex,u-lex");
    CHECK(j["witness"] == "x1^4*x2^4*x3^4*u1^4*u2^4*u3^4");
    CHECK(j["p"] == 5);

    Certificate permuted = lead_term_certificate(fig1());
    permuted.permutation = {2, 0, 1, 3, 4};
    CHECK(to_json(permuted)["permutation"][0] == 3);
    CHECK(certificate_from_json(to_json(permuted)) == permuted);
}

TEST_CASE("Betti JSON round trip") {
    for (int r = 1; r <= 5; ++r) {
        BettiTable t = resolution_betti(r + 3, r);
        BettiTable back = betti_from_json(Json::parse(to_json(t).dump()));
        CHECK(back.modules == t.modules);
    }
}
