#include <doctest.h>

#include "lgvx/poly.hpp"
#include "lgvx/selftest.hpp"

#include "support.hpp"

using namespace lgvx;
using testsupport::random_poly;

namespace {

const std::vector<std::string> XY{"x", "y"};

WeightPoly P(const std::string& text) { return WeightPoly::parse(XY, text); }

} // namespace

TEST_SUITE_BEGIN("poly");

TEST_CASE("addition drops cancelled and merges like terms") {
    CHECK(P("x + y") + P("-y") == P("x"));
    CHECK(WeightPoly::zero(XY) + P("13*x^2*y^4 + x") == P("13*x^2*y^4 + x"));
    CHECK(P("2*x*y") + P("3*x*y") == P("5*x*y"));
}

TEST_CASE("multiplication adds exponent vectors") {
    CHECK(P("x") * P("y^3") == P("x*y^3"));
    CHECK(P("13*x^2*y^4 + x") * WeightPoly::one(XY) == P("13*x^2*y^4 + x"));
    CHECK(P("x + y") * P("x + y") == P("x^2 + 2*x*y + y^2"));
    CHECK(P("x + y").pow(2) == P("x^2 + 2*x*y + y^2"));
}

TEST_CASE("evaluation is exact") {
    CHECK(P("x*y^3").eval({{"x", 1}, {"y", 1}}) == 1);
    CHECK(P("40*x^5*y^5").eval({{"x", 1}, {"y", 1}}) == 40);
    CHECK(P("x - y").eval({{"x", 7}, {"y", 3}}) == 4);
    CHECK_THROWS_AS(P("x*y").eval({{"x", 1}}), input_error);
}

TEST_CASE("ring axioms on random polynomials") {
    Rng rng(2024);
    for (int k = 0; k < 60; ++k) {
        WeightPoly a = random_poly(rng, XY);
        WeightPoly b = random_poly(rng, XY);
        WeightPoly c = random_poly(rng, XY);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == WeightPoly::zero(XY));
    }
}

TEST_CASE("variable-list mismatch is rejected") {
    WeightPoly a = P("x");
    WeightPoly b = WeightPoly::variable({"x", "z"}, "z");
    CHECK_THROWS_AS(a + b, input_error);
    CHECK_THROWS_AS(a * b, input_error);
}

TEST_CASE("canonical printing") {
    CHECK(P("x").str() == "x");
    CHECK(WeightPoly::zero(XY).str() == "0");
    CHECK(WeightPoly::constant(XY, -1).str() == "-1");
    CHECK(P("-3*x^4*y^2").str() == "-3*x^4*y^2");
    CHECK(P("x + 13*x^2*y^4").str() == "13*x^2*y^4 + x");
    CHECK(P("x - y").compact_str() == "x-y");
    CHECK(P("-x + y").str() == "-x + y");
    // round trip
    Rng rng(7);
    for (int k = 0; k < 40; ++k) {
        WeightPoly p = random_poly(rng, XY);
        CHECK(WeightPoly::parse(XY, p.str()) == p);
        CHECK(WeightPoly::parse(XY, p.compact_str()) == p);
    }
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(P("q"), parse_error);
    CHECK_THROWS_AS(P("3*"), parse_error);
    CHECK_THROWS_AS(P(""), parse_error);
    CHECK_THROWS_AS(P("x +"), parse_error);
    CHECK_THROWS_AS(P("2 3"), parse_error);
}

TEST_CASE("substitution and variable removal") {
    WeightPoly p = WeightPoly::parse({"x", "y", "z"}, "x*y + 2*z + 3*x*z^2");
    CHECK(p.substitute_zero("z") == WeightPoly::parse({"x", "y", "z"}, "x*y"));
    CHECK(p.substitute_zero("z").drop_variable("z") == P("x*y"));
    CHECK_THROWS_AS(p.drop_variable("z"), input_error);
}

TEST_CASE("exact division") {
    Rng rng(11);
    for (int k = 0; k < 40; ++k) {
        WeightPoly a = random_poly(rng, XY);
        WeightPoly b = random_poly(rng, XY);
        if (b.is_zero()) continue;
        CHECK(divide_exact(a * b, b) == a);
    }
    CHECK_THROWS_AS(divide_exact(P("x + 1"), P("y")), internal_error);
}

TEST_CASE("determinant of the two-pair worked example") {
    PolyMatrix m(XY, 2);
    m.set(0, 0, P("-4*x*y^3"));
    m.set(0, 1, P("13*x^2*y^4"));
    m.set(1, 0, P("4*x^3*y"));
    m.set(1, 1, P("-3*x^4*y^2"));
    CHECK(det(m) == P("-40*x^5*y^5"));
}

TEST_CASE("determinant basics") {
    CHECK(det(PolyMatrix::identity(XY, 3)) == WeightPoly::one(XY));
    CHECK(det(PolyMatrix(XY, 0)) == WeightPoly::one(XY));
    PolyMatrix m(XY, 2);
    m.set(0, 0, WeightPoly::constant(XY, 1));
    m.set(0, 1, WeightPoly::constant(XY, 3));
    m.set(1, 0, WeightPoly::constant(XY, 3));
    m.set(1, 1, WeightPoly::constant(XY, 13));
    CHECK(det(m) == WeightPoly::constant(XY, 4));
}

TEST_CASE("determinant is alternating in the rows") {
    Rng rng(5);
    for (int k = 0; k < 25; ++k) {
        PolyMatrix m(XY, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.set(i, j, random_poly(rng, XY, 2, 2, 5));
        int r1 = rng.range(0, 2);
        int r2 = rng.range(0, 2);
        if (r1 == r2) continue;
        PolyMatrix swapped(XY, 3);
        for (int i = 0; i < 3; ++i) {
            int src = i == r1 ? r2 : (i == r2 ? r1 : i);
            for (int j = 0; j < 3; ++j) swapped.set(i, j, m.at(src, j));
        }
        CHECK(det(swapped) == -det(m));
    }
}

TEST_CASE("cofactor and fraction-free elimination agree") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        int n = rng.range(1, 6);
        PolyMatrix m(XY, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.set(i, j, WeightPoly::constant(XY, rng.range(-9, 9)));
        CHECK(det_cofactor(m) == det_bareiss(m));
    }
    for (int trial = 0; trial < 12; ++trial) {
        PolyMatrix m(XY, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.set(i, j, random_poly(rng, XY, 2, 2, 4));
        CHECK(det_cofactor(m) == det_bareiss(m));
    }
}

TEST_SUITE_END();
