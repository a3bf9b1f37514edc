#include <doctest.h>

#include <random>

#include "graphpoly/limits.hpp"
#include "graphpoly/mpoly.hpp"
#include "oracles.hpp"

using namespace graphpoly;
using oracle::poly_x;

TEST_CASE("arith: ring operations on small examples") {
    CHECK((X() + 1L) * (X() - 1L) == poly_x({-1, 0, 1}));
    const MPoly p = X() * X() + X() * Y() + Z();
    CHECK(p + MPoly() == p);
    CHECK(p * MPoly(1L) == p);
    CHECK((p - p).is_zero());
    CHECK((p - p).term_count() == 0);
}

TEST_CASE("rendering follows ascending term order") {
    CHECK(poly_x({1, 4, 2}).to_string() == "1 + 4x + 2x^2");
    CHECK((X() * X() + X() * Y() + Z()).to_string() == "x^2 + x*y + z");
    CHECK(poly_x({0, -1, 0, 1}).to_string() == "-x + x^3");
    CHECK(MPoly().to_string() == "0");
    CHECK(MPoly(-7L).to_string() == "-7");
    CHECK((MPoly(3L) * X() * X() * Y()).to_string() == "3x^2*y");
}

TEST_CASE("json rendering lists [coeff, [a, b, c]]") {
    const MPoly p = X() * X() + X() * Y() + Z();
    CHECK(p.to_json().dump() == "[[1,[2,0,0]],[1,[1,1,0]],[1,[0,0,1]]]");
    CHECK((X() * W()).to_json().dump() == "[[1,[1,0,0,1]]]");
    const MPoly big = MPoly(Integer("123456789012345678901234567890"));
    CHECK(big.to_json().dump() == "[[\"123456789012345678901234567890\",[0,0,0]]]");
}

TEST_CASE("eval") {
    CHECK(poly_x({0, -1, 1}).eval({{Var::x, Rational(1)}}) == 0);
    const MPoly c4 = (X() - 2L) * X() * X() * (X() + 2L);
    CHECK(c4.eval({{Var::x, Rational(1)}}) == -3);
    CHECK(poly_x({0, -1, 0, 1}).eval({{Var::x, Rational(2)}}) == 6);
    CHECK(X().eval({{Var::x, Rational(1, 2)}}) == Rational(1, 2));
    CHECK_THROWS_AS((X() * Y()).eval({{Var::x, Rational(1)}}), std::invalid_argument);
}

TEST_CASE("exact_div") {
    CHECK(exact_div(poly_x({-1, 0, 1}), X() - 1L) == X() + 1L);
    const MPoly xm1 = X() - 1L;
    const MPoly ym1 = Y() - 1L;
    const MPoly num = xm1.pow(2) * ym1.pow(2) + xm1 * ym1.pow(2);
    CHECK(exact_div(num, xm1 * ym1.pow(2)) == X());
    CHECK_THROWS_AS(exact_div(poly_x({1, 0, 1}), X() - 1L), IdentityViolation);
    CHECK_THROWS_AS(exact_div(X(), MPoly()), std::invalid_argument);
    CHECK_THROWS_AS(exact_div(X(), MPoly(2L)), IdentityViolation);
}

TEST_CASE("falling factorials") {
    CHECK(falling_factorial(0) == MPoly(1L));
    CHECK(falling_factorial(3) == poly_x({0, 2, -3, 1}));
    // frozen from the evaluation oracle below
    CHECK(falling_factorial(4) == poly_x({0, -6, 11, -6, 1}));
    for (long k = -3; k <= 8; ++k) {
        CHECK(falling_factorial(4).eval({{Var::x, Rational(k)}}) == k * (k - 1) * (k - 2) * (k - 3));
    }
}

TEST_CASE("assemble_from_falling") {
    CHECK(assemble_from_falling({{0, 3, 1}}) == poly_x({0, -1, 0, 1}));
    CHECK(assemble_from_falling({{1, 3, 1}}) == poly_x({0, 0, 0, 1}));
    CHECK(assemble_from_falling({{1}}) == X());
    CHECK(assemble_from_falling({}).is_zero());
}

namespace {

MPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> terms(0, 4), exp(0, 2), coeff(-5, 5);
    MPoly p;
    for (int t = terms(rng); t > 0; --t) {
        Exponents e{static_cast<std::uint32_t>(exp(rng)), static_cast<std::uint32_t>(exp(rng)),
                    static_cast<std::uint32_t>(exp(rng)), 0};
        p += MPoly::monomial(Integer(coeff(rng)), e);
    }
    return p;
}

}  // namespace

TEST_CASE("property: ring axioms and exact division on random polynomials") {
    std::mt19937 rng(20261018);
    for (int trial = 0; trial < 300; ++trial) {
        const MPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
        const MPoly ab = a * b;
        for (const auto& [e, coeff] : ab.terms()) CHECK(coeff != 0);
    }
}

TEST_CASE("property: falling assembly matches integer falling-factorial sums") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> val(0, 20), len(0, 6);
    for (int trial = 0; trial < 100; ++trial) {
        FallingCoeffs b;
        for (int i = len(rng); i > 0; --i) b.values.push_back(val(rng));
        const MPoly p = assemble_from_falling(b);
        for (long k = 0; k <= static_cast<long>(b.size()); ++k) {
            CHECK(p.eval({{Var::x, Rational(k)}}) == Rational(oracle::falling_sum(b, k)));
        }
    }
}

TEST_CASE("substitute replaces mapped variables only") {
    const MPoly p = X() * X() + X() * Y() + Z();
    CHECK(p.substitute({{Var::z, MPoly()}}) == X() * X() + X() * Y());
    CHECK(p.substitute({{Var::x, Y()}, {Var::y, X()}}) == Y() * Y() + X() * Y() + Z());
    CHECK(p.substitute({{Var::x, MPoly(2L)}, {Var::y, MPoly(3L)}, {Var::z, MPoly(5L)}}) == MPoly(15L));
}
