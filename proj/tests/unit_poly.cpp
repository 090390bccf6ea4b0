#include <doctest.h>

#include <logdiv/poly.hpp>

#include <stdexcept>

using namespace logdiv;

TEST_CASE("parsing sums of terms") {
    Poly f = parse_poly("x0*x1*x2", 3);
    CHECK(f.term_count() == 1);
    CHECK(f.degree() == 3);
    CHECK(f == parse_poly("x*y*z", 3));

    Poly g = parse_poly("1/2*x0^2 - x1", 2);
    CHECK(g.term_count() == 2);
    Monomial x0sq = Monomial::var(0, 2, 2);
    CHECK(g.coeff(x0sq) == Rational(1, 2));

    CHECK(parse_poly("x0^5*x2 + x0^3*x1^3 + x1^5*x2", 3) ==
          parse_poly("x^5*z + x^3*y^3 + y^5*z", 3));

    CHECK_THROWS_AS(parse_poly("(x + y)*z", 3), ParseError);
    CHECK_THROWS_AS(parse_poly("q0 + x1", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("x3", 3), ParseError);
    CHECK_THROWS_AS(parse_poly("", 2), ParseError);
}

TEST_CASE("render round-trips") {
    for (const char* text : {"x*y*z", "1/2*x^2 - y", "x^5*z + x^3*y^3 + y^5*z", "-x + 2*z"}) {
        Poly f = parse_poly(text, 3);
        CHECK(parse_poly(to_string(f), 3) == f);
    }
    CHECK(to_string(Poly::zero(2)) == "0");
}

TEST_CASE("partial derivatives") {
    Poly f = parse_poly("z^2 - x*y", 3);
    CHECK(partial_derivative(f, 2) == parse_poly("2*z", 3));
    CHECK(partial_derivative(Poly::constant(2, Rational(7)), 0).is_zero());

    Poly g = parse_poly("x^5 + x^3*y^3 + y^5", 2);
    CHECK(partial_derivative(g, 0) == parse_poly("5*x^4 + 3*x^2*y^3", 2));
    CHECK_THROWS_AS(partial_derivative(g, 2), std::invalid_argument);

    // mixed partials commute
    Poly h = parse_poly("x^3*y^2 - 4*x*y*z + z^3", 3);
    CHECK(partial_derivative(partial_derivative(h, 0), 2) ==
          partial_derivative(partial_derivative(h, 2), 0));
}

TEST_CASE("quasi-homogeneity and the weighted Euler identity") {
    Poly sextic = parse_poly("x^5*z + x^3*y^3 + y^5*z", 3);
    CHECK(is_quasihomogeneous(sextic, WeightVector({1, 1, 1}, 6)));
    CHECK(is_quasihomogeneous(parse_poly("x", 1), WeightVector({1}, 1)));

    Poly g = parse_poly("x^2 + y^3", 2);
    CHECK(is_quasihomogeneous(g, WeightVector({3, 2}, 6)));
    CHECK_FALSE(is_quasihomogeneous(g, WeightVector({1, 1}, 2)));

    CHECK(euler_pairing_check(parse_poly("x*y*z", 3), WeightVector({1, 1, 1}, 3)));
    CHECK(euler_pairing_check(g, WeightVector({3, 2}, 6)));
    CHECK_FALSE(euler_pairing_check(g, WeightVector({1, 1}, 2)));

    CHECK_THROWS_AS(WeightVector({0, 1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(is_quasihomogeneous(Poly::zero(2), WeightVector({1, 1}, 1)),
                    std::invalid_argument);
}

TEST_CASE("ring operations stay exact") {
    Poly f = parse_poly("1/3*x^2 - y", 2);
    Poly g = parse_poly("3*x + 6*y", 2);
    CHECK(f * g == parse_poly("x^3 + 2*x^2*y - 3*x*y - 6*y^2", 2));
    CHECK((f + g) - g == f);
    CHECK((f * Rational(0)).is_zero());
    CHECK(-f + f == Poly::zero(2));
}

TEST_CASE("evaluation, dehomogenization, translation") {
    Poly f = parse_poly("x^3 - y^2*z", 3);
    CHECK(f.eval({Rational(0), Rational(0), Rational(1)}) == 0);
    CHECK(f.eval({Rational(1), Rational(1), Rational(1)}) == 0);
    CHECK(f.eval({Rational(2), Rational(1), Rational(1)}) == Rational(7));

    CHECK(f.dehomogenize(2) == parse_poly("x^3 - y^2", 2));
    CHECK(parse_poly("x*y*z", 3).dehomogenize(2) == parse_poly("x*y", 2));

    Poly g = parse_poly("x^2 - y", 2);
    Poly shifted = g.translate({Rational(1), Rational(1)});
    CHECK(shifted == parse_poly("x^2 + 2*x - y", 2));
    CHECK(shifted.eval({Rational(0), Rational(0)}) == 0);

    Poly sub = g.substitute({parse_poly("y", 2), parse_poly("x", 2)});
    CHECK(sub == parse_poly("y^2 - x", 2));
}

TEST_CASE("homogeneity and degree bookkeeping") {
    CHECK(parse_poly("x*y*z", 3).is_homogeneous());
    CHECK_FALSE(parse_poly("x^2 + y", 2).is_homogeneous());
    CHECK(Poly::zero(2).degree() == -1);
    CHECK(Poly::constant(2, Rational(5)).degree() == 0);
}
