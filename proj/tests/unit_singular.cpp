#include <doctest.h>

#include <logdiv/poly.hpp>
#include <logdiv/singular.hpp>

#include <stdexcept>
#include <string>

using namespace logdiv;

namespace {

GermSpec germ(const char* text, int nvars) { return GermSpec{parse_poly(text, nvars)}; }

} // namespace

TEST_CASE("milnor numbers of classical germs") {
    CHECK(milnor_number(germ("x*y", 2)).value == 1);
    CHECK(milnor_number(germ("x^3 - y^2", 2)).value == 2);
    CHECK(milnor_number(germ("x^5 + y^5", 2)).value == 16);
    CHECK(milnor_number(germ("z^2 - x*y", 3)).value == 1);

    LocalNumber bad = milnor_number(germ("x^2*y", 2));
    CHECK(bad.status == LocalStatus::not_isolated);
    CHECK(bad.note.find("positive-dimensional") != std::string::npos);
}

TEST_CASE("tjurina numbers and the quasi-homogeneous gap") {
    CHECK(tjurina_number(germ("x^3 - y^2", 2)).value == 2);
    CHECK(tjurina_number(germ("x^5 + y^5", 2)).value == 16);

    GermSpec sextic = germ("x^5 + x^3*y^3 + y^5", 2);
    LocalNumber mu = milnor_number(sextic);
    LocalNumber tau = tjurina_number(sextic);
    REQUIRE(mu.status == LocalStatus::ok);
    REQUIRE(tau.status == LocalStatus::ok);
    CHECK(mu.value == 16);
    CHECK(tau.value == 15);
    CHECK(mu.value > tau.value);
}

TEST_CASE("quasi-homogeneity test") {
    CHECK(quasihomogeneity_test(germ("x^3 - y^2", 2)).status ==
          QhStatus::quasihomogeneous);
    CHECK(quasihomogeneity_test(germ("x^5 + x^3*y^3 + y^5", 2)).status ==
          QhStatus::not_quasihomogeneous);
    CHECK(quasihomogeneity_test(germ("x", 2)).status == QhStatus::not_singular);
    CHECK(quasihomogeneity_test(germ("x^2*y", 2)).status == QhStatus::inconclusive);
    CHECK_THROWS_AS(milnor_number(germ("x + 1", 2)), std::invalid_argument);
}

TEST_CASE("projective germ extraction") {
    Poly cubic = parse_poly("x^3 - y^2*z", 3);
    GermSpec g = germ_at(cubic, {Rational(0), Rational(0), Rational(1)});
    CHECK(g.g == parse_poly("x^3 - y^2", 2));
    // scaling the point does not change the germ
    CHECK(germ_at(cubic, {Rational(0), Rational(0), Rational(2)}).g == g.g);
    CHECK_THROWS_AS(germ_at(cubic, {Rational(1), Rational(1), Rational(4)}),
                    std::invalid_argument);
}

TEST_CASE("triviality membership and the zero certificate") {
    Poly cone = parse_poly("z^2 - x*y", 3);
    CHECK_FALSE(triviality_membership(cone, {1, 2}, {0}));
    CHECK(triviality_membership(parse_poly("x^2", 2), {0}, {1}));
    CHECK(triviality_membership(parse_poly("x^2*y + x*y^2", 3), {0, 1}, {2}));

    CHECK(triviality_zero_certificate(cone));
    CHECK(triviality_zero_certificate(parse_poly("x*y", 2)));
    CHECK_FALSE(triviality_zero_certificate(parse_poly("x^2*y + x*y^2", 3)));
}

TEST_CASE("triviality index lower bounds") {
    Poly cone = parse_poly("z^2 - x*y", 3);
    CHECK(triviality_index_lower_bound(cone, {Rational(0), Rational(0), Rational(0)}) == 0);
    CHECK(triviality_index_lower_bound(cone, {Rational(1), Rational(4), Rational(2)}) == 2);
    CHECK(triviality_index_lower_bound(parse_poly("x*y", 3),
                                       {Rational(0), Rational(1), Rational(0)}) == 2);
    CHECK_THROWS_AS(
        triviality_index_lower_bound(cone, {Rational(1), Rational(1), Rational(4)}),
        std::invalid_argument);
}

TEST_CASE("transversality of hyperplanes to divisor strata") {
    Poly two_planes = parse_poly("x*y", 3);
    std::vector<Rational> p = {Rational(0), Rational(1), Rational(0)};
    CHECK(transversality_check(two_planes, p, parse_poly("z", 3)).verdict ==
          Transversality::transversal);
    CHECK(transversality_check(two_planes, p, parse_poly("x", 3)).verdict ==
          Transversality::not_transversal);

    // triviality index 0 at the cone point: nothing can be transversal
    Poly cone = parse_poly("z^2 - x*y", 3);
    std::vector<Rational> origin = {Rational(0), Rational(0), Rational(0)};
    CHECK(transversality_check(cone, origin, parse_poly("z", 3)).verdict ==
          Transversality::not_transversal);

    CHECK_THROWS_AS(transversality_check(two_planes, p, parse_poly("y", 3)),
                    std::invalid_argument);  // p not on H
}

TEST_CASE("restriction to a hyperplane") {
    Poly f = parse_poly("x*y*z", 3);
    Poly H = parse_poly("x + 2*y + 5*z", 3);
    CHECK(restrict_to_hyperplane(f, H, 0) == parse_poly("-2*x^2*y - 5*x*y^2", 2));
    CHECK_THROWS_AS(restrict_to_hyperplane(f, parse_poly("y", 3), 0),
                    std::invalid_argument);
}

TEST_CASE("schematic bertini comparison") {
    Poly f = parse_poly("x*y*z", 3);
    Poly H = parse_poly("x + 2*y + 5*z", 3);
    CHECK(bertini_schematic_check(f, H, 0).status == BertiniStatus::equal);

    // smooth divisor: both singular-locus ideals are the unit ideal
    CHECK(bertini_schematic_check(parse_poly("x", 3), H, 1).status ==
          BertiniStatus::equal);

    // restriction drops degree: degenerate sample
    CHECK(bertini_schematic_check(parse_poly("x", 3), parse_poly("x", 3), 0).status ==
          BertiniStatus::degenerate);
}

TEST_CASE("large quasi-homogeneous germ through the global fast path") {
    GermSpec big = germ("x^70 + y^70", 2);
    LocalNumber mu = milnor_number(big);
    REQUIRE(mu.status == LocalStatus::ok);
    CHECK(mu.value == 69 * 69);
}
