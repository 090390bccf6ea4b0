#include <doctest.h>

#include <logdiv/groebner.hpp>
#include <logdiv/logderiv.hpp>
#include <logdiv/poly.hpp>

#include <algorithm>
#include <stdexcept>

using namespace logdiv;

namespace {

Derivation deriv(std::initializer_list<const char*> coeffs, int nvars) {
    Derivation theta;
    for (const char* c : coeffs) theta.coefficients.push_back(parse_poly(c, nvars));
    return theta;
}

DivisorSpec divisor(int n, const char* f) {
    DivisorSpec D;
    D.n = n;
    D.f = parse_poly(f, n + 1);
    return D;
}

std::vector<int> degrees_of(const std::vector<Derivation>& gens) {
    std::vector<int> out;
    for (const Derivation& g : gens) out.push_back(g.degree());
    std::sort(out.begin(), out.end());
    return out;
}

DivisorSpec arrangement_divisor(std::initializer_list<const char*> texts) {
    DivisorSpec D;
    D.n = 2;
    D.f = Poly::constant(3, Rational(1));
    for (const char* t : texts) {
        D.arrangement_forms.push_back(parse_poly(t, 3));
        D.f = D.f * D.arrangement_forms.back();
    }
    return D;
}

} // namespace

TEST_CASE("applying a derivation") {
    Poly f = parse_poly("x*y*z", 3);
    CHECK(apply(euler_derivation(3), f) == f * Rational(3));
    CHECK(apply(deriv({"x", "0", "0"}, 3), parse_poly("x*y", 3)) == parse_poly("x*y", 3));
    CHECK(apply(deriv({"0", "0", "1"}, 3), parse_poly("x*y", 3)).is_zero());
    CHECK_THROWS_AS(apply(deriv({"x", "y"}, 2), f), std::invalid_argument);
}

TEST_CASE("graded generators of the log-derivation module") {
    DivisorSpec boolean = divisor(2, "x*y*z");
    std::vector<Derivation> gens = logderiv_generators(boolean, 1);
    CHECK(degrees_of(gens) == std::vector<int>{1, 1, 1});
    for (const Derivation& theta : gens)
        CHECK(normal_form(apply(theta, boolean.f), {boolean.f}, MonomialOrder::grevlex)
                  .is_zero());

    DivisorSpec two_lines = divisor(2, "x*y");
    std::vector<Derivation> tl = logderiv_generators(two_lines, 1);
    CHECK(degrees_of(tl) == std::vector<int>{0, 1, 1});
    // the degree-0 generator is d/dz
    REQUIRE(tl.front().degree() == 0);
    CHECK(tl.front().coefficients[0].is_zero());
    CHECK(tl.front().coefficients[1].is_zero());
    CHECK(tl.front().coefficients[2] == Poly::constant(3, Rational(1)));
}

TEST_CASE("saito certificates") {
    DivisorSpec boolean = divisor(2, "x*y*z");
    std::vector<Derivation> diag = {deriv({"x", "0", "0"}, 3), deriv({"0", "y", "0"}, 3),
                                    deriv({"0", "0", "z"}, 3)};
    FreenessCertificate cert = saito_check(diag, boolean);
    REQUIRE(cert.is_free);
    CHECK(cert.exponents == std::vector<int>{1, 1, 1});
    CHECK(cert.saito_scalar == Rational(1));

    DivisorSpec two_lines = divisor(2, "x*y");
    std::vector<Derivation> mixed = {deriv({"0", "0", "1"}, 3), euler_derivation(3),
                                     deriv({"x", "0", "0"}, 3)};
    FreenessCertificate cert2 = saito_check(mixed, two_lines);
    REQUIRE(cert2.is_free);
    CHECK(cert2.exponents == std::vector<int>{0, 1, 1});
    CHECK(cert2.saito_scalar == Rational(-1));  // det = -xy

    std::vector<Derivation> repeated = {deriv({"x", "0", "0"}, 3), deriv({"x", "0", "0"}, 3),
                                        deriv({"0", "0", "z"}, 3)};
    FreenessCertificate bad = saito_check(repeated, boolean);
    CHECK_FALSE(bad.is_free);
    CHECK(bad.failure == "coefficient determinant vanishes");

    std::vector<Derivation> not_log = {deriv({"1", "0", "0"}, 3), deriv({"0", "y", "0"}, 3),
                                       deriv({"0", "0", "z"}, 3)};
    CHECK(saito_check(not_log, boolean).failure ==
          "candidate 0 is not logarithmic");
}

TEST_CASE("exponents of free and non-free divisors") {
    ExponentsResult boolean = exponents(divisor(2, "x*y*z"));
    CHECK(boolean.status == FreenessStatus::free_divisor);
    CHECK(boolean.exponents == std::vector<int>{1, 1, 1});

    DivisorSpec braid = arrangement_divisor({"x", "y", "z", "x - y", "y - z", "x - z"});
    ExponentsResult be = exponents(braid);
    CHECK(be.status == FreenessStatus::free_divisor);
    CHECK(be.exponents == std::vector<int>{1, 2, 3});
    REQUIRE(be.certificate.is_free);
    // Saito determinant is a nonzero multiple of f
    CHECK(be.certificate.saito_scalar != Rational(0));

    ExponentsResult below = exponents(braid, 2);
    CHECK(below.status == FreenessStatus::inconclusive);

    DivisorSpec generic4 = arrangement_divisor({"x", "y", "x + y + z", "x - 2*y + 3*z"});
    ExponentsResult ge = exponents(generic4);
    CHECK(ge.status == FreenessStatus::not_free);
    CHECK(ge.generator_count == 4);

    ExponentsResult empty = exponents(divisor(2, "1"));
    CHECK(empty.status == FreenessStatus::free_divisor);
    CHECK(empty.exponents == std::vector<int>{0, 0, 0});
}

TEST_CASE("divisor validation") {
    DivisorSpec bad;
    bad.n = 0;
    bad.f = parse_poly("x0", 1);
    CHECK_THROWS_AS(validate_divisor(bad), std::invalid_argument);

    DivisorSpec zero;
    zero.n = 2;
    zero.f = Poly::zero(3);
    CHECK_THROWS_AS(validate_divisor(zero), std::invalid_argument);

    DivisorSpec inhom = divisor(2, "x^2 + y");
    CHECK_THROWS_AS(validate_divisor(inhom), std::invalid_argument);

    DivisorSpec mismatch = divisor(2, "x*y*z");
    mismatch.arrangement_forms = {parse_poly("x", 3), parse_poly("y", 3)};
    CHECK_THROWS_AS(validate_divisor(mismatch), std::invalid_argument);

    CHECK_NOTHROW(validate_divisor(divisor(2, "1")));  // empty divisor
}

TEST_CASE("polynomial determinants") {
    std::vector<std::vector<Poly>> m = {
        {parse_poly("0", 3), parse_poly("0", 3), parse_poly("1", 3)},
        {parse_poly("x", 3), parse_poly("y", 3), parse_poly("z", 3)},
        {parse_poly("x", 3), parse_poly("0", 3), parse_poly("0", 3)}};
    CHECK(determinant(m) == parse_poly("-x*y", 3));
    CHECK(determinant({{parse_poly("x", 1)}}) == parse_poly("x", 1));
    CHECK_THROWS_AS(determinant({}), std::invalid_argument);
}

TEST_CASE("euler derivation is logarithmic for every corpus equation") {
    for (const char* text : {"x*y*z", "x*y", "x^3 - y^2*z", "x^2 + y^2 - z^2",
                             "x^5*z + x^3*y^3 + y^5*z"}) {
        Poly f = parse_poly(text, 3);
        Poly image = apply(euler_derivation(3), f);
        CHECK(normal_form(image, {f}, MonomialOrder::grevlex).is_zero());
    }
}
