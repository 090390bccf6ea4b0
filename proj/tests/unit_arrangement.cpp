#include <doctest.h>

#include <logdiv/arrangement.hpp>
#include <logdiv/poly.hpp>

#include <map>
#include <set>
#include <stdexcept>

using namespace logdiv;

namespace {

std::vector<Poly> forms(std::initializer_list<const char*> texts, int nvars) {
    std::vector<Poly> out;
    for (const char* t : texts) out.push_back(parse_poly(t, nvars));
    return out;
}

// flats per rank, and per rank the multiset of hyperplane counts
std::map<int, std::multiset<size_t>> profile(const IntersectionLattice& L) {
    std::map<int, std::multiset<size_t>> out;
    for (const Flat& fl : L.flats)
        if (fl.rank >= 1 && fl.rank <= L.n) out[fl.rank].insert(fl.forms.size());
    return out;
}

const std::vector<Poly> kBoolean = forms({"x", "y", "z"}, 3);
const std::vector<Poly> kBraid = forms({"x", "y", "z", "x - y", "y - z", "x - z"}, 3);

} // namespace

TEST_CASE("lattice of the coordinate triangle") {
    IntersectionLattice L = intersection_lattice(kBoolean, 2);
    auto p = profile(L);
    CHECK(p[1].size() == 3);
    // three double points, no triple point
    CHECK(p[2] == std::multiset<size_t>{2, 2, 2});
}

TEST_CASE("lattice of the braid arrangement") {
    IntersectionLattice L = intersection_lattice(kBraid, 2);
    auto p = profile(L);
    CHECK(p[1].size() == 6);
    CHECK(p[2].size() == 7);
    CHECK(p[2] == std::multiset<size_t>{2, 2, 2, 3, 3, 3, 3});
}

TEST_CASE("lattice of a single hyperplane") {
    IntersectionLattice L = intersection_lattice(forms({"x"}, 3), 2);
    CHECK(profile(L) == std::map<int, std::multiset<size_t>>{{1, {1}}});
    std::vector<BigInt> m = indicator_coefficients(L);
    REQUIRE(m.size() == L.flats.size());
    CHECK(m[0] == 1);  // top
    CHECK(m[1] == -1);
}

TEST_CASE("indicator coefficients by rank") {
    IntersectionLattice B = intersection_lattice(kBoolean, 2);
    std::vector<BigInt> mb = indicator_coefficients(B);
    for (size_t i = 0; i < B.flats.size(); ++i) {
        if (B.flats[i].rank == 1) CHECK(mb[i] == -1);
        if (B.flats[i].rank == 2) CHECK(mb[i] == 1);
    }

    IntersectionLattice R = intersection_lattice(kBraid, 2);
    std::vector<BigInt> mr = indicator_coefficients(R);
    for (size_t i = 0; i < R.flats.size(); ++i) {
        if (R.flats[i].rank == 1) CHECK(mr[i] == -1);
        if (R.flats[i].rank == 2)
            CHECK(mr[i] == (R.flats[i].forms.size() == 3 ? 2 : 1));
    }
}

TEST_CASE("characteristic polynomials") {
    // (t-1)^3
    CHECK(characteristic_polynomial(intersection_lattice(kBoolean, 2)) ==
          UniPoly{-1, 3, -3, 1});
    // (t-1)(t-2)(t-3)
    UniPoly braid = characteristic_polynomial(intersection_lattice(kBraid, 2));
    CHECK(braid == UniPoly{-6, 11, -6, 1});
    CHECK(to_string(braid) == "t^3 - 6*t^2 + 11*t - 6");
    // empty arrangement
    CHECK(characteristic_polynomial(intersection_lattice({}, 2)) == UniPoly{0, 0, 0, 1});
}

TEST_CASE("generic hyperplane sections") {
    // Boolean in P^3: four generic lines in P^2 with six double points
    std::vector<Poly> planes = forms({"x0", "x1", "x2", "x3"}, 4);
    IntersectionLattice S = generic_section(intersection_lattice(planes, 3));
    CHECK(S.n == 2);
    auto p = profile(S);
    CHECK(p[1].size() == 4);
    CHECK(p[2] == std::multiset<size_t>{2, 2, 2, 2, 2, 2});

    // any P^2 arrangement: one point per line on P^1
    IntersectionLattice braid_pts = generic_section(intersection_lattice(kBraid, 2));
    CHECK(braid_pts.n == 1);
    CHECK(profile(braid_pts)[1].size() == 6);

    CHECK_THROWS_AS(generic_section(braid_pts), std::invalid_argument);
}

TEST_CASE("form validation") {
    CHECK_THROWS_AS(intersection_lattice(forms({"x^2"}, 3), 2), std::invalid_argument);
    CHECK_THROWS_AS(intersection_lattice({Poly::zero(3)}, 2), std::invalid_argument);
}
