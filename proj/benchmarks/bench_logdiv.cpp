#include <benchmark/benchmark.h>

#include <logdiv/arrangement.hpp>
#include <logdiv/csm.hpp>
#include <logdiv/groebner.hpp>
#include <logdiv/logderiv.hpp>
#include <logdiv/singular.hpp>

using namespace logdiv;

namespace {

std::vector<Poly> braid_forms() {
    std::vector<Poly> forms;
    for (const char* t : {"x0 - x1", "x0 - x2", "x0 - x3", "x1 - x2", "x1 - x3", "x2 - x3"})
        forms.push_back(parse_poly(t, 4));
    return forms;
}

DivisorSpec braid_divisor() {
    std::vector<Poly> forms;
    for (const char* t : {"x", "y", "z", "x - y", "x - z", "y - z"})
        forms.push_back(parse_poly(t, 3));
    Poly f = Poly::constant(3, Rational(1));
    for (const Poly& form : forms) f = f * form;
    DivisorSpec D;
    D.n = 2;
    D.f = f;
    D.arrangement_forms = forms;
    return D;
}

void bm_groebner_jacobian(benchmark::State& state) {
    Poly f = braid_divisor().f;
    std::vector<Poly> gens = {partial_derivative(f, 0), partial_derivative(f, 1),
                              partial_derivative(f, 2)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(groebner_basis(gens, {}));
    }
}
BENCHMARK(bm_groebner_jacobian);

void bm_exponents_braid(benchmark::State& state) {
    DivisorSpec D = braid_divisor();
    for (auto _ : state) {
        benchmark::DoNotOptimize(exponents(D, D.f.degree()));
    }
}
BENCHMARK(bm_exponents_braid);

void bm_lattice_csm(benchmark::State& state) {
    std::vector<Poly> forms = braid_forms();
    for (auto _ : state) {
        IntersectionLattice L = intersection_lattice(forms, 3);
        benchmark::DoNotOptimize(csm_arrangement_complement(L));
    }
}
BENCHMARK(bm_lattice_csm);

void bm_milnor_e8(benchmark::State& state) {
    GermSpec germ{parse_poly("x^3 + y^5", 2)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(milnor_number(germ));
    }
}
BENCHMARK(bm_milnor_e8);

} // namespace

BENCHMARK_MAIN();
