#include <benchmark/benchmark.h>

#include "petit/autgroup.hpp"

using namespace petit;

namespace {

SkewPolyRing::Ptr gf8_ring() {
    static auto S = [] {
        auto F = Ring::extension_field(2, {1, 1, 0, 1});
        return SkewPolyRing::make(F, RingAut::frobenius(F, 1));
    }();
    return S;
}

PetitAlgebra::Ptr gf8_algebra() {
    static auto A = [] {
        auto S = gf8_ring();
        SkewPoly f = SkewPoly::monomial(S, S->coeff()->one(), 3) -
                     SkewPoly::constant(S, Coords{0, 1, 0});
        return PetitAlgebra::make(S, f);
    }();
    return A;
}

void bm_skew_mul(benchmark::State& state) {
    auto S = gf8_ring();
    SkewPoly g = parse_skew_poly(S, "(1,0,1) + (0,1,0)*t^3 + (1,1,1)*t^6");
    SkewPoly h = parse_skew_poly(S, "(0,1,1) + (1,0,0)*t^2 + (0,0,1)*t^5");
    for (auto _ : state) benchmark::DoNotOptimize(g * h);
}
BENCHMARK(bm_skew_mul);

void bm_right_divide(benchmark::State& state) {
    auto S = gf8_ring();
    SkewPoly g = parse_skew_poly(S, "(1,0,1) + (0,1,0)*t^4 + (1,1,1)*t^8");
    SkewPoly f = parse_skew_poly(S, "(0,1,1) + (1,0,0)*t + (1,0,0)*t^3");
    for (auto _ : state) benchmark::DoNotOptimize(right_divide(g, f));
}
BENCHMARK(bm_right_divide);

void bm_circ_mul(benchmark::State& state) {
    auto A = gf8_algebra();
    Coords g = A->embed_at_power(Coords{1, 1, 0}, 2);
    Coords h = A->embed_at_power(Coords{0, 1, 1}, 2);
    for (auto _ : state) benchmark::DoNotOptimize(A->mul(g, h));
}
BENCHMARK(bm_circ_mul);

void bm_nucleus_solve(benchmark::State& state) {
    auto A = gf8_algebra();
    for (auto _ : state) benchmark::DoNotOptimize(nucleus(A, NucleusSlot::Right));
}
BENCHMARK(bm_nucleus_solve);

void bm_structure(benchmark::State& state) {
    auto A = gf8_algebra();
    for (auto _ : state) benchmark::DoNotOptimize(compute_structure(A));
}
BENCHMARK(bm_structure);

void bm_theoretic_enumeration(benchmark::State& state) {
    auto A = gf8_algebra();
    auto F = A->coeff();
    RingAut sigma = A->poly_ring()->sigma();
    GaloisData gal = make_galois_data(F, sigma);
    auto taus = commuting_tau_inventory(F, sigma, A->s0_in_coeff(), candidate_automorphisms(F));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_theoretic(A, gal, taus));
}
BENCHMARK(bm_theoretic_enumeration);

}  // namespace

BENCHMARK_MAIN();
