#include "doctest.h"
#include "helpers.hpp"

using namespace petit;
using namespace petit::testing;

namespace {

GaloisData gf4_data() {
    auto F = gf4();
    return make_galois_data(F, RingAut::frobenius(F, 1));
}

GaloisData gf8_data() {
    auto F = gf8();
    return make_galois_data(F, RingAut::frobenius(F, 1));
}

GaloisData gf9_data() {
    auto F = gf9();
    return make_galois_data(F, RingAut::frobenius(F, 1));
}

}  // namespace

TEST_CASE("norm examples") {
    GaloisData g = gf4_data();
    CHECK(norm(Coords{0, 1}, g) == g.C->one());  // N(omega) = omega^3 = 1
    CHECK(norm(g.C->one(), g) == g.C->one());
    std::size_t kernel = 0;
    for (const Coords& u : g.C->units())
        if (norm(u, g) == g.C->one()) ++kernel;
    CHECK(kernel == 3);
}

TEST_CASE("norm is multiplicative and sigma-invariant") {
    GaloisData g = gf8_data();
    for (const Coords& a : g.C->units()) {
        CHECK(norm(g.sigma_C.apply(a), g) == norm(a, g));
        for (const Coords& b : g.C->units())
            CHECK(norm(g.C->mul(a, b), g) == g.C->mul(norm(a, g), norm(b, g)));
    }
}

TEST_CASE("norm-one group sizes") {
    CHECK(norm_one_group(gf4_data()).size() == 3);
    CHECK(norm_one_group(gf8_data()).size() == 7);
    CHECK(norm_one_group(gf9_data()).size() == 4);
}

TEST_CASE("hilbert 90 solving") {
    GaloisData g = gf4_data();
    Coords omega = {0, 1};
    auto c = hilbert90_solve(omega, g);
    REQUIRE(c.has_value());
    CHECK(g.C->mul(*g.C->inverse(*c), g.sigma_C.apply(*c)) == omega);

    CHECK(hilbert90_solve(g.C->one(), g).value() == g.C->one());
    CHECK_THROWS_AS(hilbert90_solve(Coords{1, 1}, gf9_data()), norm_not_one_error);

    GaloisData g8 = gf8_data();
    for (const Coords& k : norm_one_group(g8)) {
        auto sol = hilbert90_solve(k, g8);
        REQUIRE(sol.has_value());
        CHECK(g8.C->mul(*g8.C->inverse(*sol), g8.sigma_C.apply(*sol)) == k);
    }
}

TEST_CASE("coboundaries have norm one") {
    GaloisData g = gf9_data();
    for (const Coords& c : g.C->units()) {
        Coords k = g.C->mul(*g.C->inverse(c), g.sigma_C.apply(c));
        CHECK(norm(k, g) == g.C->one());
    }
}

TEST_CASE("galois certification for field extensions") {
    GaloisData g = gf4_data();
    GaloisCertificate cert = certify_galois(g);
    CHECK(cert.ok);
    CHECK(g.certified);
    // Re-verify the delta identity for every group element.
    for (int j = 0; j < g.m; ++j) {
        Coords sum(static_cast<std::size_t>(g.C->dim()), 0);
        for (const auto& [x, y] : cert.pairs)
            sum = g.C->add(sum, g.C->mul(x, g.sigma_C.power(j).apply(y)));
        CHECK(sum == (j == 0 ? g.C->one() : g.C->zero()));
    }
}

TEST_CASE("galois certification for the split ring with shift") {
    auto R = Ring::split_ring(2, 2);
    GaloisData g = make_galois_data(R, RingAut::cyclic_shift(R));
    GaloisCertificate cert = certify_galois(g);
    CHECK(cert.ok);
}

TEST_CASE("separable idempotent over GF(9)") {
    auto F = gf9();
    auto A = cyclic_algebra(F, RingAut::frobenius(F, 1), F->one(), 2);
    SeparableIdempotentReport rep = separable_idempotent_check(A);
    REQUIRE(rep.applicable);
    CHECK(rep.from_zero_passes != rep.from_one_passes);
    CHECK(rep.passing_range == "i=0..m-1");
}

TEST_CASE("separable idempotent is not applicable in characteristic dividing m") {
    auto A = gf4_one_algebra();
    SeparableIdempotentReport rep = separable_idempotent_check(A);
    CHECK_FALSE(rep.applicable);
    CHECK(!rep.reason.empty());
}

TEST_CASE("separable idempotent for m = 3 in characteristic 2") {
    auto F64 = Ring::extension_field(2, {1, 1, 0, 0, 0, 0, 1});  // x^6 + x + 1
    RingAut sigma = RingAut::frobenius(F64, 2);  // order 3, fixes GF(4)
    REQUIRE(sigma.order() == 3);
    auto A = cyclic_algebra(F64, sigma, F64->one(), 3);
    SeparableIdempotentReport rep = separable_idempotent_check(A);
    REQUIRE(rep.applicable);
    CHECK(rep.from_zero_passes);
    CHECK_FALSE(rep.from_one_passes);
}

TEST_CASE("fixed subalgebra of conjugation by t") {
    auto B = gf4_one_algebra();
    FixedSubalgebraReport rep = g_t_fixed_subalgebra(B);
    CHECK(rep.matches_expected);
    CHECK(rep.fixed.dim() == 2);
    CHECK(rep.center_matches);
    CHECK(rep.fixed.contains(B->t_element()));

    auto M = Ring::matrix_ring(gf4(), 2);
    RingAut sig = RingAut::matrix_entrywise(M, RingAut::frobenius(gf4(), 1));
    auto G = cyclic_algebra(M, sig, M->one(), 2);
    FixedSubalgebraReport grep = g_t_fixed_subalgebra(G);
    CHECK(grep.matches_expected);
    CHECK(grep.fixed.dim() == 8);
    CHECK(grep.center_matches);
    CHECK(grep.fixed_center.dim() == 2);

    CHECK_THROWS(g_t_fixed_subalgebra(gf4_omega_algebra()));
}
