#include <numeric>

#include "doctest.h"
#include "helpers.hpp"

using namespace petit;
using namespace petit::testing;

TEST_CASE("GF(4) power basis with omega^2 = omega + 1") {
    auto F = gf4();
    Coords omega = {0, 1};
    CHECK(F->mul(omega, omega) == Coords{1, 1});
    CHECK(F->pow(omega, 3) == F->one());
}

TEST_CASE("reducible modulus is rejected and the error names a factor") {
    CHECK_THROWS_AS(Ring::extension_field(2, {1, 0, 1}), reducible_modulus_error);
    try {
        Ring::extension_field(2, {1, 0, 1});
    } catch (const reducible_modulus_error& e) {
        CHECK(std::string(e.what()).find("factor") != std::string::npos);
    }
    CHECK_THROWS(Ring::extension_field(4, {1, 1, 1}));  // non-prime p
    CHECK_NOTHROW(Ring::extension_field(3, {1, 0, 1}));
}

TEST_CASE("frobenius orders") {
    auto F4 = gf4();
    CHECK(RingAut::frobenius(F4, 1).order() == 2);
    CHECK(RingAut::frobenius(F4, 1).apply(Coords{0, 1}) == Coords{1, 1});  // omega -> omega^2
    CHECK(RingAut::frobenius(F4, 2).is_identity());
    CHECK(RingAut::frobenius(gf8(), 1).order() == 3);
}

TEST_CASE("fixed rings") {
    auto F4 = gf4();
    CHECK(fixed_ring(F4, RingAut::frobenius(F4, 1)).dim() == 1);
    auto F16 = gf16();
    CHECK(fixed_ring(F16, RingAut::frobenius(F16, 2)).dim() == 2);
    CHECK(fixed_ring(F16, RingAut::identity(F16)).dim() == 4);
    // |Fix| = p^gcd(n, e) for the Frobenius powers.
    for (int e = 0; e < 4; ++e) {
        int g = std::gcd(4, e == 0 ? 4 : e);
        CHECK(fixed_ring(F16, RingAut::frobenius(F16, e)).dim() == g);
    }
}

TEST_CASE("centers") {
    auto M = Ring::matrix_ring(gf4(), 2);
    CHECK_FALSE(M->commutative());
    CHECK(center_subring(M).dim() == 2);
    CHECK(center_subring(gf9()).dim() == 2);
    CHECK(center_subring(Ring::split_ring(2, 3)).dim() == 3);
}

TEST_CASE("split ring and cyclic shift") {
    auto R = Ring::split_ring(2, 3);
    RingAut shift = RingAut::cyclic_shift(R);
    CHECK(shift.order() == 3);
    CHECK(shift.apply(Coords{1, 0, 0}) == Coords{0, 1, 0});
    CHECK(fixed_ring(R, shift).dim() == 1);
}

TEST_CASE("strongly distinct automorphism pairs") {
    auto F8 = gf8();
    RingAut s = RingAut::frobenius(F8, 1);
    CHECK(strongly_distinct(s, s.power(2), F8));
    CHECK_FALSE(strongly_distinct(s, s, F8));
    // Shift vs identity on GF(2)^3: any nonzero idempotent e has e_i = 1 for
    // some i, and x with x_{i-1} != x_i already separates shift(x)e from xe.
    auto R3 = Ring::split_ring(2, 3);
    CHECK(strongly_distinct(RingAut::cyclic_shift(R3), RingAut::identity(R3), R3));
    CHECK_FALSE(strongly_distinct(RingAut::identity(R3), RingAut::identity(R3), R3));
}

TEST_CASE("difference ideal fullness") {
    auto F4 = gf4();
    CHECK(difference_ideal_is_full(F4, RingAut::frobenius(F4, 1), 1));
    auto F16 = gf16();
    CHECK(difference_ideal_is_full(F16, RingAut::frobenius(F16, 1), 2));
    CHECK_FALSE(difference_ideal_is_full(F4, RingAut::frobenius(F4, 1), 0));
}

TEST_CASE("units carry verified two-sided inverses") {
    auto M = Ring::matrix_ring(Ring::prime_field(2), 2);
    for (const Coords& u : M->units()) {
        auto inv = M->inverse(u);
        REQUIRE(inv.has_value());
        CHECK(M->mul(u, *inv) == M->one());
        CHECK(M->mul(*inv, u) == M->one());
    }
    CHECK(M->units().size() == 6);
}

TEST_CASE("enumeration bound guards large rings") {
    auto M = Ring::matrix_ring(gf4(), 2);  // 2^8 elements
    CHECK_THROWS_AS(M->elements(100), ring_too_large_error);
    CHECK(M->elements(1u << 10).size() == 256);
}

TEST_CASE("ring axioms on random triples") {
    Rng rng;
    for (const auto& R : {gf8(), Ring::split_ring(2, 3), Ring::matrix_ring(Ring::prime_field(2), 2)}) {
        for (int i = 0; i < 500; ++i) {
            Coords a = rng.coords(R->dim(), R->p());
            Coords b = rng.coords(R->dim(), R->p());
            Coords c = rng.coords(R->dim(), R->p());
            CHECK(R->mul(R->mul(a, b), c) == R->mul(a, R->mul(b, c)));
            CHECK(R->mul(a, R->add(b, c)) == R->add(R->mul(a, b), R->mul(a, c)));
            CHECK(R->mul(R->add(a, b), c) == R->add(R->mul(a, c), R->mul(b, c)));
        }
    }
}

TEST_CASE("automorphisms are multiplicative on all basis pairs") {
    auto F9 = gf9();
    RingAut s = RingAut::frobenius(F9, 1);
    for (int i = 0; i < F9->dim(); ++i)
        for (int j = 0; j < F9->dim(); ++j) {
            Coords bi(static_cast<std::size_t>(F9->dim()), 0), bj(static_cast<std::size_t>(F9->dim()), 0);
            bi[static_cast<std::size_t>(i)] = 1;
            bj[static_cast<std::size_t>(j)] = 1;
            CHECK(s.apply(F9->mul(bi, bj)) == F9->mul(s.apply(bi), s.apply(bj)));
        }
}

TEST_CASE("matrix entrywise automorphism with conjugation") {
    auto M = Ring::matrix_ring(gf4(), 2);
    RingAut base = RingAut::frobenius(gf4(), 1);
    RingAut plain = RingAut::matrix_entrywise(M, base);
    CHECK(plain.order() == 2);
    // Conjugating by a unit still yields an automorphism.
    Coords u(static_cast<std::size_t>(M->dim()), 0);
    u[2] = 1;  // entry (0,1) = 1
    u[4] = 1;  // entry (1,0) = 1
    REQUIRE(M->is_unit(u));
    CHECK_NOTHROW(RingAut::matrix_entrywise(M, base, u));
}

TEST_CASE("format and parse round trip") {
    auto F4 = gf4();
    Coords w = {1, 1};
    CHECK(F4->format(w) == "(1,1)");
    CHECK(F4->parse("(1,1)") == w);
    CHECK_THROWS(F4->parse("(1,1"));
}

TEST_CASE("fixed ring is multiplicatively closed") {
    auto F16 = gf16();
    Subspace fix = fixed_ring(F16, RingAut::frobenius(F16, 2));
    CHECK(is_multiplicatively_closed(F16, fix));
}
