#include "doctest.h"
#include "helpers.hpp"

using namespace petit;
using namespace petit::testing;

namespace {

struct Setup {
    PetitAlgebra::Ptr A;
    GaloisData gal;
    std::vector<TauDescriptor> taus;
};

Setup gf4_setup(const Coords& d) {
    auto F = gf4();
    RingAut sigma = RingAut::frobenius(F, 1);
    Setup s;
    s.A = cyclic_algebra(F, sigma, d, 2);
    s.gal = make_galois_data(F, sigma);
    s.taus = commuting_tau_inventory(F, sigma, s.A->s0_in_coeff(), candidate_automorphisms(F));
    return s;
}

Setup gf8_setup(const Coords& d) {
    auto F = gf8();
    RingAut sigma = RingAut::frobenius(F, 1);
    Setup s;
    s.A = cyclic_algebra(F, sigma, d, 3);
    s.gal = make_galois_data(F, sigma);
    s.taus = commuting_tau_inventory(F, sigma, s.A->s0_in_coeff(), candidate_automorphisms(F));
    return s;
}

TauDescriptor find_tau(const Setup& s, const std::string& label) {
    for (const auto& t : s.taus)
        if (t.tau.label() == label) return t;
    throw error("no such tau in the inventory: " + label);
}

}  // namespace

TEST_CASE("make_H examples on the omega algebra") {
    Setup s = gf4_setup(Coords{0, 1});
    TauDescriptor id = find_tau(s, RingAut::identity(s.gal.C).label());

    AlgebraMorphism h = make_H(id, Coords{0, 1}, s.gal, s.A);
    CHECK(h.multiplicative());
    CHECK(is_automorphism(h));
    // H(t) = omega t, H(a) = a for coefficients.
    CHECK(h.apply(s.A->t_element()) == s.A->embed_at_power(Coords{0, 1}, 1));
    CHECK(h.apply(s.A->embed_coeff(Coords{1, 1})) == s.A->embed_coeff(Coords{1, 1}));

    AlgebraMorphism h1 = make_H(id, s.gal.C->one(), s.gal, s.A);
    CHECK(h1.matrix() == Mat::identity(s.A->dim(), 2));
}

TEST_CASE("make_H constraint violations are named") {
    Setup s = gf4_setup(Coords{0, 1});
    TauDescriptor id = find_tau(s, RingAut::identity(s.gal.C).label());
    TauDescriptor sig = find_tau(s, s.gal.sigma_C.label());

    CHECK(throws_containing([&] { make_H(id, Coords{0, 0}, s.gal, s.A); }, "k is not a unit"));
    // sigma(omega) != N(k) omega for any k, since N(k) is 0 or 1.
    CHECK(throws_containing([&] { make_H(sig, s.gal.C->one(), s.gal, s.A); }, "tau(d) differs"));
}

TEST_CASE("sigma extends over the associative algebra") {
    Setup s = gf4_setup(gf4()->one());
    TauDescriptor sig = find_tau(s, s.gal.sigma_C.label());
    AlgebraMorphism h = make_H(sig, s.gal.C->one(), s.gal, s.A);
    CHECK(is_automorphism(h));

    // H_{sigma,1} is the inner automorphism by t^-1 = t here (d = 1, m = 2).
    AlgebraMorphism g = inner_from_invertible(s.A, s.A->t_element());
    CHECK(h.matrix() == g.matrix());
}

TEST_CASE("is_automorphism rejects bad maps") {
    Setup s = gf4_setup(Coords{0, 1});
    TauDescriptor id = find_tau(s, RingAut::identity(s.gal.C).label());

    // k = omega + 1 has N(k) = 1... pick a k violating the constraint instead:
    // on this algebra tau = id requires N(k) = 1, so use a nonunit-free violation
    // by building with k whose norm-times-d misses tau(d).
    bool found_violation = false;
    for (const Coords& k : s.gal.C->units()) {
        Coords nk = norm(k, s.gal);
        if (s.gal.C->mul(nk, s.A->d()) == s.A->d()) continue;
        AlgebraMorphism h = make_H(id, k, s.gal, s.A, false);
        CHECK_FALSE(h.multiplicative());
        CHECK_FALSE(is_automorphism(h));
        found_violation = true;
    }
    // All units of GF(4) have norm 1, so exercise the violation over GF(9).
    auto F9 = gf9();
    RingAut sig9 = RingAut::frobenius(F9, 1);
    auto A9 = cyclic_algebra(F9, sig9, Coords{0, 1}, 2);
    GaloisData g9 = make_galois_data(F9, sig9);
    TauDescriptor id9 = make_tau(RingAut::identity(F9), sig9, A9->s0_in_coeff());
    for (const Coords& k : g9.C->units()) {
        if (norm(k, g9) == g9.C->one()) continue;
        if (g9.C->mul(norm(k, g9), A9->d()) == A9->d()) continue;
        AlgebraMorphism h = make_H(id9, k, g9, A9, false);
        CHECK_FALSE(is_automorphism(h));
        found_violation = true;
    }
    CHECK(found_violation);

    AlgebraMorphism zero(s.A, Mat(s.A->dim(), s.A->dim(), 2), AlgebraMorphism::Provenance::BruteForce,
                         "zero");
    CHECK_FALSE(is_automorphism(zero));
}

TEST_CASE("theoretic enumeration counts") {
    Setup nonassoc = gf4_setup(Coords{0, 1});
    CHECK(enumerate_theoretic(nonassoc.A, nonassoc.gal, nonassoc.taus).size() == 3);

    Setup assoc = gf4_setup(gf4()->one());
    CHECK(enumerate_theoretic(assoc.A, assoc.gal, assoc.taus).size() == 6);

    // With tau restricted to the identity the maps biject with the norm-one group.
    TauDescriptor id = find_tau(assoc, RingAut::identity(assoc.gal.C).label());
    auto id_only = enumerate_theoretic(assoc.A, assoc.gal, {id});
    CHECK(id_only.size() == norm_one_group(assoc.gal).size());
}

TEST_CASE("kernel theorem count over GF(8)") {
    Setup s = gf8_setup(Coords{0, 1, 0});
    auto maps = enumerate_theoretic(s.A, s.gal, s.taus);
    CHECK(maps.size() == 7);
    CHECK(norm_one_group(s.gal).size() == 7);
}

TEST_CASE("brute force oracle on the omega algebra") {
    Setup s = gf4_setup(Coords{0, 1});
    std::vector<AlgebraElement> gens = {AlgebraElement(s.A, s.A->embed_coeff(Coords{0, 1})),
                                        AlgebraElement(s.A, s.A->t_element())};
    auto found = enumerate_bruteforce(s.A, gens);
    CHECK(found.size() == 3);
    auto theoretic = enumerate_theoretic(s.A, s.gal, s.taus);
    for (const auto& f : found) {
        bool matched = false;
        for (const auto& t : theoretic)
            if (t.matrix() == f.matrix()) matched = true;
        CHECK(matched);
    }
}

TEST_CASE("brute force error cases") {
    Setup s = gf4_setup(Coords{0, 1});
    std::vector<AlgebraElement> weak = {AlgebraElement(s.A, s.A->one())};
    CHECK(throws_containing([&] { enumerate_bruteforce(s.A, weak); }, "do not generate"));

    std::vector<AlgebraElement> gens = {AlgebraElement(s.A, s.A->embed_coeff(Coords{0, 1})),
                                        AlgebraElement(s.A, s.A->t_element())};
    CHECK_THROWS_AS(enumerate_bruteforce(s.A, gens, 10), budget_exceeded_error);
}

TEST_CASE("inner automorphisms") {
    Setup s = gf4_setup(Coords{0, 1});
    Coords omega = {0, 1};
    AlgebraMorphism g = inner_from_invertible(s.A, s.A->embed_coeff(omega));
    TauDescriptor id = find_tau(s, RingAut::identity(s.gal.C).label());
    AlgebraMorphism h = make_H(id, omega, s.gal, s.A);
    CHECK(g.matrix() == h.matrix());  // G_omega = H_{id,omega}

    CHECK(inner_from_invertible(s.A, s.A->one()).matrix() == Mat::identity(s.A->dim(), 2));

    AlgebraElement m(s.A, s.A->t_element());
    AlgebraElement not_inverse(s.A, s.A->embed_coeff(omega));
    CHECK(throws_containing([&] { inner_G(m, not_inverse); }, "left inverse"));
}

TEST_CASE("inner decomposition") {
    Setup s = gf4_setup(Coords{0, 1});
    TauDescriptor id = find_tau(s, RingAut::identity(s.gal.C).label());
    Coords omega = {0, 1};
    AlgebraMorphism h = make_H(id, omega, s.gal, s.A);
    auto dec = decompose_inner(h, id, s.gal);
    REQUIRE(dec.has_value());
    // The residual H_{id,1} is the identity, so H itself is inner by c.
    CHECK(dec->second.matrix() == Mat::identity(s.A->dim(), 2));
    CHECK(inner_from_invertible(s.A, s.A->embed_coeff(dec->first)).matrix() == h.matrix());

    AlgebraMorphism h1 = make_H(id, s.gal.C->one(), s.gal, s.A);
    auto trivial = decompose_inner(h1, id, s.gal);
    REQUIRE(trivial.has_value());
    CHECK(norm(trivial->first, s.gal) == s.gal.C->one());
}

TEST_CASE("every identity extension over GF(8) is inner") {
    Setup s = gf8_setup(gf8()->one());
    TauDescriptor id = find_tau(s, RingAut::identity(s.gal.C).label());
    for (const Coords& k : norm_one_group(s.gal)) {
        AlgebraMorphism h = make_H(id, k, s.gal, s.A);
        auto dec = decompose_inner(h, id, s.gal);
        REQUIRE(dec.has_value());
    }
}

TEST_CASE("inner subgroup properties") {
    for (const Coords& d : {Coords{0, 1}, Coords{1, 0}}) {
        Setup s = gf4_setup(d);
        for (const auto& v : inner_subgroup_properties(s.A)) {
            INFO(v.name << " on d = " << (d[1] ? "omega" : "1"));
            CHECK(v.pass);
        }
    }
}

TEST_CASE("G_omega and G_omega2 differ") {
    Setup s = gf4_setup(Coords{0, 1});
    AlgebraMorphism a = inner_from_invertible(s.A, s.A->embed_coeff(Coords{0, 1}));
    AlgebraMorphism b = inner_from_invertible(s.A, s.A->embed_coeff(Coords{1, 1}));
    CHECK_FALSE(a == b);
}

TEST_CASE("csa inner listing") {
    Setup assoc = gf4_setup(gf4()->one());
    auto listing = csa_inner_listing(assoc.A, assoc.gal);
    CHECK(listing.size() == 6);
    auto theoretic = enumerate_theoretic(assoc.A, assoc.gal, assoc.taus);
    CHECK(listing.size() == theoretic.size());
    for (const auto& g : listing) {
        bool matched = false;
        for (const auto& t : theoretic)
            if (t.matrix() == g.matrix()) matched = true;
        CHECK(matched);
    }

    Setup s8 = gf8_setup(gf8()->one());
    auto listing8 = csa_inner_listing(s8.A, s8.gal);
    auto theoretic8 = enumerate_theoretic(s8.A, s8.gal, s8.taus);
    CHECK(listing8.size() == theoretic8.size());
    CHECK(listing8.size() == 21);

    Setup nonassoc = gf4_setup(Coords{0, 1});
    CHECK_THROWS(csa_inner_listing(nonassoc.A, nonassoc.gal));
}

TEST_CASE("commuting tau inventories") {
    auto F8 = gf8();
    RingAut sigma = RingAut::frobenius(F8, 1);
    auto A = cyclic_algebra(F8, sigma, F8->one(), 3);
    auto taus = commuting_tau_inventory(F8, sigma, A->s0_in_coeff(), candidate_automorphisms(F8));
    CHECK(taus.size() == 3);
    bool has_sigma = false;
    for (const auto& t : taus)
        if (t.tau == sigma) has_sigma = true;
    CHECK(has_sigma);
}

TEST_CASE("composition and order bounds of the generated subgroup") {
    Setup s = gf4_setup(Coords{0, 1});
    TauDescriptor id = find_tau(s, RingAut::identity(s.gal.C).label());
    AlgebraMorphism h = make_H(id, Coords{0, 1}, s.gal, s.A);
    // <H_{id,omega}> has order dividing m s = 4; here it is 3.
    Mat acc = h.matrix();
    int order = 1;
    while (acc != Mat::identity(s.A->dim(), 2)) {
        acc = acc * h.matrix();
        ++order;
        REQUIRE(order <= 16);
    }
    CHECK(order == 3);
}
