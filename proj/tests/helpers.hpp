#ifndef PETIT_TESTS_HELPERS_HPP
#define PETIT_TESTS_HELPERS_HPP

#include "petit/autgroup.hpp"
#include "petit/job.hpp"

namespace petit::testing {

inline Ring::Ptr gf4() { return Ring::extension_field(2, {1, 1, 1}); }
inline Ring::Ptr gf8() { return Ring::extension_field(2, {1, 1, 0, 1}); }
inline Ring::Ptr gf9() { return Ring::extension_field(3, {1, 0, 1}); }
inline Ring::Ptr gf16() { return Ring::extension_field(2, {1, 1, 0, 0, 1}); }

/// The cyclic algebra (D, sigma, d) = D[t; sigma] / (t^m - d).
inline PetitAlgebra::Ptr cyclic_algebra(const Ring::Ptr& D, const RingAut& sigma, const Coords& d,
                                        int m) {
    auto S = SkewPolyRing::make(D, sigma);
    SkewPoly f = SkewPoly::monomial(S, D->one(), m) - SkewPoly::constant(S, d);
    return PetitAlgebra::make(S, f);
}

inline PetitAlgebra::Ptr gf4_omega_algebra() {
    auto D = gf4();
    return cyclic_algebra(D, RingAut::frobenius(D, 1), Coords{0, 1}, 2);
}

inline PetitAlgebra::Ptr gf4_one_algebra() {
    auto D = gf4();
    return cyclic_algebra(D, RingAut::frobenius(D, 1), D->one(), 2);
}

/// Deterministic xorshift for property tests; fixed seed, no global state.
struct Rng {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    Coords coords(int dim, int p) {
        Coords out(static_cast<std::size_t>(dim));
        for (auto& c : out) c = static_cast<std::uint8_t>(below(p));
        return out;
    }
    SkewPoly poly(const SkewPolyRing::Ptr& S, int max_deg) {
        std::vector<Coords> cs;
        int deg = below(max_deg + 1);
        for (int i = 0; i <= deg; ++i) cs.push_back(coords(S->coeff()->dim(), S->coeff()->p()));
        return SkewPoly::from_coeffs(S, std::move(cs));
    }
};

/// True when fn throws a petit::error whose message contains needle.
template <typename Fn>
bool throws_containing(Fn&& fn, const std::string& needle) {
    try {
        fn();
    } catch (const error& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
}

}  // namespace petit::testing

#endif
