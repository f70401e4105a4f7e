#ifndef PETIT_GALOIS_HPP
#define PETIT_GALOIS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "petit/petit.hpp"

namespace petit {

struct norm_not_one_error : error {
    using error::error;
};

/// A cyclic extension C/S0 with group generated by sigma_C, together with an
/// embedding of C into the ambient coefficient ring D (the identity when
/// D = C, the scalar embedding for matrix rings).
struct GaloisData {
    Ring::Ptr C;
    RingAut sigma_C;
    int m = 0;  // order of sigma_C
    Subspace S0;  // in C coordinates
    Ring::Ptr D;
    Mat embed;  // C -> D, multiplicative, unital
    bool certified = false;
    std::vector<std::pair<Coords, Coords>> witness;  // (x_i, y_i) for the identity column

    Coords embed_elt(const Coords& c) const { return embed.apply(c); }
};

GaloisData make_galois_data(const Ring::Ptr& C, const RingAut& sigma_C);
GaloisData make_galois_data(const Ring::Ptr& C, const RingAut& sigma_C, const Ring::Ptr& D,
                            const Mat& embed);

/// Product of the m conjugates sigma^l(k); the result is asserted to lie in S0.
Coords norm(const Coords& k, const GaloisData& data);

/// All units of C of norm 1; asserted closed under product and inverse.
std::vector<Coords> norm_one_group(const GaloisData& data, std::uint64_t bound = kDefaultEnumBound);

/// A unit c with c^-1 sigma(c) = k, by exhaustive search; verified before
/// return.  Absence is a reported outcome, not an error.
std::optional<Coords> hilbert90_solve(const Coords& k, const GaloisData& data,
                                      std::uint64_t bound = kDefaultEnumBound);

struct GaloisCertificate {
    bool ok = false;
    std::vector<std::pair<Coords, Coords>> pairs;  // x_i, y_i
    std::string failure;
};

/// Finds x_i, y_i in C with sum_i x_i tau(y_i) equal to 1 for tau = id and 0
/// for every other tau in the group (linear solve with y_i the canonical
/// basis); re-verified pair by pair.
GaloisCertificate certify_galois(GaloisData& data);

struct SeparableIdempotentReport {
    bool applicable = false;
    std::string reason;  // when not applicable
    bool from_zero_passes = false;  // summation range i = 0..m-1
    bool from_one_passes = false;   // summation range i = 1..m-1
    std::string passing_range;      // "i=0..m-1", "i=1..m-1", "both", "none"
};

/// Verifies the candidate separable idempotent (m d)^-1 sum t^i (x) t^{m-i}
/// in the tensor bimodule over the coefficient ring, for both candidate
/// summation ranges, and reports which satisfies the multiplication-to-one
/// and centralizing identities.
SeparableIdempotentReport separable_idempotent_check(const PetitAlgebra::Ptr& algebra);

struct FixedSubalgebraReport {
    Subspace fixed;
    Subspace expected;        // span of Fix(sigma) t^j
    bool matches_expected = false;
    Subspace fixed_center;
    Subspace expected_center;  // span of S0 t^j
    bool center_matches = false;
};

/// Fixed subalgebra of conjugation by t on an associative cyclic-form
/// algebra, compared against Fix(sigma)[t]/(t^m - d) and its center against
/// S0[t]/(t^m - d).
FixedSubalgebraReport g_t_fixed_subalgebra(const PetitAlgebra::Ptr& algebra);

}  // namespace petit

#endif
