#ifndef PETIT_AUTGROUP_HPP
#define PETIT_AUTGROUP_HPP

#include <optional>
#include <utility>
#include <vector>

#include "petit/galois.hpp"

namespace petit {

struct budget_exceeded_error : error {
    using error::error;
};

/// A coefficient-ring automorphism candidate for extension to the algebra,
/// with the two side conditions the extension theorems need.
struct TauDescriptor {
    RingAut tau;
    bool commutes_with_sigma = false;
    bool fixes_s0 = false;
};

TauDescriptor make_tau(const RingAut& tau, const RingAut& sigma, const Subspace& s0_in_coeff);

/// An additive map of the algebra given by its GF(p)-matrix on the prime
/// basis, with provenance and a computed multiplicativity verdict.
class AlgebraMorphism {
public:
    enum class Provenance { Theoretic, Inner, BruteForce };

    AlgebraMorphism() = default;
    AlgebraMorphism(PetitAlgebra::Ptr algebra, Mat matrix, Provenance prov, std::string label);

    const PetitAlgebra::Ptr& algebra() const { return algebra_; }
    const Mat& matrix() const { return matrix_; }
    Provenance provenance() const { return provenance_; }
    const std::string& label() const { return label_; }
    bool multiplicative() const { return multiplicative_; }

    Coords apply(const Coords& v) const { return matrix_.apply(v); }
    AlgebraMorphism compose(const AlgebraMorphism& g) const;  // (this . g)(x) = this(g(x))

    // Extension parameters when provenance is Theoretic.
    std::string tau_label;
    Coords k;  // in C coordinates

    bool operator==(const AlgebraMorphism& rhs) const { return matrix_ == rhs.matrix_; }

private:
    PetitAlgebra::Ptr algebra_;
    Mat matrix_;
    Provenance provenance_ = Provenance::BruteForce;
    std::string label_;
    bool multiplicative_ = false;
};

/// Invertible, unital and multiplicative on all prime-basis pairs.
bool is_automorphism(const AlgebraMorphism& map);

/// The extension sum a_i t^i -> tau(a_0) + sum tau(a_i) (prod sigma^l(k)) t^i.
/// With enforce_constraints the side conditions (k a unit of C, tau commutes
/// with sigma and fixes S0, tau(d) = N(k) d) are checked and multiplicativity
/// is asserted; without, the raw map is built for testing.
AlgebraMorphism make_H(const TauDescriptor& tau, const Coords& k_in_C, const GaloisData& data,
                       const PetitAlgebra::Ptr& algebra, bool enforce_constraints = true);

/// All H_{tau,k} over the supplied tau list and all units k of C with
/// tau(d) = N(k) d, deduplicated by matrix.
std::vector<AlgebraMorphism> enumerate_theoretic(const PetitAlgebra::Ptr& algebra,
                                                 const GaloisData& data,
                                                 const std::vector<TauDescriptor>& taus);

/// Independent oracle: searches all candidate generator images, extends each
/// along a fixed derivation of the prime basis from the generators, and keeps
/// the unital multiplicative bijections.  The result is asserted to be a
/// group under composition.
std::vector<AlgebraMorphism> enumerate_bruteforce(const PetitAlgebra::Ptr& algebra,
                                                  const std::vector<AlgebraElement>& generators,
                                                  std::uint64_t budget = 1u << 20);

/// x -> (m_l x) m; m_l must be a left inverse of m.
AlgebraMorphism inner_G(const AlgebraElement& m, const AlgebraElement& m_l);
/// Conjugation by an invertible element n (m_l = n^-1).
AlgebraMorphism inner_from_invertible(const PetitAlgebra::Ptr& algebra, const Coords& n);

/// When k is a coboundary c^-1 sigma(c): the pair (c, H_{tau,1}) with the
/// matrix identity H_{tau,k} = G_c . H_{tau,1} verified; nullopt when no c
/// exists.
std::optional<std::pair<Coords, AlgebraMorphism>> decompose_inner(const AlgebraMorphism& H,
                                                                  const TauDescriptor& tau,
                                                                  const GaloisData& data);

/// Desk-scale checks of the inner-automorphism subgroup laws over the
/// invertible nucleus elements.
std::vector<Verdict> inner_subgroup_properties(const PetitAlgebra::Ptr& algebra,
                                               std::uint64_t bound = 1u << 12);

/// The maps G_{c t^-j} on an associative cyclic-form algebra, deduplicated.
std::vector<AlgebraMorphism> csa_inner_listing(const PetitAlgebra::Ptr& algebra, const GaloisData& data);

/// Structured family of automorphism candidates of the coefficient ring
/// (Frobenius powers; shift powers; entrywise base automorphism composed
/// with unit conjugations for matrix rings).
std::vector<RingAut> candidate_automorphisms(const Ring::Ptr& D, std::uint64_t bound = kDefaultEnumBound);

/// Candidates that fix S0 elementwise and commute with sigma; closure under
/// composition is asserted.
std::vector<TauDescriptor> commuting_tau_inventory(const Ring::Ptr& D, const RingAut& sigma,
                                                   const Subspace& s0_in_coeff,
                                                   const std::vector<RingAut>& candidates);

}  // namespace petit

#endif
