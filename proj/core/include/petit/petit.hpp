#ifndef PETIT_PETIT_HPP
#define PETIT_PETIT_HPP

#include <memory>
#include <string>
#include <vector>

#include "petit/skewpoly.hpp"

namespace petit {

struct center_mismatch_error : error {
    using error::error;
};

/// Quotient algebra of a skew polynomial ring by the left ideal generated by
/// f: representatives are the skew polynomials of degree < deg f, multiplied
/// by "multiply, then reduce by right division by f".  Nonassociative in
/// general.  The GF(p) basis is b_i t^j with flat index j*dim(D) + i.
class PetitAlgebra {
public:
    using Ptr = std::shared_ptr<const PetitAlgebra>;

    static Ptr make(const SkewPolyRing::Ptr& ring, const SkewPoly& f);

    const SkewPolyRing::Ptr& poly_ring() const { return ring_; }
    const Ring::Ptr& coeff() const { return ring_->coeff(); }
    const SkewPoly& f() const { return f_; }
    int m() const { return m_; }
    int dim() const { return dim_; }
    int p() const { return coeff()->p(); }

    /// True when f = t^m - d with d a unit of the coefficient ring.
    bool cyclic_form() const { return cyclic_form_; }
    const Coords& d() const;

    Coords to_coords(const SkewPoly& g) const;
    SkewPoly from_coords(const Coords& v) const;

    Coords mul(const Coords& g, const Coords& h) const;  // the circ product
    Coords add(const Coords& g, const Coords& h) const { return add_coords(g, h, p()); }
    Coords sub(const Coords& g, const Coords& h) const { return sub_coords(g, h, p()); }
    const Coords& one() const { return one_; }
    Coords basis_element(int idx) const;
    std::string basis_label(int idx) const;  // "b{i}t{j}"

    /// Embed a coefficient-ring element as a degree-0 algebra element.
    Coords embed_coeff(const Coords& a) const;
    /// Coordinates of a t^j (a in coefficient-ring coordinates).
    Coords embed_at_power(const Coords& a, int j) const;
    Coords t_element(int j = 1) const;  // coordinates of t^j

    Mat left_mul_matrix(const Coords& g) const;
    Mat right_mul_matrix(const Coords& g) const;
    std::optional<Coords> inverse(const Coords& g) const;

    /// Lift a subspace of the coefficient ring to degree-0 algebra elements.
    Subspace lift_coeff_subspace(const Subspace& s) const;
    /// Configured center candidate S0 = C(D) /\ Fix(sigma), embedded at degree 0.
    const Subspace& s0_embedded() const { return s0_embedded_; }
    const Subspace& s0_in_coeff() const { return s0_in_coeff_; }

    std::string format(const Coords& g) const;

private:
    PetitAlgebra() = default;
    SkewPolyRing::Ptr ring_;
    SkewPoly f_;
    int m_ = 0, dim_ = 0;
    bool cyclic_form_ = false;
    Coords d_;
    Coords one_;
    Subspace s0_in_coeff_, s0_embedded_;
    std::vector<Coords> table_;  // cached circ products of basis pairs (when small)
    bool cached_ = false;
    Coords mul_uncached(const Coords& g, const Coords& h) const;
};

/// Element wrapper used by client code; arithmetic delegates to the algebra.
class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(PetitAlgebra::Ptr algebra, Coords coords);
    static AlgebraElement from_poly(const PetitAlgebra::Ptr& algebra, const SkewPoly& g);

    const PetitAlgebra::Ptr& algebra() const { return algebra_; }
    const Coords& coords() const { return coords_; }
    SkewPoly poly() const { return algebra_->from_coords(coords_); }

    AlgebraElement operator+(const AlgebraElement& rhs) const;
    AlgebraElement operator-(const AlgebraElement& rhs) const;
    AlgebraElement operator*(const AlgebraElement& rhs) const;  // circ
    bool operator==(const AlgebraElement& rhs) const { return coords_ == rhs.coords_; }

private:
    PetitAlgebra::Ptr algebra_;
    Coords coords_;
};

/// (xy)z - x(yz).
AlgebraElement associator(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z);

enum class NucleusSlot { Left, Middle, Right };

/// Nucleus as the nullspace of stacked associator maps over basis pairs.
Subspace nucleus(const PetitAlgebra::Ptr& algebra, NucleusSlot slot);
/// Right nucleus via the independent membership test  f g in R f.
Subspace right_nucleus_by_division(const PetitAlgebra::Ptr& algebra);

/// Elements commuting with the whole algebra, via the linear condition.
Subspace commutant(const PetitAlgebra::Ptr& algebra);
/// The same set via the coefficient description d_i in Fix(sigma),
/// c d_i = d_i sigma^i(c); equal to commutant() when the constant term of f
/// is a unit.
Subspace commutant_by_coefficients(const PetitAlgebra::Ptr& algebra);

/// commutant /\ all three nuclei; throws center_mismatch_error when the
/// result differs from the configured S0 (cyclic-form algebras only).
Subspace center_of_algebra(const PetitAlgebra::Ptr& algebra);

bool is_associative(const PetitAlgebra::Ptr& algebra);

/// Centralizer of a coefficient-ring subspace embedded at degree 0.
Subspace centralizer_in_algebra(const PetitAlgebra::Ptr& algebra, const Subspace& sub_of_coeff);

struct SMinimal {
    int s = 0;  // smallest s >= 1 with sigma^s(d) = d
    int r = 0;
    int b = 0;  // m = r*s + b, 0 <= b < s
};
SMinimal s_minimal(const PetitAlgebra::Ptr& algebra);

struct Verdict {
    std::string name;
    bool pass = false;
    std::string predicted;
    std::string computed;
};

struct StructureReport {
    Subspace nuc_l, nuc_m, nuc_r, center, commutant_space;
    bool associative = false;
    SMinimal stratification;
    std::vector<Verdict> verdicts;
};

/// Full structural analysis with the theorem cross-checks recorded as
/// verdicts (each carries the predicted and the computed object).
StructureReport compute_structure(const PetitAlgebra::Ptr& algebra);

/// Desk-scale domain test for a commutative subring given by a basis.
bool subring_is_domain(const Ring::Ptr& ring, const Subspace& s,
                       std::uint64_t bound = kDefaultEnumBound);

std::string subspace_str(const Subspace& s);

}  // namespace petit

#endif
