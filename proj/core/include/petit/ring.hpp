#ifndef PETIT_RING_HPP
#define PETIT_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "petit/gfmat.hpp"

namespace petit {

struct reducible_modulus_error : error {
    using error::error;
};
struct ring_too_large_error : error {
    using error::error;
};

/// Default cap on exhaustive element / idempotent enumeration.
inline constexpr std::uint64_t kDefaultEnumBound = 1u << 16;

/// A finite coefficient ring presented by structure constants over GF(p).
/// Every element is a coordinate vector in the canonical basis (power basis
/// for fields, coordinate basis for split rings, entry basis for matrices),
/// so structural questions become linear algebra over GF(p).
class Ring {
public:
    using Ptr = std::shared_ptr<const Ring>;

    enum class Kind { PrimeField, ExtensionField, SplitRing, MatrixRing };

    static Ptr prime_field(int p);
    /// GF(p^n) as GF(p)[x]/(modulus); throws reducible_modulus_error naming a
    /// nontrivial factor if the modulus is not irreducible.
    static Ptr extension_field(int p, const std::vector<int>& modulus);
    static Ptr split_ring(int p, int copies);
    static Ptr matrix_ring(const Ptr& base, int n);

    Kind kind() const { return kind_; }
    int p() const { return p_; }
    int dim() const { return dim_; }
    bool commutative() const { return commutative_; }
    const Ptr& base() const { return base_; }
    int matrix_size() const { return matrix_size_; }
    int copies() const { return copies_; }
    const std::vector<int>& modulus() const { return modulus_; }
    std::string describe() const;

    const Coords& zero() const { return zero_; }
    const Coords& one() const { return one_; }
    /// Power-basis generator x for extension fields.
    Coords generator() const;
    const Coords& basis_product(int i, int j) const { return table_[static_cast<std::size_t>(i) * dim_ + j]; }

    Coords mul(const Coords& a, const Coords& b) const;
    Coords add(const Coords& a, const Coords& b) const { return add_coords(a, b, p_); }
    Coords sub(const Coords& a, const Coords& b) const { return sub_coords(a, b, p_); }
    Coords neg(const Coords& a) const { return scale_coords(a, -1, p_); }
    Coords pow(const Coords& a, std::uint64_t e) const;

    Mat left_mul_matrix(const Coords& a) const;
    Mat right_mul_matrix(const Coords& a) const;

    /// Verified two-sided inverse, or nullopt.
    std::optional<Coords> inverse(const Coords& a) const;
    bool is_unit(const Coords& a) const { return inverse(a).has_value(); }

    std::uint64_t size_or_throw(std::uint64_t bound = kDefaultEnumBound) const;
    std::vector<Coords> elements(std::uint64_t bound = kDefaultEnumBound) const;
    std::vector<Coords> units(std::uint64_t bound = kDefaultEnumBound) const;
    std::vector<Coords> idempotents(std::uint64_t bound = kDefaultEnumBound) const;

    /// Coordinate-tuple literal, e.g. "(1,1)".
    std::string format(const Coords& a) const;
    Coords parse(const std::string& text) const;

    /// Embed a base-ring element as a scalar matrix (matrix rings only).
    Coords scalar_embed(const Coords& base_elt) const;

private:
    Ring() = default;

    Kind kind_ = Kind::PrimeField;
    int p_ = 2, dim_ = 1;
    bool commutative_ = true;
    Ptr base_;
    int matrix_size_ = 0, copies_ = 0;
    std::vector<int> modulus_;
    Coords zero_, one_;
    std::vector<Coords> table_;  // dim*dim basis products

    void finish();  // fills zero/one sanity state
};

/// An automorphism of a Ring, realized as its GF(p)-matrix on the canonical
/// basis.  Construction verifies multiplicativity on all basis pairs and a
/// two-sided inverse matrix.
class RingAut {
public:
    RingAut() = default;

    static RingAut identity(const Ring::Ptr& ring);
    /// x -> x^(p^e) on an extension field (or prime field, where it is id).
    static RingAut frobenius(const Ring::Ptr& field, int e);
    static RingAut cyclic_shift(const Ring::Ptr& split_ring);
    /// (entrywise base automorphism) then conjugation u . u^-1 on a matrix ring.
    static RingAut matrix_entrywise(const Ring::Ptr& matrix_ring, const RingAut& base_aut,
                                    const std::optional<Coords>& conjugator = std::nullopt);
    /// Arbitrary matrix, verified as a ring automorphism.
    static RingAut from_matrix(const Ring::Ptr& ring, const Mat& m, std::string label);

    const Ring::Ptr& ring() const { return ring_; }
    const Mat& matrix() const { return matrix_; }
    const std::string& label() const { return label_; }
    int order() const { return order_; }

    Coords apply(const Coords& a) const { return matrix_.apply(a); }
    bool is_identity() const;

    /// (f.compose(g))(x) = f(g(x))
    RingAut compose(const RingAut& g) const;
    RingAut inverse() const;
    RingAut power(int e) const;

    bool operator==(const RingAut& rhs) const { return matrix_ == rhs.matrix_; }

private:
    Ring::Ptr ring_;
    Mat matrix_;
    std::string label_;
    int order_ = 0;
};

/// Fix(sigma) as a subring basis: nullspace of (sigma - id).
Subspace fixed_ring(const Ring::Ptr& ring, const RingAut& sigma);

/// Center of an associative ring via the linear system [x, b_i] = 0.
Subspace center_subring(const Ring::Ptr& ring);

/// Whether the span of a subspace is closed under ring multiplication.
bool is_multiplicatively_closed(const Ring::Ptr& ring, const Subspace& s);

/// True iff for every nonzero idempotent e there is x with
/// sigma(x) e != tau(x) e.  Idempotents are enumerated exhaustively.
bool strongly_distinct(const RingAut& sigma, const RingAut& tau, const Ring::Ptr& ring,
                       std::uint64_t bound = kDefaultEnumBound);

/// True iff the ideal generated by { c - sigma^i(c) : c in C } is all of C.
bool difference_ideal_is_full(const Ring::Ptr& C, const RingAut& sigma, int i);

}  // namespace petit

#endif
