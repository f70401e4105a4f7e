#ifndef PETIT_SKEWPOLY_HPP
#define PETIT_SKEWPOLY_HPP

#include <memory>
#include <string>
#include <vector>

#include "petit/ring.hpp"

namespace petit {

struct ring_mismatch_error : error {
    using error::error;
};

/// Degree of a skew polynomial: a natural number or the distinguished
/// minus-infinity value of the zero polynomial.
class Degree {
public:
    static Degree neg_inf() { return Degree(); }
    static Degree of(int n) {
        Degree d;
        d.finite_ = true;
        d.n_ = n;
        return d;
    }
    bool is_neg_inf() const { return !finite_; }
    int value() const {
        if (!finite_) throw error("degree of the zero polynomial has no integer value");
        return n_;
    }
    Degree operator+(const Degree& rhs) const {
        if (!finite_ || !rhs.finite_) return neg_inf();
        return of(n_ + rhs.n_);
    }
    bool operator==(const Degree&) const = default;
    bool operator<(const Degree& rhs) const {
        if (!finite_) return rhs.finite_;
        if (!rhs.finite_) return false;
        return n_ < rhs.n_;
    }
    bool operator<=(const Degree& rhs) const { return *this == rhs || *this < rhs; }

private:
    Degree() = default;
    bool finite_ = false;
    int n_ = 0;
};

/// D[t; sigma, delta].  delta is an additive map given by its GF(p)-matrix;
/// the left sigma-derivation law delta(ab) = sigma(a)delta(b) + delta(a)b is
/// verified on all basis pairs at construction.
class SkewPolyRing {
public:
    using Ptr = std::shared_ptr<const SkewPolyRing>;

    static Ptr make(const Ring::Ptr& coeff, const RingAut& sigma);
    static Ptr make(const Ring::Ptr& coeff, const RingAut& sigma, const Mat& delta);

    /// The inner sigma-derivation a -> sigma(a) beta - beta a.
    static Mat inner_derivation(const Ring::Ptr& coeff, const RingAut& sigma, const Coords& beta);

    const Ring::Ptr& coeff() const { return coeff_; }
    const RingAut& sigma() const { return sigma_; }
    const Mat& delta() const { return delta_; }
    bool delta_is_zero() const { return delta_.is_zero(); }

private:
    SkewPolyRing() = default;
    Ring::Ptr coeff_;
    RingAut sigma_;
    Mat delta_;
};

/// Element of D[t; sigma, delta] in canonical form (trailing zeros trimmed).
class SkewPoly {
public:
    SkewPoly() = default;

    static SkewPoly zero(const SkewPolyRing::Ptr& ring);
    static SkewPoly one(const SkewPolyRing::Ptr& ring);
    static SkewPoly from_coeffs(const SkewPolyRing::Ptr& ring, std::vector<Coords> coeffs);
    static SkewPoly monomial(const SkewPolyRing::Ptr& ring, const Coords& a, int n);
    static SkewPoly constant(const SkewPolyRing::Ptr& ring, const Coords& a);

    const SkewPolyRing::Ptr& ring() const { return ring_; }
    Degree degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of t^i (zero for i beyond the degree).
    Coords coeff(int i) const;
    const std::vector<Coords>& coeffs() const { return coeffs_; }
    Coords leading_coeff() const;

    SkewPoly operator+(const SkewPoly& rhs) const;
    SkewPoly operator-(const SkewPoly& rhs) const;
    SkewPoly operator*(const SkewPoly& rhs) const;  // commutation rule t a = sigma(a) t + delta(a)
    bool operator==(const SkewPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

    std::string str() const;

private:
    SkewPolyRing::Ptr ring_;
    std::vector<Coords> coeffs_;
    void trim();
};

/// Matrix of the coefficient operator in the expansion
/// a t^n . b t^m = sum_j a (Delta_{n,j} b) t^{m+j}, with the recursion
/// Delta_{n,j} = delta Delta_{n-1,j} + sigma Delta_{n-1,j-1}.
Mat delta_op(int n, int j, const SkewPolyRing::Ptr& ring);

struct DivisionResult {
    SkewPoly quotient;
    SkewPoly remainder;
};

/// g = q f + r with deg r < deg f; requires a unit leading coefficient of f.
/// In checked mode the decomposition is re-verified by reconstruction.
DivisionResult right_divide(const SkewPoly& g, const SkewPoly& f, bool checked = false);
SkewPoly mod_r(const SkewPoly& g, const SkewPoly& f, bool checked = false);

SkewPoly parse_skew_poly(const SkewPolyRing::Ptr& ring, const std::string& text);

}  // namespace petit

#endif
