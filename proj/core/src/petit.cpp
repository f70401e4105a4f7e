#include "petit/petit.hpp"

#include <sstream>

namespace petit {

namespace {
constexpr int kTableCacheDim = 256;
}

PetitAlgebra::Ptr PetitAlgebra::make(const SkewPolyRing::Ptr& ring, const SkewPoly& f) {
    if (f.degree().is_neg_inf() || f.degree().value() < 2)
        throw error("quotient divisor must have degree >= 2 (degree-1 quotients are just the coefficient ring)");
    const Ring::Ptr& D = ring->coeff();
    if (!D->is_unit(f.leading_coeff())) throw error("leading coefficient of f is not a unit");
    auto alg = std::shared_ptr<PetitAlgebra>(new PetitAlgebra());
    alg->ring_ = ring;
    alg->f_ = f;
    alg->m_ = f.degree().value();
    alg->dim_ = alg->m_ * D->dim();

    // Detect the cyclic form t^m - d with d a unit.
    bool cyclic = f.leading_coeff() == D->one();
    for (int i = 1; i < alg->m_ && cyclic; ++i)
        if (!is_zero_coords(f.coeff(i))) cyclic = false;
    if (cyclic) {
        Coords d = D->neg(f.coeff(0));
        if (is_zero_coords(d)) throw error("f = t^m needs a unit d: t is not invertible when d = 0");
        if (D->is_unit(d)) {
            alg->cyclic_form_ = true;
            alg->d_ = d;
        }
    }

    alg->one_.assign(alg->dim_, 0);
    for (int k = 0; k < D->dim(); ++k) alg->one_[k] = D->one()[k];

    alg->s0_in_coeff_ = center_subring(D).intersect(fixed_ring(D, ring->sigma()));
    alg->s0_embedded_ = alg->lift_coeff_subspace(alg->s0_in_coeff_);

    if (alg->dim_ <= kTableCacheDim) {
        alg->table_.resize(static_cast<std::size_t>(alg->dim_) * alg->dim_);
        for (int i = 0; i < alg->dim_; ++i)
            for (int j = 0; j < alg->dim_; ++j)
                alg->table_[static_cast<std::size_t>(i) * alg->dim_ + j] =
                    alg->mul_uncached(alg->basis_element(i), alg->basis_element(j));
        alg->cached_ = true;
        // The two-case product must agree with unconditional multiply-then-reduce.
        for (int i = 0; i < alg->dim_; ++i)
            for (int j = 0; j < alg->dim_; ++j) {
                SkewPoly gi = alg->from_coords(alg->basis_element(i));
                SkewPoly gj = alg->from_coords(alg->basis_element(j));
                if (alg->to_coords(mod_r(gi * gj, f)) != alg->table_[static_cast<std::size_t>(i) * alg->dim_ + j])
                    throw error("two-case product disagrees with reduction on basis pair");
            }
    }
    return alg;
}

const Coords& PetitAlgebra::d() const {
    if (!cyclic_form_) throw error("algebra divisor is not of the form t^m - d with d a unit");
    return d_;
}

Coords PetitAlgebra::to_coords(const SkewPoly& g) const {
    if (!(g.degree() < Degree::of(m_))) throw error("representative degree exceeds quotient bound");
    const int bd = coeff()->dim();
    Coords v(dim_, 0);
    for (int j = 0; j < m_; ++j) {
        Coords c = g.coeff(j);
        for (int i = 0; i < bd; ++i) v[j * bd + i] = c[i];
    }
    return v;
}

SkewPoly PetitAlgebra::from_coords(const Coords& v) const {
    if (static_cast<int>(v.size()) != dim_) throw error("coordinate length mismatch");
    const int bd = coeff()->dim();
    std::vector<Coords> cs(m_, Coords(bd, 0));
    for (int j = 0; j < m_; ++j)
        for (int i = 0; i < bd; ++i) cs[j][i] = v[j * bd + i];
    return SkewPoly::from_coeffs(ring_, std::move(cs));
}

Coords PetitAlgebra::mul_uncached(const Coords& g, const Coords& h) const {
    SkewPoly gp = from_coords(g);
    SkewPoly hp = from_coords(h);
    SkewPoly prod = gp * hp;
    if (gp.degree() + hp.degree() < Degree::of(m_)) return to_coords(prod);
    return to_coords(mod_r(prod, f_));
}

Coords PetitAlgebra::mul(const Coords& g, const Coords& h) const {
    if (static_cast<int>(g.size()) != dim_ || static_cast<int>(h.size()) != dim_)
        throw ring_mismatch_error("algebra element dimension mismatch");
    if (!cached_) return mul_uncached(g, h);
    Coords out(dim_, 0);
    const int p = this->p();
    for (int i = 0; i < dim_; ++i) {
        if (!g[i]) continue;
        for (int j = 0; j < dim_; ++j) {
            if (!h[j]) continue;
            int fct = g[i] * h[j] % p;
            const Coords& prod = table_[static_cast<std::size_t>(i) * dim_ + j];
            for (int k = 0; k < dim_; ++k) out[k] = static_cast<std::uint8_t>((out[k] + fct * prod[k]) % p);
        }
    }
    return out;
}

Coords PetitAlgebra::basis_element(int idx) const {
    Coords v(dim_, 0);
    v[idx] = 1;
    return v;
}

std::string PetitAlgebra::basis_label(int idx) const {
    const int bd = coeff()->dim();
    return "b" + std::to_string(idx % bd) + "t" + std::to_string(idx / bd);
}

Coords PetitAlgebra::embed_coeff(const Coords& a) const { return embed_at_power(a, 0); }

Coords PetitAlgebra::embed_at_power(const Coords& a, int j) const {
    const int bd = coeff()->dim();
    if (static_cast<int>(a.size()) != bd) throw error("coefficient dimension mismatch");
    if (j < 0 || j >= m_) throw error("power out of range");
    Coords v(dim_, 0);
    for (int i = 0; i < bd; ++i) v[j * bd + i] = a[i];
    return v;
}

Coords PetitAlgebra::t_element(int j) const { return embed_at_power(coeff()->one(), j); }

Mat PetitAlgebra::left_mul_matrix(const Coords& g) const {
    std::vector<Coords> cols;
    for (int j = 0; j < dim_; ++j) cols.push_back(mul(g, basis_element(j)));
    return Mat::from_cols(cols, dim_, p());
}

Mat PetitAlgebra::right_mul_matrix(const Coords& g) const {
    std::vector<Coords> cols;
    for (int j = 0; j < dim_; ++j) cols.push_back(mul(basis_element(j), g));
    return Mat::from_cols(cols, dim_, p());
}

std::optional<Coords> PetitAlgebra::inverse(const Coords& g) const {
    std::optional<Coords> x = left_mul_matrix(g).solve(one_);
    if (!x) return std::nullopt;
    if (mul(*x, g) != one_ || mul(g, *x) != one_) return std::nullopt;
    return x;
}

Subspace PetitAlgebra::lift_coeff_subspace(const Subspace& s) const {
    std::vector<Coords> rows;
    for (int r = 0; r < s.dim(); ++r) rows.push_back(embed_coeff(s.basis_vector(r)));
    return Subspace::span(rows, dim_, p());
}

std::string PetitAlgebra::format(const Coords& g) const { return from_coords(g).str(); }

AlgebraElement::AlgebraElement(PetitAlgebra::Ptr algebra, Coords coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != algebra_->dim()) throw error("element coordinate length mismatch");
}

AlgebraElement AlgebraElement::from_poly(const PetitAlgebra::Ptr& algebra, const SkewPoly& g) {
    return AlgebraElement(algebra, algebra->to_coords(g));
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& rhs) const {
    if (algebra_ != rhs.algebra_) throw ring_mismatch_error("elements of different algebras");
    return AlgebraElement(algebra_, algebra_->add(coords_, rhs.coords_));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& rhs) const {
    if (algebra_ != rhs.algebra_) throw ring_mismatch_error("elements of different algebras");
    return AlgebraElement(algebra_, algebra_->sub(coords_, rhs.coords_));
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& rhs) const {
    if (algebra_ != rhs.algebra_) throw ring_mismatch_error("elements of different algebras");
    return AlgebraElement(algebra_, algebra_->mul(coords_, rhs.coords_));
}

AlgebraElement associator(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z) {
    return (x * y) * z - x * (y * z);
}

namespace {

Subspace stacked_nullspace(const std::vector<Mat>& maps, int dim, int p) {
    Mat stacked(static_cast<int>(maps.size()) * dim, dim, p);
    for (std::size_t k = 0; k < maps.size(); ++k)
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) stacked.at(static_cast<int>(k) * dim + r, c) = maps[k].at(r, c);
    return Subspace::row_space(stacked.nullspace());
}

}  // namespace

Subspace nucleus(const PetitAlgebra::Ptr& algebra, NucleusSlot slot) {
    const int n = algebra->dim();
    std::vector<Mat> left(n), right(n);
    for (int i = 0; i < n; ++i) {
        left[i] = algebra->left_mul_matrix(algebra->basis_element(i));
        right[i] = algebra->right_mul_matrix(algebra->basis_element(i));
    }
    std::vector<Mat> maps;
    maps.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Coords prod = algebra->mul(algebra->basis_element(i), algebra->basis_element(j));
            switch (slot) {
                case NucleusSlot::Left:
                    maps.push_back(right[j] * right[i] - algebra->right_mul_matrix(prod));
                    break;
                case NucleusSlot::Middle:
                    maps.push_back(right[j] * left[i] - left[i] * right[j]);
                    break;
                case NucleusSlot::Right:
                    maps.push_back(algebra->left_mul_matrix(prod) - left[i] * left[j]);
                    break;
            }
        }
    return stacked_nullspace(maps, n, algebra->p());
}

Subspace right_nucleus_by_division(const PetitAlgebra::Ptr& algebra) {
    const int n = algebra->dim();
    std::vector<Coords> cols;
    for (int i = 0; i < n; ++i) {
        SkewPoly g = algebra->from_coords(algebra->basis_element(i));
        cols.push_back(algebra->to_coords(mod_r(algebra->f() * g, algebra->f())));
    }
    return Subspace::row_space(Mat::from_cols(cols, n, algebra->p()).nullspace());
}

Subspace commutant(const PetitAlgebra::Ptr& algebra) {
    const int n = algebra->dim();
    std::vector<Mat> maps;
    for (int i = 0; i < n; ++i) {
        Coords b = algebra->basis_element(i);
        maps.push_back(algebra->left_mul_matrix(b) - algebra->right_mul_matrix(b));
    }
    return stacked_nullspace(maps, n, algebra->p());
}

Subspace commutant_by_coefficients(const PetitAlgebra::Ptr& algebra) {
    if (!algebra->poly_ring()->delta_is_zero())
        throw error("coefficient description of the commutant needs delta = 0");
    const Ring::Ptr& D = algebra->coeff();
    const int bd = D->dim();
    Subspace result = Subspace::zero(algebra->dim(), algebra->p());
    for (int i = 0; i < algebra->m(); ++i) {
        std::vector<Mat> maps;
        maps.push_back(algebra->poly_ring()->sigma().matrix() - Mat::identity(bd, D->p()));
        RingAut si = algebra->poly_ring()->sigma().power(i);
        for (int c = 0; c < bd; ++c) {
            Coords ec(bd, 0);
            ec[c] = 1;
            maps.push_back(D->left_mul_matrix(ec) - D->right_mul_matrix(si.apply(ec)));
        }
        Subspace vi = stacked_nullspace(maps, bd, D->p());
        std::vector<Coords> rows;
        for (int r = 0; r < vi.dim(); ++r) rows.push_back(algebra->embed_at_power(vi.basis_vector(r), i));
        result = result.sum(Subspace::span(rows, algebra->dim(), algebra->p()));
    }
    return result;
}

Subspace center_of_algebra(const PetitAlgebra::Ptr& algebra) {
    Subspace c = commutant(algebra)
                     .intersect(nucleus(algebra, NucleusSlot::Left))
                     .intersect(nucleus(algebra, NucleusSlot::Middle))
                     .intersect(nucleus(algebra, NucleusSlot::Right));
    if (algebra->cyclic_form() && !(c == algebra->s0_embedded()))
        throw center_mismatch_error("computed center differs from the configured S0: the ring tower is mis-specified");
    return c;
}

bool is_associative(const PetitAlgebra::Ptr& algebra) {
    const int n = algebra->dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Coords ij = algebra->mul(algebra->basis_element(i), algebra->basis_element(j));
            for (int k = 0; k < n; ++k) {
                Coords jk = algebra->mul(algebra->basis_element(j), algebra->basis_element(k));
                if (algebra->mul(ij, algebra->basis_element(k)) != algebra->mul(algebra->basis_element(i), jk))
                    return false;
            }
        }
    return true;
}

Subspace centralizer_in_algebra(const PetitAlgebra::Ptr& algebra, const Subspace& sub_of_coeff) {
    std::vector<Mat> maps;
    for (int r = 0; r < sub_of_coeff.dim(); ++r) {
        Coords c = algebra->embed_coeff(sub_of_coeff.basis_vector(r));
        maps.push_back(algebra->left_mul_matrix(c) - algebra->right_mul_matrix(c));
    }
    if (maps.empty()) return Subspace::full(algebra->dim(), algebra->p());
    return stacked_nullspace(maps, algebra->dim(), algebra->p());
}

SMinimal s_minimal(const PetitAlgebra::Ptr& algebra) {
    const Coords& d = algebra->d();
    const RingAut& sigma = algebra->poly_ring()->sigma();
    SMinimal out;
    for (int s = 1; s <= sigma.order(); ++s) {
        if (sigma.power(s).apply(d) == d) {
            out.s = s;
            break;
        }
    }
    if (out.s == 0) throw error("no power of sigma fixes d");
    out.r = algebra->m() / out.s;
    out.b = algebra->m() % out.s;
    return out;
}

bool subring_is_domain(const Ring::Ptr& ring, const Subspace& s, std::uint64_t bound) {
    std::vector<Coords> elems = s.enumerate(bound);
    for (const Coords& a : elems) {
        if (is_zero_coords(a)) continue;
        for (const Coords& b : elems) {
            if (is_zero_coords(b)) continue;
            if (is_zero_coords(ring->mul(a, b))) return false;
        }
    }
    return true;
}

std::string subspace_str(const Subspace& s) {
    std::ostringstream os;
    os << "dim=" << s.dim() << " basis=[";
    for (int r = 0; r < s.dim(); ++r) {
        if (r) os << ", ";
        os << "(";
        Coords v = s.basis_vector(r);
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ",";
            os << static_cast<int>(v[i]);
        }
        os << ")";
    }
    os << "]";
    return os.str();
}

StructureReport compute_structure(const PetitAlgebra::Ptr& algebra) {
    StructureReport rep;
    rep.nuc_l = nucleus(algebra, NucleusSlot::Left);
    rep.nuc_m = nucleus(algebra, NucleusSlot::Middle);
    rep.nuc_r = nucleus(algebra, NucleusSlot::Right);
    rep.commutant_space = commutant(algebra);
    rep.center = center_of_algebra(algebra);
    rep.associative = is_associative(algebra);

    const Ring::Ptr& D = algebra->coeff();
    Subspace whole_coeff = algebra->lift_coeff_subspace(Subspace::full(D->dim(), D->p()));
    Subspace center_coeff = center_subring(D);

    {
        Verdict v;
        v.name = "right-nucleus-two-routes";
        Subspace alt = right_nucleus_by_division(algebra);
        v.pass = rep.nuc_r == alt;
        v.predicted = subspace_str(rep.nuc_r);
        v.computed = subspace_str(alt);
        rep.verdicts.push_back(std::move(v));
    }

    if (algebra->cyclic_form()) {
        rep.stratification = s_minimal(algebra);

        if (algebra->poly_ring()->delta_is_zero()) {
            Verdict v;
            v.name = "commutant-two-routes";
            Subspace alt = commutant_by_coefficients(algebra);
            v.pass = rep.commutant_space == alt;
            v.predicted = subspace_str(rep.commutant_space);
            v.computed = subspace_str(alt);
            rep.verdicts.push_back(std::move(v));
        }
        {
            Verdict v;
            v.name = "center-identification";
            v.pass = rep.center == algebra->s0_embedded();
            v.predicted = subspace_str(algebra->s0_embedded());
            v.computed = subspace_str(rep.center);
            rep.verdicts.push_back(std::move(v));
        }
        {
            Verdict v;
            v.name = "associativity-criterion";
            bool d_in_s0 = algebra->s0_in_coeff().contains(algebra->d());
            v.pass = rep.associative == d_in_s0;
            v.predicted = d_in_s0 ? "associative (d in S0)" : "nonassociative (d not in S0)";
            v.computed = rep.associative ? "associative" : "nonassociative";
            rep.verdicts.push_back(std::move(v));
        }
        bool s0_domain = subring_is_domain(D, algebra->s0_in_coeff());
        if (D->commutative() && !rep.associative && s0_domain) {
            Verdict v;
            v.name = "left-middle-nucleus";
            v.pass = rep.nuc_l == whole_coeff && rep.nuc_m == whole_coeff;
            v.predicted = subspace_str(whole_coeff);
            v.computed = subspace_str(rep.nuc_l) + " / " + subspace_str(rep.nuc_m);
            rep.verdicts.push_back(std::move(v));
        }
        {
            Verdict v;
            v.name = "right-nucleus-stratification";
            const SMinimal& sm = rep.stratification;
            Subspace predicted = Subspace::zero(algebra->dim(), algebra->p());
            int top = (sm.b == 0) ? sm.r - 1 : sm.r;
            for (int j = 0; j <= top; ++j) {
                std::vector<Coords> rows;
                for (int r = 0; r < center_coeff.dim(); ++r)
                    rows.push_back(algebra->embed_at_power(center_coeff.basis_vector(r), j * sm.s));
                predicted = predicted.sum(Subspace::span(rows, algebra->dim(), algebra->p()));
            }
            bool assert_equality = D->commutative() && sm.b == 0 &&
                                   (s0_domain || (sm.s != 1 && is_prime(sm.s)));
            v.pass = assert_equality ? rep.nuc_r == predicted : rep.nuc_r.contains(predicted);
            v.predicted = std::string(assert_equality ? "equals " : "contains ") + subspace_str(predicted);
            v.computed = subspace_str(rep.nuc_r);
            rep.verdicts.push_back(std::move(v));
        }
        {
            Verdict v;
            v.name = "centralizer-of-center";
            Subspace cent = centralizer_in_algebra(algebra, center_coeff);
            v.pass = cent == whole_coeff;
            v.predicted = subspace_str(whole_coeff);
            v.computed = subspace_str(cent);
            rep.verdicts.push_back(std::move(v));
        }
    }

    {
        // S_{af} invariance for a few deterministic units a.
        Verdict v;
        v.name = "af-invariance";
        v.pass = true;
        int tested = 0;
        for (const Coords& a : D->elements()) {
            if (tested >= 2) break;
            if (a == D->one() || !D->is_unit(a)) continue;
            ++tested;
            SkewPoly af = SkewPoly::constant(algebra->poly_ring(), a) * algebra->f();
            PetitAlgebra::Ptr other = PetitAlgebra::make(algebra->poly_ring(), af);
            for (int i = 0; i < algebra->dim() && v.pass; ++i)
                for (int j = 0; j < algebra->dim() && v.pass; ++j)
                    if (algebra->mul(algebra->basis_element(i), algebra->basis_element(j)) !=
                        other->mul(other->basis_element(i), other->basis_element(j)))
                        v.pass = false;
        }
        v.predicted = "identical multiplication tables for a*f";
        v.computed = v.pass ? "identical (" + std::to_string(tested) + " units tested)" : "differs";
        rep.verdicts.push_back(std::move(v));
    }
    return rep;
}

}  // namespace petit
