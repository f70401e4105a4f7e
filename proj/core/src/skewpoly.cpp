#include "petit/skewpoly.hpp"

#include <sstream>

namespace petit {

SkewPolyRing::Ptr SkewPolyRing::make(const Ring::Ptr& coeff, const RingAut& sigma) {
    return make(coeff, sigma, Mat(coeff->dim(), coeff->dim(), coeff->p()));
}

SkewPolyRing::Ptr SkewPolyRing::make(const Ring::Ptr& coeff, const RingAut& sigma, const Mat& delta) {
    if (sigma.ring() != coeff) throw error("sigma acts on a different ring");
    if (delta.rows() != coeff->dim() || delta.cols() != coeff->dim())
        throw error("delta matrix shape mismatch");
    const int n = coeff->dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Coords ei(n, 0), ej(n, 0);
            ei[i] = 1;
            ej[j] = 1;
            Coords lhs = delta.apply(coeff->basis_product(i, j));
            Coords rhs = coeff->add(coeff->mul(sigma.apply(ei), delta.apply(ej)),
                                    coeff->mul(delta.apply(ei), ej));
            if (lhs != rhs)
                throw error("delta is not a left sigma-derivation on basis pair (" + std::to_string(i) +
                            "," + std::to_string(j) + ")");
        }
    auto r = std::shared_ptr<SkewPolyRing>(new SkewPolyRing());
    r->coeff_ = coeff;
    r->sigma_ = sigma;
    r->delta_ = delta;
    return r;
}

Mat SkewPolyRing::inner_derivation(const Ring::Ptr& coeff, const RingAut& sigma, const Coords& beta) {
    return coeff->right_mul_matrix(beta) * sigma.matrix() - coeff->left_mul_matrix(beta);
}

void SkewPoly::trim() {
    while (!coeffs_.empty() && is_zero_coords(coeffs_.back())) coeffs_.pop_back();
}

SkewPoly SkewPoly::zero(const SkewPolyRing::Ptr& ring) {
    SkewPoly g;
    g.ring_ = ring;
    return g;
}

SkewPoly SkewPoly::one(const SkewPolyRing::Ptr& ring) { return constant(ring, ring->coeff()->one()); }

SkewPoly SkewPoly::from_coeffs(const SkewPolyRing::Ptr& ring, std::vector<Coords> coeffs) {
    SkewPoly g;
    g.ring_ = ring;
    for (const Coords& c : coeffs)
        if (static_cast<int>(c.size()) != ring->coeff()->dim()) throw error("coefficient dimension mismatch");
    g.coeffs_ = std::move(coeffs);
    g.trim();
    return g;
}

SkewPoly SkewPoly::monomial(const SkewPolyRing::Ptr& ring, const Coords& a, int n) {
    std::vector<Coords> cs(n + 1, Coords(ring->coeff()->dim(), 0));
    cs[n] = a;
    return from_coeffs(ring, std::move(cs));
}

SkewPoly SkewPoly::constant(const SkewPolyRing::Ptr& ring, const Coords& a) { return monomial(ring, a, 0); }

Degree SkewPoly::degree() const {
    if (coeffs_.empty()) return Degree::neg_inf();
    return Degree::of(static_cast<int>(coeffs_.size()) - 1);
}

Coords SkewPoly::coeff(int i) const {
    if (i < 0) throw error("negative coefficient index");
    if (i >= static_cast<int>(coeffs_.size())) return Coords(ring_->coeff()->dim(), 0);
    return coeffs_[i];
}

Coords SkewPoly::leading_coeff() const {
    if (coeffs_.empty()) throw error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

SkewPoly SkewPoly::operator+(const SkewPoly& rhs) const {
    if (ring_ != rhs.ring_) throw ring_mismatch_error("skew polynomials over different rings");
    std::vector<Coords> cs(std::max(coeffs_.size(), rhs.coeffs_.size()), Coords(ring_->coeff()->dim(), 0));
    for (std::size_t i = 0; i < cs.size(); ++i)
        cs[i] = ring_->coeff()->add(coeff(static_cast<int>(i)), rhs.coeff(static_cast<int>(i)));
    return from_coeffs(ring_, std::move(cs));
}

SkewPoly SkewPoly::operator-(const SkewPoly& rhs) const {
    if (ring_ != rhs.ring_) throw ring_mismatch_error("skew polynomials over different rings");
    std::vector<Coords> cs(std::max(coeffs_.size(), rhs.coeffs_.size()), Coords(ring_->coeff()->dim(), 0));
    for (std::size_t i = 0; i < cs.size(); ++i)
        cs[i] = ring_->coeff()->sub(coeff(static_cast<int>(i)), rhs.coeff(static_cast<int>(i)));
    return from_coeffs(ring_, std::move(cs));
}

SkewPoly SkewPoly::operator*(const SkewPoly& rhs) const {
    if (ring_ != rhs.ring_) throw ring_mismatch_error("skew polynomials over different rings");
    const Ring::Ptr& D = ring_->coeff();
    if (coeffs_.empty() || rhs.coeffs_.empty()) return zero(ring_);
    // Accumulate g_n * (t^n h) with t (sum b_i t^i) = sum sigma(b_i) t^{i+1} + delta(b_i) t^i.
    std::vector<Coords> shifted = rhs.coeffs_;  // t^n * h, built iteratively
    std::vector<Coords> out(coeffs_.size() + rhs.coeffs_.size() - 1, Coords(D->dim(), 0));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        const Coords& gn = coeffs_[n];
        if (!is_zero_coords(gn))
            for (std::size_t i = 0; i < shifted.size() && i < out.size(); ++i)
                out[i] = D->add(out[i], D->mul(gn, shifted[i]));
        if (n + 1 < coeffs_.size()) {
            std::vector<Coords> next(shifted.size() + 1, Coords(D->dim(), 0));
            for (std::size_t i = 0; i < shifted.size(); ++i) {
                next[i + 1] = D->add(next[i + 1], ring_->sigma().apply(shifted[i]));
                next[i] = D->add(next[i], ring_->delta().apply(shifted[i]));
            }
            shifted = std::move(next);
        }
    }
    return from_coeffs(ring_, std::move(out));
}

std::string SkewPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (is_zero_coords(coeffs_[i])) continue;
        if (!first) os << " + ";
        first = false;
        os << ring_->coeff()->format(coeffs_[i]);
        if (i == 1) os << "*t";
        else if (i > 1) os << "*t^" << i;
    }
    return os.str();
}

Mat delta_op(int n, int j, const SkewPolyRing::Ptr& ring) {
    if (j < 0 || j > n) throw error("delta_op index out of range: j must satisfy 0 <= j <= n");
    const int dim = ring->coeff()->dim();
    const int p = ring->coeff()->p();
    // row n of the recursion, built iteratively from Delta_{0,0} = id.
    std::vector<Mat> row = {Mat::identity(dim, p)};
    for (int k = 1; k <= n; ++k) {
        std::vector<Mat> next(k + 1, Mat(dim, dim, p));
        for (int l = 0; l <= k; ++l) {
            if (l <= k - 1) next[l] = ring->delta() * row[l];
            if (l >= 1) next[l] = next[l] + ring->sigma().matrix() * row[l - 1];
        }
        row = std::move(next);
    }
    return row[j];
}

DivisionResult right_divide(const SkewPoly& g, const SkewPoly& f, bool checked) {
    if (g.ring() != f.ring()) throw ring_mismatch_error("division across different rings");
    if (f.is_zero()) throw error("division by the zero polynomial");
    const SkewPolyRing::Ptr& R = g.ring();
    const Ring::Ptr& D = R->coeff();
    auto lc_inv = D->inverse(f.leading_coeff());
    if (!lc_inv) throw error("leading coefficient of the divisor is not a unit");
    const int m = f.degree().value();
    SkewPoly r = g;
    SkewPoly q = SkewPoly::zero(R);
    while (Degree::of(m) <= r.degree()) {
        const int l = r.degree().value();
        // leading term of (a t^{l-m}) f is a sigma^{l-m}(lc(f)) t^l
        Coords target = r.leading_coeff();
        Coords lc_shift = R->sigma().power(l - m).apply(f.leading_coeff());
        Coords a = D->mul(target, *D->inverse(lc_shift));
        SkewPoly term = SkewPoly::monomial(R, a, l - m);
        q = q + term;
        r = r - term * f;
        if (Degree::of(l) <= r.degree()) throw error("division failed to reduce degree");
    }
    if (checked && q * f + r != g) throw error("division reconstruction check failed");
    return {q, r};
}

SkewPoly mod_r(const SkewPoly& g, const SkewPoly& f, bool checked) {
    return right_divide(g, f, checked).remainder;
}

SkewPoly parse_skew_poly(const SkewPolyRing::Ptr& ring, const std::string& text) {
    // Grammar: term ( '+' term )* ; term = tuple | tuple '*t' | tuple '*t^k'
    std::vector<Coords> coeffs;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos < text.size() && text[pos] == '0' && pos + 1 == text.size()) return SkewPoly::zero(ring);
    while (pos < text.size()) {
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '(') throw error("expected coefficient tuple at position " + std::to_string(pos));
        std::size_t close = text.find(')', pos);
        if (close == std::string::npos) throw error("unterminated coefficient tuple");
        Coords c = ring->coeff()->parse(text.substr(pos, close - pos + 1));
        pos = close + 1;
        skip_ws();
        int power = 0;
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            skip_ws();
            if (pos >= text.size() || text[pos] != 't') throw error("expected t after '*'");
            ++pos;
            power = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::size_t end = pos;
                while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
                power = std::stoi(text.substr(pos, end - pos));
                pos = end;
            }
        }
        if (static_cast<int>(coeffs.size()) <= power) coeffs.resize(power + 1, Coords(ring->coeff()->dim(), 0));
        coeffs[power] = ring->coeff()->add(coeffs[power], c);
        skip_ws();
        if (pos < text.size()) {
            if (text[pos] != '+') throw error("expected '+' between terms");
            ++pos;
        }
    }
    return SkewPoly::from_coeffs(ring, std::move(coeffs));
}

}  // namespace petit
