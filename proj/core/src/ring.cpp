#include "petit/ring.hpp"

#include <algorithm>
#include <sstream>

namespace petit {

namespace {

// Dense polynomial helpers over GF(p), used only for modulus certification
// and extension-field structure constants.
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

// Remainder of a by monic-leading b.
Poly poly_mod(Poly a, const Poly& b, int p) {
    trim(a);
    const int db = static_cast<int>(b.size()) - 1;
    const int lead_inv = inv_mod_p(b.back(), p);
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int da = static_cast<int>(a.size()) - 1;
        int f = a.back() * lead_inv % p;
        for (int j = 0; j <= db; ++j) a[da - db + j] = mod_p(a[da - db + j] - f * b[j], p);
        trim(a);
    }
    return a;
}

std::string poly_str(const Poly& a) {
    if (a.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || a[i] != 1) os << a[i];
        if (i >= 1) {
            if (a[i] != 1) os << "*";
            os << "x";
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

// Exhaustive trial division at desk scale; returns a nontrivial monic factor
// if one exists.
std::optional<Poly> find_factor(const Poly& modulus, int p) {
    const int n = static_cast<int>(modulus.size()) - 1;
    for (int deg = 1; 2 * deg <= n; ++deg) {
        std::uint64_t count = 1;
        for (int i = 0; i < deg; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t k = 0; k < count; ++k) {
            Poly cand(deg + 1, 0);
            std::uint64_t v = k;
            for (int i = 0; i < deg; ++i) {
                cand[i] = static_cast<int>(v % p);
                v /= p;
            }
            cand[deg] = 1;
            if (poly_mod(modulus, cand, p).empty()) return cand;
        }
    }
    return std::nullopt;
}

}  // namespace

void Ring::finish() {
    zero_.assign(dim_, 0);
    one_.assign(dim_, 0);
}

Ring::Ptr Ring::prime_field(int p) {
    if (!is_prime(p)) throw error("p = " + std::to_string(p) + " is not prime");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = Kind::PrimeField;
    r->p_ = p;
    r->dim_ = 1;
    r->commutative_ = true;
    r->finish();
    r->one_ = {1};
    r->table_ = {Coords{1}};
    return r;
}

Ring::Ptr Ring::extension_field(int p, const std::vector<int>& modulus) {
    if (!is_prime(p)) throw error("p = " + std::to_string(p) + " is not prime");
    Poly mod;
    for (int c : modulus) mod.push_back(mod_p(c, p));
    if (mod.size() < 2 || mod.back() != 1) throw error("modulus must be monic of degree >= 1");
    const int n = static_cast<int>(mod.size()) - 1;
    if (auto factor = find_factor(mod, p))
        throw reducible_modulus_error("modulus " + poly_str(mod) + " is reducible over GF(" +
                                      std::to_string(p) + "): factor " + poly_str(*factor));
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = Kind::ExtensionField;
    r->p_ = p;
    r->dim_ = n;
    r->commutative_ = true;
    r->modulus_ = mod;
    r->finish();
    r->one_[0] = 1;
    r->table_.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Poly prod(i + j + 1, 0);
            prod[i + j] = 1;
            Poly rem = poly_mod(prod, mod, p);
            Coords c(n, 0);
            for (std::size_t k = 0; k < rem.size(); ++k) c[k] = static_cast<std::uint8_t>(rem[k]);
            r->table_[static_cast<std::size_t>(i) * n + j] = std::move(c);
        }
    return r;
}

Ring::Ptr Ring::split_ring(int p, int copies) {
    if (!is_prime(p)) throw error("p = " + std::to_string(p) + " is not prime");
    if (copies < 1) throw error("split ring needs at least one copy");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = Kind::SplitRing;
    r->p_ = p;
    r->dim_ = copies;
    r->copies_ = copies;
    r->commutative_ = true;
    r->finish();
    r->one_.assign(copies, 1);
    r->table_.resize(static_cast<std::size_t>(copies) * copies);
    for (int i = 0; i < copies; ++i)
        for (int j = 0; j < copies; ++j) {
            Coords c(copies, 0);
            if (i == j) c[i] = 1;
            r->table_[static_cast<std::size_t>(i) * copies + j] = std::move(c);
        }
    return r;
}

Ring::Ptr Ring::matrix_ring(const Ptr& base, int n) {
    if (!base) throw error("matrix ring needs a base ring");
    if (n < 1) throw error("matrix size must be >= 1");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = Kind::MatrixRing;
    r->p_ = base->p();
    r->base_ = base;
    r->matrix_size_ = n;
    const int bd = base->dim();
    const int dim = n * n * bd;
    r->dim_ = dim;
    r->commutative_ = (n == 1) && base->commutative();
    r->finish();
    // basis index: (row*n + col)*bd + base-basis index
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < bd; ++k) r->one_[(i * n + i) * bd + k] = base->one()[k];
    }
    r->table_.resize(static_cast<std::size_t>(dim) * dim);
    for (int e1 = 0; e1 < n * n; ++e1)
        for (int b1 = 0; b1 < bd; ++b1)
            for (int e2 = 0; e2 < n * n; ++e2)
                for (int b2 = 0; b2 < bd; ++b2) {
                    Coords c(dim, 0);
                    int r1 = e1 / n, c1 = e1 % n, r2 = e2 / n, c2 = e2 % n;
                    if (c1 == r2) {
                        const Coords& prod = base->basis_product(b1, b2);
                        for (int k = 0; k < bd; ++k) c[(r1 * n + c2) * bd + k] = prod[k];
                    }
                    r->table_[(static_cast<std::size_t>(e1) * bd + b1) * dim + e2 * bd + b2] = std::move(c);
                }
    return r;
}

std::string Ring::describe() const {
    switch (kind_) {
        case Kind::PrimeField:
            return "GF(" + std::to_string(p_) + ")";
        case Kind::ExtensionField:
            return "GF(" + std::to_string(p_) + "^" + std::to_string(dim_) + ")";
        case Kind::SplitRing:
            return "GF(" + std::to_string(p_) + ")^" + std::to_string(copies_);
        case Kind::MatrixRing:
            return "Mat" + std::to_string(matrix_size_) + "(" + base_->describe() + ")";
    }
    return "?";
}

Coords Ring::generator() const {
    if (kind_ != Kind::ExtensionField) throw error("generator() only defined for extension fields");
    Coords g(dim_, 0);
    if (dim_ > 1) g[1] = 1;
    else g[0] = 1;
    return g;
}

Coords Ring::mul(const Coords& a, const Coords& b) const {
    if (static_cast<int>(a.size()) != dim_ || static_cast<int>(b.size()) != dim_)
        throw error("element dimension mismatch in " + describe());
    Coords out(dim_, 0);
    for (int i = 0; i < dim_; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < dim_; ++j) {
            if (!b[j]) continue;
            int f = a[i] * b[j] % p_;
            const Coords& prod = basis_product(i, j);
            for (int k = 0; k < dim_; ++k) out[k] = static_cast<std::uint8_t>((out[k] + f * prod[k]) % p_);
        }
    }
    return out;
}

Coords Ring::pow(const Coords& a, std::uint64_t e) const {
    Coords result = one_;
    Coords base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Mat Ring::left_mul_matrix(const Coords& a) const {
    Mat m(dim_, dim_, p_);
    for (int j = 0; j < dim_; ++j) {
        Coords ej(dim_, 0);
        ej[j] = 1;
        Coords col = mul(a, ej);
        for (int i = 0; i < dim_; ++i) m.at(i, j) = col[i];
    }
    return m;
}

Mat Ring::right_mul_matrix(const Coords& a) const {
    Mat m(dim_, dim_, p_);
    for (int j = 0; j < dim_; ++j) {
        Coords ej(dim_, 0);
        ej[j] = 1;
        Coords col = mul(ej, a);
        for (int i = 0; i < dim_; ++i) m.at(i, j) = col[i];
    }
    return m;
}

std::optional<Coords> Ring::inverse(const Coords& a) const {
    std::optional<Coords> x = left_mul_matrix(a).solve(one_);
    if (!x) return std::nullopt;
    if (mul(*x, a) != one_ || mul(a, *x) != one_) return std::nullopt;
    return x;
}

std::uint64_t Ring::size_or_throw(std::uint64_t bound) const {
    std::uint64_t n = 1;
    for (int i = 0; i < dim_; ++i) {
        n *= static_cast<std::uint64_t>(p_);
        if (n > bound)
            throw ring_too_large_error(describe() + " exceeds the enumeration bound of " +
                                       std::to_string(bound) + " elements");
    }
    return n;
}

std::vector<Coords> Ring::elements(std::uint64_t bound) const {
    const std::uint64_t n = size_or_throw(bound);
    std::vector<Coords> out;
    out.reserve(n);
    Coords v(dim_, 0);
    for (std::uint64_t k = 0; k < n; ++k) {
        out.push_back(v);
        for (int i = 0; i < dim_; ++i) {
            if (++v[i] < p_) break;
            v[i] = 0;
        }
    }
    return out;
}

std::vector<Coords> Ring::units(std::uint64_t bound) const {
    std::vector<Coords> out;
    for (const Coords& a : elements(bound))
        if (is_unit(a)) out.push_back(a);
    return out;
}

std::vector<Coords> Ring::idempotents(std::uint64_t bound) const {
    std::vector<Coords> out;
    for (const Coords& a : elements(bound))
        if (mul(a, a) == a) out.push_back(a);
    return out;
}

std::string Ring::format(const Coords& a) const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < dim_; ++i) {
        if (i) os << ",";
        os << static_cast<int>(a[i]);
    }
    os << ")";
    return os.str();
}

Coords Ring::parse(const std::string& text) const {
    Coords out;
    std::string body = text;
    auto l = body.find('(');
    auto r = body.rfind(')');
    if (l == std::string::npos || r == std::string::npos || r < l)
        throw error("element literal must look like (c0,c1,...): " + text);
    body = body.substr(l + 1, r - l - 1);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(static_cast<std::uint8_t>(mod_p(std::stoi(tok), p_)));
    if (static_cast<int>(out.size()) != dim_)
        throw error("element literal has " + std::to_string(out.size()) + " coordinates, expected " +
                    std::to_string(dim_));
    return out;
}

Coords Ring::scalar_embed(const Coords& base_elt) const {
    if (kind_ != Kind::MatrixRing) throw error("scalar_embed only defined for matrix rings");
    const int bd = base_->dim();
    if (static_cast<int>(base_elt.size()) != bd) throw error("scalar_embed dimension mismatch");
    Coords out(dim_, 0);
    for (int i = 0; i < matrix_size_; ++i)
        for (int k = 0; k < bd; ++k) out[(i * matrix_size_ + i) * bd + k] = base_elt[k];
    return out;
}

namespace {

int aut_order(const Mat& m) {
    Mat id = Mat::identity(m.rows(), m.p());
    Mat acc = m;
    for (int k = 1; k <= 1 << 16; ++k) {
        if (acc == id) return k;
        acc = acc * m;
    }
    throw error("automorphism order exceeds cap");
}

void verify_automorphism(const Ring::Ptr& ring, const Mat& m, const std::string& label) {
    if (m.rows() != ring->dim() || m.cols() != ring->dim()) throw error("automorphism matrix shape mismatch");
    if (m.apply(ring->one()) != ring->one()) throw error(label + " does not fix 1");
    if (!m.inverse()) throw error(label + " is not invertible");
    const int n = ring->dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Coords ei(n, 0), ej(n, 0);
            ei[i] = 1;
            ej[j] = 1;
            if (m.apply(ring->basis_product(i, j)) != ring->mul(m.apply(ei), m.apply(ej)))
                throw error(label + " is not multiplicative on basis pair (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
        }
}

}  // namespace

RingAut RingAut::identity(const Ring::Ptr& ring) {
    RingAut a;
    a.ring_ = ring;
    a.matrix_ = Mat::identity(ring->dim(), ring->p());
    a.label_ = "id";
    a.order_ = 1;
    return a;
}

RingAut RingAut::frobenius(const Ring::Ptr& field, int e) {
    if (field->kind() != Ring::Kind::ExtensionField && field->kind() != Ring::Kind::PrimeField)
        throw error("frobenius needs a field");
    if (e < 0) throw error("frobenius exponent must be >= 0");
    std::uint64_t q = 1;
    for (int i = 0; i < e; ++i) q *= static_cast<std::uint64_t>(field->p());
    std::vector<Coords> cols;
    for (int j = 0; j < field->dim(); ++j) {
        Coords ej(field->dim(), 0);
        ej[j] = 1;
        cols.push_back(field->pow(ej, q));
    }
    return from_matrix(field, Mat::from_cols(cols, field->dim(), field->p()),
                       e == 0 ? "id" : "frob^" + std::to_string(e));
}

RingAut RingAut::cyclic_shift(const Ring::Ptr& split_ring) {
    if (split_ring->kind() != Ring::Kind::SplitRing) throw error("cyclic_shift needs a split ring");
    const int n = split_ring->dim();
    Mat m(n, n, split_ring->p());
    for (int j = 0; j < n; ++j) m.at((j + 1) % n, j) = 1;
    return from_matrix(split_ring, m, "shift");
}

RingAut RingAut::matrix_entrywise(const Ring::Ptr& matrix_ring, const RingAut& base_aut,
                                  const std::optional<Coords>& conjugator) {
    if (matrix_ring->kind() != Ring::Kind::MatrixRing) throw error("matrix_entrywise needs a matrix ring");
    const int n = matrix_ring->matrix_size();
    const int bd = matrix_ring->base()->dim();
    const int dim = matrix_ring->dim();
    Mat lift(dim, dim, matrix_ring->p());
    for (int e = 0; e < n * n; ++e)
        for (int b = 0; b < bd; ++b) {
            Coords img = base_aut.matrix().apply([&] {
                Coords eb(bd, 0);
                eb[b] = 1;
                return eb;
            }());
            for (int k = 0; k < bd; ++k) lift.at(e * bd + k, e * bd + b) = img[k];
        }
    std::string label = "entrywise(" + base_aut.label() + ")";
    Mat total = lift;
    if (conjugator) {
        auto uinv = matrix_ring->inverse(*conjugator);
        if (!uinv) throw error("conjugator is not a unit");
        Mat conj = matrix_ring->left_mul_matrix(*conjugator) * matrix_ring->right_mul_matrix(*uinv);
        total = conj * lift;
        label += "*conj(" + matrix_ring->format(*conjugator) + ")";
    }
    return from_matrix(matrix_ring, total, label);
}

RingAut RingAut::from_matrix(const Ring::Ptr& ring, const Mat& m, std::string label) {
    verify_automorphism(ring, m, label);
    RingAut a;
    a.ring_ = ring;
    a.matrix_ = m;
    a.label_ = std::move(label);
    a.order_ = aut_order(m);
    return a;
}

bool RingAut::is_identity() const { return matrix_ == Mat::identity(matrix_.rows(), matrix_.p()); }

RingAut RingAut::compose(const RingAut& g) const {
    RingAut a;
    a.ring_ = ring_;
    a.matrix_ = matrix_ * g.matrix_;
    a.label_ = label_ + "." + g.label_;
    a.order_ = aut_order(a.matrix_);
    return a;
}

RingAut RingAut::inverse() const {
    RingAut a;
    a.ring_ = ring_;
    a.matrix_ = *matrix_.inverse();
    a.label_ = label_ + "^-1";
    a.order_ = order_;
    return a;
}

RingAut RingAut::power(int e) const {
    int n = order_;
    e = ((e % n) + n) % n;
    RingAut a;
    a.ring_ = ring_;
    a.matrix_ = matrix_.pow(static_cast<unsigned>(e));
    a.label_ = e == 0 ? "id" : label_ + "^" + std::to_string(e);
    a.order_ = aut_order(a.matrix_);
    return a;
}

Subspace fixed_ring(const Ring::Ptr& ring, const RingAut& sigma) {
    Mat diff = sigma.matrix() - Mat::identity(ring->dim(), ring->p());
    return Subspace::row_space(diff.nullspace());
}

Subspace center_subring(const Ring::Ptr& ring) {
    const int n = ring->dim();
    std::vector<Coords> rows;
    Mat stacked(n * n, n, ring->p());
    for (int i = 0; i < n; ++i) {
        Coords ei(n, 0);
        ei[i] = 1;
        Mat comm = ring->left_mul_matrix(ei) - ring->right_mul_matrix(ei);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) stacked.at(i * n + r, c) = comm.at(r, c);
    }
    return Subspace::row_space(stacked.nullspace());
}

bool is_multiplicatively_closed(const Ring::Ptr& ring, const Subspace& s) {
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < s.dim(); ++j)
            if (!s.contains(ring->mul(s.basis_vector(i), s.basis_vector(j)))) return false;
    return true;
}

bool strongly_distinct(const RingAut& sigma, const RingAut& tau, const Ring::Ptr& ring, std::uint64_t bound) {
    if (!ring->commutative()) throw error("strongly_distinct needs a commutative ring");
    for (const Coords& e : ring->idempotents(bound)) {
        if (is_zero_coords(e)) continue;
        bool separated = false;
        for (int i = 0; i < ring->dim() && !separated; ++i) {
            Coords x(ring->dim(), 0);
            x[i] = 1;
            if (ring->mul(sigma.apply(x), e) != ring->mul(tau.apply(x), e)) separated = true;
        }
        if (!separated) return false;
    }
    return true;
}

bool difference_ideal_is_full(const Ring::Ptr& C, const RingAut& sigma, int i) {
    if (!C->commutative()) throw error("difference_ideal_is_full needs a commutative ring");
    if (i <= 0) return false;
    const int n = C->dim();
    RingAut si = sigma.power(i);
    std::vector<Coords> gens;
    for (int b = 0; b < n; ++b) {
        Coords eb(n, 0);
        eb[b] = 1;
        gens.push_back(C->sub(eb, si.apply(eb)));
    }
    Subspace span = Subspace::span(gens, n, C->p());
    // Close the GF(p)-span under multiplication by basis elements.
    bool grew = true;
    while (grew && span.dim() < n) {
        grew = false;
        std::vector<Coords> next;
        for (int r = 0; r < span.dim(); ++r)
            for (int b = 0; b < n; ++b) {
                Coords eb(n, 0);
                eb[b] = 1;
                Coords prod = C->mul(span.basis_vector(r), eb);
                if (!span.contains(prod)) {
                    next.push_back(prod);
                    grew = true;
                }
            }
        for (const Coords& v : next) span = span.sum(Subspace::span({v}, n, C->p()));
    }
    return span.dim() == n;
}

}  // namespace petit
