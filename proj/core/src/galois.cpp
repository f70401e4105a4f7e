#include "petit/galois.hpp"

#include <algorithm>

namespace petit {

GaloisData make_galois_data(const Ring::Ptr& C, const RingAut& sigma_C) {
    return make_galois_data(C, sigma_C, C, Mat::identity(C->dim(), C->p()));
}

GaloisData make_galois_data(const Ring::Ptr& C, const RingAut& sigma_C, const Ring::Ptr& D,
                            const Mat& embed) {
    if (!C->commutative()) throw error("C must be commutative");
    if (sigma_C.ring() != C) throw error("sigma_C acts on a different ring");
    if (sigma_C.order() < 2) throw error("extension degree must be >= 2");
    if (embed.rows() != D->dim() || embed.cols() != C->dim()) throw error("embedding shape mismatch");
    if (embed.apply(C->one()) != D->one()) throw error("embedding does not preserve 1");
    for (int i = 0; i < C->dim(); ++i)
        for (int j = 0; j < C->dim(); ++j) {
            Coords ei(C->dim(), 0), ej(C->dim(), 0);
            ei[i] = 1;
            ej[j] = 1;
            if (embed.apply(C->basis_product(i, j)) != D->mul(embed.apply(ei), embed.apply(ej)))
                throw error("embedding is not multiplicative");
        }
    GaloisData data;
    data.C = C;
    data.sigma_C = sigma_C;
    data.m = sigma_C.order();
    data.S0 = fixed_ring(C, sigma_C);
    data.D = D;
    data.embed = embed;
    return data;
}

Coords norm(const Coords& k, const GaloisData& data) {
    if (static_cast<int>(k.size()) != data.C->dim()) throw error("element is not in C");
    Coords acc = data.C->one();
    Coords conj = k;
    for (int l = 0; l < data.m; ++l) {
        acc = data.C->mul(acc, conj);
        conj = data.sigma_C.apply(conj);
    }
    if (!data.S0.contains(acc)) throw error("norm landed outside S0");
    return acc;
}

std::vector<Coords> norm_one_group(const GaloisData& data, std::uint64_t bound) {
    std::vector<Coords> out;
    for (const Coords& u : data.C->units(bound))
        if (norm(u, data) == data.C->one()) out.push_back(u);
    for (const Coords& a : out) {
        if (!std::count(out.begin(), out.end(), *data.C->inverse(a)))
            throw error("norm-one set not closed under inverse");
        for (const Coords& b : out)
            if (!std::count(out.begin(), out.end(), data.C->mul(a, b)))
                throw error("norm-one set not closed under product");
    }
    return out;
}

std::optional<Coords> hilbert90_solve(const Coords& k, const GaloisData& data, std::uint64_t bound) {
    if (norm(k, data) != data.C->one())
        throw norm_not_one_error("hilbert90_solve requires a norm-one input");
    for (const Coords& c : data.C->units(bound)) {
        Coords candidate = data.C->mul(*data.C->inverse(c), data.sigma_C.apply(c));
        if (candidate == k) {
            // verified: c^-1 sigma(c) = k by construction of candidate
            return c;
        }
    }
    return std::nullopt;
}

GaloisCertificate certify_galois(GaloisData& data) {
    const Ring::Ptr& C = data.C;
    const int dim = C->dim();
    const int p = C->p();
    GaloisCertificate cert;
    // Unknowns: x_0..x_{dim-1} in C (y_i = canonical basis).  Equation block
    // for sigma^j: sum_i R_{sigma^j(e_i)} x_i = delta_{j,0} * 1.
    Mat sys(data.m * dim, dim * dim, p);
    Coords rhs(data.m * dim, 0);
    for (int j = 0; j < data.m; ++j) {
        RingAut sj = data.sigma_C.power(j);
        for (int i = 0; i < dim; ++i) {
            Coords ei(dim, 0);
            ei[i] = 1;
            Mat r = C->right_mul_matrix(sj.apply(ei));
            for (int a = 0; a < dim; ++a)
                for (int b = 0; b < dim; ++b) sys.at(j * dim + a, i * dim + b) = r.at(a, b);
        }
        if (j == 0)
            for (int a = 0; a < dim; ++a) rhs[a] = C->one()[a];
    }
    std::optional<Coords> sol = sys.solve(rhs);
    if (!sol) {
        cert.ok = false;
        cert.failure = "no witness: the dual-basis system is inconsistent";
        return cert;
    }
    for (int i = 0; i < dim; ++i) {
        Coords xi(sol->begin() + i * dim, sol->begin() + (i + 1) * dim);
        Coords yi(dim, 0);
        yi[i] = 1;
        cert.pairs.emplace_back(std::move(xi), std::move(yi));
    }
    // Re-verify the Kronecker identity for every group element.
    for (int j = 0; j < data.m; ++j) {
        RingAut sj = data.sigma_C.power(j);
        Coords acc(dim, 0);
        for (const auto& [x, y] : cert.pairs) acc = C->add(acc, C->mul(x, sj.apply(y)));
        Coords expected = j == 0 ? C->one() : Coords(dim, 0);
        if (acc != expected) {
            cert.ok = false;
            cert.failure = "witness fails the delta identity at power " + std::to_string(j);
            return cert;
        }
    }
    cert.ok = true;
    data.certified = true;
    data.witness = cert.pairs;
    return cert;
}

namespace {

// Tensor bimodule A (x)_D A, elements indexed by (left power i, algebra
// basis index w) after sliding all middle coefficients to the right factor.
class TensorBimodule {
public:
    explicit TensorBimodule(PetitAlgebra::Ptr alg) : alg_(std::move(alg)) {
        m_ = alg_->m();
        dim_ = alg_->dim();
    }

    Coords zero() const { return Coords(static_cast<std::size_t>(m_) * dim_, 0); }

    // t^i (x) w
    void add_simple(Coords& tensor, int i, const Coords& w, int scale = 1) const {
        const int p = alg_->p();
        for (int k = 0; k < dim_; ++k)
            tensor[static_cast<std::size_t>(i) * dim_ + k] =
                static_cast<std::uint8_t>(mod_p(tensor[static_cast<std::size_t>(i) * dim_ + k] + scale * w[k], p));
    }

    Coords left_mul(const Coords& g, const Coords& tensor) const {
        Coords out = zero();
        const Ring::Ptr& D = alg_->coeff();
        const int bd = D->dim();
        for (int i = 0; i < m_; ++i) {
            Coords w(dim_, 0);
            bool nz = false;
            for (int k = 0; k < dim_; ++k) {
                w[k] = tensor[static_cast<std::size_t>(i) * dim_ + k];
                nz = nz || w[k];
            }
            if (!nz) continue;
            Coords u = alg_->mul(g, alg_->t_element(i));  // element of A, left coefficients
            for (int j = 0; j < m_; ++j) {
                Coords aj(bd, 0);
                bool aj_nz = false;
                for (int k = 0; k < bd; ++k) {
                    aj[k] = u[j * bd + k];
                    aj_nz = aj_nz || aj[k];
                }
                if (!aj_nz) continue;
                // a_j t^j = t^j sigma^{-j}(a_j): slide the coefficient right.
                Coords cj = alg_->poly_ring()->sigma().power(-j).apply(aj);
                Coords moved = alg_->mul(alg_->embed_coeff(cj), w);
                add_simple(out, j, moved);
            }
        }
        return out;
    }

    Coords right_mul(const Coords& tensor, const Coords& g) const {
        Coords out = zero();
        for (int i = 0; i < m_; ++i) {
            Coords w(dim_, 0);
            bool nz = false;
            for (int k = 0; k < dim_; ++k) {
                w[k] = tensor[static_cast<std::size_t>(i) * dim_ + k];
                nz = nz || w[k];
            }
            if (!nz) continue;
            add_simple(out, i, alg_->mul(w, g));
        }
        return out;
    }

    Coords mu(const Coords& tensor) const {
        Coords out(dim_, 0);
        for (int i = 0; i < m_; ++i) {
            Coords w(dim_, 0);
            for (int k = 0; k < dim_; ++k) w[k] = tensor[static_cast<std::size_t>(i) * dim_ + k];
            out = alg_->add(out, alg_->mul(alg_->t_element(i), w));
        }
        return out;
    }

private:
    PetitAlgebra::Ptr alg_;
    int m_, dim_;
};

}  // namespace

SeparableIdempotentReport separable_idempotent_check(const PetitAlgebra::Ptr& algebra) {
    SeparableIdempotentReport rep;
    if (!algebra->cyclic_form()) {
        rep.reason = "divisor is not of the form t^m - d";
        return rep;
    }
    const Ring::Ptr& D = algebra->coeff();
    if (!algebra->s0_in_coeff().contains(algebra->d())) {
        rep.reason = "d is not in S0 (algebra not associative)";
        return rep;
    }
    const int m = algebra->m();
    if (m % D->p() == 0) {
        rep.reason = "m is not invertible in the coefficient ring";
        return rep;
    }
    rep.applicable = true;

    TensorBimodule T(algebra);
    Coords d_inv = *D->inverse(algebra->d());
    int m_inv = inv_mod_p(m % D->p(), D->p());
    Coords scale = D->mul(scale_coords(D->one(), m_inv, D->p()), d_inv);

    auto check_range = [&](int lo) {
        Coords e = T.zero();
        for (int i = lo; i < m; ++i) {
            // second factor t^{m-i}, reduced: t^m = d
            Coords w = (i == 0) ? algebra->embed_coeff(algebra->d()) : algebra->t_element(m - i);
            T.add_simple(e, i, w);
        }
        e = T.left_mul(algebra->embed_coeff(scale), e);
        if (T.mu(e) != algebra->one()) return false;
        for (int g = 0; g < algebra->dim(); ++g) {
            Coords bg = algebra->basis_element(g);
            if (T.left_mul(bg, e) != T.right_mul(e, bg)) return false;
        }
        return true;
    };
    rep.from_zero_passes = check_range(0);
    rep.from_one_passes = check_range(1);
    if (rep.from_zero_passes && rep.from_one_passes) rep.passing_range = "both";
    else if (rep.from_zero_passes) rep.passing_range = "i=0..m-1";
    else if (rep.from_one_passes) rep.passing_range = "i=1..m-1";
    else rep.passing_range = "none";
    return rep;
}

FixedSubalgebraReport g_t_fixed_subalgebra(const PetitAlgebra::Ptr& algebra) {
    if (!is_associative(algebra)) throw error("fixed-subalgebra analysis needs an associative algebra");
    if (!algebra->cyclic_form()) throw error("divisor is not of the form t^m - d");
    const Ring::Ptr& D = algebra->coeff();
    const int m = algebra->m();
    Coords t = algebra->t_element();
    Coords t_inv = algebra->embed_at_power(*D->inverse(algebra->d()), m - 1);
    if (algebra->mul(t, t_inv) != algebra->one() || algebra->mul(t_inv, t) != algebra->one())
        throw error("t is not invertible with inverse t^{m-1} d^{-1}");

    FixedSubalgebraReport rep;
    Mat conj = algebra->right_mul_matrix(t_inv) * algebra->left_mul_matrix(t);
    rep.fixed = Subspace::row_space((conj - Mat::identity(algebra->dim(), algebra->p())).nullspace());

    Subspace fix_sigma = fixed_ring(D, algebra->poly_ring()->sigma());
    std::vector<Coords> rows;
    for (int j = 0; j < m; ++j)
        for (int r = 0; r < fix_sigma.dim(); ++r)
            rows.push_back(algebra->embed_at_power(fix_sigma.basis_vector(r), j));
    rep.expected = Subspace::span(rows, algebra->dim(), algebra->p());
    rep.matches_expected = rep.fixed == rep.expected;

    std::vector<Mat> maps;
    for (int r = 0; r < rep.fixed.dim(); ++r) {
        Coords v = rep.fixed.basis_vector(r);
        maps.push_back(algebra->left_mul_matrix(v) - algebra->right_mul_matrix(v));
    }
    Mat stacked(static_cast<int>(maps.size()) * algebra->dim(), algebra->dim(), algebra->p());
    for (std::size_t k = 0; k < maps.size(); ++k)
        for (int r = 0; r < algebra->dim(); ++r)
            for (int c = 0; c < algebra->dim(); ++c)
                stacked.at(static_cast<int>(k) * algebra->dim() + r, c) = maps[k].at(r, c);
    rep.fixed_center = Subspace::row_space(stacked.nullspace()).intersect(rep.fixed);

    std::vector<Coords> crow;
    for (int j = 0; j < m; ++j)
        for (int r = 0; r < algebra->s0_in_coeff().dim(); ++r)
            crow.push_back(algebra->embed_at_power(algebra->s0_in_coeff().basis_vector(r), j));
    rep.expected_center = Subspace::span(crow, algebra->dim(), algebra->p());
    rep.center_matches = rep.fixed_center == rep.expected_center;
    return rep;
}

}  // namespace petit
