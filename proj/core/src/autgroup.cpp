#include "petit/autgroup.hpp"

#include <algorithm>
#include <cstddef>

namespace petit {

namespace {

bool multiplicative_on_basis(const PetitAlgebra::Ptr& alg, const Mat& m, bool early_exit = true) {
    const int dim = alg->dim();
    std::vector<Coords> image(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) image[i] = m.apply(alg->basis_element(i));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            Coords lhs = m.apply(alg->mul(alg->basis_element(i), alg->basis_element(j)));
            Coords rhs = alg->mul(image[i], image[j]);
            if (lhs != rhs) {
                if (early_exit) return false;
                return false;
            }
        }
    }
    return true;
}

std::uint64_t pow_saturating(std::uint64_t base, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (~std::uint64_t{0}) / base) return ~std::uint64_t{0};
        r *= base;
    }
    return r;
}

}  // namespace

TauDescriptor make_tau(const RingAut& tau, const RingAut& sigma, const Subspace& s0_in_coeff) {
    TauDescriptor out;
    out.tau = tau;
    out.commutes_with_sigma = tau.matrix() * sigma.matrix() == sigma.matrix() * tau.matrix();
    out.fixes_s0 = true;
    for (int i = 0; i < s0_in_coeff.dim(); ++i) {
        Coords b = s0_in_coeff.basis_vector(i);
        if (tau.apply(b) != b) {
            out.fixes_s0 = false;
            break;
        }
    }
    return out;
}

AlgebraMorphism::AlgebraMorphism(PetitAlgebra::Ptr algebra, Mat matrix, Provenance prov,
                                 std::string label)
    : algebra_(std::move(algebra)),
      matrix_(std::move(matrix)),
      provenance_(prov),
      label_(std::move(label)) {
    if (matrix_.rows() != algebra_->dim() || matrix_.cols() != algebra_->dim())
        throw error("morphism matrix does not match the algebra dimension");
    multiplicative_ = multiplicative_on_basis(algebra_, matrix_);
}

AlgebraMorphism AlgebraMorphism::compose(const AlgebraMorphism& g) const {
    if (algebra_ != g.algebra_) throw ring_mismatch_error("composing morphisms of different algebras");
    return AlgebraMorphism(algebra_, matrix_ * g.matrix_, provenance_, label_ + "." + g.label_);
}

bool is_automorphism(const AlgebraMorphism& map) {
    if (!map.multiplicative()) return false;
    if (!map.matrix().inverse().has_value()) return false;
    return map.apply(map.algebra()->one()) == map.algebra()->one();
}

AlgebraMorphism make_H(const TauDescriptor& tau, const Coords& k_in_C, const GaloisData& data,
                       const PetitAlgebra::Ptr& algebra, bool enforce_constraints) {
    const Ring::Ptr& D = algebra->coeff();
    const int dim_d = D->dim();
    const int m = algebra->m();
    if (enforce_constraints) {
        std::string bad;
        if (!data.C->is_unit(k_in_C)) bad = "k is not a unit of C";
        else if (!tau.commutes_with_sigma) bad = "tau does not commute with sigma";
        else if (!tau.fixes_s0) bad = "tau does not fix S0 elementwise";
        else if (!algebra->cyclic_form()) bad = "f is not of the form t^m - d";
        else {
            Coords nk = norm(k_in_C, data);
            Coords want = D->mul(data.embed_elt(nk), algebra->d());
            if (tau.tau.apply(algebra->d()) != want) bad = "tau(d) differs from N(k) d";
        }
        if (!bad.empty()) throw error("extension constraint violated: " + bad);
    }

    // K_j = prod_{l<j} sigma^l(k), embedded into D.
    std::vector<Coords> K(static_cast<std::size_t>(m));
    Coords running = data.C->one();
    for (int j = 0; j < m; ++j) {
        K[j] = data.embed_elt(running);
        running = data.C->mul(running, data.sigma_C.power(j).apply(k_in_C));
    }

    Mat mat(algebra->dim(), algebra->dim(), algebra->p());
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < dim_d; ++i) {
            Coords bi(static_cast<std::size_t>(dim_d), 0);
            bi[static_cast<std::size_t>(i)] = 1;
            Coords img = D->mul(tau.tau.apply(bi), K[j]);
            Coords col = algebra->embed_at_power(img, j);
            int idx = j * dim_d + i;
            for (int r = 0; r < algebra->dim(); ++r) mat.at(r, idx) = col[static_cast<std::size_t>(r)];
        }
    }

    AlgebraMorphism out(algebra, mat, AlgebraMorphism::Provenance::Theoretic,
                        "H[" + tau.tau.label() + ",k=" + data.C->format(k_in_C) + "]");
    out.tau_label = tau.tau.label();
    out.k = k_in_C;
    if (enforce_constraints && !out.multiplicative())
        throw error("extension failed multiplicativity despite the constraints");
    return out;
}

std::vector<AlgebraMorphism> enumerate_theoretic(const PetitAlgebra::Ptr& algebra,
                                                 const GaloisData& data,
                                                 const std::vector<TauDescriptor>& taus) {
    if (!algebra->cyclic_form()) throw error("theoretic enumeration needs f = t^m - d");
    const Ring::Ptr& D = algebra->coeff();
    std::vector<AlgebraMorphism> out;
    for (const auto& tau : taus) {
        if (!tau.commutes_with_sigma || !tau.fixes_s0) continue;
        for (const Coords& k : data.C->units()) {
            Coords nk = norm(k, data);
            if (tau.tau.apply(algebra->d()) != D->mul(data.embed_elt(nk), algebra->d())) continue;
            AlgebraMorphism h = make_H(tau, k, data, algebra);
            if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
        }
    }
    return out;
}

std::vector<AlgebraMorphism> enumerate_bruteforce(const PetitAlgebra::Ptr& algebra,
                                                  const std::vector<AlgebraElement>& generators,
                                                  std::uint64_t budget) {
    const int dim = algebra->dim();
    const int p = algebra->p();

    // Derive a spanning set from the generators, remembering how each element
    // was produced so the same recipe can be replayed on candidate images.
    struct Node {
        int kind;  // 0 unit, 1 generator, 2 product
        int a = 0, b = 0;
        Coords value;
    };
    std::vector<Node> nodes;
    nodes.push_back({0, 0, 0, algebra->one()});
    for (std::size_t g = 0; g < generators.size(); ++g)
        nodes.push_back({1, static_cast<int>(g), 0, generators[g].coords()});

    std::vector<Coords> span_vecs;
    for (const auto& n : nodes) span_vecs.push_back(n.value);
    Subspace span = Subspace::span(span_vecs, dim, p);
    bool grew = true;
    while (grew && span.dim() < dim) {
        grew = false;
        std::size_t count = nodes.size();
        for (std::size_t a = 0; a < count && span.dim() < dim; ++a) {
            for (std::size_t b = 0; b < count && span.dim() < dim; ++b) {
                Coords prod = algebra->mul(nodes[a].value, nodes[b].value);
                if (span.contains(prod)) continue;
                nodes.push_back({2, static_cast<int>(a), static_cast<int>(b), prod});
                span_vecs.push_back(prod);
                span = Subspace::span(span_vecs, dim, p);
                grew = true;
            }
        }
    }
    if (span.dim() < dim)
        throw error("generators do not generate: span dimension " + std::to_string(span.dim()) +
                    " of " + std::to_string(dim));

    // Pivot columns of the derived-value matrix give an invertible V.
    Mat all_cols = Mat::from_cols(span_vecs, dim, p);
    Mat probe = all_cols;
    std::vector<int> pivots = probe.rref();
    std::vector<Coords> v_cols;
    for (int c : pivots) {
        Coords col(static_cast<std::size_t>(dim), 0);
        for (int r = 0; r < dim; ++r) col[static_cast<std::size_t>(r)] = all_cols.at(r, c);
        v_cols.push_back(col);
    }
    Mat V = Mat::from_cols(v_cols, dim, p);
    Mat Vinv = *V.inverse();

    std::uint64_t space = pow_saturating(static_cast<std::uint64_t>(p), dim);
    std::uint64_t total = 1;
    for (std::size_t g = 0; g < generators.size(); ++g) {
        if (total > budget / std::max<std::uint64_t>(space, 1)) {
            total = ~std::uint64_t{0};
            break;
        }
        total *= space;
    }
    if (total > budget)
        throw budget_exceeded_error("search budget exceeded: " + std::to_string(generators.size()) +
                                    " generator images over " + std::to_string(space) +
                                    " elements each");

    std::vector<AlgebraMorphism> out;
    std::vector<Coords> images(generators.size(), Coords(static_cast<std::size_t>(dim), 0));
    std::vector<Coords> values(nodes.size());
    auto advance = [&]() {
        for (auto& img : images) {
            for (auto& c : img) {
                if (++c < p) return true;
                c = 0;
            }
        }
        return false;
    };
    do {
        for (std::size_t n = 0; n < nodes.size(); ++n) {
            switch (nodes[n].kind) {
                case 0: values[n] = algebra->one(); break;
                case 1: values[n] = images[static_cast<std::size_t>(nodes[n].a)]; break;
                default:
                    values[n] = algebra->mul(values[static_cast<std::size_t>(nodes[n].a)],
                                             values[static_cast<std::size_t>(nodes[n].b)]);
            }
        }
        std::vector<Coords> w_cols;
        for (int c : pivots) w_cols.push_back(values[static_cast<std::size_t>(c)]);
        Mat M = Mat::from_cols(w_cols, dim, p) * Vinv;
        if (M.apply(algebra->one()) != algebra->one()) continue;
        if (!multiplicative_on_basis(algebra, M)) continue;
        if (!M.inverse().has_value()) continue;
        AlgebraMorphism cand(algebra, M, AlgebraMorphism::Provenance::BruteForce,
                             "bf#" + std::to_string(out.size()));
        if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(std::move(cand));
    } while (advance());

    for (const auto& f : out) {
        for (const auto& g : out) {
            Mat comp = f.matrix() * g.matrix();
            bool found = false;
            for (const auto& h : out)
                if (h.matrix() == comp) {
                    found = true;
                    break;
                }
            if (!found) throw error("oracle result is not closed under composition");
        }
    }
    return out;
}

AlgebraMorphism inner_G(const AlgebraElement& m, const AlgebraElement& m_l) {
    const PetitAlgebra::Ptr& alg = m.algebra();
    if ((m_l * m).coords() != alg->one())
        throw error("inner map needs a left inverse: (m_l)(m) is not 1");
    Mat mat = alg->right_mul_matrix(m.coords()) * alg->left_mul_matrix(m_l.coords());
    return AlgebraMorphism(alg, mat, AlgebraMorphism::Provenance::Inner,
                           "G[" + alg->format(m.coords()) + "]");
}

AlgebraMorphism inner_from_invertible(const PetitAlgebra::Ptr& algebra, const Coords& n) {
    auto inv = algebra->inverse(n);
    if (!inv) throw error("inner map needs an invertible element");
    return inner_G(AlgebraElement(algebra, n), AlgebraElement(algebra, *inv));
}

std::optional<std::pair<Coords, AlgebraMorphism>> decompose_inner(const AlgebraMorphism& H,
                                                                  const TauDescriptor& tau,
                                                                  const GaloisData& data) {
    const PetitAlgebra::Ptr& alg = H.algebra();
    if (norm(H.k, data) != data.C->one()) return std::nullopt;
    auto c = hilbert90_solve(H.k, data);
    if (!c) return std::nullopt;
    AlgebraMorphism h1 = make_H(tau, data.C->one(), data, alg, false);
    AlgebraMorphism g_c = inner_from_invertible(alg, alg->embed_coeff(data.embed_elt(*c)));
    if (g_c.matrix() * h1.matrix() != H.matrix())
        throw error("inner decomposition does not recompose to the original map");
    return std::make_pair(*c, h1);
}

std::vector<Verdict> inner_subgroup_properties(const PetitAlgebra::Ptr& algebra,
                                               std::uint64_t bound) {
    Subspace nuc = nucleus(algebra, NucleusSlot::Left)
                       .intersect(nucleus(algebra, NucleusSlot::Middle))
                       .intersect(nucleus(algebra, NucleusSlot::Right));
    Subspace cen = commutant(algebra).intersect(nuc);

    std::vector<Coords> invertible;
    std::vector<AlgebraMorphism> maps;
    for (const Coords& n : nuc.enumerate(bound)) {
        if (!algebra->inverse(n)) continue;
        invertible.push_back(n);
        maps.push_back(inner_from_invertible(algebra, n));
    }

    std::vector<Verdict> out;
    {
        bool all_aut = true;
        for (const auto& g : maps)
            if (!is_automorphism(g)) all_aut = false;
        out.push_back({"inner-G-automorphism", all_aut,
                       "every G_n with n an invertible nucleus element is an automorphism",
                       std::to_string(maps.size()) + " maps checked"});
    }
    {
        bool match = true;
        std::size_t cap = std::min<std::size_t>(invertible.size(), 32);
        for (std::size_t a = 0; a < cap && match; ++a) {
            for (std::size_t b = 0; b < cap && match; ++b) {
                bool equal = maps[a] == maps[b];
                Coords ratio = algebra->mul(invertible[a], *algebra->inverse(invertible[b]));
                if (equal != cen.contains(ratio)) match = false;
            }
        }
        out.push_back({"inner-equality-criterion", match,
                       "G_a = G_b exactly when a b^-1 is central",
                       std::to_string(std::min<std::size_t>(invertible.size(), 32)) +
                           " elements compared pairwise"});
    }
    {
        bool closed = true;
        std::size_t cap = std::min<std::size_t>(maps.size(), 32);
        for (std::size_t a = 0; a < cap && closed; ++a) {
            for (std::size_t b = 0; b < cap && closed; ++b) {
                Mat comp = maps[a].matrix() * maps[b].matrix();
                Coords prod = algebra->mul(invertible[b], invertible[a]);
                if (inner_from_invertible(algebra, prod).matrix() != comp) closed = false;
            }
        }
        out.push_back({"inner-closure", closed, "G_a G_b = G_{ba}",
                       std::to_string(std::min<std::size_t>(maps.size(), 32)) +
                           " maps composed pairwise"});
    }
    return out;
}

std::vector<AlgebraMorphism> csa_inner_listing(const PetitAlgebra::Ptr& algebra,
                                               const GaloisData& data) {
    if (!is_associative(algebra))
        throw error("inner listing by c t^-j applies to associative algebras only");
    if (!algebra->cyclic_form()) throw error("inner listing needs f = t^m - d");
    Coords d_inv = *algebra->coeff()->inverse(algebra->d());
    Coords t_inv = algebra->embed_at_power(d_inv, algebra->m() - 1);
    std::vector<AlgebraMorphism> out;
    for (const Coords& c : data.C->units()) {
        Coords elt = algebra->embed_coeff(data.embed_elt(c));
        for (int j = 0; j < algebra->m(); ++j) {
            AlgebraMorphism g = inner_from_invertible(algebra, elt);
            if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
            elt = algebra->mul(elt, t_inv);
        }
    }
    return out;
}

std::vector<RingAut> candidate_automorphisms(const Ring::Ptr& D, std::uint64_t bound) {
    std::vector<RingAut> out;
    auto push = [&](RingAut a) {
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(std::move(a));
    };
    switch (D->kind()) {
        case Ring::Kind::PrimeField:
            push(RingAut::identity(D));
            break;
        case Ring::Kind::ExtensionField:
            for (int e = 0; e < D->dim(); ++e) push(RingAut::frobenius(D, e));
            break;
        case Ring::Kind::SplitRing: {
            RingAut shift = RingAut::cyclic_shift(D);
            RingAut cur = RingAut::identity(D);
            for (int e = 0; e < D->copies(); ++e) {
                push(cur);
                cur = shift.compose(cur);
            }
            break;
        }
        case Ring::Kind::MatrixRing: {
            std::vector<RingAut> base_auts = candidate_automorphisms(D->base(), bound);
            std::vector<Coords> conj = D->units(bound);
            for (const auto& ba : base_auts)
                for (const Coords& u : conj) push(RingAut::matrix_entrywise(D, ba, u));
            break;
        }
    }
    return out;
}

std::vector<TauDescriptor> commuting_tau_inventory(const Ring::Ptr& D, const RingAut& sigma,
                                                   const Subspace& s0_in_coeff,
                                                   const std::vector<RingAut>& candidates) {
    std::vector<TauDescriptor> out;
    for (const auto& cand : candidates) {
        TauDescriptor t = make_tau(cand, sigma, s0_in_coeff);
        if (!t.commutes_with_sigma || !t.fixes_s0) continue;
        bool dup = false;
        for (const auto& have : out)
            if (have.tau == t.tau) dup = true;
        if (!dup) out.push_back(std::move(t));
    }
    for (const auto& a : out) {
        for (const auto& b : out) {
            Mat comp = a.tau.matrix() * b.tau.matrix();
            bool found = false;
            for (const auto& c : out)
                if (c.tau.matrix() == comp) found = true;
            if (!found) throw error("tau inventory is not closed under composition");
        }
    }
    return out;
}

}  // namespace petit
