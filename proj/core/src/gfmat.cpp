#include "petit/gfmat.hpp"

#include <algorithm>

namespace petit {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int inv_mod_p(int a, int p) {
    a = mod_p(a, p);
    if (a == 0) throw error("division by zero mod " + std::to_string(p));
    int r = 1, e = p - 2, base = a;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

Coords add_coords(const Coords& a, const Coords& b, int p) {
    Coords r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint8_t>((a[i] + b[i]) % p);
    return r;
}

Coords sub_coords(const Coords& a, const Coords& b, int p) {
    Coords r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint8_t>(mod_p(a[i] - b[i], p));
    return r;
}

Coords scale_coords(const Coords& a, int s, int p) {
    s = mod_p(s, p);
    Coords r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint8_t>(a[i] * s % p);
    return r;
}

bool is_zero_coords(const Coords& a) {
    return std::all_of(a.begin(), a.end(), [](std::uint8_t x) { return x == 0; });
}

Mat::Mat(int rows, int cols, int p) : p_(p), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

Mat Mat::identity(int n, int p) {
    Mat m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Coords>& rows, int cols, int p) {
    Mat m(static_cast<int>(rows.size()), cols, p);
    for (int i = 0; i < m.rows_; ++i) {
        if (static_cast<int>(rows[i].size()) != cols) throw error("row length mismatch");
        for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::from_cols(const std::vector<Coords>& cols, int rows, int p) {
    Mat m(rows, static_cast<int>(cols.size()), p);
    for (int j = 0; j < m.cols_; ++j) {
        if (static_cast<int>(cols[j].size()) != rows) throw error("column length mismatch");
        for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Coords Mat::row(int i) const {
    Coords r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

Mat Mat::operator*(const Mat& rhs) const {
    if (cols_ != rhs.rows_ || p_ != rhs.p_) throw error("matrix shape mismatch in product");
    Mat out(rows_, rhs.cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            int v = at(i, k);
            if (!v) continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out.at(i, j) = static_cast<std::uint8_t>((out.at(i, j) + v * rhs.at(k, j)) % p_);
        }
    return out;
}

Mat Mat::operator+(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw error("matrix shape mismatch in sum");
    Mat out(rows_, cols_, p_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = static_cast<std::uint8_t>((a_[i] + rhs.a_[i]) % p_);
    return out;
}

Mat Mat::operator-(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw error("matrix shape mismatch in difference");
    Mat out(rows_, cols_, p_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = static_cast<std::uint8_t>(mod_p(a_[i] - rhs.a_[i], p_));
    return out;
}

Coords Mat::apply(const Coords& v) const {
    if (static_cast<int>(v.size()) != cols_) throw error("vector length mismatch in apply");
    Coords out(rows_, 0);
    for (int j = 0; j < cols_; ++j) {
        int x = v[j];
        if (!x) continue;
        for (int i = 0; i < rows_; ++i) out[i] = static_cast<std::uint8_t>((out[i] + x * at(i, j)) % p_);
    }
    return out;
}

Mat Mat::transposed() const {
    Mat out(cols_, rows_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Mat Mat::pow(unsigned e) const {
    if (rows_ != cols_) throw error("pow of non-square matrix");
    Mat result = identity(rows_, p_);
    Mat base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::vector<int> Mat::rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int piv = -1;
        for (int i = r; i < rows_; ++i)
            if (at(i, c)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols_; ++j) std::swap(at(piv, j), at(r, j));
        int inv = inv_mod_p(at(r, c), p_);
        for (int j = 0; j < cols_; ++j) at(r, j) = static_cast<std::uint8_t>(at(r, j) * inv % p_);
        for (int i = 0; i < rows_; ++i) {
            if (i == r || !at(i, c)) continue;
            int f = at(i, c);
            for (int j = 0; j < cols_; ++j)
                at(i, j) = static_cast<std::uint8_t>(mod_p(at(i, j) - f * at(r, j), p_));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int Mat::rank() const {
    Mat copy = *this;
    return static_cast<int>(copy.rref().size());
}

bool Mat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](std::uint8_t x) { return x == 0; });
}

Mat Mat::nullspace() const {
    Mat copy = *this;
    std::vector<int> pivots = copy.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Coords> basis;
    for (int c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        Coords v(cols_, 0);
        v[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = static_cast<std::uint8_t>(mod_p(-copy.at(static_cast<int>(r), c), p_));
        basis.push_back(std::move(v));
    }
    return from_rows(basis, cols_, p_);
}

std::optional<Mat> Mat::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Mat aug(rows_, 2 * cols_, p_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = 1;
    }
    std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_) return std::nullopt;
    Mat inv(rows_, cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

std::optional<Coords> Mat::solve(const Coords& b) const {
    if (static_cast<int>(b.size()) != rows_) throw error("rhs length mismatch in solve");
    Mat aug(rows_, cols_ + 1, p_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<int> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
    Coords x(cols_, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), cols_);
    return x;
}

Subspace Subspace::zero(int ambient_dim, int p) {
    Subspace s;
    s.basis_ = Mat(0, ambient_dim, p);
    return s;
}

Subspace Subspace::full(int ambient_dim, int p) {
    Subspace s;
    s.basis_ = Mat::identity(ambient_dim, p);
    return s;
}

Subspace Subspace::span(const std::vector<Coords>& vectors, int ambient_dim, int p) {
    return row_space(Mat::from_rows(vectors, ambient_dim, p));
}

Subspace Subspace::row_space(const Mat& m) {
    Mat copy = m;
    std::vector<int> pivots = copy.rref();
    std::vector<Coords> rows;
    for (std::size_t r = 0; r < pivots.size(); ++r) rows.push_back(copy.row(static_cast<int>(r)));
    Subspace s;
    s.basis_ = Mat::from_rows(rows, m.cols(), m.p());
    return s;
}

bool Subspace::contains(const Coords& v) const {
    // Reduce v against the RREF basis.
    Coords w = v;
    const int p = basis_.p();
    for (int r = 0; r < basis_.rows(); ++r) {
        int lead = -1;
        for (int j = 0; j < basis_.cols(); ++j)
            if (basis_.at(r, j)) { lead = j; break; }
        if (lead < 0 || !w[lead]) continue;
        int f = w[lead];
        for (int j = 0; j < basis_.cols(); ++j)
            w[j] = static_cast<std::uint8_t>(mod_p(w[j] - f * basis_.at(r, j), p));
    }
    return is_zero_coords(w);
}

bool Subspace::contains(const Subspace& other) const {
    for (int r = 0; r < other.basis_.rows(); ++r)
        if (!contains(other.basis_.row(r))) return false;
    return true;
}

Subspace Subspace::intersect(const Subspace& other) const {
    // Coefficient pairs (a, b) with a*A - b*B = 0 parametrize the intersection.
    const int p = basis_.p();
    const int n = ambient_dim();
    const int ra = dim(), rb = other.dim();
    Mat sys(n, ra + rb, p);
    for (int i = 0; i < ra; ++i)
        for (int j = 0; j < n; ++j) sys.at(j, i) = basis_.at(i, j);
    for (int i = 0; i < rb; ++i)
        for (int j = 0; j < n; ++j) sys.at(j, ra + i) = static_cast<std::uint8_t>(mod_p(-other.basis_.at(i, j), p));
    Mat ns = sys.nullspace();
    std::vector<Coords> vecs;
    for (int r = 0; r < ns.rows(); ++r) {
        Coords v(n, 0);
        for (int i = 0; i < ra; ++i) {
            int f = ns.at(r, i);
            if (!f) continue;
            for (int j = 0; j < n; ++j) v[j] = static_cast<std::uint8_t>((v[j] + f * basis_.at(i, j)) % p);
        }
        vecs.push_back(std::move(v));
    }
    return span(vecs, n, p);
}

Subspace Subspace::sum(const Subspace& other) const {
    std::vector<Coords> rows;
    for (int r = 0; r < basis_.rows(); ++r) rows.push_back(basis_.row(r));
    for (int r = 0; r < other.basis_.rows(); ++r) rows.push_back(other.basis_.row(r));
    return span(rows, ambient_dim(), basis_.p());
}

std::vector<Coords> Subspace::enumerate(std::uint64_t bound) const {
    const int p = basis_.p();
    std::uint64_t count = 1;
    for (int i = 0; i < dim(); ++i) {
        count *= static_cast<std::uint64_t>(p);
        if (count > bound) throw error("subspace too large to enumerate");
    }
    std::vector<Coords> out;
    out.reserve(count);
    std::vector<int> digits(dim(), 0);
    for (std::uint64_t k = 0; k < count; ++k) {
        Coords v(ambient_dim(), 0);
        for (int i = 0; i < dim(); ++i) {
            if (!digits[i]) continue;
            for (int j = 0; j < ambient_dim(); ++j)
                v[j] = static_cast<std::uint8_t>((v[j] + digits[i] * basis_.at(i, j)) % p);
        }
        out.push_back(std::move(v));
        for (int i = 0; i < dim(); ++i) {
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
    }
    return out;
}

}  // namespace petit
