#ifndef PETIT_GFMAT_HPP
#define PETIT_GFMAT_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace petit {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Coordinate vector over GF(p) in some fixed basis.
using Coords = std::vector<std::uint8_t>;

bool is_prime(int n);

/// Dense matrix over GF(p), row major.  All structural computations in this
/// library reduce to rank / nullspace / solve calls on these.
class Mat {
public:
    Mat() : p_(2), rows_(0), cols_(0) {}
    Mat(int rows, int cols, int p);

    static Mat identity(int n, int p);
    static Mat from_rows(const std::vector<Coords>& rows, int cols, int p);
    static Mat from_cols(const std::vector<Coords>& cols, int rows, int p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int p() const { return p_; }

    std::uint8_t& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    std::uint8_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    Coords row(int i) const;

    Mat operator*(const Mat& rhs) const;
    Mat operator+(const Mat& rhs) const;
    Mat operator-(const Mat& rhs) const;
    bool operator==(const Mat& rhs) const = default;

    Coords apply(const Coords& v) const;  // matrix * column vector

    Mat transposed() const;
    Mat pow(unsigned e) const;

    /// Reduced row echelon form; returns pivot column indices.
    std::vector<int> rref();
    int rank() const;
    bool is_zero() const;

    /// Basis of the right nullspace, one vector per row of the result.
    Mat nullspace() const;

    std::optional<Mat> inverse() const;

    /// One solution x of A x = b, if any.
    std::optional<Coords> solve(const Coords& b) const;

private:
    int p_, rows_, cols_;
    std::vector<std::uint8_t> a_;
};

/// Subspace of GF(p)^n kept in canonical (RREF) form, so equality of
/// subspaces is equality of representations.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(int ambient_dim, int p);
    static Subspace full(int ambient_dim, int p);
    static Subspace span(const std::vector<Coords>& vectors, int ambient_dim, int p);
    static Subspace row_space(const Mat& m);

    int dim() const { return basis_.rows(); }
    int ambient_dim() const { return basis_.cols(); }
    int p() const { return basis_.p(); }
    const Mat& basis() const { return basis_; }
    Coords basis_vector(int i) const { return basis_.row(i); }

    bool contains(const Coords& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& rhs) const = default;

    Subspace intersect(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;

    /// All p^dim member vectors; guarded by the enumeration bound.
    std::vector<Coords> enumerate(std::uint64_t bound = 1u << 16) const;

private:
    Mat basis_;  // RREF, no zero rows
};

// GF(p) scalar helpers.
inline int mod_p(long long v, int p) {
    int r = static_cast<int>(v % p);
    return r < 0 ? r + p : r;
}
int inv_mod_p(int a, int p);

Coords add_coords(const Coords& a, const Coords& b, int p);
Coords sub_coords(const Coords& a, const Coords& b, int p);
Coords scale_coords(const Coords& a, int s, int p);
bool is_zero_coords(const Coords& a);

}  // namespace petit

#endif
