#pragma once

#include "qre/ring.hpp"

#include <cstddef>
#include <vector>

namespace qre {

// Dense matrix over Scalar with tensor-leg metadata. Rows and columns are
// indexed row-major over the leg dimensions: leg tuple (i_1,...,i_k) with
// 1-based i_t maps to flat index sum_t (i_t - 1) * prod_{u>t} d_u.
// Leg positions in the public API are 1-based throughout.
class Mat {
public:
    Mat() = default;
    Mat(std::vector<long> row_legs, std::vector<long> col_legs);  // zero-filled

    static Mat identity(const std::vector<long>& legs);
    // Flip operator P on [d,d]: P(v (x) w) = w (x) v.
    static Mat flip(long d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<long>& row_legs() const { return row_legs_; }
    const std::vector<long>& col_legs() const { return col_legs_; }

    const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_identity() const;
    bool is_square() const { return rows_ == cols_; }

    // Same entries, new leg partition (products must match).
    Mat reshaped(std::vector<long> row_legs, std::vector<long> col_legs) const;

    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator*(const Scalar& s, const Mat& a);

    bool operator==(const Mat&) const = default;

private:
    std::vector<long> row_legs_;
    std::vector<long> col_legs_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> e_;
};

std::size_t leg_product(const std::vector<long>& legs);

// Kronecker product; leg sequences concatenate.
Mat kron(const Mat& a, const Mat& b);

// Conjugation by the basis permutation sending old leg t to position perm[t-1]
// (1-based images): returns P a P^{-1}. Requires row_legs == col_legs.
Mat leg_permute(const Mat& a, const std::vector<std::size_t>& perm);

// op acting on the legs listed in targets (1-based positions into shape, in
// the order of op's own legs), identity elsewhere.
Mat embed(const Mat& op, const std::vector<std::size_t>& targets, const std::vector<long>& shape);

// Exact inverse by Gauss-Jordan elimination with first-nonzero pivoting.
// Throws Error with the failing pivot column when singular.
Mat invert(const Mat& a);

// Reduced row echelon form; pivot column indices (0-based) appended to
// pivot_cols when given. The RREF is unique, so results are reproducible.
Mat rref(const Mat& a, std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t rank(const Mat& a);

struct Intertwiners {
    Mat iota;  // injection, full column rank
    Mat pi;    // projection, pi * iota = I
};

// Rank factorization of an exact idempotent: iota = pivot columns of p,
// pi = nonzero rows of rref(p); then pi*iota = I and iota*pi = p.
Intertwiners column_space_basis(const Mat& p);

// Entrywise exact evaluation at q = q0 (entries become constants).
Mat eval_mat(const Mat& a, const Rat& q0);

}  // namespace qre
