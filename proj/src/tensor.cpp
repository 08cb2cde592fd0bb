#include "qre/tensor.hpp"

#include "qre/error.hpp"

#include <algorithm>
#include <string>

namespace qre {

namespace {

void check_legs(const std::vector<long>& legs) {
    for (long d : legs) {
        if (d < 0) throw Error("negative leg dimension");
    }
}

// Row-major multi-index walk; idx entries are 0-based.
bool next_multi(std::vector<long>& idx, const std::vector<long>& dims) {
    for (std::size_t t = dims.size(); t-- > 0;) {
        if (++idx[t] < dims[t]) return true;
        idx[t] = 0;
    }
    return false;
}

std::size_t flat_of(const std::vector<long>& idx, const std::vector<long>& dims) {
    std::size_t f = 0;
    for (std::size_t t = 0; t < dims.size(); ++t) {
        f = f * static_cast<std::size_t>(dims[t]) + static_cast<std::size_t>(idx[t]);
    }
    return f;
}

}  // namespace

std::size_t leg_product(const std::vector<long>& legs) {
    std::size_t p = 1;
    for (long d : legs) p *= static_cast<std::size_t>(d);
    return p;
}

Mat::Mat(std::vector<long> row_legs, std::vector<long> col_legs)
    : row_legs_(std::move(row_legs)), col_legs_(std::move(col_legs)) {
    check_legs(row_legs_);
    check_legs(col_legs_);
    rows_ = leg_product(row_legs_);
    cols_ = leg_product(col_legs_);
    e_.assign(rows_ * cols_, Scalar());
}

Mat Mat::identity(const std::vector<long>& legs) {
    Mat out(legs, legs);
    for (std::size_t i = 0; i < out.rows_; ++i) out.at(i, i) = Scalar(1);
    return out;
}

Mat Mat::flip(long d) {
    Mat out({d, d}, {d, d});
    for (long i = 0; i < d; ++i) {
        for (long j = 0; j < d; ++j) {
            out.at(static_cast<std::size_t>(i * d + j), static_cast<std::size_t>(j * d + i)) = Scalar(1);
        }
    }
    return out;
}

bool Mat::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Mat::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
        }
    }
    return true;
}

Mat Mat::reshaped(std::vector<long> row_legs, std::vector<long> col_legs) const {
    if (leg_product(row_legs) != rows_ || leg_product(col_legs) != cols_) {
        throw Error("reshape changes matrix dimensions");
    }
    Mat out = *this;
    out.row_legs_ = std::move(row_legs);
    out.col_legs_ = std::move(col_legs);
    return out;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.row_legs_ != b.row_legs_ || a.col_legs_ != b.col_legs_) throw Error("leg mismatch in addition");
    Mat out = a;
    for (std::size_t i = 0; i < out.e_.size(); ++i) out.e_[i] += b.e_[i];
    return out;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.row_legs_ != b.row_legs_ || a.col_legs_ != b.col_legs_) throw Error("leg mismatch in subtraction");
    Mat out = a;
    for (std::size_t i = 0; i < out.e_.size(); ++i) out.e_[i] -= b.e_[i];
    return out;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw Error("dimension mismatch in product");
    Mat out(a.row_legs_, b.col_legs_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                out.at(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

Mat operator*(const Scalar& s, const Mat& a) {
    Mat out = a;
    for (auto& x : out.e_) x *= s;
    return out;
}

Mat kron(const Mat& a, const Mat& b) {
    std::vector<long> rl = a.row_legs();
    rl.insert(rl.end(), b.row_legs().begin(), b.row_legs().end());
    std::vector<long> cl = a.col_legs();
    cl.insert(cl.end(), b.col_legs().begin(), b.col_legs().end());
    Mat out(rl, cl);
    for (std::size_t ia = 0; ia < a.rows(); ++ia) {
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const Scalar& x = a.at(ia, ja);
            if (x.is_zero()) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib) {
                for (std::size_t jb = 0; jb < b.cols(); ++jb) {
                    const Scalar& y = b.at(ib, jb);
                    if (y.is_zero()) continue;
                    out.at(ia * b.rows() + ib, ja * b.cols() + jb) = x * y;
                }
            }
        }
    }
    return out;
}

Mat leg_permute(const Mat& a, const std::vector<std::size_t>& perm) {
    if (a.row_legs() != a.col_legs()) throw Error("leg_permute requires equal row and column legs");
    const std::vector<long>& dims = a.row_legs();
    const std::size_t n = dims.size();
    if (perm.size() != n) throw Error("leg count mismatch in permutation");
    std::vector<bool> seen(n, false);
    for (std::size_t p : perm) {
        if (p < 1 || p > n || seen[p - 1]) throw Error("invalid leg permutation");
        seen[p - 1] = true;
    }
    std::vector<long> new_dims(n);
    for (std::size_t t = 0; t < n; ++t) new_dims[perm[t] - 1] = dims[t];

    Mat out(new_dims, new_dims);
    std::vector<long> m(n, 0);
    std::vector<long> mi(n, 0);
    std::vector<long> nn(n, 0);
    std::vector<long> nj(n, 0);
    std::size_t r = 0;
    do {
        std::size_t c = 0;
        std::fill(nn.begin(), nn.end(), 0);
        do {
            const Scalar& x = a.at(r, c);
            if (!x.is_zero()) {
                for (std::size_t t = 0; t < n; ++t) {
                    mi[perm[t] - 1] = m[t];
                    nj[perm[t] - 1] = nn[t];
                }
                out.at(flat_of(mi, new_dims), flat_of(nj, new_dims)) = x;
            }
            ++c;
        } while (next_multi(nn, dims));
        ++r;
    } while (next_multi(m, dims));
    return out;
}

Mat embed(const Mat& op, const std::vector<std::size_t>& targets, const std::vector<long>& shape) {
    const std::size_t n = shape.size();
    if (op.row_legs().size() != targets.size() || op.col_legs().size() != targets.size()) {
        throw Error("embed: target count must match the operator's leg count");
    }
    std::vector<bool> is_target(n, false);
    for (std::size_t k = 0; k < targets.size(); ++k) {
        const std::size_t t = targets[k];
        if (t < 1 || t > n) throw Error("embed: target out of range");
        if (is_target[t - 1]) throw Error("embed: repeated target");
        is_target[t - 1] = true;
        if (op.row_legs()[k] != shape[t - 1] || op.col_legs()[k] != shape[t - 1]) {
            throw Error("embed: operator leg does not match shape at target " + std::to_string(t));
        }
    }
    std::vector<std::size_t> rest;
    std::vector<long> rest_dims;
    for (std::size_t t = 0; t < n; ++t) {
        if (!is_target[t]) {
            rest.push_back(t);
            rest_dims.push_back(shape[t]);
        }
    }

    Mat out(shape, shape);
    const std::vector<long>& op_rdims = op.row_legs();
    const std::vector<long>& op_cdims = op.col_legs();
    std::vector<long> orow(op_rdims.size(), 0);
    std::vector<long> rowm(n, 0);
    std::vector<long> colm(n, 0);
    std::size_t r = 0;
    do {
        std::vector<long> ocol(op_cdims.size(), 0);
        std::size_t c = 0;
        do {
            const Scalar& x = op.at(r, c);
            if (!x.is_zero()) {
                for (std::size_t k = 0; k < targets.size(); ++k) {
                    rowm[targets[k] - 1] = orow[k];
                    colm[targets[k] - 1] = ocol[k];
                }
                std::vector<long> e(rest.size(), 0);
                if (rest.empty()) {
                    out.at(flat_of(rowm, shape), flat_of(colm, shape)) = x;
                } else {
                    do {
                        for (std::size_t u = 0; u < rest.size(); ++u) {
                            rowm[rest[u]] = e[u];
                            colm[rest[u]] = e[u];
                        }
                        out.at(flat_of(rowm, shape), flat_of(colm, shape)) = x;
                    } while (next_multi(e, rest_dims));
                }
            }
            ++c;
        } while (next_multi(ocol, op_cdims));
        ++r;
    } while (next_multi(orow, op_rdims));
    return out;
}

Mat invert(const Mat& a) {
    if (!a.is_square()) throw Error("cannot invert a non-square matrix");
    const std::size_t n = a.rows();
    Mat m = a;
    Mat inv = Mat::identity(a.row_legs());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m.at(piv, col).is_zero()) ++piv;
        if (piv == n) {
            throw Error("singular matrix: no pivot in column " + std::to_string(col + 1));
        }
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        }
        const Scalar p = m.at(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            m.at(col, j) *= p;
            inv.at(col, j) *= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const Scalar f = m.at(r, col);
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                m.at(r, j) -= f * m.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv.reshaped(a.col_legs(), a.row_legs());
}

Mat rref(const Mat& a, std::vector<std::size_t>* pivot_cols) {
    Mat m = a;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < m.rows() && m.at(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != lead) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(lead, j));
        }
        const Scalar p = m.at(lead, col).inverse();
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(lead, j) *= p;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead) continue;
            const Scalar f = m.at(r, col);
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) -= f * m.at(lead, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++lead;
    }
    return m;
}

std::size_t rank(const Mat& a) {
    std::vector<std::size_t> pivots;
    rref(a, &pivots);
    return pivots.size();
}

Intertwiners column_space_basis(const Mat& p) {
    if (!p.is_square()) throw Error("column_space_basis requires a square matrix");
    if (!(p * p == p)) throw Error("non-idempotent input");
    std::vector<std::size_t> pivots;
    const Mat r = rref(p, &pivots);
    const long rk = static_cast<long>(pivots.size());
    Mat iota(p.row_legs(), {rk});
    Mat pi({rk}, p.col_legs());
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        for (std::size_t i = 0; i < p.rows(); ++i) iota.at(i, k) = p.at(i, pivots[k]);
        for (std::size_t j = 0; j < p.cols(); ++j) pi.at(k, j) = r.at(k, j);
    }
    return {std::move(iota), std::move(pi)};
}

Mat eval_mat(const Mat& a, const Rat& q0) {
    Mat out(a.row_legs(), a.col_legs());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (!a.at(r, c).is_zero()) out.at(r, c) = Scalar(a.at(r, c).eval(q0));
        }
    }
    return out;
}

}  // namespace qre
