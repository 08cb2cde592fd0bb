#include "qre/quantum.hpp"

#include "qre/error.hpp"

namespace qre {

Mat gl_r_matrix(long n) {
    if (n < 2) throw Error("gl rank must be at least 2");
    const Scalar q = Scalar::q(1);
    const Scalar lambda = Scalar::q(1) - Scalar::q(-1);
    Mat r({n, n}, {n, n});
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            const std::size_t d_ij = static_cast<std::size_t>(i * n + j);
            r.at(d_ij, d_ij) = (i == j) ? q : Scalar(1);
            if (i < j) {
                // E_ij (x) E_ji maps e_j (x) e_i to e_i (x) e_j.
                const std::size_t row = static_cast<std::size_t>(i * n + j);
                const std::size_t col = static_cast<std::size_t>(j * n + i);
                r.at(row, col) = lambda;
            }
        }
    }
    return r;
}

BraidOp braid_operator(const Mat& r) {
    if (r.row_legs().size() != 2 || r.row_legs() != r.col_legs() ||
        r.row_legs()[0] != r.row_legs()[1]) {
        throw Error("braid operator requires two equal legs");
    }
    return {Mat::flip(r.row_legs()[0]) * r};
}

bool satisfies_hecke(const BraidOp& s) {
    const Mat id = Mat::identity(s.op.row_legs());
    const Mat a = s.op - Scalar::q(1) * id;
    const Mat b = s.op + Scalar::q(-1) * id;
    return (a * b).is_zero();
}

HeckeProjectors hecke_projectors(const BraidOp& s) {
    if (!satisfies_hecke(s)) throw Error("not a Hecke operator");
    const Mat id = Mat::identity(s.op.row_legs());
    const Scalar inv_span = (Scalar::q(1) + Scalar::q(-1)).inverse();
    Mat plus = inv_span * (s.op + Scalar::q(-1) * id);
    Mat minus = inv_span * (Scalar::q(1) * id - s.op);
    return {std::move(plus), std::move(minus)};
}

Intertwiners submodule_intertwiners(const Mat& p) { return column_space_basis(p); }

}  // namespace qre
