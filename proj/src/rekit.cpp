#include "qre/rekit.hpp"

#include "qre/error.hpp"

#include <algorithm>

namespace qre {

RMatrixFamily RMatrixFamily::single(const std::string& id, const Mat& r) {
    if (r.row_legs().size() != 2 || r.row_legs() != r.col_legs() ||
        r.row_legs()[0] != r.row_legs()[1]) {
        throw Error("an R-matrix needs two equal legs");
    }
    RMatrixFamily fam;
    fam.add_rep({id, r.row_legs()[0]});
    fam.set_r(id, id, r);
    return fam;
}

RMatrixFamily RMatrixFamily::uniform(const std::vector<std::string>& ids, const Mat& r) {
    if (r.row_legs().size() != 2 || r.row_legs() != r.col_legs() ||
        r.row_legs()[0] != r.row_legs()[1]) {
        throw Error("an R-matrix needs two equal legs");
    }
    RMatrixFamily fam;
    for (const auto& id : ids) fam.add_rep({id, r.row_legs()[0]});
    for (const auto& i : ids) {
        for (const auto& j : ids) fam.set_r(i, j, r);
    }
    return fam;
}

void RMatrixFamily::add_rep(RepLabel label) {
    if (has_rep(label.id)) throw Error("rep id already present: " + label.id);
    if (label.dim < 0) throw Error("rep dimension must be nonnegative");
    reps_.push_back(std::move(label));
}

void RMatrixFamily::set_r(const std::string& i, const std::string& j, Mat r) {
    const RepLabel& ri = rep(i);
    const RepLabel& rj = rep(j);
    if (r.row_legs() != std::vector<long>{ri.dim, rj.dim} || r.row_legs() != r.col_legs()) {
        throw Error("R-matrix legs do not match reps (" + i + "," + j + ")");
    }
    r_[{i, j}] = std::move(r);
}

bool RMatrixFamily::has_rep(const std::string& id) const {
    return std::any_of(reps_.begin(), reps_.end(),
                       [&](const RepLabel& r) { return r.id == id; });
}

bool RMatrixFamily::has_pair(const std::string& i, const std::string& j) const {
    return r_.count({i, j}) > 0;
}

const RepLabel& RMatrixFamily::rep(const std::string& id) const {
    for (const auto& r : reps_) {
        if (r.id == id) return r;
    }
    throw Error("unknown rep id: " + id);
}

const Mat& RMatrixFamily::r(const std::string& i, const std::string& j) const {
    const auto it = r_.find({i, j});
    if (it == r_.end()) throw Error("missing R-matrix for pair (" + i + "," + j + ")");
    return it->second;
}

REMatrix make_re_matrix(std::string rep, long coeff_dim, Mat k) {
    if (coeff_dim < 1) throw Error("coefficient dimension must be positive");
    if (!k.is_square()) throw Error("an RE matrix must be square");
    const std::size_t total = leg_product(k.row_legs());
    if (total % static_cast<std::size_t>(coeff_dim) != 0) {
        throw Error("RE matrix size is not divisible by the coefficient dimension");
    }
    const long d = static_cast<long>(total / static_cast<std::size_t>(coeff_dim));
    Mat shaped = k.reshaped({d, coeff_dim}, {d, coeff_dim});
    return {std::move(rep), coeff_dim, std::move(shaped)};
}

long REData::coeff_dim() const {
    if (triples.empty()) return 1;
    return triples.begin()->second.coeff_dim;
}

void validate(const REData& data) {
    const long da = data.coeff_dim();
    for (const auto& [id, k] : data.triples) {
        if (id != k.rep) throw Error("triple key does not match rep id: " + id);
        if (!data.family.has_rep(id)) throw Error("triple rep not in family: " + id);
        if (k.coeff_dim != da) throw Error("coefficient dimension mismatch in RE data");
        const long d = data.family.rep(id).dim;
        if (k.k.row_legs() != std::vector<long>{d, k.coeff_dim}) {
            throw Error("RE matrix legs do not match rep " + id);
        }
    }
}

Residual Residual::from_difference(const Mat& diff) {
    for (std::size_t r = 0; r < diff.rows(); ++r) {
        for (std::size_t c = 0; c < diff.cols(); ++c) {
            if (!diff.at(r, c).is_zero()) {
                return {false, Witness{r + 1, c + 1, diff.at(r, c)}};
            }
        }
    }
    return {true, std::nullopt};
}

Mat ybe_residual(const RMatrixFamily& fam, const std::string& i, const std::string& j,
                 const std::string& k) {
    const std::vector<long> shape{fam.rep(i).dim, fam.rep(j).dim, fam.rep(k).dim};
    const Mat r12 = embed(fam.r(i, j), {1, 2}, shape);
    const Mat r13 = embed(fam.r(i, k), {1, 3}, shape);
    const Mat r23 = embed(fam.r(j, k), {2, 3}, shape);
    return r12 * r13 * r23 - r23 * r13 * r12;
}

Residual verify_ybe(const RMatrixFamily& fam, const std::string& i, const std::string& j,
                    const std::string& k) {
    return Residual::from_difference(ybe_residual(fam, i, j, k));
}

Mat re_residual(const Mat& r, const REMatrix& k) {
    if (r.row_legs().size() != 2 || r.row_legs() != r.col_legs() ||
        r.row_legs()[0] != r.row_legs()[1]) {
        throw Error("an R-matrix needs two equal legs");
    }
    const long d = r.row_legs()[0];
    if (k.k.row_legs() != std::vector<long>{d, k.coeff_dim}) {
        throw Error("RE matrix legs do not match the R-matrix");
    }
    const std::vector<long> shape{d, d, k.coeff_dim};
    const Mat r12 = embed(r, {1, 2}, shape);
    const Mat r21 = embed(leg_permute(r, {2, 1}), {1, 2}, shape);
    const Mat k1 = embed(k.k, {1, 3}, shape);
    const Mat k2 = embed(k.k, {2, 3}, shape);
    return r21 * k1 * r12 * k2 - k2 * r21 * k1 * r12;
}

Residual verify_re(const Mat& r, const REMatrix& k) {
    return Residual::from_difference(re_residual(r, k));
}

Residual verify_re(const RMatrixFamily& fam, const REMatrix& k) {
    return verify_re(fam.r(k.rep, k.rep), k);
}

Mat compat_residual(const REData& data, const std::string& i, const std::string& j) {
    const auto it_i = data.triples.find(i);
    const auto it_j = data.triples.find(j);
    if (it_i == data.triples.end() || it_j == data.triples.end()) {
        throw Error("missing RE triple for compatibility check");
    }
    const REMatrix& ki = it_i->second;
    const REMatrix& kj = it_j->second;
    if (ki.coeff_dim != kj.coeff_dim) throw Error("coefficient dimension mismatch in RE data");
    const long di = data.family.rep(i).dim;
    const long dj = data.family.rep(j).dim;
    const std::vector<long> shape{di, dj, ki.coeff_dim};
    const Mat rij = embed(data.family.r(i, j), {1, 2}, shape);
    const Mat rji21 = embed(data.family.r(j, i), {2, 1}, shape);
    const Mat k1 = embed(ki.k, {1, 3}, shape);
    const Mat k2 = embed(kj.k, {2, 3}, shape);
    return rji21 * k1 * rij * k2 - k2 * rji21 * k1 * rij;
}

Residual verify_compat(const REData& data, const std::string& i, const std::string& j) {
    return Residual::from_difference(compat_residual(data, i, j));
}

std::vector<LabeledResidual> re_data_report(const REData& data) {
    validate(data);
    std::vector<LabeledResidual> out;
    for (const auto& [id, k] : data.triples) {
        out.push_back({"re(" + id + ")", verify_re(data.family, k)});
    }
    for (const auto& [i, ki] : data.triples) {
        for (const auto& [j, kj] : data.triples) {
            if (i == j) continue;
            out.push_back({"compat(" + i + "," + j + ")", verify_compat(data, i, j)});
        }
    }
    return out;
}

Residual check_re_data(const REData& data) {
    for (const auto& item : re_data_report(data)) {
        if (!item.res.ok) return item.res;
    }
    return {true, std::nullopt};
}

std::string fused_id(const std::string& i, const std::string& j) { return "(" + i + "*" + j + ")"; }

RMatrixFamily extend_family(const RMatrixFamily& fam, const std::string& i, const std::string& j) {
    const long di = fam.rep(i).dim;
    const long dj = fam.rep(j).dim;
    const std::string m = fused_id(i, j);
    RMatrixFamily out = fam;
    out.add_rep({m, di * dj});
    for (const RepLabel& kl : fam.reps()) {
        const long dk = kl.dim;
        {
            const std::vector<long> shape{di, dj, dk};
            const Mat a = embed(fam.r(i, kl.id), {1, 3}, shape) * embed(fam.r(j, kl.id), {2, 3}, shape);
            out.set_r(m, kl.id, a.reshaped({di * dj, dk}, {di * dj, dk}));
        }
        {
            const std::vector<long> shape{dk, di, dj};
            const Mat b = embed(fam.r(kl.id, j), {1, 3}, shape) * embed(fam.r(kl.id, i), {1, 2}, shape);
            out.set_r(kl.id, m, b.reshaped({dk, di * dj}, {dk, di * dj}));
        }
    }
    {
        const std::vector<long> shape{di, dj, di, dj};
        const Mat c = embed(fam.r(i, j), {1, 4}, shape) * embed(fam.r(i, i), {1, 3}, shape) *
                      embed(fam.r(j, j), {2, 4}, shape) * embed(fam.r(j, i), {2, 3}, shape);
        out.set_r(m, m, c.reshaped({di * dj, di * dj}, {di * dj, di * dj}));
    }
    return out;
}

Mat fused_k(const RMatrixFamily& fam, const REMatrix& ki, const REMatrix& kj) {
    if (ki.coeff_dim != kj.coeff_dim) throw Error("coefficient dimension mismatch in fusion");
    const long di = fam.rep(ki.rep).dim;
    const long dj = fam.rep(kj.rep).dim;
    const long da = ki.coeff_dim;
    const std::vector<long> shape{di, dj, da};
    const Mat& r = fam.r(ki.rep, kj.rep);
    const Mat r12 = embed(r, {1, 2}, shape);
    const Mat r12_inv = embed(invert(r), {1, 2}, shape);
    const Mat k1 = embed(ki.k, {1, 3}, shape);
    const Mat k2 = embed(kj.k, {2, 3}, shape);
    const Mat fused = r12_inv * k1 * r12 * k2;
    return fused.reshaped({di * dj, da}, {di * dj, da});
}

REData fuse(const REData& data, const std::string& i, const std::string& j) {
    const auto it_i = data.triples.find(i);
    const auto it_j = data.triples.find(j);
    if (it_i == data.triples.end() || it_j == data.triples.end()) {
        throw Error("missing RE triple for fusion");
    }
    REData out;
    out.family = extend_family(data.family, i, j);
    out.triples = data.triples;
    const std::string m = fused_id(i, j);
    out.triples[m] = REMatrix{m, it_i->second.coeff_dim,
                              fused_k(data.family, it_i->second, it_j->second)};
    return out;
}

REMatrix q_solution(const RMatrixFamily& fam, const std::string& i) {
    const Mat& r = fam.r(i, i);
    const long d = fam.rep(i).dim;
    Mat q = leg_permute(r, {2, 1}) * r;
    return {i, d, std::move(q)};
}

Restriction restrict_to_submodule(const RMatrixFamily& fam, const REMatrix& k, const Mat& p,
                                  const std::string& sub_id) {
    const long d = fam.rep(k.rep).dim;
    if (!p.is_square() || p.rows() != static_cast<std::size_t>(d)) {
        throw Error("projector does not match the rep dimension");
    }
    const Mat pm = p.reshaped({d}, {d});
    if (!(pm * pm == pm)) throw Error("projector is not idempotent");
    const Mat& rmm = fam.r(k.rep, k.rep);
    const Mat pp = kron(pm, pm).reshaped(rmm.row_legs(), rmm.col_legs());
    if (!(pp * rmm == rmm * pp)) {
        throw Error("projector does not commute with the R-matrix");
    }
    const Intertwiners iw = column_space_basis(pm);
    const long rk = iw.iota.col_legs()[0];

    RMatrixFamily out = fam;
    out.add_rep({sub_id, rk});
    for (const RepLabel& kl : fam.reps()) {
        const Mat pi_k = kron(iw.pi, Mat::identity({kl.dim}));
        const Mat iota_k = kron(iw.iota, Mat::identity({kl.dim}));
        out.set_r(sub_id, kl.id, pi_k * fam.r(k.rep, kl.id) * iota_k);
        const Mat k_pi = kron(Mat::identity({kl.dim}), iw.pi);
        const Mat k_iota = kron(Mat::identity({kl.dim}), iw.iota);
        out.set_r(kl.id, sub_id, k_pi * fam.r(kl.id, k.rep) * k_iota);
    }
    out.set_r(sub_id, sub_id, kron(iw.pi, iw.pi) * rmm * kron(iw.iota, iw.iota));

    const Mat id_a = Mat::identity({k.coeff_dim});
    Mat k0 = kron(iw.pi, id_a) * k.k * kron(iw.iota, id_a);
    return {std::move(out), REMatrix{sub_id, k.coeff_dim, std::move(k0)}};
}

std::pair<Mat, Mat> appendix_residuals(const REData& data, const std::string& i,
                                       const std::string& j, const std::string& k) {
    const REMatrix& ki = data.triples.at(i);
    const REMatrix& kj = data.triples.at(j);
    const REMatrix& kk = data.triples.at(k);
    const long da = ki.coeff_dim;
    const std::vector<long> shape{data.family.rep(i).dim, data.family.rep(j).dim,
                                  data.family.rep(k).dim, da};
    const RMatrixFamily& fam = data.family;

    const Mat rij_12 = embed(fam.r(i, j), {1, 2}, shape);
    const Mat rij_12_inv = embed(invert(fam.r(i, j)), {1, 2}, shape);
    const Mat rji_21 = embed(fam.r(j, i), {2, 1}, shape);
    const Mat rik_13 = embed(fam.r(i, k), {1, 3}, shape);
    const Mat rki_31 = embed(fam.r(k, i), {3, 1}, shape);
    const Mat rjk_23 = embed(fam.r(j, k), {2, 3}, shape);
    const Mat rjk_23_inv = embed(invert(fam.r(j, k)), {2, 3}, shape);
    const Mat rkj_32 = embed(fam.r(k, j), {3, 2}, shape);
    const Mat k1 = embed(ki.k, {1, 4}, shape);
    const Mat k2 = embed(kj.k, {2, 4}, shape);
    const Mat k3 = embed(kk.k, {3, 4}, shape);

    // R^{k,j}_32 R^{k,i}_31 {(R^{i,j}_12)^-1 K1 R^{i,j}_12 K2} R^{i,k}_13 R^{j,k}_23 K3
    const Mat fused_ij = rij_12_inv * k1 * rij_12 * k2;
    const Mat head = rkj_32 * rki_31 * fused_ij * rik_13 * rjk_23;
    const Mat first = head * k3 - k3 * head;

    // R^{j,i}_21 R^{k,i}_31 K1 R^{i,k}_13 R^{i,j}_12 {(R^{j,k}_23)^-1 K2 R^{j,k}_23 K3}
    const Mat left = rji_21 * rki_31 * k1 * rik_13 * rij_12;
    const Mat fused_jk = rjk_23_inv * k2 * rjk_23 * k3;
    const Mat second = left * fused_jk - fused_jk * left;

    return {first, second};
}

std::pair<Residual, Residual> appendix_identities(const REData& data, const std::string& i,
                                                  const std::string& j, const std::string& k) {
    const auto [a, b] = appendix_residuals(data, i, j, k);
    return {Residual::from_difference(a), Residual::from_difference(b)};
}

}  // namespace qre
