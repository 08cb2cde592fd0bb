#include "qre/braid.hpp"

#include "qre/error.hpp"

namespace qre {

CylinderRep build_cylinder_rep(const Mat& r, const REMatrix& k, long n) {
    if (n < 2) throw Error("need at least two strands");
    if (r.row_legs().size() != 2 || r.row_legs() != r.col_legs() ||
        r.row_legs()[0] != r.row_legs()[1]) {
        throw Error("an R-matrix needs two equal legs");
    }
    const long d = r.row_legs()[0];
    if (k.k.row_legs() != std::vector<long>{d, k.coeff_dim}) {
        throw Error("RE matrix legs do not match the R-matrix");
    }
    CylinderRep rep;
    rep.n = n;
    rep.strand_dim = d;
    rep.coeff_dim = k.coeff_dim;
    rep.legs.assign(static_cast<std::size_t>(n), d);
    rep.legs.push_back(k.coeff_dim);

    const Mat s = Mat::flip(d) * r;
    for (long i = 1; i < n; ++i) {
        rep.sigma.push_back(embed(s, {static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1)},
                                  rep.legs));
    }
    rep.taus.push_back(embed(k.k, {static_cast<std::size_t>(n), static_cast<std::size_t>(n + 1)},
                             rep.legs));
    return rep;
}

void add_boundary_op(CylinderRep& rep, Mat tau) {
    if (tau.row_legs() != rep.legs || tau.col_legs() != rep.legs) {
        tau = tau.reshaped(rep.legs, rep.legs);
    }
    rep.taus.push_back(std::move(tau));
}

std::vector<NamedMat> braid_relation_mats(const CylinderRep& rep) {
    std::vector<NamedMat> out;
    const long n = rep.n;
    const auto& sig = rep.sigma;
    for (long i = 0; i + 1 < n - 1; ++i) {
        const std::string name =
            "braid(" + std::to_string(i + 1) + "," + std::to_string(i + 2) + ")";
        out.push_back({name, sig[i] * sig[i + 1] * sig[i] - sig[i + 1] * sig[i] * sig[i + 1]});
    }
    for (long i = 0; i < n - 1; ++i) {
        for (long j = i + 2; j < n - 1; ++j) {
            const std::string name =
                "comm(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            out.push_back({name, sig[i] * sig[j] - sig[j] * sig[i]});
        }
    }
    const Mat& last = sig[static_cast<std::size_t>(n - 2)];
    for (std::size_t k = 0; k < rep.taus.size(); ++k) {
        const Mat& t = rep.taus[k];
        const std::string name = "tau(" + std::to_string(k + 1) + ")";
        out.push_back({name, last * t * last * t - t * last * t * last});
    }
    if (rep.taus.size() > 1) {
        const Mat last_inv = invert(last);
        for (std::size_t k = 1; k < rep.taus.size(); ++k) {
            for (std::size_t l = 0; l < k; ++l) {
                const std::string name =
                    "cross(" + std::to_string(k + 1) + "," + std::to_string(l + 1) + ")";
                const Mat& tk = rep.taus[k];
                const Mat& tl = rep.taus[l];
                out.push_back({name, last_inv * tk * last * tl - tl * last_inv * tk * last});
            }
        }
    }
    return out;
}

std::vector<NamedResidual> braid_residuals(const CylinderRep& rep) {
    std::vector<NamedResidual> out;
    for (const auto& item : braid_relation_mats(rep)) {
        out.push_back({item.name, Residual::from_difference(item.diff)});
    }
    return out;
}

}  // namespace qre
