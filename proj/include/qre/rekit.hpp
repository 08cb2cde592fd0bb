#pragma once

#include "qre/quantum.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qre {

// Representation labels with every needed pairwise R-matrix R^{i,j} on
// legs [d_i, d_j].
class RMatrixFamily {
public:
    RMatrixFamily() = default;

    // Single label with R^{id,id} = r.
    static RMatrixFamily single(const std::string& id, const Mat& r);
    // Several labels of one dimension sharing a single R-matrix for all pairs.
    static RMatrixFamily uniform(const std::vector<std::string>& ids, const Mat& r);

    void add_rep(RepLabel label);
    void set_r(const std::string& i, const std::string& j, Mat r);

    bool has_rep(const std::string& id) const;
    bool has_pair(const std::string& i, const std::string& j) const;
    const RepLabel& rep(const std::string& id) const;
    const Mat& r(const std::string& i, const std::string& j) const;

    const std::vector<RepLabel>& reps() const { return reps_; }
    const std::map<std::pair<std::string, std::string>, Mat>& pairs() const { return r_; }

    bool operator==(const RMatrixFamily&) const = default;

private:
    std::vector<RepLabel> reps_;
    std::map<std::pair<std::string, std::string>, Mat> r_;
};

// K in End(V_rep) (x) A with A = M_{coeff_dim} over the scalar field;
// k lives on legs [d_rep, coeff_dim] (coefficient leg last, scalar
// solutions use coeff_dim = 1).
struct REMatrix {
    std::string rep;
    long coeff_dim = 1;
    Mat k;

    bool operator==(const REMatrix&) const = default;
};

// Normalizes k's legs to [d_rep, coeff_dim]; validates dimensions.
REMatrix make_re_matrix(std::string rep, long coeff_dim, Mat k);

struct REData {
    RMatrixFamily family;
    std::map<std::string, REMatrix> triples;

    long coeff_dim() const;  // shared coefficient dimension (1 when empty)

    bool operator==(const REData&) const = default;
};

// Checks rep membership, leg shapes, and the shared coefficient dimension.
void validate(const REData& data);

struct Witness {
    std::size_t row = 0;  // 1-based
    std::size_t col = 0;  // 1-based
    Scalar value;

    bool operator==(const Witness&) const = default;
};

struct Residual {
    bool ok = true;
    std::optional<Witness> witness;

    static Residual from_difference(const Mat& diff);

    bool operator==(const Residual&) const = default;
};

struct LabeledResidual {
    std::string label;
    Residual res;
};

// --- Yang-Baxter -----------------------------------------------------------

// R12 R13 R23 - R23 R13 R12 on legs [d_i, d_j, d_k].
Mat ybe_residual(const RMatrixFamily& fam, const std::string& i, const std::string& j,
                 const std::string& k);
Residual verify_ybe(const RMatrixFamily& fam, const std::string& i, const std::string& j,
                    const std::string& k);

// --- Reflection equation ----------------------------------------------------

// R21 K1 R K2 - K2 R21 K1 R on legs [d, d, d_A]; the coefficient leg is the
// last one, inert under R and shared by K1 and K2.
Mat re_residual(const Mat& r, const REMatrix& k);
Residual verify_re(const Mat& r, const REMatrix& k);
Residual verify_re(const RMatrixFamily& fam, const REMatrix& k);

// R^{j,i}_21 K^i_1 R^{i,j} K^j_2 - K^j_2 R^{j,i}_21 K^i_1 R^{i,j} on
// legs [d_i, d_j, d_A].
Mat compat_residual(const REData& data, const std::string& i, const std::string& j);
Residual verify_compat(const REData& data, const std::string& i, const std::string& j);

// All RE residuals plus all ordered-pair compatibility residuals; the first
// failure provides the witness.
Residual check_re_data(const REData& data);
std::vector<LabeledResidual> re_data_report(const REData& data);

// --- Fusion -----------------------------------------------------------------

std::string fused_id(const std::string& i, const std::string& j);  // "(i*j)"

// Adds the label i(x)j with the induced R-matrices
//   R^{ij,k} = R^{i,k}_13 R^{j,k}_23,   R^{k,ij} = R^{k,j}_13 R^{k,i}_12,
//   R^{ij,ij} = R^{i,j}_14 R^{i,i}_13 R^{j,j}_24 R^{j,i}_23.
RMatrixFamily extend_family(const RMatrixFamily& fam, const std::string& i, const std::string& j);

// Fused K^{i,j} = (R^{i,j})^{-1} K^i_1 R^{i,j} K^j_2 on the merged rep leg.
Mat fused_k(const RMatrixFamily& fam, const REMatrix& ki, const REMatrix& kj);
REData fuse(const REData& data, const std::string& i, const std::string& j);

// --- Q-solution -------------------------------------------------------------

// K = R^{i,i}_21 R^{i,i} with the first leg acting on V_i and the second leg
// as matrix coefficients (d_A = d_i).
REMatrix q_solution(const RMatrixFamily& fam, const std::string& i);

// --- Restriction ------------------------------------------------------------

struct Restriction {
    RMatrixFamily family;  // input family extended by the submodule label
    REMatrix k0;
};

// Requires p idempotent with (p(x)p) R^{rep,rep} = R^{rep,rep} (p(x)p);
// builds intertwiners, restricts K and every R-matrix touching rep.
Restriction restrict_to_submodule(const RMatrixFamily& fam, const REMatrix& k, const Mat& p,
                                  const std::string& sub_id);

// --- Auxiliary three-leg identities ------------------------------------------

// The two exact identities that encode the cross-relations behind fusion, on
// legs [d_i, d_j, d_k, d_A].
std::pair<Mat, Mat> appendix_residuals(const REData& data, const std::string& i,
                                       const std::string& j, const std::string& k);
std::pair<Residual, Residual> appendix_identities(const REData& data, const std::string& i,
                                                  const std::string& j, const std::string& k);

}  // namespace qre
