#pragma once

#include "qre/rekit.hpp"

#include <string>
#include <vector>

namespace qre {

// Matrices of the cylinder braid group generators on V^(x)n (x) A:
// sigma_i = (P R)_{i,i+1} and boundary generators tau_k acting on the last
// strand leg together with the coefficient leg. All operators live on
// legs [d,...,d, d_A] with the coefficient leg last.
struct CylinderRep {
    long n = 0;
    long strand_dim = 0;
    long coeff_dim = 1;
    std::vector<long> legs;
    std::vector<Mat> sigma;  // sigma[i] acts on strands i+1, i+2
    std::vector<Mat> taus;   // taus[0] built from K; extras may be appended
};

CylinderRep build_cylinder_rep(const Mat& r, const REMatrix& k, long n);

// Appends a caller-supplied boundary operator (full-space matrix on the same
// legs); used to check externally constructed tau_k.
void add_boundary_op(CylinderRep& rep, Mat tau);

struct NamedResidual {
    std::string name;
    Residual res;
};

struct NamedMat {
    std::string name;
    Mat diff;
};

// One exact residual per defining relation:
//   sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i sigma_{i+1},
//   sigma_i sigma_j = sigma_j sigma_i for |i-j| > 1,
//   sigma_{n-1} tau_k sigma_{n-1} tau_k = tau_k sigma_{n-1} tau_k sigma_{n-1},
//   sigma_{n-1}^-1 tau_k sigma_{n-1} tau_l = tau_l sigma_{n-1}^-1 tau_k sigma_{n-1}, k > l.
std::vector<NamedMat> braid_relation_mats(const CylinderRep& rep);
std::vector<NamedResidual> braid_residuals(const CylinderRep& rep);

}  // namespace qre
