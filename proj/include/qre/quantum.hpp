#pragma once

#include "qre/tensor.hpp"

#include <string>

namespace qre {

struct RepLabel {
    std::string id;
    long dim = 0;

    bool operator==(const RepLabel&) const = default;
};

// Standard gl(n) fundamental R-matrix on [n,n]:
//   R = q * sum_i E_ii(x)E_ii + sum_{i!=j} E_ii(x)E_jj
//       + (q - q^-1) * sum_{i<j} E_ij(x)E_ji.
// Satisfies the Yang-Baxter equation and the Hecke relation for P*R.
Mat gl_r_matrix(long n);

// Braid operator S = P*R on [d,d].
struct BraidOp {
    Mat op;
};

BraidOp braid_operator(const Mat& r);

// Exact check of (S - q)(S + q^-1) = 0.
bool satisfies_hecke(const BraidOp& s);

struct HeckeProjectors {
    Mat plus;   // q-symmetrizer  (S + q^-1) / (q + q^-1)
    Mat minus;  // q-antisymmetrizer  (q - S) / (q + q^-1)
};

// Throws Error("not a Hecke operator") when the Hecke relation fails.
HeckeProjectors hecke_projectors(const BraidOp& s);

// Injection/projection intertwiners onto the image of an exact idempotent.
Intertwiners submodule_intertwiners(const Mat& p);

}  // namespace qre
