#pragma once

#include "qre/rekit.hpp"

#include <map>
#include <string>
#include <vector>

namespace qre {

// Polynomial in a fixed set of ansatz unknowns with Scalar coefficients.
class AnsatzPoly {
public:
    using Mono = std::vector<int>;  // exponent per variable

    AnsatzPoly() = default;
    explicit AnsatzPoly(int nvars) : nvars_(nvars) {}
    static AnsatzPoly constant(int nvars, Scalar c);
    static AnsatzPoly variable(int nvars, int v);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::map<Mono, Scalar>& terms() const { return terms_; }

    int total_degree() const;
    int degree_in(int v) const;
    int min_exponent(int v) const;  // over all terms; 0 for the zero poly

    AnsatzPoly substituted(int v, const AnsatzPoly& expr) const;
    AnsatzPoly divided_by_monomial(const Mono& m) const;
    AnsatzPoly scaled(const Scalar& c) const;
    // Divides by the coefficient of the lex-largest monomial.
    AnsatzPoly normalized() const;

    Scalar eval(const std::vector<Scalar>& values) const;

    friend AnsatzPoly operator+(const AnsatzPoly& a, const AnsatzPoly& b);
    friend AnsatzPoly operator-(const AnsatzPoly& a, const AnsatzPoly& b);
    friend AnsatzPoly operator*(const AnsatzPoly& a, const AnsatzPoly& b);

    bool operator==(const AnsatzPoly&) const = default;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    int nvars_ = 0;
    std::map<Mono, Scalar> terms_;
};

enum class AnsatzKind { diagonal, antidiagonal, upper_triangular };

struct AnsatzPattern {
    long d = 0;
    std::vector<std::string> names;               // unknown names, "k11" style
    std::vector<std::pair<long, long>> positions; // 0-based (row, col) per unknown
};

AnsatzPattern ansatz_pattern(long d, AnsatzKind kind);

// Entries of R21 K1 R K2 - K2 R21 K1 R with K filled by the pattern unknowns
// (scalar coefficients, d_A = 1); a d^2 x d^2 grid of polynomials.
std::vector<std::vector<AnsatzPoly>> re_residual_symbolic(const Mat& r, const AnsatzPattern& pat);

struct AnsatzSolution {
    REMatrix k;          // representative with free parameters set to 1
    std::string family;  // binding description, e.g. "k11 = 0, k22 free"
};

// Expands the RE residual in the ansatz unknowns, eliminates exactly, and
// returns one nonzero representative per solution family (free parameters
// instantiated to 1, bound-to-zero parameters to 0). Every representative
// satisfies the RE by construction.
std::vector<AnsatzSolution> solve_ansatz(const Mat& r, AnsatzKind kind);

}  // namespace qre
