#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace qre {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "-3/2", "7", "+4/6" (reduced automatically). Throws Error on garbage
// or zero denominator.
Rat rat_from_string(std::string_view s);
std::string rat_to_string(const Rat& r);

// One monomial coef*q^exp. Inside a Laurent the coefficient is never zero.
struct Term {
    Rat coef;
    long exp = 0;

    bool operator==(const Term&) const = default;
};

// Laurent polynomial in q with rational coefficients. Terms are kept sorted
// by strictly decreasing exponent.
class Laurent {
public:
    Laurent() = default;  // zero

    static Laurent constant(Rat c);
    static Laurent monomial(Rat c, long exp);
    static Laurent from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    long degree() const;  // largest exponent; nonzero polynomials only
    long low() const;     // smallest exponent; nonzero polynomials only
    const std::vector<Term>& terms() const { return terms_; }
    const Rat& leading_coef() const;

    Laurent shifted(long k) const;        // multiply by q^k
    Laurent scaled(const Rat& c) const;   // multiply by a rational

    // q0 must be nonzero when negative exponents are present.
    Rat eval(const Rat& q0) const;

    std::string to_string() const;

    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent operator-() const;

    bool operator==(const Laurent&) const = default;

private:
    std::vector<Term> terms_;
};

// Ordinary-polynomial helpers; operands must have low() >= 0.
void poly_divmod(const Laurent& a, const Laurent& b, Laurent& quot, Laurent& rem);
Laurent poly_div_exact(const Laurent& a, const Laurent& b);
Laurent poly_gcd(Laurent a, Laurent b);  // monic; poly_gcd(0, 0) = 0

// Rational function of q in a unique canonical form:
//   - den is a primitive integer polynomial with positive leading coefficient
//     and nonzero constant term (all q^k content lives in num),
//   - num/den have no common polynomial factor,
//   - zero is num = 0, den = 1.
// Two Scalars are field-equal iff structurally equal.
class Scalar {
public:
    Scalar() = default;  // zero
    Scalar(long v);
    Scalar(Rat v);
    Scalar(Laurent num, Laurent den);  // canonicalizes; den = 0 throws

    static Scalar q(long exp = 1);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    // Exact value at q = q0; throws Error("evaluation pole") when q0 = 0 or
    // the denominator vanishes there.
    Rat eval(const Rat& q0) const;

    Scalar inverse() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& b);
    Scalar& operator-=(const Scalar& b);
    Scalar& operator*=(const Scalar& b);

    bool operator==(const Scalar&) const = default;

    std::string to_string() const;

private:
    struct canonical_t {};
    Scalar(Laurent num, Laurent den, canonical_t);
    void canonicalize();

    Laurent num_;
    Laurent den_ = Laurent::constant(1);
};

Scalar pow(const Scalar& base, long e);

}  // namespace qre
