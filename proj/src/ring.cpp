#include "qre/ring.hpp"

#include "qre/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qre {

namespace {

Rat pow_rat(const Rat& base, long e) {
    Rat acc = 1;
    Rat b = base;
    long n = e;
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

}  // namespace

Rat rat_from_string(std::string_view s) {
    const std::string text(s);
    const auto fail = [&text]() { return Error("malformed rational '" + text + "'"); };
    if (text.empty()) throw fail();
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return Rat(Int(text));
        const std::string n = text.substr(0, slash);
        const std::string d = text.substr(slash + 1);
        if (n.empty() || d.empty()) throw fail();
        Int den(d);
        if (den == 0) throw fail();
        return Rat(Int(n), den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw fail();
    }
}

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Laurent Laurent::constant(Rat c) { return monomial(std::move(c), 0); }

Laurent Laurent::monomial(Rat c, long exp) {
    Laurent out;
    if (!c.is_zero()) out.terms_.push_back({std::move(c), exp});
    return out;
}

Laurent Laurent::from_terms(std::vector<Term> terms) {
    std::map<long, Rat, std::greater<long>> acc;
    for (auto& t : terms) {
        if (t.coef.is_zero()) continue;
        acc[t.exp] += t.coef;
    }
    Laurent out;
    for (auto& [exp, coef] : acc) {
        if (!coef.is_zero()) out.terms_.push_back({std::move(coef), exp});
    }
    return out;
}

bool Laurent::is_one() const {
    return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coef == 1;
}

long Laurent::degree() const {
    if (is_zero()) throw Error("degree of zero polynomial");
    return terms_.front().exp;
}

long Laurent::low() const {
    if (is_zero()) throw Error("low exponent of zero polynomial");
    return terms_.back().exp;
}

const Rat& Laurent::leading_coef() const {
    if (is_zero()) throw Error("leading coefficient of zero polynomial");
    return terms_.front().coef;
}

Laurent Laurent::shifted(long k) const {
    Laurent out = *this;
    for (auto& t : out.terms_) t.exp += k;
    return out;
}

Laurent Laurent::scaled(const Rat& c) const {
    if (c.is_zero()) return Laurent();
    Laurent out = *this;
    for (auto& t : out.terms_) t.coef *= c;
    return out;
}

Rat Laurent::eval(const Rat& q0) const {
    Rat acc = 0;
    for (const auto& t : terms_) {
        if (t.exp >= 0) {
            acc += t.coef * pow_rat(q0, t.exp);
        } else {
            if (q0.is_zero()) throw Error("evaluation pole");
            acc += t.coef / pow_rat(q0, -t.exp);
        }
    }
    return acc;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    std::vector<Term> all = a.terms_;
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    return Laurent::from_terms(std::move(all));
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
    std::map<long, Rat, std::greater<long>> acc;
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            acc[ta.exp + tb.exp] += ta.coef * tb.coef;
        }
    }
    Laurent out;
    for (auto& [exp, coef] : acc) {
        if (!coef.is_zero()) out.terms_.push_back({std::move(coef), exp});
    }
    return out;
}

Laurent Laurent::operator-() const {
    Laurent out = *this;
    for (auto& t : out.terms_) t.coef = -t.coef;
    return out;
}

std::string Laurent::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rat c = t.coef;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        const bool unit = (c == 1);
        if (t.exp == 0) {
            os << rat_to_string(c);
        } else {
            if (!unit) os << rat_to_string(c) << "*";
            os << "q";
            if (t.exp != 1) os << "^" << t.exp;
        }
    }
    return os.str();
}

void poly_divmod(const Laurent& a, const Laurent& b, Laurent& quot, Laurent& rem) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    if ((!a.is_zero() && a.low() < 0) || b.low() < 0) {
        throw Error("polynomial division requires nonnegative exponents");
    }
    quot = Laurent();
    rem = a;
    const long db = b.degree();
    const Rat& lb = b.leading_coef();
    while (!rem.is_zero() && rem.degree() >= db) {
        Laurent t = Laurent::monomial(rem.leading_coef() / lb, rem.degree() - db);
        quot = quot + t;
        rem = rem - t * b;
    }
}

Laurent poly_div_exact(const Laurent& a, const Laurent& b) {
    Laurent q, r;
    poly_divmod(a, b, q, r);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

namespace {

Laurent monic(const Laurent& p) {
    if (p.is_zero()) return p;
    return p.scaled(Rat(1) / p.leading_coef());
}

// content * sign(leading coefficient); dividing by it leaves a primitive
// integer polynomial with positive leading coefficient.
Rat signed_content(const Laurent& p) {
    Int g = 0;
    Int l = 1;
    for (const auto& t : p.terms()) {
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(numerator(t.coef)));
        l = boost::multiprecision::lcm(l, denominator(t.coef));
    }
    Rat c(g, l);
    if (p.leading_coef() < 0) c = -c;
    return c;
}

}  // namespace

Laurent poly_gcd(Laurent a, Laurent b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    while (!b.is_zero()) {
        Laurent q, r;
        poly_divmod(a, b, q, r);
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

Scalar::Scalar(long v) : num_(Laurent::constant(Rat(v))) {}

Scalar::Scalar(Rat v) : num_(Laurent::constant(std::move(v))) {}

Scalar::Scalar(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

Scalar::Scalar(Laurent num, Laurent den, canonical_t)
    : num_(std::move(num)), den_(std::move(den)) {}

Scalar Scalar::q(long exp) { return Scalar(Laurent::monomial(1, exp), Laurent::constant(1), canonical_t{}); }

bool Scalar::is_one() const { return num_.is_one() && den_.is_one(); }

void Scalar::canonicalize() {
    if (den_.is_zero()) throw Error("zero divisor");
    if (num_.is_zero()) {
        den_ = Laurent::constant(1);
        return;
    }
    const long nl = num_.low();
    const long dl = den_.low();
    Laurent n0 = num_.shifted(-nl);
    Laurent d0 = den_.shifted(-dl);
    const long shift = nl - dl;
    const Laurent g = poly_gcd(n0, d0);
    if (!g.is_zero() && g.degree() > 0) {
        n0 = poly_div_exact(n0, g);
        d0 = poly_div_exact(d0, g);
    }
    const Rat c = signed_content(d0);
    n0 = n0.scaled(Rat(1) / c);
    d0 = d0.scaled(Rat(1) / c);
    num_ = n0.shifted(shift);
    den_ = std::move(d0);
}

Rat Scalar::eval(const Rat& q0) const {
    if (q0.is_zero()) throw Error("evaluation pole");
    const Rat d = den_.eval(q0);
    if (d.is_zero()) throw Error("evaluation pole");
    return num_.eval(q0) / d;
}

Scalar Scalar::inverse() const { return Scalar(den_, num_); }

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.den_.is_one() && b.den_.is_one()) {
        return Scalar(a.num_ + b.num_, Laurent::constant(1), Scalar::canonical_t{});
    }
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.num_.is_zero() || b.num_.is_zero()) return Scalar();
    if (a.den_.is_one() && b.den_.is_one()) {
        return Scalar(a.num_ * b.num_, Laurent::constant(1), Scalar::canonical_t{});
    }
    return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw Error("zero divisor");
    return Scalar(a.num_ * b.den_, a.den_ * b.num_);
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.num_ = -out.num_;
    return out;
}

Scalar& Scalar::operator+=(const Scalar& b) { return *this = *this + b; }
Scalar& Scalar::operator-=(const Scalar& b) { return *this = *this - b; }
Scalar& Scalar::operator*=(const Scalar& b) { return *this = *this * b; }

std::string Scalar::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Scalar pow(const Scalar& base, long e) {
    if (e < 0) return pow(base.inverse(), -e);
    Scalar acc(1);
    Scalar b = base;
    long n = e;
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

}  // namespace qre
