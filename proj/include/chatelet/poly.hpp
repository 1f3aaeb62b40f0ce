#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chatelet/rational.hpp"

namespace chatelet {

// Dense univariate polynomial over Q.  c[i] is the coefficient of x^i and the
// vector carries no trailing zeros, so the zero polynomial has empty storage
// and degree -1.
struct Poly {
    std::vector<Rational> c;

    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { normalize(); }
    // constant polynomial
    explicit Poly(const Rational& a) : c{a} { normalize(); }

    static Poly x();                      // the monomial x
    static Poly monomial(const Rational& a, unsigned k);  // a*x^k

    void normalize();
    long deg() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    // coefficient access valid for any index
    Rational coeff(std::size_t i) const { return i < c.size() ? c[i] : Rational(0); }
    Rational lc() const;  // leading coefficient; throws ZeroInput on 0

    Rational eval(const Rational& x) const;
    Poly derivative() const;

    // f(x + t)
    Poly taylor_shift(const Rational& t) const;
    // x^deg f(1/x): reversed coefficient list
    Poly reversed() const;

    bool monic() const { return !is_zero() && lc() == 1; }
    Poly made_monic() const;

    std::string str(const std::string& var = "x") const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a.c == b.c); }
};

// Quotient and remainder of a by b (b nonzero).
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Division known to be exact; throws WrongShape if a remainder is left.
Poly exact_div(const Poly& a, const Poly& b);
// Monic gcd (0 for a pair of zero polynomials).
Poly poly_gcd(Poly a, Poly b);

// Resultant via the Sylvester matrix; res(f, g) = 0 when either argument is 0.
Rational resultant(const Poly& f, const Poly& g);
// (-1)^(d(d-1)/2) res(f, f') / lc(f), d = deg f >= 1.
Rational discriminant(const Poly& f);

// The primitive integer polynomial proportional to f with positive leading
// coefficient, as a coefficient list.  f must be nonzero.
std::vector<Integer> primitive_integer_coeffs(const Poly& f);

}  // namespace chatelet
