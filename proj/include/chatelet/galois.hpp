#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chatelet/poly.hpp"
#include "chatelet/rational.hpp"

namespace chatelet {

// Galois groups arising from separable cubics and quartics.
enum class GaloisType { C1, C2, C3, C4, V4, S3, D8, A4, S4 };

int order(GaloisType g);
std::string to_string(GaloisType g);

// The quadratic field Q(sqrt a), a normalized to its squarefree kernel.
struct QuadField {
    Integer a;

    explicit QuadField(const Rational& a0);
    friend bool operator==(const QuadField& x, const QuadField& y) { return x.a == y.a; }
};

// constant * prod factors[i].first ^ factors[i].second, factors monic
// irreducible over Q, sorted by (degree, coefficients from the top down).
struct Factorization {
    Rational constant;
    std::vector<std::pair<Poly, int>> factors;

    Poly reassemble() const;
    bool has_factor_of_degree(long d) const;
};

// Complete irreducible factorization over Q for deg <= 4: rational roots by
// divisor enumeration on the primitive integer form, quartic two-quadratic
// splits via rational roots of the cubic resolvent.
Factorization factor_over_Q(const Poly& P);

// x in Q(sqrt a)^x2, decided as x or x*a a rational square.  (A square
// (u+v sqrt a)^2 is rational only if uv = 0.)
bool is_square_in_quad(const Rational& x, const QuadField& K);

// A cubic f has a root in Q(sqrt a) iff it has a rational root or an
// irreducible quadratic factor F with disc(F)*a a rational square.
bool cubic_root_in_quad(const Poly& f, const QuadField& K);

// For f irreducible over Q: whether f factors (necessarily into two
// quadratics) over Q(sqrt a), via resolvent-root square tests in the field.
bool quartic_splits_over_quad(const Poly& f, const QuadField& K);

// Galois group of the splitting field of f (separable, deg 3 or 4) over Q,
// or over the quadratic base field.
GaloisType galois_group(const Poly& f);
GaloisType galois_group(const Poly& f, const QuadField& base);

// sqrt(a) lies in the splitting field of f over Q iff passing to Q(sqrt a)
// halves the Galois group order.
bool sqrt_a_in_splitting_field(const Poly& f, const QuadField& K);

}  // namespace chatelet
