#pragma once

#include <set>
#include <string>
#include <vector>

#include "chatelet/galois.hpp"
#include "chatelet/place.hpp"
#include "chatelet/poly.hpp"
#include "chatelet/rational.hpp"

namespace chatelet {

// The surface y^2 - a z^2 = P(x) with a a nonsquare and P separable of
// degree 3 or 4; immutable after construction.
struct ChateletSurface {
    Rational a;
    Poly P;
    Factorization fac;  // factorization of P over Q, cached

    ChateletSurface(const Rational& a_, const Poly& P_);

    long deg() const { return P.deg(); }
    // true iff P splits into linear factors over Q
    bool splits() const;
    // the rational roots of P, ascending
    std::vector<Rational> roots() const;
};

ChateletSurface new_surface(const Rational& a, const Poly& P);

// x = (alpha t + beta) / (gamma t + delta), the change of coordinate from
// the normal-form parameter t back to the original x.
struct MobiusMap {
    Rational alpha{1}, beta{0}, gamma{0}, delta{1};

    bool is_finite_at(const Rational& t) const { return sgn(gamma * t + delta) != 0; }
    Rational apply(const Rational& t) const;
    // image of t = infinity, or nullopt when it maps to x = infinity
    std::optional<Rational> apply_infinity() const;
    std::string str() const;
};

// P in the coordinates where the singular fibers are {0, 1, lambda, inf}:
// the transformed equation is y^2 - a z^2 = c t (t-1) (t-lambda).
struct SplitForm {
    Rational c;
    Rational lambda;
    MobiusMap map;  // x as a function of t
};

// Q(t) = (gamma t + delta)^4 * q(mu(t)) for q of degree <= 4 viewed as a
// quartic form; the basic change-of-chart transform.
Poly transform_quartic(const Poly& q, const MobiusMap& m);

// Normal form with the deterministic root order (roots ascending; the two
// smallest go to 0 and 1, the largest quartic root to infinity).
SplitForm split_form(const ChateletSurface& s);
// Same with an explicit root order (testing hook for relabeling invariance);
// order lists all rational roots of P exactly once.
SplitForm split_form_with_order(const ChateletSurface& s, const std::vector<Rational>& order);

// The six cross-ratio representatives of lambda, each with an exactly
// transformed leading constant: {lambda, 1/lambda, 1-lambda, 1/(1-lambda),
// lambda/(lambda-1), (lambda-1)/lambda} in this order.
std::vector<std::pair<Rational, Rational>> crossratio_orbit(const Rational& c,
                                                            const Rational& lambda);

enum class BadReason { ValC, ValLambda, ValLambdaMinus1, RamifiedQuadExt };
std::string to_string(BadReason r);

struct BadPlaceReport {
    Integer p;
    std::set<BadReason> reasons;  // nonempty
    bool a_nonsquare_locally;
};

// Bad places of a split surface in the sense of the valuation criteria: after
// per-place renormalization of (c, lambda), one of v(c), v(lambda),
// v(lambda-1) is nonzero, or Q_p(sqrt a)/Q_p is ramified.
std::vector<BadPlaceReport> bad_places_split(const ChateletSurface& s);

// Finite superset of the primes where the evaluation maps can be
// nonconstant: divisors of 2, a, lc(P), disc(P), and pairwise resultants of
// the irreducible factors of P.
std::vector<Integer> candidate_bad_places(const ChateletSurface& s);

// {"a": "17", "P": "3*(x^2-7)*(17*x^2-43)"}
ChateletSurface parse_surface_json(const std::string& text);

}  // namespace chatelet
