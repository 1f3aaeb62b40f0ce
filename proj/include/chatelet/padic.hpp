#pragma once

#include <optional>
#include <string>

#include "chatelet/place.hpp"
#include "chatelet/poly.hpp"
#include "chatelet/rational.hpp"

namespace chatelet {

// Working context for one finite completion: the prime and the precision
// exponent used by truncated computations.
struct PrimeCtx {
    Integer p;
    int prec = 24;
};

// An element of Q_p: either an exact rational or a truncated unit*p^val with
// the unit known modulo p^prec.
struct PadicElem {
    bool exact = true;
    Rational value;  // exact case
    Integer unit;    // truncated case: unit residue in [1, p^prec), coprime to p
    long val = 0;
    Integer p;
    int prec = 0;

    static PadicElem make_exact(const Rational& v) {
        PadicElem e;
        e.exact = true;
        e.value = v;
        return e;
    }
    static PadicElem make_truncated(const Integer& unit, long val, const PrimeCtx& ctx) {
        PadicElem e;
        e.exact = false;
        e.unit = unit;
        e.val = val;
        e.p = ctx.p;
        e.prec = ctx.prec;
        return e;
    }

    // nullopt encodes +infinity (exact zero)
    std::optional<long> valuation_of(const Integer& prime) const {
        if (exact) return valuation(value, prime);
        return val;
    }

    std::string str() const;
};

inline std::optional<long> valuation(const Rational& x, const PrimeCtx& ctx) {
    return valuation(x, ctx.p);
}

// Squareness in the completion at `place`.  Odd p: even valuation and
// quadratic-residue unit part; p = 2: even valuation and unit part 1 mod 8;
// Real: positive.  Throws ZeroInput on x = 0.
bool is_square_local(const Rational& x, const Place& place);

// Lifts the approximate root x0 of f to a root in Z_p via Newton iteration.
// Requires v(g(x0)) > 2 v(g'(x0)) for the primitive integer form g of f
// (equal to the same condition on f whenever f has p-integral coefficients);
// throws CriterionFails otherwise.  The result r satisfies f(r) = 0 to
// precision prec and r = x0 mod p^(v(g'(x0))+1).  Returns an Exact element
// when the iteration lands on a rational root, otherwise Truncated; throws
// PrecisionLoss when the root is indistinguishable from 0 at precision prec.
PadicElem hensel_lift(const Poly& f, const Integer& x0, const PrimeCtx& ctx);

// True iff every x in the disc center + p^depth Z_p provably has f(x) in the
// same square class of Q_p^*, by the bound
//   depth + min_{j>=1} v(f_j) - v(f(center)) >= t,
// where f_j are the Taylor coefficients of f at the center and t = 1 for odd
// p, t = 3 for p = 2.  False when f(center) = 0.  One-sided: a false return
// makes no claim.
bool square_class_stable(const Poly& f, const Rational& disc_center, int disc_depth,
                         const PrimeCtx& ctx);

// p^k as an Integer
Integer int_pow(const Integer& p, unsigned long k);

}  // namespace chatelet
