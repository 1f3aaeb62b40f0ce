#pragma once

#include "chatelet/place.hpp"
#include "chatelet/rational.hpp"

namespace chatelet {

// Local behavior of the quadratic extension Q_p(sqrt a) / Q_p.
enum class QuadExtType { Split, Unramified, Ramified };

// Split when a is a local square; Unramified when a is (up to squares) a
// nonresidue unit (p = 2: unit 5 mod 8); Ramified otherwise.
QuadExtType quad_ext_type(const Rational& a, const Integer& p);

// Hilbert symbol (a,b)_v as an invariant in {0, 1/2}: zero iff z^2 = ax^2 +
// by^2 has a nontrivial solution over the completion.  Classical tame formula
// at odd p, the epsilon/omega exponent formula at p = 2, sign inspection at
// the real place.  Throws ZeroInput when either argument vanishes.
Inv2 hilbert_symbol(const Rational& a, const Rational& b, const Place& place);

// Sum of (a,b)_v over the real place and all primes dividing
// 2 num(a) den(a) num(b) den(b) — every place where the symbol can be
// nonzero.  Always 0 by global reciprocity; exposed as a self-check.
Inv2 invariant_sum(const Rational& a, const Rational& b);

// Invariant of (a,b) at p computed purely from v_p(b)/2 mod 1, valid when
// Q_p(sqrt a)/Q_p is unramified of degree 2.  Throws RamifiedOrSplit when
// that precondition fails.
Inv2 invariant_unramified(const Rational& a, const Rational& b, const Integer& p);

// For Q_2(sqrt a)/Q_2 ramified: the smallest u >= 0 with (a, 1-2u)_2 = 1/2.
// Throws NotRamified otherwise.
Integer find_nontrivial_unit(const Rational& a, const Integer& p);

// Membership of x in the norms of nonzero integral elements of the ramified
// quadratic extension Q_p(sqrt a): v_p(x) >= 0 and (a,x)_p = 0.  Throws
// NotRamified / ZeroInput.
bool is_integral_norm(const Rational& a, const Rational& x, const Integer& p);

}  // namespace chatelet
