#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace chatelet {

using Integer = mpz_class;
using Rational = mpq_class;

// True iff x is a square in Q.  By convention 0 counts as a square.
bool is_square(const Rational& x);
bool is_square(const Integer& x);

// The unique squarefree integer d with x = d * (rational square).
// Throws ZeroInput on x = 0.
Integer square_class_rep(const Rational& x);
Integer square_class_rep(const Integer& x);

// Largest squarefree divisor computations use full factorization, so the
// radical of n is also exposed.
Integer squarefree_part(const Integer& n);

// p-adic valuation of x; std::nullopt encodes v(0) = +infinity.
// p must be a prime > 1.
std::optional<long> valuation(const Rational& x, const Integer& p);
std::optional<long> valuation(const Integer& x, const Integer& p);

// x / p^v(x) as an exact rational; throws ZeroInput on x = 0.
Rational unit_part(const Rational& x, const Integer& p);

// The residue of a p-integral rational x modulo m = p^k (denominator
// inverted mod m).  Result is in [0, m).
Integer residue_mod(const Rational& x, const Integer& m);

// Legendre symbol (u|p) for odd prime p and p-unit rational u; returns +1/-1.
int legendre_unit(const Rational& u, const Integer& p);

// For a 2-unit rational u, the residue of u mod 8 (an odd residue in
// {1,3,5,7}).
int mod8_unit(const Rational& u);

// Full factorization of |n| as prime -> exponent; n must be nonzero.
// Trial division up to a small bound, then Pollard-Brent rho with
// probabilistic primality certification.
std::map<Integer, unsigned> factor_integer(const Integer& n);

// The set of primes dividing numerator or denominator of x (x nonzero).
std::set<Integer> primes_of(const Rational& x);

}  // namespace chatelet
