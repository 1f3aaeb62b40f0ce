#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chatelet/brauer.hpp"
#include "chatelet/place.hpp"
#include "chatelet/poly.hpp"
#include "chatelet/rational.hpp"
#include "chatelet/surface.hpp"

namespace chatelet {

// Witness for an attained invariant value: a point of P^1 in the generator's
// coordinate (finite x0 or infinity) when one was found, else only the
// residue-disc description.
struct EvWitness {
    std::optional<Rational> x0;
    bool at_inf = false;
    std::string desc;

    bool is_point() const { return at_inf || x0.has_value(); }
};

// Image of the evaluation map X(Q_v) -> {0, 1/2} of a Brauer generator.
// Empty `values` can only happen when X(Q_v) is empty.  determined = true
// means the residue-disc enumeration proved no further value occurs.
struct EvImage {
    std::set<Inv2> values;
    bool determined = false;
    std::map<Inv2, EvWitness> witnesses;
    std::vector<std::string> unresolved;  // disc descriptors still open at depth
};

// Does the conic fiber over x0 (nullopt = infinity) have a point over the
// completion?  For P(x0) != 0 this is hilbert_symbol(a, P(x0)) = 0; fibers
// over roots of P carry the rational point y = z = 0 of the smooth model; at
// infinity the class is lc(P) for deg 4 and the fiber is singular for deg 3.
bool fiber_solvable(const ChateletSurface& s, const std::optional<Rational>& x0, const Place& v);

// Does X have any point over the completion?  Finite places: residue-disc
// enumeration with square-class stability, exact singular fibers, and
// Newton-verified p-adic roots of P (near a simple p-adic root of P every
// square class is realized, so some fiber is solvable).  Real place: true iff
// a > 0 or P attains a nonnegative real value.  Throws DepthExceeded if a
// finite-place enumeration fails to settle within depth.
bool locally_solvable(const ChateletSurface& s, const Place& v, int depth = 24);

// Exact image of ev_gen on X(Q_p) by residue-disc enumeration over P^1(Q_p)
// in the generator's own coordinate (unit discs plus w = 1/x discs).  A disc
// is resolved when some representative's square class is provably constant
// on it and either (i) the fiber class is also constant (all-or-none
// solvable), (ii) the disc contains a rational singular fiber, or (iii) a
// Newton criterion certifies a p-adic root of the fiber polynomial inside
// (solvable fibers then exist arbitrarily deep in the disc).  Unresolved
// discs split into p children until depth; leftovers make determined false.
EvImage ev_image(const ChateletSurface& s, const BrauerGenerator& gen, const Integer& p,
                 int depth = 24);

// Image of ev_gen on X(R).  For a > 0 the symbol vanishes identically.  For
// a < 0, sign analysis of the representatives on the intervals cut by the
// real roots of P (and of the representatives) where P >= 0; throws
// EmptyRealLocus when X(R) is empty.
EvImage ev_image_real(const ChateletSurface& s, const BrauerGenerator& gen);

// Number of distinct real roots, by Sturm's theorem.
long real_root_count(const Poly& f);

// y^2 = c x (x-1) (x-lambda) over Q_p with p odd and good reduction:
// v(c) = v(lambda) = v(lambda-1) = 0.
struct CurveLocal {
    Rational c;
    Rational lambda;
    Integer p;
};

// Is the point with abscissa x (and ordinate y, when given) divisible by 2 in
// E(Q_p)?  Equivalent to cx, c(x-1), c(x-lambda) all being squares in Q_p.
// With y given, checks y^2 = c x(x-1)(x-lambda) exactly (NotOnCurve);
// without y, requires the cubic value to be a nonzero local square.  Throws
// TwoTorsion when y = 0 is forced.
bool two_div_criterion(const CurveLocal& E, const Rational& x,
                       const std::optional<Rational>& y = std::nullopt);

// Three-valued counting result over residue classes; classes whose square
// class is not settled at the working depth are `undecided`, so
// [lo(), hi()] brackets the true density.
struct NormExperimentResult {
    long decided_in = 0;
    long decided_out = 0;
    long undecided = 0;
    int depth = 0;
    Integer p{2};

    long total() const { return decided_in + decided_out + undecided; }
    double lo() const;
    double hi() const;
};

// Density of {x : x is a norm of an integral element of Q_p(sqrt a)} among
// classes x = r mod p, counted over residue classes mod p^n.  Requires the
// extension ramified (NotRamified).  The bracket converges to 1/2.
NormExperimentResult norm_ratio_experiment(const Rational& a, const Integer& r, int n,
                                           const Integer& p);

// Counting over classes mod 2^n for A = {x : x(x-1) in N}, B = {x : x-lambda
// in N} with N = {x != 0 : v(x) >= 0, (a,x) = 0}, the norms of nonzero
// integral elements of the ramified extension Q_2(sqrt a).
struct ABExperimentResult {
    NormExperimentResult A, B, A_minus_B, B_minus_A, complement;  // of A union B
};
ABExperimentResult ab_experiment(const Rational& a, const Rational& lambda, int n);

// #{x in F_q : R(x) is a nonzero square}, for R a monic irreducible
// quadratic over F_q, q an odd prime.  Always (q-1)/2; throws Reducible when
// disc R is a square mod q.
long count_square_values(const Integer& q, const Poly& R);

}  // namespace chatelet
