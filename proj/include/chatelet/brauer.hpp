#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chatelet/place.hpp"
#include "chatelet/poly.hpp"
#include "chatelet/rational.hpp"
#include "chatelet/surface.hpp"

namespace chatelet {

// A rational function num/den of one variable, used as the second slot of a
// quaternion symbol (a, h).
struct RatFn {
    Poly num;
    Poly den{{Rational(1)}};

    // Value modulo squares at x0 (nullopt argument = infinity), or nullopt
    // when the symbol (a, h) is not defined-and-nonzero there: a zero or pole
    // at finite x0, or odd degree difference at infinity.  At infinity an
    // even degree difference leaves the class of lc(num)/lc(den), because
    // h = t^(2k) * (lc ratio) * (1 + O(1/t)).
    std::optional<Rational> value_mod_squares(const std::optional<Rational>& x0) const;
    std::string str(const std::string& var) const;
};

// One generator of Br X / Br Q, kept as symbolic representatives (a, rep_i)
// that all agree as classes on the surface; evaluation picks the first
// representative defined and nonzero at the point.
struct BrauerGenerator {
    std::string name;  // "A", "B", or "C"
    Rational a;
    std::vector<RatFn> reps;
    std::string coord{"x"};                // variable the reps are written in
    std::optional<MobiusMap> chart{};      // x as a function of coord, when not "x"

    std::string str() const;
};

enum class BrauerKind { Trivial, Z2, Z2xZ2 };
std::string to_string(BrauerKind k);

struct BrauerType {
    BrauerKind kind;
    std::vector<BrauerGenerator> gens;    // size 0, 1, or 2
    std::optional<SplitForm> split;       // present iff kind == Z2xZ2
};

// Br X / Br Q from the factorization shape of P:
//   - P splits into linear factors              -> Z2xZ2, generators
//     A = (a, t(t-1)), B = (a, t(t-lambda)) in split-form coordinates, with
//     alternates (a, c(t-lambda)), (a, c(t-1)) from the relation
//     (a, c t(t-1)(t-lambda)) = 0 on X;
//   - some irreducible quadratic factor, and disc(F) * a is a nonsquare for
//     every quadratic factor F                  -> Z2, generator C = (a, F0)
//     for the first quadratic factor F0, alternate (a, P/F0);
//   - otherwise (an irreducible cubic or quartic factor, or some quadratic
//     factor whose root field contains sqrt a)  -> Trivial.
BrauerType classify(const ChateletSurface& s);

// Local invariant of (gen.a, rep(x0)) at the place, x0 in the generator's own
// coordinate (nullopt = infinity).  Well-defined independently of which
// representative fires, at points of X with a local point over x0.
Inv2 ev_at_point(const BrauerGenerator& gen, const std::optional<Rational>& x0, const Place& v);

}  // namespace chatelet
