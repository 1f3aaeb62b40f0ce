#include "chatelet/brauer.hpp"

#include <algorithm>

#include "chatelet/errors.hpp"
#include "chatelet/symbols.hpp"

namespace chatelet {

std::optional<Rational> RatFn::value_mod_squares(const std::optional<Rational>& x0) const {
    if (den.deg() < 0 || num.deg() < 0) throw ZeroInput("RatFn: zero numerator or denominator");
    if (!x0) {
        if ((num.deg() - den.deg()) % 2 != 0) return std::nullopt;
        return num.lc() / den.lc();
    }
    Rational d = den.eval(*x0);
    if (sgn(d) == 0) return std::nullopt;
    Rational n = num.eval(*x0);
    if (sgn(n) == 0) return std::nullopt;
    return n / d;
}

std::string RatFn::str(const std::string& var) const {
    if (den.deg() == 0 && den.coeff(0) == 1) return num.str(var);
    return "(" + num.str(var) + ") / (" + den.str(var) + ")";
}

std::string BrauerGenerator::str() const {
    return name + " = (" + a.get_str() + ", " + reps.at(0).str(coord) + ")";
}

std::string to_string(BrauerKind k) {
    switch (k) {
        case BrauerKind::Trivial: return "Trivial";
        case BrauerKind::Z2: return "Z2";
        case BrauerKind::Z2xZ2: return "Z2xZ2";
    }
    throw Error("to_string: bad BrauerKind");
}

namespace {

Poly linear(const Rational& root) { return Poly({-root, Rational(1)}); }

}  // namespace

BrauerType classify(const ChateletSurface& s) {
    if (s.splits()) {
        SplitForm sf = split_form(s);
        Poly t = Poly::x();
        Poly t1 = linear(Rational(1)), tl = linear(sf.lambda);
        BrauerGenerator A{"A", s.a, {RatFn{t * t1}, RatFn{sf.c * tl}}, "t", sf.map};
        BrauerGenerator B{"B", s.a, {RatFn{t * tl}, RatFn{sf.c * t1}}, "t", sf.map};
        return BrauerType{BrauerKind::Z2xZ2, {A, B}, sf};
    }
    std::vector<Poly> quads;
    for (const auto& [g, e] : s.fac.factors)
        if (g.deg() == 2) quads.push_back(g);
    if (quads.empty()) return BrauerType{BrauerKind::Trivial, {}, std::nullopt};
    for (const Poly& F : quads)
        if (is_square(discriminant(F) * s.a))
            return BrauerType{BrauerKind::Trivial, {}, std::nullopt};
    // canonical generator: the quadratic factor with the lexicographically
    // smallest primitive integer form (leading coefficient first)
    std::vector<Integer> best;
    Poly F0;
    for (const Poly& F : quads) {
        std::vector<Integer> key = primitive_integer_coeffs(F);
        std::reverse(key.begin(), key.end());
        if (best.empty() || key < best) {
            best = key;
            F0 = F;
        }
    }
    std::reverse(best.begin(), best.end());
    Poly prim;
    for (std::size_t i = 0; i < best.size(); ++i)
        prim = prim + Rational(best[i]) * Poly::monomial(Rational(1), i);
    BrauerGenerator C{"C", s.a, {RatFn{prim}, RatFn{exact_div(s.P, prim)}}, "x", std::nullopt};
    return BrauerType{BrauerKind::Z2, {C}, std::nullopt};
}

Inv2 ev_at_point(const BrauerGenerator& gen, const std::optional<Rational>& x0, const Place& v) {
    for (const RatFn& rep : gen.reps) {
        auto val = rep.value_mod_squares(x0);
        if (!val) continue;
        return hilbert_symbol(gen.a, *val, v);
    }
    throw AllRepresentativesVanish("ev_at_point: no representative of " + gen.name +
                                   " is defined and nonzero at the given point");
}

}  // namespace chatelet
