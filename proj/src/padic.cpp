#include "chatelet/padic.hpp"

#include "chatelet/errors.hpp"

namespace chatelet {

Integer int_pow(const Integer& p, unsigned long k) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), k);
    return r;
}

std::string PadicElem::str() const {
    if (exact) return value.get_str();
    std::string s = unit.get_str();
    if (val != 0) s = p.get_str() + "^" + std::to_string(val) + " * " + s;
    return s + " + O(" + p.get_str() + "^" + std::to_string(val + prec) + ")";
}

bool is_square_local(const Rational& x, const Place& place) {
    if (sgn(x) == 0) throw ZeroInput("is_square_local(0)");
    if (place.is_real()) return sgn(x) > 0;
    const Integer& p = place.p;
    long v = *valuation(x, p);
    if (v % 2 != 0) return false;
    Rational u = unit_part(x, p);
    if (p == 2) return mod8_unit(u) == 1;
    return legendre_unit(u, p) == 1;
}

namespace {

// One Newton run: returns the residue mod p^N of the root of g near x0
// (g integral, t = v(g'(x0)), criterion already checked), or an exact
// rational root if the iteration lands on one.
struct NewtonOut {
    bool exact;
    Integer root;  // residue mod p^N, or the exact integer root
};

NewtonOut newton_to(const Poly& g, const Integer& x0, long t, long N, const Integer& p) {
    Poly gp = g.derivative();
    long M = N + 2 * t + 4;  // guard digits
    Integer pM = int_pow(p, static_cast<unsigned long>(M));
    Integer pN = int_pow(p, static_cast<unsigned long>(N));
    Rational x(x0);
    for (int iter = 0; iter < 300; ++iter) {
        Rational fx = g.eval(x);
        if (sgn(fx) == 0) return {true, x.get_num()};
        long vf = *valuation(fx, p);
        if (vf - t >= N) return {false, residue_mod(x, pN)};
        Rational step = fx / gp.eval(x);
        x = Rational(residue_mod(x - step, pM));
    }
    throw PrecisionLoss("hensel_lift: Newton iteration failed to converge");
}

}  // namespace

PadicElem hensel_lift(const Poly& f, const Integer& x0, const PrimeCtx& ctx) {
    if (f.is_zero()) throw ZeroInput("hensel_lift of the zero polynomial");
    const Integer& p = ctx.p;
    auto ic = primitive_integer_coeffs(f);
    std::vector<Rational> gc(ic.begin(), ic.end());
    Poly g{std::move(gc)};

    Rational g0 = g.eval(Rational(x0));
    if (sgn(g0) == 0) return PadicElem::make_exact(Rational(x0));
    Rational g1 = g.derivative().eval(Rational(x0));
    auto vf = valuation(g0, p);
    auto vfp = valuation(g1, p);
    if (!vfp || *vf <= 2 * *vfp)
        throw CriterionFails("hensel_lift: v(f(x0)) > 2 v(f'(x0)) fails at p = " + p.get_str());
    long t = *vfp;

    NewtonOut out = newton_to(g, x0, t, ctx.prec, p);
    if (out.exact) {
        // iteration hit a rational root of g exactly
        return PadicElem::make_exact(Rational(out.root));
    }
    Integer R = out.root;
    if (sgn(R) == 0)
        throw PrecisionLoss("hensel_lift: root not separated from 0 at precision " +
                            std::to_string(ctx.prec));
    long v0 = *valuation(R, p);
    if (v0 > 0) {
        // rerun deeper so the unit part is known to full precision
        out = newton_to(g, x0, t, ctx.prec + v0, p);
        if (out.exact) return PadicElem::make_exact(Rational(out.root));
        R = out.root;
    }
    Integer unit = (R / int_pow(p, static_cast<unsigned long>(v0))) %
                   int_pow(p, static_cast<unsigned long>(ctx.prec));
    return PadicElem::make_truncated(unit, v0, ctx);
}

bool square_class_stable(const Poly& f, const Rational& disc_center, int disc_depth,
                         const PrimeCtx& ctx) {
    Rational f0 = f.eval(disc_center);
    if (sgn(f0) == 0) return false;
    long t = ctx.p == 2 ? 3 : 1;
    Poly shifted = f.taylor_shift(disc_center);  // coefficients are Taylor coeffs at center
    long vf0 = *valuation(f0, ctx.p);
    long best = -1;
    bool have = false;
    for (std::size_t j = 1; j < shifted.c.size(); ++j) {
        if (sgn(shifted.c[j]) == 0) continue;
        long vj = *valuation(shifted.c[j], ctx.p);
        if (!have || vj < best) {
            best = vj;
            have = true;
        }
    }
    if (!have) return true;  // constant polynomial
    return disc_depth + best - vf0 >= t;
}

}  // namespace chatelet
