#include "chatelet/symbols.hpp"

#include <set>

#include "chatelet/errors.hpp"
#include "chatelet/padic.hpp"

namespace chatelet {

QuadExtType quad_ext_type(const Rational& a, const Integer& p) {
    if (sgn(a) == 0) throw ZeroInput("quad_ext_type(0)");
    if (is_square_local(a, Place::Finite(p))) return QuadExtType::Split;
    long v = *valuation(a, p);
    if (v % 2 != 0) return QuadExtType::Ramified;
    Rational u = unit_part(a, p);
    if (p == 2) return mod8_unit(u) == 5 ? QuadExtType::Unramified : QuadExtType::Ramified;
    return legendre_unit(u, p) == -1 ? QuadExtType::Unramified : QuadExtType::Ramified;
}

namespace {

// epsilon(u) = (u-1)/2 mod 2 for odd u
int eps2(int umod8) { return (umod8 % 4 == 3) ? 1 : 0; }
// omega(u) = (u^2-1)/8 mod 2 for odd u
int omega2(int umod8) { return (umod8 == 3 || umod8 == 5) ? 1 : 0; }

}  // namespace

Inv2 hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
    if (sgn(a) == 0 || sgn(b) == 0) throw ZeroInput("hilbert_symbol with zero argument");
    if (place.is_real()) return (sgn(a) < 0 && sgn(b) < 0) ? Inv2::half() : Inv2::zero();
    const Integer& p = place.p;
    long alpha = *valuation(a, p);
    long beta = *valuation(b, p);
    Rational u = unit_part(a, p);
    Rational w = unit_part(b, p);
    if (p == 2) {
        int um = mod8_unit(u), wm = mod8_unit(w);
        int e = eps2(um) * eps2(wm) + static_cast<int>(alpha & 1) * omega2(wm) +
                static_cast<int>(beta & 1) * omega2(um);
        return (e % 2 != 0) ? Inv2::half() : Inv2::zero();
    }
    int s = 1;
    if ((alpha % 2 != 0) && (beta % 2 != 0) && p % 4 == 3) s = -s;
    if (beta % 2 != 0) s *= legendre_unit(u, p);
    if (alpha % 2 != 0) s *= legendre_unit(w, p);
    return s < 0 ? Inv2::half() : Inv2::zero();
}

Inv2 invariant_sum(const Rational& a, const Rational& b) {
    if (sgn(a) == 0 || sgn(b) == 0) throw ZeroInput("invariant_sum with zero argument");
    std::set<Integer> ps{Integer(2)};
    for (const auto& q : primes_of(a)) ps.insert(q);
    for (const auto& q : primes_of(b)) ps.insert(q);
    Inv2 total = hilbert_symbol(a, b, Place::Real());
    for (const auto& q : ps) total += hilbert_symbol(a, b, Place::Finite(q));
    return total;
}

Inv2 invariant_unramified(const Rational& a, const Rational& b, const Integer& p) {
    if (sgn(a) == 0 || sgn(b) == 0) throw ZeroInput("invariant_unramified with zero argument");
    if (quad_ext_type(a, p) != QuadExtType::Unramified)
        throw RamifiedOrSplit("invariant_unramified: Q_" + p.get_str() +
                              "(sqrt " + a.get_str() + ") is not unramified quadratic");
    long v = *valuation(b, p);
    return (v % 2 != 0) ? Inv2::half() : Inv2::zero();
}

Integer find_nontrivial_unit(const Rational& a, const Integer& p) {
    if (p != 2)
        throw CriterionFails("find_nontrivial_unit: only residue characteristic 2 implemented");
    if (sgn(a) == 0) throw ZeroInput("find_nontrivial_unit(0)");
    if (quad_ext_type(a, p) != QuadExtType::Ramified)
        throw NotRamified("find_nontrivial_unit: Q_2(sqrt " + a.get_str() + ") is not ramified");
    for (Integer u = 0;; ++u) {
        Rational b = 1 - 2 * Rational(u);  // odd, hence nonzero
        if (hilbert_symbol(a, b, Place::Finite(p)) == Inv2::half()) return u;
    }
}

bool is_integral_norm(const Rational& a, const Rational& x, const Integer& p) {
    if (sgn(x) == 0) throw ZeroInput("is_integral_norm(x = 0)");
    if (quad_ext_type(a, p) != QuadExtType::Ramified)
        throw NotRamified("is_integral_norm: Q_" + p.get_str() + "(sqrt " + a.get_str() +
                          ") is not ramified");
    if (*valuation(x, p) < 0) return false;
    return hilbert_symbol(a, x, Place::Finite(p)) == Inv2::zero();
}

}  // namespace chatelet
