#include "chatelet/local.hpp"

#include <algorithm>
#include <utility>

#include "chatelet/errors.hpp"
#include "chatelet/galois.hpp"
#include "chatelet/padic.hpp"
#include "chatelet/symbols.hpp"

namespace chatelet {

namespace {

bool is_prime(const Integer& p) {
    return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

// ---------------------------------------------------------------- charts ---

// One affine chart of P^1(Q_p): the unit disc in the given variable.  The
// w-chart covers |x| > 1 through w = 1/x and carries transformed polynomials
// whose square classes match the originals there.
struct Chart {
    Poly G;        // fiber square-class polynomial
    Poly Gint;     // primitive integer form of G, for the Newton criterion
    Poly Gint_d;   // its derivative
    std::vector<Poly> H;          // representative square-class polynomials
    std::vector<Rational> roots;  // rational roots of G (singular fibers)
    bool w = false;
    std::string var = "x";
};

Poly from_integer_coeffs(const std::vector<Integer>& cs) {
    Poly out;
    for (std::size_t i = 0; i < cs.size(); ++i)
        out = out + Rational(cs[i]) * Poly::monomial(Rational(1), i);
    return out;
}

std::vector<Rational> rational_roots(const Poly& f) {
    std::vector<Rational> out;
    if (f.deg() < 1) return out;
    for (const auto& [g, e] : factor_over_Q(f).factors)
        if (g.deg() == 1) out.push_back(-g.coeff(0));
    std::sort(out.begin(), out.end());
    return out;
}

void finish_chart(Chart& ch) {
    ch.Gint = from_integer_coeffs(primitive_integer_coeffs(ch.G));
    ch.Gint_d = ch.Gint.derivative();
    ch.roots = rational_roots(ch.G);
}

// square class of h(1/w) on 0 < |w| <= 1/p, as a polynomial in w; the value
// at w = 0 encodes the class at infinity (0 when the degree difference is
// odd, i.e. the symbol is undefined there)
Poly w_rep(const RatFn& h) {
    Poly out = h.num.reversed() * h.den.reversed();
    if ((h.num.deg() + h.den.deg()) % 2 != 0) out = out * Poly::x();
    return out;
}

// w^4 * Q(1/w), the quartic form in the w-chart
Poly w_fiber(const Poly& Q) {
    Poly out = Q.reversed();
    for (long d = Q.deg(); d < 4; ++d) out = out * Poly::x();
    return out;
}

Chart x_chart(const Poly& Q, const std::vector<RatFn>& reps, const std::string& var) {
    Chart ch;
    ch.G = Q;
    ch.var = var;
    for (const auto& rp : reps) ch.H.push_back(rp.num * rp.den);
    finish_chart(ch);
    return ch;
}

Chart w_chart(const Poly& Q, const std::vector<RatFn>& reps, const std::string& var) {
    Chart ch;
    ch.w = true;
    ch.G = w_fiber(Q);
    ch.var = var;
    for (const auto& rp : reps) ch.H.push_back(w_rep(rp));
    finish_chart(ch);
    return ch;
}

std::string disc_desc(const Chart& ch, const Integer& r, int m, const Integer& p) {
    std::string lhs = ch.w ? "1/" + ch.var : ch.var;
    return lhs + " = " + r.get_str() + " (mod " + p.get_str() + "^" + std::to_string(m) + ")";
}

bool in_disc(const Rational& x, const Integer& r, int m, const Integer& p) {
    auto v = valuation(x - Rational(r), p);
    return !v || *v >= m;  // nullopt: x equals the center
}

// Does G have a p-adic root inside the disc?  With g = Gint integral and r
// an integer, v(g(r)) > 2 v(g'(r)) certifies by Hensel a unique root xi with
// v(xi - r) = v(g(r)) - v(g'(r)); requiring that to also be >= m keeps xi in
// the disc.
bool newton_root_in_disc(const Chart& ch, const Integer& r, int m, const Integer& p) {
    Rational g = ch.Gint.eval(Rational(r));
    if (sgn(g) == 0) return false;  // exact roots are handled separately
    Rational gd = ch.Gint_d.eval(Rational(r));
    if (sgn(gd) == 0) return false;
    long vg = *valuation(g, p), vgd = *valuation(gd, p);
    return vg >= std::max(2 * vgd + 1, vgd + static_cast<long>(m));
}

void attain(EvImage& img, const Inv2& v, EvWitness w) {
    img.values.insert(v);
    auto it = img.witnesses.find(v);
    if (it == img.witnesses.end())
        img.witnesses.emplace(v, std::move(w));
    else if (!it->second.is_point() && w.is_point())
        it->second = std::move(w);
}

EvWitness center_witness(const Chart& ch, const Integer& r, int m, const Integer& p) {
    EvWitness w;
    w.desc = disc_desc(ch, r, m, p);
    if (!ch.w)
        w.x0 = Rational(r);
    else if (sgn(r) == 0)
        w.at_inf = true;
    else
        w.x0 = Rational(1) / Rational(r);
    return w;
}

EvWitness root_witness(const Chart& ch, const Rational& rt) {
    EvWitness w;
    if (!ch.w) {
        w.x0 = rt;
        w.desc = ch.var + " = " + rt.get_str() + " (singular fiber)";
    } else if (sgn(rt) == 0) {
        w.at_inf = true;
        w.desc = ch.var + " = infinity (singular fiber)";
    } else {
        w.x0 = Rational(1) / rt;
        w.desc = ch.var + " = " + Rational(Rational(1) / rt).get_str() + " (singular fiber)";
    }
    return w;
}

// A disc certified to contain a p-adic root xi of G has solvable fibers
// arbitrarily close to xi: for x = xi + s p^e with e large, G(x) differs
// from G'(xi) s p^e by a square factor, and s p^e ranges over every square
// class.  Lift the root and scan those offsets for an explicit point.
EvWitness searched_witness(const Chart& ch, const Rational& a, const Integer& p, const Integer& r,
                           int m) {
    Place vp = Place::Finite(p);
    EvWitness fallback;
    fallback.desc = disc_desc(ch, r, m, p) + " (p-adic singular fiber; no explicit point recorded)";
    try {
        long vgd = *valuation(ch.Gint_d.eval(Rational(r)), p);
        int prec = m + static_cast<int>(vgd) + 20;
        PadicElem root = hensel_lift(ch.Gint, r, PrimeCtx{p, prec});
        Integer xi;
        if (root.exact)
            xi = residue_mod(root.value, int_pow(p, static_cast<unsigned long>(prec)));
        else
            xi = root.unit * int_pow(p, static_cast<unsigned long>(root.val));
        long e0 = static_cast<long>(m) + vgd + 5;
        Integer smax = p == 2 ? Integer(8) : p;
        for (long e = e0; e <= e0 + 1; ++e) {
            Integer step = int_pow(p, static_cast<unsigned long>(e));
            for (Integer s = 1; s < smax; ++s) {
                if (p == 2 && s % 2 == 0) continue;
                Rational x0 = Rational(xi + s * step);
                Rational g = ch.G.eval(x0);
                if (sgn(g) == 0) continue;
                if (hilbert_symbol(a, g, vp) == Inv2::zero()) {
                    EvWitness w;
                    w.x0 = ch.w ? Rational(Rational(1) / x0) : x0;
                    w.desc = disc_desc(ch, r, m, p) + ", near a p-adic singular fiber";
                    return w;
                }
            }
        }
    } catch (const Error&) {
        // precision trouble: keep the disc-level description
    }
    return fallback;
}

// ------------------------------------------------------- disc enumeration ---

void dfs_ev(const Chart& ch, const Rational& a, const Integer& p, int depth, EvImage& img) {
    PrimeCtx ctx{p, depth + 4};
    Place vp = Place::Finite(p);
    std::vector<std::pair<Integer, int>> st;
    st.emplace_back(Integer(0), ch.w ? 1 : 0);
    while (!st.empty()) {
        if (img.values.size() == 2) return;  // image already full
        auto [r, m] = st.back();
        st.pop_back();
        int rep = -1;
        for (std::size_t i = 0; i < ch.H.size(); ++i)
            if (square_class_stable(ch.H[i], Rational(r), m, ctx)) {
                rep = static_cast<int>(i);
                break;
            }
        if (rep >= 0) {
            Inv2 val = hilbert_symbol(a, ch.H[static_cast<std::size_t>(rep)].eval(Rational(r)), vp);
            if (square_class_stable(ch.G, Rational(r), m, ctx)) {
                // fiber class constant on the disc: solvable everywhere or nowhere
                if (hilbert_symbol(a, ch.G.eval(Rational(r)), vp) == Inv2::zero())
                    attain(img, val, center_witness(ch, r, m, p));
                continue;
            }
            const Rational* hit = nullptr;
            for (const auto& rt : ch.roots)
                if (in_disc(rt, r, m, p)) {
                    hit = &rt;
                    break;
                }
            if (hit) {  // rational singular fiber: solvable, invariant = val
                attain(img, val, root_witness(ch, *hit));
                continue;
            }
            if (newton_root_in_disc(ch, r, m, p)) {
                attain(img, val, searched_witness(ch, a, p, r, m));
                continue;
            }
        }
        if (m >= depth) {
            img.unresolved.push_back(disc_desc(ch, r, m, p));
            continue;
        }
        Integer step = int_pow(p, static_cast<unsigned long>(m));
        for (Integer k = p - 1; k >= 0; --k) st.emplace_back(r + k * step, m + 1);
    }
}

// true as soon as one solvable fiber is certified in the chart
bool dfs_solvable(const Chart& ch, const Rational& a, const Integer& p, int depth,
                  bool& exceeded) {
    PrimeCtx ctx{p, depth + 4};
    Place vp = Place::Finite(p);
    std::vector<std::pair<Integer, int>> st;
    st.emplace_back(Integer(0), ch.w ? 1 : 0);
    while (!st.empty()) {
        auto [r, m] = st.back();
        st.pop_back();
        bool root_hit = false;
        for (const auto& rt : ch.roots)
            if (in_disc(rt, r, m, p)) {
                root_hit = true;
                break;
            }
        if (root_hit) return true;  // singular fiber carries a smooth-model point
        if (square_class_stable(ch.G, Rational(r), m, ctx)) {
            if (hilbert_symbol(a, ch.G.eval(Rational(r)), vp) == Inv2::zero()) return true;
            continue;
        }
        if (newton_root_in_disc(ch, r, m, p)) return true;
        if (m >= depth) {
            exceeded = true;
            continue;
        }
        Integer step = int_pow(p, static_cast<unsigned long>(m));
        for (Integer k = p - 1; k >= 0; --k) st.emplace_back(r + k * step, m + 1);
    }
    return false;
}

}  // namespace

// ------------------------------------------------------------- operations ---

bool fiber_solvable(const ChateletSurface& s, const std::optional<Rational>& x0, const Place& v) {
    if (!x0) {
        if (s.deg() == 3) return true;  // infinity is a singular fiber
        return hilbert_symbol(s.a, s.P.lc(), v) == Inv2::zero();
    }
    Rational val = s.P.eval(*x0);
    if (sgn(val) == 0) return true;  // y = z = 0 on the smooth model
    return hilbert_symbol(s.a, val, v) == Inv2::zero();
}

bool locally_solvable(const ChateletSurface& s, const Place& v, int depth) {
    if (v.is_real()) {
        if (sgn(s.a) > 0) return true;          // indefinite quadratic form
        if (s.deg() % 2 != 0) return true;      // odd degree attains positive values
        if (sgn(s.P.lc()) > 0) return true;     // positive near infinity
        return real_root_count(s.P) > 0;        // lc < 0: positive iff a root exists
    }
    if (depth < 1) throw CriterionFails("locally_solvable: depth must be >= 1");
    bool exceeded = false;
    std::vector<RatFn> no_reps;
    Chart cx = x_chart(s.P, no_reps, "x");
    if (dfs_solvable(cx, s.a, v.p, depth, exceeded)) return true;
    Chart cw = w_chart(s.P, no_reps, "x");
    if (dfs_solvable(cw, s.a, v.p, depth, exceeded)) return true;
    if (exceeded)
        throw DepthExceeded("locally_solvable: undecided discs remain at p = " + v.p.get_str());
    return false;
}

EvImage ev_image(const ChateletSurface& s, const BrauerGenerator& gen, const Integer& p,
                 int depth) {
    if (depth < 1) throw CriterionFails("ev_image: depth must be >= 1");
    if (!is_prime(p)) throw CriterionFails("ev_image: p must be prime");
    Poly Q = gen.chart ? transform_quartic(s.P, *gen.chart) : s.P;
    EvImage img;
    Chart cx = x_chart(Q, gen.reps, gen.coord);
    dfs_ev(cx, gen.a, p, depth, img);
    if (img.values.size() < 2) {
        Chart cw = w_chart(Q, gen.reps, gen.coord);
        dfs_ev(cw, gen.a, p, depth, img);
    }
    if (img.values.size() == 2) {
        img.unresolved.clear();
        img.determined = true;
    } else {
        img.determined = img.unresolved.empty();
    }
    return img;
}

// ------------------------------------------------------------- real place ---

namespace {

int sign_at(const Poly& f, const Rational& x) { return sgn(f.eval(x)); }

std::vector<Poly> sturm_chain(const Poly& g) {
    std::vector<Poly> ch;
    ch.push_back(g);
    ch.push_back(g.derivative());
    while (ch.back().deg() >= 1) {
        Poly rem = divmod(ch[ch.size() - 2], ch.back()).second;
        if (rem.deg() < 0) break;
        ch.push_back(-rem);
    }
    return ch;
}

long variations(const std::vector<int>& signs) {
    long out = 0;
    int prev = 0;
    for (int sg : signs) {
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++out;
        prev = sg;
    }
    return out;
}

long var_at(const std::vector<Poly>& ch, const Rational& x) {
    std::vector<int> signs;
    for (const Poly& f : ch) signs.push_back(sign_at(f, x));
    return variations(signs);
}

long var_at_inf(const std::vector<Poly>& ch, int dir) {
    std::vector<int> signs;
    for (const Poly& f : ch) {
        int sg = f.deg() < 0 ? 0 : sgn(f.lc());
        if (dir < 0 && f.deg() % 2 != 0) sg = -sg;
        signs.push_back(sg);
    }
    return variations(signs);
}

struct RootCut {
    Rational lo, hi;  // closed; exact root iff lo == hi
};

// Shrink an isolating interval (lo, hi) of firr (simple sign-change root
// inside, rational endpoints that are nonroots) until the point r lies
// strictly outside [lo, hi].  Splitting in thirds always makes progress.
void exclude_point(const Poly& firr, Rational& lo, Rational& hi, const Rational& r) {
    int guard = 0;
    while (lo <= r && r <= hi) {
        if (++guard > 20000) throw Error("real root isolation failed to separate a point");
        Rational q1 = lo + (hi - lo) / 3, q2 = lo + (hi - lo) * 2 / 3;
        int s0 = sign_at(firr, lo), s1 = sign_at(firr, q1), s2 = sign_at(firr, q2);
        if (s0 != s1) {
            hi = q1;
        } else if (s1 != s2) {
            lo = q1;
            hi = q2;
        } else {
            lo = q2;
        }
    }
}

// Disjoint, sorted cuts (exact points and open-isolating intervals) covering
// every distinct real root of f.
std::vector<RootCut> isolate_real_roots(const Poly& f) {
    std::vector<RootCut> cuts;
    if (f.deg() < 1) return cuts;
    Poly g = exact_div(f, poly_gcd(f, f.derivative()));
    Poly firr{{Rational(1)}};
    for (const auto& [q, e] : factor_over_Q(g).factors) {
        if (q.deg() == 1)
            cuts.push_back({-q.coeff(0), -q.coeff(0)});
        else
            firr = firr * q;
    }
    if (firr.deg() >= 1) {
        auto ch = sturm_chain(firr);
        Rational M(1);
        for (long i = 0; i < firr.deg(); ++i) {
            Rational t = firr.coeff(static_cast<std::size_t>(i)) / firr.lc();
            M += abs(t);
        }
        std::vector<std::pair<Rational, Rational>> work{{-M, M}}, iso;
        while (!work.empty()) {
            auto [lo, hi] = work.back();
            work.pop_back();
            long k = var_at(ch, lo) - var_at(ch, hi);
            if (k <= 0) continue;
            if (k == 1) {
                iso.emplace_back(lo, hi);
                continue;
            }
            Rational mid = (lo + hi) / 2;  // never a root: firr has no rational roots
            work.emplace_back(lo, mid);
            work.emplace_back(mid, hi);
        }
        for (auto& [lo, hi] : iso) {
            for (const auto& c : cuts)
                if (c.lo == c.hi) exclude_point(firr, lo, hi, c.lo);
            cuts.push_back({lo, hi});
        }
    }
    std::sort(cuts.begin(), cuts.end(),
              [](const RootCut& a, const RootCut& b) { return a.lo < b.lo; });
    return cuts;
}

std::vector<Rational> gap_samples(const std::vector<RootCut>& cuts) {
    if (cuts.empty()) return {Rational(0)};
    std::vector<Rational> out;
    out.push_back(cuts.front().lo - 1);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) out.push_back((cuts[i].hi + cuts[i + 1].lo) / 2);
    out.push_back(cuts.back().hi + 1);
    return out;
}

}  // namespace

long real_root_count(const Poly& f) {
    if (f.deg() < 1) return 0;
    Poly g = exact_div(f, poly_gcd(f, f.derivative()));
    auto ch = sturm_chain(g);
    return var_at_inf(ch, -1) - var_at_inf(ch, +1);
}

EvImage ev_image_real(const ChateletSurface& s, const BrauerGenerator& gen) {
    EvImage img;
    Place re = Place::Real();
    Poly Q = gen.chart ? transform_quartic(s.P, *gen.chart) : s.P;
    if (sgn(s.a) > 0) {
        // y^2 - a z^2 is indefinite: every fiber has real points and every
        // symbol (a, h) vanishes
        img.values.insert(Inv2::zero());
        img.determined = true;
        for (long k = 0; k <= 1000; ++k) {
            Rational x0(k);
            if (sgn(Q.eval(x0)) == 0) continue;
            bool defined = false;
            for (const auto& rp : gen.reps)
                if (rp.value_mod_squares(x0)) defined = true;
            if (!defined) continue;
            EvWitness w;
            w.x0 = x0;
            w.desc = "a > 0: the symbol vanishes on all of X(R)";
            img.witnesses.emplace(Inv2::zero(), std::move(w));
            return img;
        }
        throw Error("ev_image_real: no sample point found");
    }
    if (!locally_solvable(s, re))
        throw EmptyRealLocus("X(R) is empty: a < 0 and P is negative on all of R");
    Poly F = Q;
    for (const auto& rp : gen.reps) F = F * rp.num * rp.den;
    auto cuts = isolate_real_roots(F);
    for (const Rational& x0 : gap_samples(cuts)) {
        if (sgn(Q.eval(x0)) <= 0) continue;  // fiber has no real point (a < 0)
        EvWitness w;
        w.x0 = x0;
        w.desc = gen.coord + " = " + x0.get_str() + " on a P > 0 interval";
        attain(img, ev_at_point(gen, x0, re), std::move(w));
    }
    if (Q.deg() == 3 || sgn(Q.lc()) > 0) {
        EvWitness w;
        w.at_inf = true;
        w.desc = Q.deg() == 3 ? "singular fiber at infinity" : "P > 0 near infinity";
        attain(img, ev_at_point(gen, std::nullopt, re), std::move(w));
    }
    img.determined = true;
    return img;
}

// --------------------------------------------------------------- elliptic ---

bool two_div_criterion(const CurveLocal& E, const Rational& x, const std::optional<Rational>& y) {
    if (!is_prime(E.p) || E.p == 2)
        throw CriterionFails("two_div_criterion: p must be an odd prime");
    if (sgn(E.c) == 0 || sgn(E.lambda) == 0 || E.lambda == 1)
        throw CriterionFails("two_div_criterion: curve is singular");
    auto vc = valuation(E.c, E.p), vl = valuation(E.lambda, E.p),
         vl1 = valuation(E.lambda - 1, E.p);
    if (*vc != 0 || *vl != 0 || *vl1 != 0)
        throw CriterionFails("two_div_criterion: bad reduction at p = " + E.p.get_str());
    Rational fx = E.c * x * (x - 1) * (x - E.lambda);
    if (y) {
        if (*y * *y != fx) throw NotOnCurve("two_div_criterion: y^2 != c x(x-1)(x-lambda)");
        if (sgn(*y) == 0) throw TwoTorsion("two_div_criterion: y = 0");
    } else {
        if (sgn(fx) == 0) throw TwoTorsion("two_div_criterion: x is a 2-torsion abscissa");
        if (!is_square_local(fx, Place::Finite(E.p)))
            throw NotOnCurve("two_div_criterion: no Q_p-point has this abscissa");
    }
    Place vp = Place::Finite(E.p);
    return is_square_local(E.c * x, vp) && is_square_local(E.c * (x - 1), vp) &&
           is_square_local(E.c * (x - E.lambda), vp);
}

// ------------------------------------------------------------ experiments ---

double NormExperimentResult::lo() const {
    return total() == 0 ? 0.0 : static_cast<double>(decided_in) / static_cast<double>(total());
}

double NormExperimentResult::hi() const {
    return total() == 0
               ? 0.0
               : static_cast<double>(decided_in + undecided) / static_cast<double>(total());
}

NormExperimentResult norm_ratio_experiment(const Rational& a, const Integer& r, int n,
                                           const Integer& p) {
    if (!is_prime(p)) throw CriterionFails("norm_ratio_experiment: p must be prime");
    if (quad_ext_type(a, p) != QuadExtType::Ramified)
        throw NotRamified("norm_ratio_experiment: Q_p(sqrt a)/Q_p is not ramified");
    if (n < 1) throw CriterionFails("norm_ratio_experiment: depth must be >= 1");
    Integer span = int_pow(p, static_cast<unsigned long>(n));
    if (span > (Integer(1) << 26))
        throw DepthExceeded("norm_ratio_experiment: p^n too large to enumerate");
    long t = p == 2 ? 3 : 1;
    Integer r0 = ((r % p) + p) % p;
    NormExperimentResult out;
    out.depth = n;
    out.p = p;
    for (Integer x = r0; x < span; x += p) {
        if (sgn(x) == 0) {
            ++out.undecided;  // the class of 0 straddles membership at any depth
            continue;
        }
        long v = *valuation(x, p);
        if (v > n - t) {
            ++out.undecided;  // square class not settled at this depth
            continue;
        }
        if (is_integral_norm(a, Rational(x), p))
            ++out.decided_in;
        else
            ++out.decided_out;
    }
    return out;
}

namespace {

enum class Tri { In, Out, Und };

Tri tri_and_not(Tri x, Tri y) {  // x && !y
    if (x == Tri::In && y == Tri::Out) return Tri::In;
    if (x == Tri::Out || y == Tri::In) return Tri::Out;
    return Tri::Und;
}

Tri tri_neither(Tri x, Tri y) {  // !x && !y
    if (x == Tri::Out && y == Tri::Out) return Tri::In;
    if (x == Tri::In || y == Tri::In) return Tri::Out;
    return Tri::Und;
}

void tri_count(NormExperimentResult& res, Tri t) {
    if (t == Tri::In)
        ++res.decided_in;
    else if (t == Tri::Out)
        ++res.decided_out;
    else
        ++res.undecided;
}

}  // namespace

ABExperimentResult ab_experiment(const Rational& a, const Rational& lambda, int n) {
    Integer two(2);
    if (quad_ext_type(a, two) != QuadExtType::Ramified)
        throw NotRamified("ab_experiment: Q_2(sqrt a)/Q_2 is not ramified");
    auto vl = valuation(lambda, two);
    if (vl && *vl < 0) throw CriterionFails("ab_experiment: lambda must be 2-integral");
    if (n < 3 || n > 24) throw CriterionFails("ab_experiment: need 3 <= n <= 24");
    PrimeCtx ctx{two, n};
    Poly u1({Rational(0), Rational(-1), Rational(1)});  // x(x-1)
    Poly u2({-lambda, Rational(1)});                    // x - lambda
    ABExperimentResult out;
    for (NormExperimentResult* res : {&out.A, &out.B, &out.A_minus_B, &out.B_minus_A, &out.complement}) {
        res->depth = n;
        res->p = two;
    }
    Integer span = int_pow(two, static_cast<unsigned long>(n));
    for (Integer x = 0; x < span; ++x) {
        Rational xc(x);
        Tri inA = Tri::Und, inB = Tri::Und;
        if (square_class_stable(u1, xc, n, ctx))
            inA = is_integral_norm(a, u1.eval(xc), two) ? Tri::In : Tri::Out;
        if (square_class_stable(u2, xc, n, ctx))
            inB = is_integral_norm(a, u2.eval(xc), two) ? Tri::In : Tri::Out;
        tri_count(out.A, inA);
        tri_count(out.B, inB);
        tri_count(out.A_minus_B, tri_and_not(inA, inB));
        tri_count(out.B_minus_A, tri_and_not(inB, inA));
        tri_count(out.complement, tri_neither(inA, inB));
    }
    return out;
}

long count_square_values(const Integer& q, const Poly& R) {
    if (!is_prime(q) || q == 2) throw CriterionFails("count_square_values: q must be an odd prime");
    if (q > 1000000) throw CriterionFails("count_square_values: q too large");
    if (R.deg() != 2 || R.lc() != 1)
        throw WrongShape("count_square_values: R must be a monic quadratic");
    long ql = q.get_si();
    long b = residue_mod(R.coeff(1), q).get_si();
    long c = residue_mod(R.coeff(0), q).get_si();
    std::vector<char> is_sq(static_cast<std::size_t>(ql), 0);
    for (long x = 0; x < ql; ++x) is_sq[static_cast<std::size_t>((x * x) % ql)] = 1;
    long disc = (((b * b - 4 * c) % ql) + ql) % ql;
    if (is_sq[static_cast<std::size_t>(disc)])  // includes disc = 0
        throw Reducible("count_square_values: R is reducible over F_q");
    long count = 0;
    for (long x = 0; x < ql; ++x) {
        long val = ((x * x + b * x + c) % ql + ql) % ql;
        if (val != 0 && is_sq[static_cast<std::size_t>(val)]) ++count;
    }
    return count;
}

}  // namespace chatelet
