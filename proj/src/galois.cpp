#include "chatelet/galois.hpp"

#include <algorithm>
#include <optional>

#include "chatelet/errors.hpp"

namespace chatelet {

int order(GaloisType g) {
    switch (g) {
        case GaloisType::C1: return 1;
        case GaloisType::C2: return 2;
        case GaloisType::C3: return 3;
        case GaloisType::C4: return 4;
        case GaloisType::V4: return 4;
        case GaloisType::S3: return 6;
        case GaloisType::D8: return 8;
        case GaloisType::A4: return 12;
        case GaloisType::S4: return 24;
    }
    throw Error("order: bad GaloisType");
}

std::string to_string(GaloisType g) {
    switch (g) {
        case GaloisType::C1: return "C1";
        case GaloisType::C2: return "C2";
        case GaloisType::C3: return "C3";
        case GaloisType::C4: return "C4";
        case GaloisType::V4: return "V4";
        case GaloisType::S3: return "S3";
        case GaloisType::D8: return "D8";
        case GaloisType::A4: return "A4";
        case GaloisType::S4: return "S4";
    }
    throw Error("to_string: bad GaloisType");
}

QuadField::QuadField(const Rational& a0) {
    if (sgn(a0) == 0) throw ZeroInput("QuadField(0)");
    a = square_class_rep(a0);
    if (a == 1) throw SquareA("QuadField: " + a0.get_str() + " is a rational square");
}

Poly Factorization::reassemble() const {
    Poly out{constant};
    for (const auto& [f, e] : factors)
        for (int i = 0; i < e; ++i) out = out * f;
    return out;
}

bool Factorization::has_factor_of_degree(long d) const {
    for (const auto& [f, e] : factors)
        if (f.deg() == d) return true;
    return false;
}

namespace {

std::optional<Rational> exact_sqrt(const Rational& x) {
    if (sgn(x) < 0) return std::nullopt;
    if (!is_square(x)) return std::nullopt;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), x.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.get_den().get_mpz_t());
    return Rational(n, d);
}

std::vector<Integer> all_divisors(const Integer& n) {
    auto fac = factor_integer(n);
    std::vector<Integer> ds{Integer(1)};
    for (const auto& [p, e] : fac) {
        std::size_t base = ds.size();
        Integer pk(1);
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// one rational root of f, or nullopt; requires f(0) != 0, deg f >= 1
std::optional<Rational> find_rational_root(const Poly& f) {
    auto ic = primitive_integer_coeffs(f);
    for (const Integer& num : all_divisors(ic.front())) {
        for (const Integer& den : all_divisors(ic.back())) {
            Rational r(num, den);
            r.canonicalize();
            if (sgn(f.eval(r)) == 0) return r;
            if (sgn(f.eval(-r)) == 0) return -r;
        }
    }
    return std::nullopt;
}

bool poly_less(const Poly& A, const Poly& B) {
    if (A.deg() != B.deg()) return A.deg() < B.deg();
    for (long i = A.deg(); i >= 0; --i) {
        std::size_t k = static_cast<std::size_t>(i);
        if (A.coeff(k) != B.coeff(k)) return A.coeff(k) < B.coeff(k);
    }
    return false;
}

// monic depressed coefficients (p, q, r) of a monic quartic and the shift
struct Depressed {
    Rational p, q, r, shift;  // f(x) = g(x - shift), g = y^4 + p y^2 + q y + r
};

Depressed depress(const Poly& fmonic) {
    Rational sh = -fmonic.coeff(3) / 4;
    Poly g = fmonic.taylor_shift(sh);
    return {g.coeff(2), g.coeff(1), g.coeff(0), sh};
}

Poly resolvent_cubic(const Depressed& d) {
    // z^3 + 2p z^2 + (p^2 - 4r) z - q^2, roots are the u^2 of the pairings
    return Poly({-d.q * d.q, d.p * d.p - 4 * d.r, 2 * d.p, Rational(1)});
}

// split a monic quartic without rational roots into two monic quadratics
// over Q, if possible
std::optional<std::pair<Poly, Poly>> quartic_split_Q(const Poly& fmonic) {
    Depressed d = depress(fmonic);
    Poly R = resolvent_cubic(d);
    // collect rational roots of R (deg 3, so at most 3)
    std::vector<Rational> roots;
    Poly cur = R;
    while (cur.deg() >= 1) {
        if (sgn(cur.coeff(0)) == 0) {
            roots.push_back(Rational(0));
            cur = exact_div(cur, Poly::x());
            continue;
        }
        auto r = find_rational_root(cur);
        if (!r) break;
        roots.push_back(*r);
        cur = exact_div(cur, Poly({-*r, Rational(1)}));
    }
    std::sort(roots.begin(), roots.end());
    for (const Rational& z0 : roots) {
        Rational v, w, u;
        if (sgn(z0) == 0) {
            // biquadratic pairing (y^2+v)(y^2+w), v+w = p, vw = r
            auto s = exact_sqrt(d.p * d.p - 4 * d.r);
            if (!s) continue;
            u = 0;
            v = (d.p - *s) / 2;
            w = (d.p + *s) / 2;
        } else {
            auto us = exact_sqrt(z0);
            if (!us) continue;
            u = *us;
            v = (d.p + z0 - d.q / u) / 2;
            w = (d.p + z0 + d.q / u) / 2;
        }
        Poly g1 = Poly({v, u, Rational(1)}).taylor_shift(-d.shift);
        Poly g2 = Poly({w, -u, Rational(1)}).taylor_shift(-d.shift);
        if (g1 * g2 == fmonic) {
            if (poly_less(g2, g1)) std::swap(g1, g2);
            return std::make_pair(g1, g2);
        }
    }
    return std::nullopt;
}

}  // namespace

Factorization factor_over_Q(const Poly& P) {
    if (P.is_zero()) throw ZeroInput("factor_over_Q(0)");
    if (P.deg() > 4) throw BadDegree("factor_over_Q: degree > 4");
    Factorization out;
    out.constant = P.lc();
    Poly f = P.made_monic();
    std::vector<Poly> irred;
    while (f.deg() >= 1 && sgn(f.coeff(0)) == 0) {
        irred.push_back(Poly::x());
        f = exact_div(f, Poly::x());
    }
    while (f.deg() >= 1) {
        auto r = find_rational_root(f);
        if (!r) break;
        Poly lin({-*r, Rational(1)});
        irred.push_back(lin);
        f = exact_div(f, lin);
    }
    if (f.deg() == 2 || f.deg() == 3) {
        irred.push_back(f);
    } else if (f.deg() == 4) {
        auto sp = quartic_split_Q(f);
        if (sp) {
            irred.push_back(sp->first);
            irred.push_back(sp->second);
        } else {
            irred.push_back(f);
        }
    }
    std::sort(irred.begin(), irred.end(), poly_less);
    for (const Poly& g : irred) {
        if (!out.factors.empty() && out.factors.back().first == g)
            out.factors.back().second += 1;
        else
            out.factors.emplace_back(g, 1);
    }
    if (out.reassemble() != P) throw Error("factor_over_Q: internal verification failed");
    return out;
}

bool is_square_in_quad(const Rational& x, const QuadField& K) {
    if (sgn(x) == 0) throw ZeroInput("is_square_in_quad(0)");
    return is_square(x) || is_square(x * Rational(K.a));
}

bool cubic_root_in_quad(const Poly& f, const QuadField& K) {
    if (f.deg() != 3) throw WrongShape("cubic_root_in_quad: degree != 3");
    Factorization fac = factor_over_Q(f);
    for (const auto& [g, e] : fac.factors)
        if (g.deg() == 1) return true;
    for (const auto& [g, e] : fac.factors)
        if (g.deg() == 2 && is_square_in_quad(discriminant(g), K)) return true;
    return false;
}

bool quartic_splits_over_quad(const Poly& f, const QuadField& K) {
    if (f.deg() != 4) throw WrongShape("quartic_splits_over_quad: degree != 4");
    Factorization fac = factor_over_Q(f);
    if (fac.factors.size() != 1 || fac.factors[0].second != 1)
        throw NotIrreducible("quartic_splits_over_quad: input reducible over Q");
    Poly fm = f.made_monic();
    Depressed d = depress(fm);
    Poly R = resolvent_cubic(d);
    Factorization rf = factor_over_Q(R);
    for (const auto& [g, e] : rf.factors) {
        if (g.deg() != 1) continue;
        Rational z0 = -g.coeff(0);
        if (sgn(z0) == 0) {
            if (is_square_in_quad(d.p * d.p - 4 * d.r, K)) return true;
        } else {
            if (is_square_in_quad(z0, K)) return true;
        }
    }
    for (const auto& [g, e] : rf.factors) {
        if (g.deg() != 2) continue;
        Rational dG = discriminant(g);
        if (!is_square(dG * Rational(K.a))) continue;  // roots of g not in K
        // irrational resolvent root z = s + t sqrt(a); z is a square in K iff
        // X^2 - sX + a t^2/4 has a nonzero rational root that is a rational
        // square (then z = (u + (t/2u) sqrt a)^2)
        Rational s = -g.coeff(1) / 2;
        Rational m = *exact_sqrt(dG * Rational(K.a));
        Rational t = m / (2 * Rational(K.a));
        Rational disc_x = s * s - Rational(K.a) * t * t;
        auto sq = exact_sqrt(disc_x);
        if (!sq) continue;
        Rational rho1 = (s + *sq) / 2, rho2 = (s - *sq) / 2;
        if (sgn(rho1) != 0 && is_square(rho1)) return true;
        if (sgn(rho2) != 0 && is_square(rho2)) return true;
    }
    return false;
}

namespace {

// base = nullptr means ground field Q
bool base_square(const Rational& x, const QuadField* base) {
    return base ? is_square_in_quad(x, *base) : is_square(x);
}

GaloisType galois_group_impl(const Poly& f, const QuadField* base) {
    if (f.deg() != 3 && f.deg() != 4)
        throw WrongShape("galois_group: degree must be 3 or 4");
    if (sgn(discriminant(f)) == 0) throw NotSeparable("galois_group: repeated roots");
    Factorization fac = factor_over_Q(f);
    std::vector<Poly> lin, quad, cub, quart;
    for (const auto& [g, e] : fac.factors) {
        if (g.deg() == 1) lin.push_back(g);
        if (g.deg() == 2) quad.push_back(g);
        if (g.deg() == 3) cub.push_back(g);
        if (g.deg() == 4) quart.push_back(g);
    }
    if (!cub.empty()) {
        // splitting field comes from the cubic factor alone; a quadratic base
        // never splits an irreducible cubic
        return base_square(discriminant(cub[0]), base) ? GaloisType::C3 : GaloisType::S3;
    }
    if (!quart.empty()) {
        const Poly& q4 = quart[0];
        if (base && quartic_splits_over_quad(q4, *base)) {
            GaloisType overQ = galois_group_impl(q4, nullptr);
            if (overQ == GaloisType::D8) return GaloisType::V4;
            if (overQ == GaloisType::C4 || overQ == GaloisType::V4) return GaloisType::C2;
            throw Error("galois_group: quartic split over quadratic base with group " +
                        to_string(overQ));
        }
        Rational disc = discriminant(q4);
        Poly fm = q4.made_monic();
        Depressed d = depress(fm);
        Poly R = resolvent_cubic(d);
        Factorization rf = factor_over_Q(R);
        std::optional<Rational> z0;
        for (const auto& [g, e] : rf.factors)
            if (g.deg() == 1 && !z0) z0 = -g.coeff(0);
        if (!z0) return base_square(disc, base) ? GaloisType::A4 : GaloisType::S4;
        if (base_square(disc, base)) return GaloisType::V4;
        Rational m_nt = sgn(d.q) != 0 ? *z0 : d.p * d.p - 4 * d.r;
        return base_square(disc * m_nt, base) ? GaloisType::C4 : GaloisType::D8;
    }
    int n_split = 0;  // quadratic factors that split over the base
    for (const Poly& g : quad)
        if (base_square(discriminant(g), base)) ++n_split;
    if (quad.empty()) return GaloisType::C1;
    if (quad.size() == 1) return n_split == 1 ? GaloisType::C1 : GaloisType::C2;
    // two irreducible quadratics
    if (n_split == 2) return GaloisType::C1;
    if (n_split == 1) return GaloisType::C2;
    Rational d1d2 = discriminant(quad[0]) * discriminant(quad[1]);
    return base_square(d1d2, base) ? GaloisType::C2 : GaloisType::V4;
}

}  // namespace

GaloisType galois_group(const Poly& f) { return galois_group_impl(f, nullptr); }

GaloisType galois_group(const Poly& f, const QuadField& base) {
    return galois_group_impl(f, &base);
}

bool sqrt_a_in_splitting_field(const Poly& f, const QuadField& K) {
    int oQ = order(galois_group(f));
    int oK = order(galois_group(f, K));
    return oK * 2 == oQ;
}

}  // namespace chatelet
