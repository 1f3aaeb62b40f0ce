#include "chatelet/rational.hpp"

#include <cstdlib>

#include "chatelet/errors.hpp"

namespace chatelet {

bool is_square(const Integer& x) {
    if (sgn(x) < 0) return false;
    return mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

bool is_square(const Rational& x) {
    return is_square(x.get_num()) && is_square(x.get_den());
}

std::optional<long> valuation(const Integer& x, const Integer& p) {
    if (sgn(x) == 0) return std::nullopt;
    Integer n = abs(x);
    long v = 0;
    Integer q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (sgn(r) != 0) break;
        n = q;
        ++v;
    }
    return v;
}

std::optional<long> valuation(const Rational& x, const Integer& p) {
    if (sgn(x) == 0) return std::nullopt;
    return *valuation(x.get_num(), p) - *valuation(x.get_den(), p);
}

Rational unit_part(const Rational& x, const Integer& p) {
    auto v = valuation(x, p);
    if (!v) throw ZeroInput("unit_part of 0");
    Rational pv;
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(std::labs(*v)));
    if (*v >= 0)
        pv = Rational(pk);
    else
        pv = Rational(1, pk);
    Rational u = x / pv;
    u.canonicalize();
    return u;
}

Integer residue_mod(const Rational& x, const Integer& m) {
    Integer num = x.get_num() % m;
    Integer den = x.get_den();
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
        throw CriterionFails("residue_mod: denominator not invertible modulo " + m.get_str());
    Integer r = (num * inv) % m;
    if (sgn(r) < 0) r += m;
    return r;
}

int legendre_unit(const Rational& u, const Integer& p) {
    // (num/den | p) = (num|p)*(den|p) since (den|p)^2 = 1.
    int a = mpz_legendre(u.get_num().get_mpz_t(), p.get_mpz_t());
    int b = mpz_legendre(u.get_den().get_mpz_t(), p.get_mpz_t());
    if (a == 0 || b == 0) throw CriterionFails("legendre_unit: argument not a p-unit");
    return a * b;
}

int mod8_unit(const Rational& u) {
    Integer r = residue_mod(u, 8);
    int v = static_cast<int>(r.get_si());
    if (v % 2 == 0) throw CriterionFails("mod8_unit: argument not a 2-unit");
    return v;
}

namespace {

// Pollard-Brent rho; n odd composite, not a prime power handled by caller.
Integer pollard_brent(const Integer& n, unsigned long seed) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(seed);
    for (;;) {
        Integer y = rng.get_z_range(n - 1) + 1;
        Integer c = rng.get_z_range(n - 1) + 1;
        Integer m = 128, g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (Integer i = 0; i < r; ++i) y = (y * y + c) % n;
            Integer k = 0;
            while (k < r && g == 1) {
                ys = y;
                Integer rem = r - k;
                Integer lim = m < rem ? m : rem;
                for (Integer i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = (ys * ys + c) % n;
                Integer d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
        // retry with new parameters
    }
}

void factor_into(Integer n, std::map<Integer, unsigned>& out, unsigned long seed) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
        out[n] += 1;
        return;
    }
    Integer d = pollard_brent(n, seed);
    factor_into(d, out, seed + 1);
    factor_into(n / d, out, seed + 1);
}

}  // namespace

std::map<Integer, unsigned> factor_integer(const Integer& n) {
    if (sgn(n) == 0) throw ZeroInput("factor_integer(0)");
    Integer m = abs(n);
    std::map<Integer, unsigned> out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L,
                   53L, 59L, 61L, 67L, 71L, 73L, 79L, 83L, 89L, 97L}) {
        while (m % p == 0) {
            out[Integer(p)] += 1;
            m /= p;
        }
    }
    // continue trial division a bit further before handing to rho
    Integer p = 101;
    while (m > 1 && p * p <= m && p < 100000) {
        while (m % p == 0) {
            out[p] += 1;
            m /= p;
        }
        p += 2;
    }
    if (m > 1) {
        if (p * p > m)
            out[m] += 1;
        else
            factor_into(m, out, 0xC0FFEEUL);
    }
    return out;
}

Integer squarefree_part(const Integer& n) {
    if (sgn(n) == 0) throw ZeroInput("squarefree_part(0)");
    auto fac = factor_integer(n);
    Integer d = sgn(n) < 0 ? -1 : 1;
    for (const auto& [p, e] : fac)
        if (e % 2 == 1) d *= p;
    return d;
}

Integer square_class_rep(const Integer& x) {
    return squarefree_part(x);
}

Integer square_class_rep(const Rational& x) {
    if (sgn(x) == 0) throw ZeroInput("square_class_rep(0)");
    // num/den ~ num*den modulo squares
    return squarefree_part(x.get_num() * x.get_den());
}

std::set<Integer> primes_of(const Rational& x) {
    if (sgn(x) == 0) throw ZeroInput("primes_of(0)");
    std::set<Integer> out;
    for (const auto& [p, e] : factor_integer(x.get_num()))
        out.insert(p);
    for (const auto& [p, e] : factor_integer(x.get_den()))
        out.insert(p);
    return out;
}

}  // namespace chatelet
