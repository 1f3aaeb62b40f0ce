#include "chatelet/poly.hpp"

#include <algorithm>

#include "chatelet/errors.hpp"

namespace chatelet {

void Poly::normalize() {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

Poly Poly::x() { return Poly({Rational(0), Rational(1)}); }

Poly Poly::monomial(const Rational& a, unsigned k) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = a;
    return Poly(std::move(v));
}

Rational Poly::lc() const {
    if (is_zero()) throw ZeroInput("leading coefficient of 0");
    return c.back();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * c[i]);
    return Poly(std::move(d));
}

Poly Poly::taylor_shift(const Rational& t) const {
    std::vector<Rational> v = c;
    long n = deg();
    for (long i = 0; i < n; ++i)
        for (long j = n - 1; j >= i; --j) v[j] += t * v[j + 1];
    return Poly(std::move(v));
}

Poly Poly::reversed() const {
    std::vector<Rational> v(c.rbegin(), c.rend());
    return Poly(std::move(v));
}

Poly Poly::made_monic() const {
    if (is_zero()) return *this;
    return Rational(1) / lc() * (*this);
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(v));
}

Poly operator-(const Poly& a) { return Rational(-1) * a; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> v(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
    return Poly(std::move(v));
}

Poly operator*(const Rational& s, const Poly& a) {
    std::vector<Rational> v = a.c;
    for (auto& x : v) x *= s;
    return Poly(std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ZeroInput("division by zero polynomial");
    Poly r = a;
    std::vector<Rational> q(a.c.size() > b.c.size() ? a.c.size() - b.c.size() + 1 : 1,
                            Rational(0));
    Rational binv = Rational(1) / b.lc();
    while (!r.is_zero() && r.deg() >= b.deg()) {
        long k = r.deg() - b.deg();
        Rational f = r.lc() * binv;
        q[static_cast<std::size_t>(k)] = f;
        r = r - f * Poly::monomial(Rational(1), static_cast<unsigned>(k)) * b;
    }
    return {Poly(std::move(q)), r};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw WrongShape("exact_div: division left a remainder");
    return q;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = b;
        b = r;
    }
    return a.made_monic();
}

Rational resultant(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Rational(0);
    long m = f.deg(), n = g.deg();
    if (m == 0 && n == 0) return Rational(1);
    if (m == 0) {
        Rational r(1);
        for (long i = 0; i < n; ++i) r *= f.c[0];
        return r;
    }
    if (n == 0) {
        Rational r(1);
        for (long i = 0; i < m; ++i) r *= g.c[0];
        return r;
    }
    // Sylvester matrix, size (m+n)
    std::size_t N = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Rational>> A(N, std::vector<Rational>(N, Rational(0)));
    for (long row = 0; row < n; ++row)
        for (long j = 0; j <= m; ++j)
            A[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] =
                f.c[static_cast<std::size_t>(m - j)];
    for (long row = 0; row < m; ++row)
        for (long j = 0; j <= n; ++j)
            A[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + j)] =
                g.c[static_cast<std::size_t>(n - j)];
    // rational Gaussian elimination
    Rational det(1);
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t piv = col;
        while (piv < N && sgn(A[piv][col]) == 0) ++piv;
        if (piv == N) return Rational(0);
        if (piv != col) {
            std::swap(A[piv], A[col]);
            det = -det;
        }
        det *= A[col][col];
        Rational inv = Rational(1) / A[col][col];
        for (std::size_t r = col + 1; r < N; ++r) {
            if (sgn(A[r][col]) == 0) continue;
            Rational fac = A[r][col] * inv;
            for (std::size_t j = col; j < N; ++j) A[r][j] -= fac * A[col][j];
        }
    }
    return det;
}

Rational discriminant(const Poly& f) {
    long d = f.deg();
    if (d < 1) throw WrongShape("discriminant needs degree >= 1");
    Rational r = resultant(f, f.derivative());
    Rational out = r / f.lc();
    if ((d * (d - 1) / 2) % 2 == 1) out = -out;
    return out;
}

std::vector<Integer> primitive_integer_coeffs(const Poly& f) {
    if (f.is_zero()) throw ZeroInput("primitive_integer_coeffs(0)");
    Integer l(1);
    for (const auto& q : f.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Integer> v;
    Integer g(0);
    for (const auto& q : f.c) {
        Rational s = q * Rational(l);
        v.push_back(s.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.back().get_mpz_t());
    }
    if (sgn(v.back()) < 0) g = -g;
    for (auto& z : v) z /= g;
    return v;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = deg(); i >= 0; --i) {
        const Rational& a = coeff(static_cast<std::size_t>(i));
        if (sgn(a) == 0) continue;
        Rational mag = abs(a);
        if (out.empty())
            out += sgn(a) < 0 ? "-" : "";
        else
            out += sgn(a) < 0 ? " - " : " + ";
        bool unit = (mag == 1);
        if (i == 0) {
            out += mag.get_str();
        } else {
            if (!unit) out += mag.get_str() + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace chatelet
