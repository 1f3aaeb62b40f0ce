#include "chatelet/surface.hpp"

#include <algorithm>

#include "json.hpp"

#include "chatelet/errors.hpp"
#include "chatelet/padic.hpp"
#include "chatelet/parse.hpp"
#include "chatelet/symbols.hpp"

namespace chatelet {

ChateletSurface::ChateletSurface(const Rational& a_, const Poly& P_)
    : a(a_), P(P_), fac{} {
    if (is_square(a)) throw SquareA("surface twist a = " + a.get_str() + " is a rational square");
    if (P.deg() != 3 && P.deg() != 4)
        throw BadDegree("surface needs deg P in {3,4}, got " + std::to_string(P.deg()));
    if (sgn(discriminant(P)) == 0) throw NotSeparable("surface needs separable P");
    fac = factor_over_Q(P);
}

ChateletSurface new_surface(const Rational& a, const Poly& P) { return {a, P}; }

bool ChateletSurface::splits() const {
    for (const auto& [g, e] : fac.factors)
        if (g.deg() != 1) return false;
    return true;
}

std::vector<Rational> ChateletSurface::roots() const {
    std::vector<Rational> out;
    for (const auto& [g, e] : fac.factors)
        if (g.deg() == 1) out.push_back(-g.coeff(0));
    std::sort(out.begin(), out.end());
    return out;
}

Rational MobiusMap::apply(const Rational& t) const {
    Rational den = gamma * t + delta;
    if (sgn(den) == 0) throw ZeroInput("MobiusMap::apply: pole");
    return (alpha * t + beta) / den;
}

std::optional<Rational> MobiusMap::apply_infinity() const {
    if (sgn(gamma) == 0) return std::nullopt;
    return alpha / gamma;
}

std::string MobiusMap::str() const {
    Poly num({beta, alpha}), den({delta, gamma});
    if (den.deg() <= 0 && den.coeff(0) == 1) return "x = " + num.str("t");
    return "x = (" + num.str("t") + ") / (" + den.str("t") + ")";
}

Poly transform_quartic(const Poly& q, const MobiusMap& m) {
    if (q.deg() > 4) throw WrongShape("transform_quartic: degree > 4");
    Poly num({m.beta, m.alpha}), den({m.delta, m.gamma});
    Poly out;
    Poly np{Rational(1)};  // num^i
    std::vector<Poly> dp(5);
    dp[0] = Poly{Rational(1)};
    for (int i = 1; i <= 4; ++i) dp[static_cast<std::size_t>(i)] = dp[static_cast<std::size_t>(i - 1)] * den;
    for (int i = 0; i <= 4; ++i) {
        out = out + q.coeff(static_cast<std::size_t>(i)) * (np * dp[static_cast<std::size_t>(4 - i)]);
        np = np * num;
    }
    return out;
}

namespace {

SplitForm build_split_form(const ChateletSurface& s, const std::vector<Rational>& e) {
    MobiusMap m;
    Rational lambda;
    if (s.deg() == 3) {
        m = MobiusMap{e[1] - e[0], e[0], Rational(0), Rational(1)};
        lambda = (e[2] - e[0]) / (e[1] - e[0]);
    } else {
        m = MobiusMap{e[3] * (e[1] - e[0]), -e[0] * (e[1] - e[3]), e[1] - e[0], -(e[1] - e[3])};
        lambda = ((e[2] - e[0]) * (e[1] - e[3])) / ((e[2] - e[3]) * (e[1] - e[0]));
    }
    Poly Q = transform_quartic(s.P, m);
    if (Q.deg() != 3) throw Error("split_form: transformed polynomial not cubic");
    Rational c = Q.lc();
    Poly expect = c * (Poly::x() * Poly({Rational(-1), Rational(1)}) * Poly({-lambda, Rational(1)}));
    if (Q != expect) throw Error("split_form: normal form verification failed");
    if (sgn(lambda) == 0 || lambda == 1) throw Error("split_form: degenerate lambda");
    return SplitForm{c, lambda, m};
}

}  // namespace

SplitForm split_form(const ChateletSurface& s) {
    if (!s.splits()) throw NotSplit("split_form: P does not split over Q");
    return build_split_form(s, s.roots());
}

SplitForm split_form_with_order(const ChateletSurface& s, const std::vector<Rational>& order) {
    if (!s.splits()) throw NotSplit("split_form: P does not split over Q");
    std::vector<Rational> canon = s.roots(), check = order;
    std::sort(check.begin(), check.end());
    if (check != canon) throw CriterionFails("split_form_with_order: not a root permutation");
    return build_split_form(s, order);
}

std::vector<std::pair<Rational, Rational>> crossratio_orbit(const Rational& c,
                                                            const Rational& lambda) {
    if (sgn(lambda) == 0 || lambda == 1) throw CriterionFails("crossratio_orbit: lambda in {0,1}");
    Rational l = lambda, l1 = lambda - 1;
    Rational l3 = l * l * l, l13 = l1 * l1 * l1;
    return {
        {l, c},
        {1 / l, c * l3},
        {1 - l, -c},
        {1 / (1 - l), c * l13},  // -c(1-l)^3
        {l / l1, -c * l13},
        {l1 / l, -c * l3},
    };
}

std::vector<BadPlaceReport> bad_places_split(const ChateletSurface& s) {
    SplitForm sf = split_form(s);  // throws NotSplit
    std::set<Integer> cand{Integer(2)};
    auto add = [&cand](const Rational& x) {
        if (sgn(x) != 0)
            for (const auto& q : primes_of(x)) cand.insert(q);
    };
    add(discriminant(s.P));
    add(sf.c);
    add(sf.lambda);
    add(sf.lambda - 1);
    add(s.a);
    auto orbit = crossratio_orbit(sf.c, sf.lambda);
    std::vector<BadPlaceReport> out;
    for (const Integer& p : cand) {
        // renormalize: among representatives with v(l') >= 0 and v(l'-1) >= 0,
        // minimize v(l') + v(l'-1); ties by listed order
        long best_score = 0;
        const std::pair<Rational, Rational>* best = nullptr;
        for (const auto& cand_pair : orbit) {
            long vl = *valuation(cand_pair.first, p);
            long vl1 = *valuation(cand_pair.first - 1, p);
            if (vl < 0 || vl1 < 0) continue;
            if (!best || vl + vl1 < best_score) {
                best = &cand_pair;
                best_score = vl + vl1;
            }
        }
        if (!best) throw Error("bad_places_split: no admissible cross-ratio representative");
        long vl = *valuation(best->first, p);
        long vl1 = *valuation(best->first - 1, p);
        long vc = *valuation(best->second, p);
        BadPlaceReport rep;
        rep.p = p;
        if (vc % 2 != 0) rep.reasons.insert(BadReason::ValC);
        if (vl > 0) rep.reasons.insert(BadReason::ValLambda);
        if (vl1 > 0) rep.reasons.insert(BadReason::ValLambdaMinus1);
        if (quad_ext_type(s.a, p) == QuadExtType::Ramified)
            rep.reasons.insert(BadReason::RamifiedQuadExt);
        if (rep.reasons.empty()) continue;
        rep.a_nonsquare_locally = !is_square_local(s.a, Place::Finite(p));
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<Integer> candidate_bad_places(const ChateletSurface& s) {
    std::set<Integer> cand{Integer(2)};
    auto add = [&cand](const Rational& x) {
        if (sgn(x) != 0)
            for (const auto& q : primes_of(x)) cand.insert(q);
    };
    add(s.a);
    add(s.P.lc());
    add(discriminant(s.P));
    for (std::size_t i = 0; i < s.fac.factors.size(); ++i)
        for (std::size_t j = i + 1; j < s.fac.factors.size(); ++j)
            add(resultant(s.fac.factors[i].first, s.fac.factors[j].first));
    return {cand.begin(), cand.end()};
}

std::string to_string(BadReason r) {
    switch (r) {
        case BadReason::ValC: return "v(c) odd";
        case BadReason::ValLambda: return "v(lambda) > 0";
        case BadReason::ValLambdaMinus1: return "v(lambda-1) > 0";
        case BadReason::RamifiedQuadExt: return "ramified quadratic extension";
    }
    throw Error("to_string: bad BadReason");
}

ChateletSurface parse_surface_json(const std::string& text) {
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        Rational a = parse_rational(j.at("a").get<std::string>());
        Poly P = parse_poly(j.at("P").get<std::string>());
        return new_surface(a, P);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("surface JSON: ") + e.what(), 0);
    }
}

}  // namespace chatelet
