#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "chatelet/brauer.hpp"
#include "chatelet/errors.hpp"
#include "chatelet/local.hpp"
#include "chatelet/parse.hpp"
#include "chatelet/symbols.hpp"

#include "test_support.hpp"

using namespace chatelet;

namespace {

ChateletSurface S(const char* a, const char* P) {
    return ChateletSurface(parse_rational(a), parse_poly(P));
}

Poly scale_x(const Poly& f, const Rational& u) {
    std::vector<Rational> cs;
    Rational pw(1);
    for (long i = 0; i <= f.deg(); ++i) {
        cs.push_back(f.coeff(static_cast<std::size_t>(i)) * pw);
        pw *= u;
    }
    return Poly(cs);
}

}  // namespace

TEST_CASE("Brauer classification: pinned examples") {
    BrauerType b1 = classify(S("17", "3*(x^2-7)*(17*x^2-43)"));
    CHECK(b1.kind == BrauerKind::Z2);
    REQUIRE(b1.gens.size() == 1);
    CHECK(b1.gens[0].name == "C");
    CHECK(b1.gens[0].a == 17);
    REQUIRE_FALSE(b1.gens[0].reps.empty());
    CHECK(b1.gens[0].reps[0].num == parse_poly("x^2-7"));
    CHECK_FALSE(b1.split.has_value());
    CHECK(to_string(b1.kind) == "Z2");

    BrauerType b2 = classify(S("17", "x*(x-1)*(x-2)"));
    CHECK(b2.kind == BrauerKind::Z2xZ2);
    REQUIRE(b2.gens.size() == 2);
    CHECK(b2.gens[0].name == "A");
    CHECK(b2.gens[1].name == "B");
    REQUIRE(b2.split.has_value());
    CHECK(b2.split->lambda == 2);

    BrauerType b3 = classify(S("2", "(x^2-2)*(x^2-3)"));
    CHECK(b3.kind == BrauerKind::Trivial);
    CHECK(b3.gens.empty());

    // irreducible cubic and quartic are also trivial
    CHECK(classify(S("5", "x^4+x+1")).kind == BrauerKind::Trivial);
    CHECK(classify(S("5", "x^3-2")).kind == BrauerKind::Trivial);
    // linear times irreducible cubic
    CHECK(classify(S("5", "x*(x^3-2)")).kind == BrauerKind::Trivial);
    // deg-3 split counts as split
    CHECK(classify(S("5", "x*(x-1)*(x+1)")).kind == BrauerKind::Z2xZ2);
}

TEST_CASE("classification is invariant under admissible input changes") {
    std::mt19937_64 rng(2024);
    std::vector<ChateletSurface> cases = {
        S("17", "3*(x^2-7)*(17*x^2-43)"), S("17", "x*(x-1)*(x-2)"),
        S("2", "(x^2-2)*(x^2-3)"),        S("5", "(x^2-2)*(x^2-3)"),
        S("5", "x^4+x+1"),                S("-1", "x*(x-1)*(x-3)"),
    };
    for (int i = 0; i < 6; ++i)
        cases.push_back(testsupport::rand_split_surface(rng, {2, -2, 5, 17, -1, 13}, 7, 7));
    for (const ChateletSurface& s : cases) {
        BrauerKind k = classify(s).kind;
        CHECK(classify(ChateletSurface(s.a * 9, s.P)).kind == k);
        CHECK(classify(ChateletSurface(s.a * Rational(1, 4), s.P)).kind == k);
        CHECK(classify(ChateletSurface(s.a, s.P.taylor_shift(Rational(3)))).kind == k);
        CHECK(classify(ChateletSurface(s.a, s.P.taylor_shift(Rational(-1, 2)))).kind == k);
        CHECK(classify(ChateletSurface(s.a, scale_x(s.P, Rational(2)))).kind == k);
        CHECK(classify(ChateletSurface(s.a, scale_x(s.P, Rational(-1, 3)))).kind == k);
    }
}

TEST_CASE("evaluation at points: pinned examples") {
    BrauerType ex54 = classify(S("17", "3*(x^2-7)*(17*x^2-43)"));
    REQUIRE(ex54.gens.size() == 1);
    CHECK(ev_at_point(ex54.gens[0], Rational(0), Place::Finite(Integer(17))) == Inv2::half());

    BrauerType ex55 = classify(S("17", "3*(x^2-7)*(17*x^2-301)"));
    REQUIRE(ex55.gens.size() == 1);
    CHECK(ev_at_point(ex55.gens[0], Rational(0), Place::Finite(Integer(7))) == Inv2::half());
    CHECK(ev_at_point(ex55.gens[0], Rational(1), Place::Finite(Integer(7))) == Inv2::zero());

    BrauerType split = classify(S("17", "x*(x-1)*(x-2)"));
    CHECK(ev_at_point(split.gens[0], std::nullopt, Place::Finite(Integer(7))) == Inv2::zero());
    CHECK(ev_at_point(split.gens[1], std::nullopt, Place::Finite(Integer(7))) == Inv2::zero());

    BrauerGenerator broken;
    broken.name = "X";
    broken.a = Rational(5);
    broken.reps.push_back(RatFn{Poly::x(), Poly(Rational(1))});
    CHECK_THROWS_AS(ev_at_point(broken, Rational(0), Place::Finite(Integer(3))),
                    AllRepresentativesVanish);
}

TEST_CASE("representatives of one generator agree wherever all are usable") {
    std::mt19937_64 rng(600613);
    const long primes[] = {2, 3, 5, 7, 11};
    int done = 0;
    while (done < 1000) {
        ChateletSurface s = testsupport::rand_split_surface(rng, {2, -2, 5, -5, 17, -1, 13}, 8, 8);
        BrauerType b = classify(s);
        REQUIRE(b.kind == BrauerKind::Z2xZ2);
        for (int k = 0; k < 6 && done < 1000; ++k) {
            Place v = Place::Finite(Integer(primes[rng() % 5]));
            long num = static_cast<long>(rng() % 41) - 20;
            long den = 1 + static_cast<long>(rng() % 8);
            Rational t0(num, den);
            t0.canonicalize();
            for (const BrauerGenerator& g : b.gens) {
                std::vector<Rational> vals;
                bool usable = true;
                for (const RatFn& rep : g.reps) {
                    auto val = rep.value_mod_squares(t0);
                    if (!val) {
                        usable = false;
                        break;
                    }
                    vals.push_back(*val);
                }
                if (!usable || vals.size() < 2) continue;
                if (g.chart && !g.chart->is_finite_at(t0)) continue;
                Rational x0 = g.chart ? g.chart->apply(t0) : t0;
                if (!fiber_solvable(s, x0, v)) continue;
                Inv2 first = hilbert_symbol(g.a, vals[0], v);
                for (const Rational& val : vals)
                    REQUIRE(hilbert_symbol(g.a, val, v) == first);
                ++done;
            }
        }
    }
}

TEST_CASE("the two split generators add like their symbol product") {
    std::mt19937_64 rng(171717);
    const Place places[] = {Place::Real(), Place::Finite(Integer(2)), Place::Finite(Integer(3)),
                            Place::Finite(Integer(5)), Place::Finite(Integer(7))};
    int done = 0;
    while (done < 300) {
        ChateletSurface s = testsupport::rand_split_surface(rng, {2, -2, 5, 17, -1}, 7, 7);
        BrauerType b = classify(s);
        REQUIRE(b.gens.size() == 2);
        for (int k = 0; k < 4 && done < 300; ++k) {
            long num = static_cast<long>(rng() % 31) - 15;
            long den = 1 + static_cast<long>(rng() % 5);
            Rational t0(num, den);
            t0.canonicalize();
            auto hA = b.gens[0].reps[0].value_mod_squares(t0);
            auto hB = b.gens[1].reps[0].value_mod_squares(t0);
            if (!hA || !hB) continue;
            const Place& v = places[done % 5];
            if (b.gens[0].chart && !b.gens[0].chart->is_finite_at(t0)) continue;
            Rational x0 = b.gens[0].chart ? b.gens[0].chart->apply(t0) : t0;
            if (!fiber_solvable(s, x0, v)) continue;
            Inv2 sum = ev_at_point(b.gens[0], t0, v) + ev_at_point(b.gens[1], t0, v);
            REQUIRE(sum == hilbert_symbol(b.gens[0].a, *hA * *hB, v));
            ++done;
        }
    }
}
