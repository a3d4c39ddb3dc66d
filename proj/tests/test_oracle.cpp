#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qasep/oracle.hpp"
#include "test_params.hpp"

using namespace qasep;
using namespace testsets;

TEST_CASE("generator structure at L = 1") {
    // both boundaries act on the single site
    AsepParams p = from_rates(Rat(1, 3), Rat(4, 9), Rat(1, 7), Rat(1, 18), Rat(1, 2));
    Generator g = make_generator(p, 1);
    CHECK(g.rate(0, 1) == p.alpha + p.delta);
    CHECK(g.rate(1, 0) == p.gamma + p.beta);
    CHECK(g.diagonal(0) == -(p.alpha + p.delta));
}

TEST_CASE("generator rows at L = 2") {
    AsepParams p = ns_generic();
    Generator g = make_generator(p, 2);
    unsigned s10 = 0b10;
    CHECK(g.rate(s10, 0b01) == Rat(1));      // bulk swap
    CHECK(g.rate(s10, 0b00) == p.gamma);     // left exit
    CHECK(g.rate(s10, 0b11) == p.delta);     // right arrival
    CHECK(g.rate(s10, s10) == Rat(0));
    // reverse swap at rate q
    CHECK(g.rate(0b01, 0b10) == p.q);
    // row sums vanish with the implied diagonal
    for (unsigned s = 0; s < g.size(); ++s) {
        Rat total = g.diagonal(s);
        for (unsigned t = 0; t < g.size(); ++t)
            if (t != s) total += g.rate(s, t);
        CHECK(total == 0);
    }
}

TEST_CASE("no reverse hops in the totally asymmetric case") {
    Generator g = make_generator(ns_q0(), 3);
    for (const auto& [edge, r] : g.rates) {
        auto [from, to] = edge;
        // a (0,1) -> (1,0) bulk move would need rate q = 0 and is not stored
        CHECK(r > 0);
        (void)from;
        (void)to;
    }
    CHECK(g.rate(0b01, 0b10) == 0);
    CHECK(g.rate(0b011, 0b101) == 0);
}

TEST_CASE("exact stationary solve") {
    SUBCASE("two states") {
        Dist d = stationary_exact(make_generator(ns_gamma0(), 1));
        CHECK(d.p[1] == Rat(7, 15));
        CHECK(d.p[0] == Rat(8, 15));
    }
    SUBCASE("singular N = 1 product measure at L = 2") {
        Dist d = stationary_exact(make_generator(sing1(), 2));
        CHECK(d.p == std::vector<Rat>{Rat(1, 3), Rat(1, 3), Rat(1, 6), Rat(1, 6)});
    }
    SUBCASE("scaling the whole generator leaves pi unchanged") {
        Generator g = make_generator(ns_generic(), 3);
        Dist base = stationary_exact(g);
        Generator scaled = g;
        for (auto& [edge, r] : scaled.rates) r *= Rat(7, 3);
        CHECK(stationary_exact(scaled).p == base.p);
    }
    SUBCASE("positivity and exact normalization") {
        Dist d = stationary_exact(make_generator(sing3(), 5));
        Rat total(0);
        for (const Rat& x : d.p) {
            CHECK(x > 0);
            total += x;
        }
        CHECK(total == 1);
    }
}

TEST_CASE("size cap") {
    CHECK_THROWS_AS(make_generator(ns_generic(), 13), SizeError);
    CHECK_THROWS_AS(make_generator(ns_generic(), 0), ParameterError);
    Generator g = make_generator(ns_generic(), 3, 3);
    CHECK(g.size() == 8);
}

TEST_CASE("rank defect is reported") {
    // two disconnected states: zero generator has a 2-dimensional nullspace
    Generator g;
    g.L = 1;
    CHECK_THROWS_AS(stationary_exact(g), ModelError);
}
