#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qasep/algebra.hpp"
#include "qasep/qspecial.hpp"

using namespace qasep;

namespace {
const Rat kQ(1, 2);
ThetaCtxPtr ctx() {
    static ThetaCtxPtr c = make_theta_ctx(kQ);
    return c;
}
} // namespace

TEST_CASE("normal_order on the defining relation") {
    // d e = q e d + I
    NPoly p = normal_order({Gen::d, Gen::e}, ctx());
    CHECK(p.coeff(1, 1) == qx(kQ, ctx()));
    CHECK(p.coeff(0, 0) == qx_one(ctx()));
    CHECK(p.terms().size() == 2);

    // d e e = q^2 e^2 d + (1+q) e
    NPoly p2 = normal_order({Gen::d, Gen::e, Gen::e}, ctx());
    CHECK(p2.coeff(2, 1) == qx(kQ * kQ, ctx()));
    CHECK(p2.coeff(1, 0) == qx(Rat(1) + kQ, ctx()));
    CHECK(p2.terms().size() == 2);

    // e d is already normal
    NPoly p3 = normal_order({Gen::e, Gen::d}, ctx());
    CHECK(p3 == NPoly::monomial(ctx(), 1, 1));

    CHECK_THROWS_AS(normal_order({Gen::D}, ctx()), ParameterError);
}

TEST_CASE("poly_mul basics") {
    NPoly d = NPoly::monomial(ctx(), 0, 1);
    NPoly e = NPoly::monomial(ctx(), 1, 0);
    NPoly de = poly_mul(d, e);
    CHECK(de.coeff(1, 1) == qx(kQ, ctx()));
    CHECK(de.coeff(0, 0) == qx_one(ctx()));
    NPoly ed = poly_mul(e, d);
    CHECK(ed == NPoly::monomial(ctx(), 1, 1));

    NPoly p = normal_order({Gen::d, Gen::e, Gen::d}, ctx());
    CHECK(poly_mul(NPoly::one(ctx()), p) == p);
    CHECK(poly_mul(p, NPoly::one(ctx())) == p);
}

TEST_CASE("de_substitute") {
    NPoly d_word = de_substitute({Gen::D}, ctx());
    CHECK(d_word.coeff(0, 1) == qx_theta(ctx()));
    CHECK(d_word.coeff(0, 0) == qx_theta_pow(2, ctx()));
    NPoly e_word = de_substitute({Gen::E}, ctx());
    CHECK(e_word.coeff(1, 0) == qx_theta(ctx()));
    CHECK(e_word.coeff(0, 0) == qx_theta_pow(2, ctx()));
    CHECK(de_substitute({}, ctx()) == NPoly::one(ctx()));
}

TEST_CASE("config_word") {
    CHECK(config_word({1, 0}) == Word{Gen::D, Gen::E});
    CHECK(config_word({0, 0, 1}) == Word{Gen::E, Gen::E, Gen::D});
    CHECK(config_word({1}) == Word{Gen::D});
}

namespace {
Word random_de_word(std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    Word w(static_cast<std::size_t>(len(rng)));
    for (auto& g : w) g = bit(rng) ? Gen::d : Gen::e;
    return w;
}
} // namespace

TEST_CASE("normal_order is a homomorphism") {
    std::mt19937 rng(31);
    for (int i = 0; i < 80; ++i) {
        Word u = random_de_word(rng, 3), v = random_de_word(rng, 3);
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        CHECK(normal_order(uv, ctx()) ==
              poly_mul(normal_order(u, ctx()), normal_order(v, ctx())));
    }
}

TEST_CASE("leading coefficient is q^inversions") {
    std::mt19937 rng(32);
    for (int i = 0; i < 60; ++i) {
        Word w = random_de_word(rng, 6);
        int m = 0, n = 0;
        for (Gen g : w) (g == Gen::e ? m : n)++;
        NPoly p = normal_order(w, ctx());
        CHECK(p.coeff(m, n) == qx(qpow(kQ, inversion_count(w)), ctx()));
        CHECK(p.degree() == m + n);
    }
}

TEST_CASE("normal form is idempotent") {
    std::mt19937 rng(33);
    for (int i = 0; i < 40; ++i) {
        Word w = random_de_word(rng, 5);
        NPoly p = normal_order(w, ctx());
        for (const auto& [key, c] : p.terms()) {
            Word mono(static_cast<std::size_t>(key.m), Gen::e);
            mono.insert(mono.end(), static_cast<std::size_t>(key.n), Gen::d);
            CHECK(normal_order(mono, ctx()) == NPoly::monomial(ctx(), key.m, key.n));
        }
    }
}

TEST_CASE("(D+E)^L has degree L with the q-binomial top layer") {
    NPoly s = de_substitute({Gen::D}, ctx()) + de_substitute({Gen::E}, ctx());
    NPoly power = NPoly::one(ctx());
    for (int L = 1; L <= 6; ++L) {
        power = poly_mul(power, s);
        CHECK(power.degree() == L);
        NPoly expected(ctx());
        for (int k = 0; k <= L; ++k)
            expected.add_term({k, L - k}, qx_theta_pow(L, ctx()) * qbinomial(L, k, kQ));
        CHECK(power.degree_part(L) == expected);
    }
}

TEST_CASE("q = 0 flows through the same path") {
    auto c0 = make_theta_ctx(Rat(0));
    NPoly p = normal_order({Gen::d, Gen::e, Gen::e}, c0);
    // q^2 e^2 d vanishes at q = 0, [2]_0 = 1
    CHECK(p == NPoly::monomial(c0, 1, 0));
}
