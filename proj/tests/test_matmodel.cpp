#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qasep/matmodel.hpp"
#include "qasep/qspecial.hpp"

using namespace qasep;

namespace {

// independent float 2phi1(A, B; C | q; z) by direct summation
double phi21(double A, double B, double C, double q, double z) {
    double sum = 0.0, term = 1.0;
    double aj = A, bj = B, cj = C, qj = q;
    for (int j = 0; j < 500; ++j) {
        sum += term;
        term *= (1.0 - aj) * (1.0 - bj) / ((1.0 - qj) * (1.0 - cj)) * z;
        aj *= q;
        bj *= q;
        cj *= q;
        qj *= q;
        if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
}

} // namespace

TEST_CASE("boundary vector components") {
    Rat q(1, 2);
    Rat a(4), b(-1, 2), c(1, 2), d(-1, 4);
    ExactMatModel m(a, b, c, d, q, 8);
    CHECK(m.w()[0] == 1);
    CHECK(m.v()[0] == 1);
    CHECK(m.w()[1] == c + d - a * c * d - Rat(1) / a);
    CHECK(m.v()[1] == a * b / (a * (Rat(1) - q) + b * (Rat(1) - Rat(2))));

    SUBCASE("terminating case kills the tail of W") {
        // a c = 2 = 1/q, so m = 1 and w_n = 0 for n >= 3
        CHECK(m.finite_index() == 1);
        CHECK(m.w()[1] != 0);
        for (std::size_t k = 2; k < m.w().size(); ++k) CHECK(m.w()[k] == 0);
    }
}

TEST_CASE("defining relation on the truncated block") {
    MatModel m(0.5, -1.0 / 3.0, 0.5, -0.25, Rat(1, 2), 400);
    CHECK(m.relation_residual() <= 1e-12);
    CHECK(m.boundary_residual() <= 1e-10);
    ExactMatModel e(Rat(1, 2), Rat(-1, 3), Rat(1, 2), Rat(-1, 4), Rat(1, 2), 12);
    CHECK(e.relation_holds());
}

TEST_CASE("model construction guards") {
    CHECK_THROWS_AS(MatModel(0.5, 0.0, 0.5, -0.25, Rat(1, 2), 100), ParameterError);
    CHECK_THROWS_AS(MatModel(-0.5, -0.3, 0.5, -0.25, Rat(1, 2), 100), ParameterError);
    CHECK_THROWS_AS(MatModel(0.5, -0.3, 0.5, -0.25, Rat(0), 100), ParameterError);
    CHECK_THROWS_AS(MatModel(0.5, -0.3, 0.5, -0.25, Rat(1, 2), 1), ParameterError);
}

TEST_CASE("scalar products against the hypergeometric forms") {
    double a = 0.5, b = -1.0 / 3.0, c = 0.5, d = -0.25, q = 0.5;
    MatModel m(a, b, c, d, Rat(1, 2), 200);
    double theta = m.theta();

    SUBCASE("identity word") {
        double expect = phi21(a * c, a * d, q * a / b, q, q);
        CHECK(m.wxv({}) == doctest::Approx(expect).epsilon(1e-12));
    }
    SUBCASE("pure-d words") {
        for (int L = 1; L <= 3; ++L) {
            Word word(static_cast<std::size_t>(L), Gen::d);
            double expect =
                std::pow(a * theta, L) * phi21(a * c, a * d, q * a / b, q, std::pow(q, L + 1));
            CHECK(m.wxv(word) == doctest::Approx(expect).epsilon(1e-10));
        }
    }
    SUBCASE("single-e word converges to the right-boundary evaluation") {
        // truncating the matrices drops the w_{T+1} boundary term, so the
        // fixed association order converges to <W|(e|V>) = (theta/ab)
        // ((a+b) 2phi1(..;q) - a 2phi1(..;q^2)) rather than to (<W|e)|V>;
        // the difference of the two is the association gap.
        double expect = theta / (a * b) *
                        ((a + b) * phi21(a * c, a * d, q * a / b, q, q) -
                         a * phi21(a * c, a * d, q * a / b, q, q * q));
        CHECK(m.wxv({Gen::e}) == doctest::Approx(expect).epsilon(1e-10));
        double left = theta * ((c + d) * phi21(a * c, a * d, q * a / b, q, q) -
                               a * c * d * phi21(a * c, a * d, q * a / b, q, q * q));
        CHECK(left - expect == doctest::Approx(m.associativity_gap().predicted).epsilon(1e-9));
    }
    SUBCASE("repeated-e words stabilize in the truncation") {
        MatModel wide(a, b, c, d, Rat(1, 2), 400);
        CHECK(m.wxv({Gen::e, Gen::e}) ==
              doctest::Approx(wide.wxv({Gen::e, Gen::e})).epsilon(1e-10));
    }
    SUBCASE("an unconverged truncation is reported") {
        // q = 9/10 decays far too slowly for 12 rows
        MatModel slow(a, b, c, d, Rat(9, 10), 12);
        CHECK_THROWS_AS(slow.wxv({Gen::e}), TruncationError);
    }
}

TEST_CASE("association gap") {
    SUBCASE("generic parameters") {
        MatModel m(0.5, -1.0 / 3.0, 0.5, -0.25, Rat(1, 2), 500);
        auto gap = m.associativity_gap();
        CHECK(gap.predicted < 0); // -(theta/a) times positive products
        CHECK(std::fabs(gap.measured - gap.predicted) <= 1e-6 * std::fabs(gap.predicted));
    }
    SUBCASE("terminating parameters") {
        MatModel m(4.0, -0.5, 0.5, -0.25, Rat(1, 2), 500);
        REQUIRE(m.finite_index() == 1);
        auto gap = m.associativity_gap();
        CHECK(std::fabs(gap.measured) <= 1e-12);
        CHECK(std::fabs(gap.predicted) <= 1e-12);
    }
}

TEST_CASE("terminating exact model against phi_0") {
    // a c q^m = 1 with m = 2: a = 8, c = 1/2, q = 1/2
    Rat a(8), b(-1, 2), c(1, 2), d(-1, 4), q(1, 2);
    ExactMatModel m(a, b, c, d, q, 8);
    REQUIRE(m.finite_index() == 2);

    AsepParams params = from_awparams(a, b, c, d, q);
    REQUIRE_FALSE(params.singular()); // bd = 1/8 not in {q, q^2}
    PhiTable phi0 = build_phi0(params, 5);

    SUBCASE("identity word gives exactly the normalizer") {
        CHECK(m.wxv({}) == m.normalizer());
    }
    SUBCASE("sample words") {
        CHECK(finite_model_check(m, phi0, {Gen::D}));
        CHECK(finite_model_check(m, phi0, {Gen::E, Gen::D}));
        CHECK(finite_model_check(m, phi0, {Gen::D, Gen::E}));
        CHECK(finite_model_check(m, phi0, {Gen::E, Gen::E, Gen::D}));
    }
    SUBCASE("independent of the truncation beyond m+2") {
        ExactMatModel wide(a, b, c, d, q, 16);
        for (const Word& w : {Word{}, Word{Gen::D, Gen::E}, Word{Gen::E, Gen::E}})
            CHECK(m.wxv(w) == wide.wxv(w));
    }
    SUBCASE("vanishing normalizer is reported") {
        // bd = q: singular case inside the terminating model
        ExactMatModel bad(Rat(8), Rat(-1, 2), Rat(1, 2), Rat(-1), q, 8);
        CHECK_THROWS_AS(bad.normalizer(), ModelError);
    }
}
