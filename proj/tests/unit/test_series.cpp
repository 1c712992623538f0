#include <doctest.h>

#include <cmath>

#include "htype/errors.hpp"
#include "htype/series.hpp"

using namespace htype;

TEST_SUITE("series") {

TEST_CASE("dimension pairs") {
    const DimPair p(4, 2);
    CHECK(p.degree() == 6);
    CHECK(p.homogeneous_dimension() == 12);
    CHECK_THROWS_AS(DimPair(0, 1), DomainError);
    CHECK_THROWS_AS(DimPair(1, 0), DomainError);
    CHECK(DimPair(1, 2) < DimPair(2, 1));
}

TEST_CASE("binary64 summand agrees with the exact one") {
    for (int n = 1; n <= 10; ++n)
        for (int m = 1; m <= 10; ++m)
            for (std::int64_t k = 0; k <= 64; ++k) {
                const DimPair pair(n, m);
                const double exact = series_term_exact(pair, k).to_double();
                CHECK(std::abs(series_term(pair, k) - exact) <= 1e-14 * exact);
            }
    // far out in k the direct power underflows and the log path takes over
    const DimPair big(10, 30);
    CHECK(series_term(big, 100000) > 0.0);
    CHECK(std::isfinite(std::log(series_term(big, 100000))));
}

TEST_CASE("series values against high-precision references") {
    const SeriesValue c41 = c_series(DimPair(4, 1), 1e-12);
    CHECK(c41.estimate() == doctest::Approx(0.0029302647559223346091479764068).epsilon(1e-11));
    CHECK(c41.lower() <= 0.0029302647559223346091479764068);
    CHECK(c41.upper() >= 0.0029302647559223346091479764068);

    const SeriesValue c22 = c_series(DimPair(2, 2), 1e-12);
    CHECK(c22.estimate() == doctest::Approx(0.0751285564474746428374836350945).epsilon(1e-11));
    CHECK(c22.lower() <= 0.0751285564474746428374836350945);
    CHECK(c22.upper() >= 0.0751285564474746428374836350945);
    CHECK(c22.estimate() == doctest::Approx(zeta(3) / 16).epsilon(1e-11));
}

TEST_CASE("stopping rule") {
    for (double eps : {1e-4, 1e-8, 1e-12}) {
        const SeriesValue c = c_series(DimPair(3, 1), eps);
        CHECK(c.radius() <= eps * std::min(1.0, c.lower()));
        CHECK(c.terms_used >= 16);
        CHECK(c.lower() <= c.estimate());
        CHECK(c.estimate() <= c.upper());
    }
    CHECK(c_series(DimPair(20, 1), 1e-8).terms_used >= 20);
    CHECK_THROWS_AS(c_series(DimPair(1, 1), 0.0), DomainError);
    CHECK_THROWS_AS(c_series(DimPair(1, 1), 1e-18), PrecisionUnreachable);
}

TEST_CASE("coarse tail bound") {
    // remainder of sum (2k+1)^{-2} from k = 1000 is zeta(2, 1000.5) / 4 = 2.4999997917e-4
    CHECK(c_tail_bound(DimPair(1, 1), 1000) >= 0.000249999979166673958327566972554);
    CHECK(c_tail_bound(DimPair(1, 1), 1000) == doctest::Approx(0.25 / 999).epsilon(1e-14));
    // (2, 3) from K = 100: remainder zeta(4, 101) / 32 = 1.026e-8, bound 2.147e-8
    CHECK(c_tail_bound(DimPair(2, 3), 100) == doctest::Approx(2.14710448360075949097477512945e-8).epsilon(1e-12));
    CHECK(c_tail_bound(DimPair(2, 3), 100) >= 1.02614582812569428824650379929e-8);
    CHECK_THROWS_AS(c_tail_bound(DimPair(1, 1), 1), DomainError);
    CHECK_THROWS_AS(c_tail_bound(DimPair(6, 1), 4), DomainError);
}

TEST_CASE("tail bracket encloses the remainder") {
    const double rem_1_1 = 0.000249999979166673958327566972554;
    const TailBracket b = c_tail_bracket(DimPair(1, 1), 1000);
    CHECK(b.lower <= rem_1_1);
    CHECK(b.upper >= rem_1_1);
    const TailBracket b23 = c_tail_bracket(DimPair(2, 3), 100);
    CHECK(b23.lower <= 1.02614582812569428824650379929e-8);
    CHECK(b23.upper >= 1.02614582812569428824650379929e-8);

    // against a long direct sum closed off with the bracket further out
    for (int n = 1; n <= 6; ++n)
        for (int m = 1; m <= 6; ++m)
            for (std::int64_t K : {1, 3, 10, 40}) {
                const DimPair pair(n, m);
                const std::int64_t far = K + 20000;
                CompensatedSum direct;
                for (std::int64_t k = K; k < far; ++k)
                    direct.add(series_term(pair, k));
                const TailBracket outer = c_tail_bracket(pair, far);
                const TailBracket inner = c_tail_bracket(pair, K);
                CHECK(inner.lower <= direct.value() + outer.upper);
                CHECK(inner.upper >= direct.value() + outer.lower);
            }
}

TEST_CASE("truncated series") {
    const SeriesValue t = c_series_truncated(DimPair(2, 2), 50);
    CHECK(t.terms_used == 50);
    CHECK(t.lower() <= 0.0751285564474746428374836350945);
    CHECK(t.upper() >= 0.0751285564474746428374836350945);
    CHECK_THROWS_AS(c_series_truncated(DimPair(2, 2), 0), DomainError);
}

TEST_CASE("shell counts") {
    for (int n = 1; n <= 5; ++n) {
        const auto walked = enumerate_shell_counts(n, 12);
        REQUIRE(walked.size() == 13);
        for (int K = 0; K <= 12; ++K)
            CHECK(multiindex_count(n, K) == static_cast<unsigned long>(walked[static_cast<std::size_t>(K)]));
    }
    CHECK(multiindex_count(3, 4) == 15);
}

}
