#include <doctest.h>

#include <cmath>

#include "htype/errors.hpp"
#include "htype/numerics.hpp"

using namespace htype;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_SUITE("numerics") {

TEST_CASE("half integers") {
    const auto a = HalfInteger::halves(5);
    CHECK(a.value() == 2.5);
    CHECK_FALSE(a.is_integer());
    CHECK((a + HalfInteger::halves(1)) == HalfInteger::integer(3));
    CHECK((a - HalfInteger::integer(1)).twice_value() == 3);
    CHECK(HalfInteger::halves(1) < HalfInteger::integer(1));
}

TEST_CASE("rationals are canonical") {
    const BigRational r(6, -4);
    CHECK(r.to_string() == "-3/2");
    CHECK(r.denominator() == 2);
    CHECK(BigRational(10, 5).to_string() == "2");
    CHECK_THROWS_AS(BigRational(1, 0), DomainError);
    CHECK_THROWS_AS(BigRational(1) / BigRational(0), DomainError);
    CHECK(pow(BigRational(2, 3), -2) == BigRational(9, 4));
    CHECK(pow(BigRational(-1, 2), 3) == BigRational(-1, 8));
    CHECK(BigRational(1, 3) + BigRational(1, 6) == BigRational(1, 2));
    CHECK(BigRational(1, 3) < BigRational(1, 2));
}

TEST_CASE("decimal rounding is half away from zero") {
    CHECK(BigRational(1, 8).to_decimal(2) == "0.13");
    CHECK(BigRational(-1, 8).to_decimal(2) == "-0.13");
    CHECK(BigRational(2268, 3125).to_decimal(4) == "0.7258");
    CHECK(BigRational(15, 16).to_decimal(4) == "0.9375");
    CHECK(BigRational(128, 81).to_decimal(4) == "1.5802");
    CHECK(BigRational(1, 3).to_decimal(0) == "0");
    CHECK(BigRational(-1, 3).to_decimal(3) == "-0.333");
    CHECK(BigRational(-1, 3000).to_decimal(2) == "0.00");
    CHECK(BigRational(4).to_decimal(4) == "4.0000");
}

TEST_CASE("log gamma") {
    CHECK(log_gamma(HalfInteger::integer(1)) == doctest::Approx(0.0));
    CHECK(std::exp(log_gamma(HalfInteger::halves(1))) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-15));
    CHECK(std::exp(log_gamma(HalfInteger::integer(5))) == doctest::Approx(24.0).epsilon(1e-15));
    for (int twice = 1; twice <= 2000; twice += 7) {
        const double ours = log_gamma(HalfInteger::from_twice(twice));
        const double ref = std::lgamma(0.5 * twice);
        CHECK(std::abs(ours - ref) <= 1e-13 * std::max(1.0, std::abs(ref)));
    }
    CHECK_THROWS_AS(log_gamma(HalfInteger::integer(0)), DomainError);
}

TEST_CASE("exact gamma ratios") {
    CHECK(gamma_ratio_exact(HalfInteger::halves(5), HalfInteger::halves(1)) == BigRational(3, 4));
    CHECK(gamma_ratio_exact(HalfInteger::halves(1), HalfInteger::halves(5)) == BigRational(4, 3));
    CHECK(gamma_ratio_exact(HalfInteger::integer(5), HalfInteger::integer(2)) == BigRational(24));
    CHECK(gamma_ratio_exact(HalfInteger::halves(7), HalfInteger::halves(7)) == BigRational(1));
    CHECK_THROWS_AS(gamma_ratio_exact(HalfInteger::halves(3), HalfInteger::integer(1)), UnsupportedRatio);
}

TEST_CASE("binomial") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(60, 30) == mpz_class("118264581564861424"));
}

TEST_CASE("sphere areas") {
    CHECK(sphere_area(0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(sphere_area(1) == doctest::Approx(2 * kPi).epsilon(1e-15));
    CHECK(sphere_area(2) == doctest::Approx(4 * kPi).epsilon(1e-15));
    CHECK(sphere_area(3) == doctest::Approx(2 * kPi * kPi).epsilon(1e-15));
    CHECK_THROWS_AS(sphere_area(-1), DomainError);
}

TEST_CASE("gauss-legendre is exact below degree 2p") {
    for (int p = 1; p <= 12; ++p) {
        const QuadratureRule rule = gauss_legendre(p);
        REQUIRE(rule.nodes.size() == static_cast<std::size_t>(p));
        for (int k = 0; k < 2 * p; ++k) {
            double acc = 0.0;
            for (int i = 0; i < p; ++i)
                acc += rule.weights[static_cast<std::size_t>(i)] * std::pow(rule.nodes[static_cast<std::size_t>(i)], k);
            const double exact = k % 2 == 1 ? 0.0 : 2.0 / (k + 1);
            CHECK(acc == doctest::Approx(exact).epsilon(1e-14).scale(1.0));
        }
    }
    CHECK_THROWS_AS(gauss_legendre(0), DomainError);
}

TEST_CASE("zeta") {
    CHECK(zeta(2) == doctest::Approx(kPi * kPi / 6).epsilon(1e-14));
    CHECK(zeta(4) == doctest::Approx(std::pow(kPi, 4) / 90).epsilon(1e-14));
    CHECK(zeta(3) == doctest::Approx(1.20205690315959428539973816151).epsilon(1e-14));
    CHECK_THROWS_AS(zeta(1), DomainError);
}

TEST_CASE("compensated sum") {
    CompensatedSum s;
    s.add(1e16);
    s.add(1.0);
    s.add(-1e16);
    CHECK(s.value() == 1.0);
}

}
