#include <doctest.h>

#include <cmath>

#include "htype/constants.hpp"
#include "htype/errors.hpp"

using namespace htype;

namespace {

constexpr double kPi = 3.14159265358979323846;

// gamma~ and gamma- to 6 decimals, from 30-digit reference evaluations.
constexpr double kTilde[10][10] = {
    {3.242278, 2.139190, 1.557388, 1.166598, 0.883458, 0.671837, 0.511494, 0.389308, 0.296025, 0.224810},
    {1.823781, 1.232455, 0.866192, 0.622146, 0.453048, 0.332940, 0.246189, 0.182801, 0.136114, 0.101537},
    {1.068889, 0.714056, 0.489208, 0.341303, 0.241418, 0.172598, 0.124430, 0.090292, 0.065857, 0.048228},
    {0.624877, 0.412041, 0.277071, 0.189288, 0.131020, 0.091682, 0.064742, 0.046067, 0.032988, 0.023748},
    {0.362591, 0.236465, 0.156776, 0.105425, 0.071767, 0.049377, 0.034287, 0.024000, 0.016917, 0.011996},
    {0.208875, 0.134996, 0.088520, 0.058796, 0.039503, 0.026812, 0.018363, 0.012679, 0.008817, 0.006171},
    {0.119573, 0.076713, 0.049860, 0.032792, 0.021798, 0.014631, 0.009907, 0.006762, 0.004648, 0.003216},
    {0.068090, 0.043419, 0.028018, 0.018278, 0.012044, 0.008009, 0.005371, 0.003630, 0.002471, 0.001693},
    {0.038601, 0.024490, 0.015708, 0.010178, 0.006657, 0.004393, 0.002922, 0.001958, 0.001321, 0.000897},
    {0.021801, 0.013772, 0.008789, 0.005662, 0.003680, 0.002412, 0.001593, 0.001060, 0.000710, 0.000478},
};

constexpr double kBar[10][10] = {
    {4.000000, 2.250000, 1.580247, 1.171875, 0.884736, 0.672154, 0.511574, 0.389328, 0.296030, 0.224811},
    {3.000000, 1.481481, 0.937500, 0.645120, 0.460905, 0.335720, 0.247192, 0.183168, 0.136249, 0.101587},
    {2.370370, 1.025391, 0.589824, 0.378086, 0.255787, 0.178442, 0.126870, 0.091330, 0.066304, 0.048423},
    {1.875000, 0.725760, 0.384088, 0.230808, 0.148315, 0.099216, 0.068125, 0.047619, 0.033711, 0.024090},
    {1.474560, 0.519869, 0.255787, 0.144984, 0.088809, 0.057081, 0.037888, 0.025724, 0.017758, 0.012412},
    {1.152263, 0.375062, 0.173035, 0.093015, 0.054500, 0.033730, 0.021672, 0.014303, 0.009631, 0.006585},
    {0.895254, 0.271845, 0.118412, 0.060649, 0.034099, 0.020365, 0.012684, 0.008145, 0.005353, 0.003581},
    {0.692139, 0.197657, 0.081750, 0.040054, 0.021672, 0.012515, 0.007567, 0.004733, 0.003038, 0.001989},
    {0.532854, 0.144040, 0.056832, 0.026729, 0.013952, 0.007806, 0.004588, 0.002798, 0.001755, 0.001126},
    {0.408748, 0.105143, 0.039731, 0.017991, 0.009080, 0.004930, 0.002821, 0.001679, 0.001030, 0.000648},
};

}  // namespace

TEST_SUITE("constants") {

TEST_CASE("sobolev constant") {
    CHECK(sobolev_constant(DimPair(2, 1)) == doctest::Approx(9.97393496632801013339549734021).epsilon(1e-12));
}

TEST_CASE("gamma~ table") {
    for (int n = 1; n <= 10; ++n)
        for (int m = 1; m <= 10; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(std::abs(gamma_tilde(DimPair(n, m)) - kTilde[n - 1][m - 1]) <= 5e-7);
        }
}

TEST_CASE("gamma- table") {
    for (int n = 1; n <= 10; ++n)
        for (int m = 1; m <= 10; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(std::abs(gamma_bar(DimPair(n, m)) - kBar[n - 1][m - 1]) <= 5e-7);
            CHECK(gamma_bar(DimPair(n, m)) == doctest::Approx(gamma_bar_exact(DimPair(n, m)).to_double()).epsilon(1e-13));
        }
}

TEST_CASE("closed forms in the Heisenberg and zeta cases") {
    // c_{1,1} = pi^2 / 8
    CHECK(gamma_tilde(DimPair(1, 1), 1e-12) == doctest::Approx(32.0 / (kPi * kPi)).epsilon(1e-11));
    // c_{2,2} = zeta(3) / 16 and gamma~ = gamma- n^{-(n+m)} / c
    const double c22 = zeta(3) / 16;
    const double closed = gamma_bar(DimPair(2, 2)) / (16.0 * c22);
    CHECK(gamma_tilde(DimPair(2, 2), 1e-12) == doctest::Approx(closed).epsilon(1e-11));
    // W_{1,1} = omega_0 / (2 pi)^2 / 2 * pi^2 / 8
    CHECK(weyl_constant(DimPair(1, 1), 1e-12) == doctest::Approx(1.0 / 32).epsilon(1e-11));
}

TEST_CASE("product form matches the closed form") {
    for (int n = 1; n <= 12; ++n)
        for (int m = 1; m <= 12; ++m) {
            const DimPair pair(n, m);
            const SeriesValue c = c_series(pair, 1e-8);
            CHECK(gamma_tilde_product_form(pair, c) == doctest::Approx(gamma_tilde(pair, c)).epsilon(1e-8));
        }
    // large n stays finite thanks to the log domain
    CHECK(std::isfinite(gamma_tilde(DimPair(120, 3))));
    CHECK(gamma_tilde(DimPair(120, 3)) > 0.0);
}

TEST_CASE("certified interval") {
    for (int n = 1; n <= 10; ++n)
        for (int m = 1; m <= 10; ++m) {
            const DimPair pair(n, m);
            const SeriesValue c = c_series(pair, 1e-8);
            const Interval iv = gamma_tilde_interval(pair, c);
            CHECK(iv.contains(gamma_tilde(pair, c)));
            CHECK((iv.hi - iv.lo) <= 1e-7 * iv.hi);
        }
    // 32 / pi^2 sits inside the enclosure for (1, 1)
    CHECK(gamma_tilde_interval(DimPair(1, 1), c_series(DimPair(1, 1), 1e-10)).contains(32.0 / (kPi * kPi)));
}

TEST_CASE("exact gamma-") {
    CHECK(gamma_bar_exact(DimPair(4, 2)) == BigRational(2268, 3125));
    CHECK(gamma_bar_exact(DimPair(2, 3)) == BigRational(15, 16));
    CHECK(gamma_bar_exact(DimPair(1, 1)) == BigRational(4));
    CHECK(gamma_bar_exact(DimPair(1, 3)) == BigRational(128, 81));
}

TEST_CASE("bundle") {
    const ConstantBundle b = compute_bundle(DimPair(2, 2));
    CHECK(b.Q == 8);
    CHECK(b.gamma_tilde == doctest::Approx(1.232455).epsilon(1e-6));
    CHECK(b.gamma_tilde == doctest::Approx(std::pow(b.sobolev, -4) / b.weyl).epsilon(1e-8));
    CHECK(b.gamma_bar_exact.to_double() == doctest::Approx(b.gamma_bar).epsilon(1e-13));
}

TEST_CASE("exceptional set") {
    const ExceptionalSet ex = exceptional_set(10, 10);
    REQUIRE(ex.exceptional.size() == 4);
    CHECK(ex.exceptional[0].pair == DimPair(1, 1));
    CHECK(ex.exceptional[1].pair == DimPair(2, 1));
    CHECK(ex.exceptional[2].pair == DimPair(2, 2));
    CHECK(ex.exceptional[3].pair == DimPair(3, 1));
    CHECK(ex.uncertain.empty());
    for (const auto& p : ex.exceptional)
        CHECK(p.gamma_tilde.lo > 1.0);
    CHECK(exceptional_set(1, 1).exceptional.size() == 1);
    CHECK_THROWS_AS(exceptional_set(0, 3), DomainError);
}

TEST_CASE("weyl density by fibre decomposition") {
    for (const DimPair pair : {DimPair(1, 1), DimPair(2, 2), DimPair(3, 1), DimPair(2, 3)}) {
        const double w = weyl_constant(pair, 1e-12);
        for (double lambda : {0.5, 1.0, 2.0}) {
            const WeylDensity d = weyl_density_bruteforce(pair, lambda, 8);
            CHECK(d.value / std::pow(lambda, pair.degree()) == doctest::Approx(w).epsilon(1e-7));
            CHECK(d.error_bound <= 1e-9 * d.value);
            CHECK(d.enumerated_shells >= 1);
        }
        const double ratio = weyl_density_bruteforce(pair, 2.0, 8).value / weyl_density_bruteforce(pair, 1.0, 8).value;
        CHECK(ratio == doctest::Approx(std::pow(2.0, pair.degree())).epsilon(1e-9));
    }
    CHECK_THROWS_AS(weyl_density_bruteforce(DimPair(4, 4), 1.0, 3), DomainError);
    CHECK_THROWS_AS(weyl_density_bruteforce(DimPair(1, 1), 0.0, 4), DomainError);
}

}
