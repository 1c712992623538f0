#pragma once

/**
 * @file monotonicity.hpp
 * @brief Finite-grid verification of the two monotonicity arguments behind the
 * exceptional set.
 *
 * In n: phi_{n,m} = gamma~_{n,m} / gamma~_{n-1,m} is bounded through the
 * k-th term quotient of c_{n,m} and c_{n-1,m}, which is nondecreasing in k,
 * so c_{n,m}/c_{n-1,m} >= (1/n)(1 - 1/n)^{n+m-1}. That leads to
 * phi <= (1/e)(n+m)(2n+m-1)/(n+m-1)^2 <= 5/(2e). The last step relies on
 * (n+m)(2n+m-1) - (5/2)(n+m-1)^2 <= -(3/2)m^2 - 4m + 11/2, which needs n >= 4;
 * the suite scans it on that range and scans phi itself on n >= 2.
 *
 * In m: psi_{n,m} = gamma-_{n,m} / gamma-_{n,m-1} is an exact rational.
 * For n = 1, psi <= 64/(27e); for n >= 2, Wendel's inequality gives
 * psi^2 <= (4/e^2)(1 + 3/l - 3/l^2) <= 20/(3e^2) with l = n + m - 1.
 *
 * Both quotients are sometimes printed under the same equation label; here
 * they are phi (step in n) and psi (step in m).
 */

#include <string>
#include <vector>

#include "htype/numerics.hpp"
#include "htype/series.hpp"

namespace htype {

struct InequalityReport {
    std::string name;
    std::string domain_scanned;
    double max_observed = 0.0;
    double threshold = 0.0;
    double slack = 1e-12;
    bool passed = false;
    /// Scanned as an observation only; not one of the proved inequalities.
    bool empirical = false;
};

/// gamma~_{n,m} / gamma~_{n-1,m}, requires n >= 2.
double phi(DimPair pair, double eps = 1e-10);

/// The closed form of phi in terms of c_{n-1,m} / c_{n,m}.
double phi_closed_form(DimPair pair, double eps = 1e-10);

/// (1/(n-1)) ((k+n-1)/(2k+n)) (1 - 1/(2k+n))^{n+m-1}: k-th term of c_{n,m} over k-th term of c_{n-1,m}.
double term_ratio(DimPair pair, std::int64_t k);

/// (1/n)(1 - 1/n)^{n+m-1}, the k = 0 value of term_ratio.
double c_ratio_lower_bound(DimPair pair);

/// gamma-_{n,m} / gamma-_{n,m-1} exactly, requires m >= 2.
BigRational psi(DimPair pair);

/// 4 (n+m-2)^{n+m-1}(n+m)/(n+m-1)^{n+m+1} Gamma(m/2)Gamma(n+m/2+1/2) / (Gamma(m/2-1/2)Gamma(n+m/2)).
double psi_closed_form(DimPair pair);

struct InequalityGrid {
    int n_max = 12;
    int m_max = 12;
    std::int64_t k_max = 10'000;
    double eps = 1e-10;
};

/// Every inequality of both arguments, evaluated on the grid. Failures are reported, never thrown.
std::vector<InequalityReport> inequality_suite(const InequalityGrid& grid = {});

}  // namespace htype
