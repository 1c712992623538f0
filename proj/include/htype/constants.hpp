#pragma once

/**
 * @file constants.hpp
 * @brief Sobolev, Weyl and nodal-domain constants of H-type groups R^{2n} x R^m.
 *
 *   C^Sob   = 4^{n/(n+m)} n (n+m-1) pi^{(2n+m)/(2n+2m)} (Gamma(n+m/2)/Gamma(2n+m))^{1/(n+m)}
 *   W       = omega_{m-1} / (2 pi)^{n+m} / (n+m) * c_{n,m}
 *   gamma~  = (C^Sob)^{-(n+m)} W^{-1}
 *           = 2^{-(n-m+1)} (n+m) / (n^{n+m} (n+m-1)^{n+m}) Gamma(m/2) Gamma(2n+m) / Gamma(n+m/2) / c_{n,m}
 *   gamma-  = gamma~ with c_{n,m} replaced by its first term n^{-(n+m)}
 *
 * W is normalised so that the Heisenberg case (m = 1) comes out a factor 4
 * away from the convention where the centre coordinate is scaled differently;
 * gamma~ does not depend on that choice.
 *
 * All floating-point evaluation happens in the log domain. The only
 * non-exact ingredient of gamma~ is c_{n,m}, so its certified interval is the
 * series interval mapped through 1/c, widened by a fixed relative slack for
 * the gamma and power factors.
 */

#include <vector>

#include "htype/numerics.hpp"
#include "htype/series.hpp"

namespace htype {

/// Relative slack covering the rounding of every factor except c_{n,m}.
inline constexpr double kFactorSlack = 1e-10;

/// Default series tolerance (relative) for constant evaluation.
inline constexpr double kDefaultEps = 1e-8;

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double x) const { return lo <= x && x <= hi; }
};

struct ConstantBundle {
    DimPair pair;
    int Q = 0;
    SeriesValue c;
    double sobolev = 0.0;
    double weyl = 0.0;
    double gamma_tilde = 0.0;
    Interval gamma_tilde_interval;
    double gamma_bar = 0.0;
    BigRational gamma_bar_exact;
};

double sobolev_constant(DimPair pair);

double weyl_constant(DimPair pair, double eps = kDefaultEps);
double weyl_constant(DimPair pair, const SeriesValue& c);

double gamma_tilde(DimPair pair, double eps = kDefaultEps);
double gamma_tilde(DimPair pair, const SeriesValue& c);

/// (C^Sob)^{-Q/2} / W, the defining product.
double gamma_tilde_product_form(DimPair pair, double eps = kDefaultEps);
double gamma_tilde_product_form(DimPair pair, const SeriesValue& c);

/// Certified enclosure of gamma~.
Interval gamma_tilde_interval(DimPair pair, const SeriesValue& c);

/// Log-domain binary64 evaluation of gamma-.
double gamma_bar(DimPair pair);

/// gamma- as an exact rational (sqrt(pi) cancels between Gamma(m/2) and Gamma(n+m/2)).
BigRational gamma_bar_exact(DimPair pair);

ConstantBundle compute_bundle(DimPair pair, double eps = kDefaultEps);

struct ClassifiedPair {
    DimPair pair;
    Interval gamma_tilde;
};

struct ExceptionalSet {
    std::vector<ClassifiedPair> exceptional;  ///< certified gamma~ >= 1
    std::vector<ClassifiedPair> uncertain;    ///< interval contains 1
};

/// Admissible pairs with 1 <= n <= n_max, 1 <= m <= m_max, sorted by (n, m).
ExceptionalSet exceptional_set(int n_max, int m_max, double eps = kDefaultEps);

struct WeylDensity {
    double value = 0.0;
    double error_bound = 0.0;
    std::int64_t shells = 0;            ///< shells summed explicitly
    std::int64_t enumerated_shells = 0; ///< of which counted by walking multi-indices
};

/// On-diagonal density of the spectral projection 1(-Delta < lambda), computed
/// from the fibre decomposition: the radial tau-integral of tau^{n+m-1} times
/// the Landau-level counting function, integrated by Gauss-Legendre between
/// consecutive level crossings. Needs 2 * quadrature_points >= n + m.
WeylDensity weyl_density_bruteforce(DimPair pair, double lambda, int quadrature_points,
                                    double eps = 1e-10);

}  // namespace htype
