#include "htype/constants.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>

#include "htype/admissibility.hpp"
#include "htype/errors.hpp"

namespace htype {

namespace {

constexpr double kPi = std::numbers::pi;

HalfInteger half(int numerator) { return HalfInteger::halves(numerator); }

// ln of 2^{-(n-m+1)} (n+m) / (n+m-1)^{n+m} * Gamma(m/2) Gamma(2n+m) / Gamma(n+m/2),
// which is gamma- and also gamma~ * c_{n,m} * n^{n+m}.
double log_gamma_bar(DimPair pair) {
    const int n = pair.n;
    const int m = pair.m;
    const double d = pair.degree();
    return -(n - m + 1) * std::log(2.0) + std::log(d) - d * std::log(d - 1.0) + log_gamma(half(m)) +
           log_gamma(HalfInteger::integer(2 * n + m)) - log_gamma(half(2 * n + m));
}

double log_sobolev(DimPair pair) {
    const int n = pair.n;
    const int m = pair.m;
    const double d = pair.degree();
    return (n / d) * std::log(4.0) + std::log(static_cast<double>(n)) + std::log(d - 1.0) +
           ((2.0 * n + m) / (2.0 * d)) * std::log(kPi) +
           (log_gamma(half(2 * n + m)) - log_gamma(HalfInteger::integer(2 * n + m))) / d;
}

// ln( omega_{m-1} / (2 pi)^{n+m} / (n+m) )
double log_weyl_prefactor(DimPair pair) {
    const double d = pair.degree();
    return std::log(sphere_area(pair.m - 1)) - d * std::log(2.0 * kPi) - std::log(d);
}

}  // namespace

double sobolev_constant(DimPair pair) { return std::exp(log_sobolev(pair)); }

double weyl_constant(DimPair pair, const SeriesValue& c) {
    return std::exp(log_weyl_prefactor(pair) + std::log(c.estimate()));
}

double weyl_constant(DimPair pair, double eps) { return weyl_constant(pair, c_series(pair, eps)); }

double gamma_tilde(DimPair pair, const SeriesValue& c) {
    const double d = pair.degree();
    return std::exp(log_gamma_bar(pair) - d * std::log(static_cast<double>(pair.n)) -
                    std::log(c.estimate()));
}

double gamma_tilde(DimPair pair, double eps) { return gamma_tilde(pair, c_series(pair, eps)); }

double gamma_tilde_product_form(DimPair pair, const SeriesValue& c) {
    const double log_weyl = log_weyl_prefactor(pair) + std::log(c.estimate());
    return std::exp(-pair.degree() * log_sobolev(pair) - log_weyl);
}

double gamma_tilde_product_form(DimPair pair, double eps) {
    return gamma_tilde_product_form(pair, c_series(pair, eps));
}

Interval gamma_tilde_interval(DimPair pair, const SeriesValue& c) {
    const double log_numerator =
        log_gamma_bar(pair) - pair.degree() * std::log(static_cast<double>(pair.n));
    const double numerator = std::exp(log_numerator);
    return {numerator / c.upper() * (1.0 - kFactorSlack), numerator / c.lower() * (1.0 + kFactorSlack)};
}

double gamma_bar(DimPair pair) { return std::exp(log_gamma_bar(pair)); }

BigRational gamma_bar_exact(DimPair pair) {
    const long n = pair.n;
    const long m = pair.m;
    const long d = n + m;
    // 2^{-(n-m+1)}
    const BigRational power_of_two = pow(BigRational(2), -(n - m + 1));
    const BigRational dimension_factor = BigRational(d) / pow(BigRational(d - 1), d);
    const BigRational half_ratio = gamma_ratio_exact(half(pair.m), half(2 * pair.n + pair.m));
    mpz_class factorial;
    mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(2 * n + m - 1));
    return power_of_two * dimension_factor * half_ratio * BigRational(factorial, 1);
}

ConstantBundle compute_bundle(DimPair pair, double eps) {
    ConstantBundle b;
    b.pair = pair;
    b.Q = pair.homogeneous_dimension();
    b.c = c_series(pair, eps);
    b.sobolev = sobolev_constant(pair);
    b.weyl = weyl_constant(pair, b.c);
    b.gamma_tilde = gamma_tilde(pair, b.c);
    b.gamma_tilde_interval = gamma_tilde_interval(pair, b.c);
    b.gamma_bar = gamma_bar(pair);
    b.gamma_bar_exact = gamma_bar_exact(pair);
    return b;
}

ExceptionalSet exceptional_set(int n_max, int m_max, double eps) {
    if (n_max < 1 || m_max < 1)
        throw DomainError("exceptional_set: bounds must be at least 1");
    ExceptionalSet out;
    for (int n = 1; n <= n_max; ++n) {
        for (int m = 1; m <= m_max; ++m) {
            const DimPair pair(n, m);
            if (!admissible(pair).admissible)
                continue;
            const Interval iv = gamma_tilde_interval(pair, c_series(pair, eps));
            if (iv.lo >= 1.0)
                out.exceptional.push_back({pair, iv});
            else if (iv.hi >= 1.0)
                out.uncertain.push_back({pair, iv});
        }
    }
    return out;
}

namespace {

// Multi-indices walked explicitly before switching to the closed-form shell size.
constexpr double kEnumerationBudget = 4e6;

}  // namespace

WeylDensity weyl_density_bruteforce(DimPair pair, double lambda, int quadrature_points, double eps) {
    if (!(lambda > 0.0))
        throw DomainError("weyl_density_bruteforce: lambda must be positive");
    const int d = pair.degree();
    if (2 * quadrature_points < d)
        throw DomainError("weyl_density_bruteforce: quadrature rule cannot integrate tau^{n+m-1} exactly");

    // Shell cutoff from the series stopping rule; throws PrecisionUnreachable when out of reach.
    const std::int64_t shells = c_series(pair, eps).terms_used;

    int enumerated = 0;
    while (enumerated + 1 < shells &&
           binomial(static_cast<unsigned long>(enumerated + 1 + pair.n), static_cast<unsigned long>(pair.n))
                   .get_d() <= kEnumerationBudget)
        ++enumerated;
    const std::vector<std::uint64_t> walked = enumerate_shell_counts(pair.n, enumerated);

    const QuadratureRule rule = gauss_legendre(quadrature_points);
    // integral of tau^{d-1} over [a, a + width]
    auto radial = [&](double a, double width) {
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double tau = a + 0.5 * width * (rule.nodes[i] + 1.0);
            acc += rule.weights[i] * std::pow(tau, d - 1);
        }
        return 0.5 * width * acc;
    };
    // level crossing tau_K = lambda / (2K + n): shell K is occupied for tau < tau_K
    auto crossing = [&](std::int64_t K) { return lambda / (2.0 * static_cast<double>(K) + pair.n); };

    CompensatedSum integral;
    double occupied = 0.0;  // number of occupied Landau states, N(tau)
    for (std::int64_t K = 0; K < shells; ++K) {
        occupied += K <= enumerated ? static_cast<double>(walked[static_cast<std::size_t>(K)])
                                    : multiindex_count(pair.n, K).get_d();
        if (K + 1 < shells) {
            const double base = 2.0 * static_cast<double>(K) + pair.n;
            const double width = 2.0 * lambda / (base * (base + 2.0));
            integral.add(occupied * radial(crossing(K + 1), width));
        } else {
            integral.add(occupied * radial(0.0, crossing(K)));
        }
    }

    // shells K >= shells each add C(K+n-1, K) (lambda/(2K+n))^d / d
    const TailBracket tail = c_tail_bracket(pair, shells);
    const double tail_scale = std::pow(lambda, d) / d;
    const double prefactor = sphere_area(pair.m - 1) / std::pow(2.0 * kPi, d);

    WeylDensity out;
    out.shells = shells;
    out.enumerated_shells = enumerated + 1;
    const double body = integral.value();
    out.value = prefactor * (body + tail_scale * 0.5 * (tail.lower + tail.upper));
    out.error_bound = prefactor * tail_scale * 0.5 * (tail.upper - tail.lower) +
                      std::abs(out.value) * (64.0 + d) * DBL_EPSILON;
    return out;
}

}  // namespace htype
