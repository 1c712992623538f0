#include "htype/monotonicity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <utility>

#include "htype/constants.hpp"
#include "htype/errors.hpp"

namespace htype {

namespace {

constexpr double kE = std::numbers::e;

void require_n_at_least_two(DimPair pair, const char* what) {
    if (pair.n < 2)
        throw DomainError(std::string(what) + ": requires n >= 2");
}

}  // namespace

double phi(DimPair pair, double eps) {
    require_n_at_least_two(pair, "phi");
    return gamma_tilde(pair, eps) / gamma_tilde(DimPair(pair.n - 1, pair.m), eps);
}

double phi_closed_form(DimPair pair, double eps) {
    require_n_at_least_two(pair, "phi_closed_form");
    const double n = pair.n;
    const double m = pair.m;
    const double d = n + m;
    const double log_factor = (d - 1.0) * std::log(n - 1.0) + (d - 1.0) * std::log(d - 2.0) + std::log(d) +
                              std::log(2.0 * n + m - 1.0) - d * std::log(n) - (d + 1.0) * std::log(d - 1.0);
    const double c_prev = c_series(DimPair(pair.n - 1, pair.m), eps).estimate();
    const double c_here = c_series(pair, eps).estimate();
    return std::exp(log_factor + std::log(c_prev) - std::log(c_here));
}

double term_ratio(DimPair pair, std::int64_t k) {
    require_n_at_least_two(pair, "term_ratio");
    if (k < 0)
        throw DomainError("term_ratio: negative index");
    const double n = pair.n;
    const double base = 2.0 * static_cast<double>(k) + n;
    return (1.0 / (n - 1.0)) * ((static_cast<double>(k) + n - 1.0) / base) *
           std::exp((pair.degree() - 1.0) * std::log1p(-1.0 / base));
}

double c_ratio_lower_bound(DimPair pair) {
    require_n_at_least_two(pair, "c_ratio_lower_bound");
    const double n = pair.n;
    return (1.0 / n) * std::pow(1.0 - 1.0 / n, pair.degree() - 1);
}

BigRational psi(DimPair pair) {
    if (pair.m < 2)
        throw DomainError("psi: requires m >= 2");
    return gamma_bar_exact(pair) / gamma_bar_exact(DimPair(pair.n, pair.m - 1));
}

double psi_closed_form(DimPair pair) {
    if (pair.m < 2)
        throw DomainError("psi_closed_form: requires m >= 2");
    const int n = pair.n;
    const int m = pair.m;
    const double d = pair.degree();
    const double log_algebraic =
        std::log(4.0) + (d - 1.0) * std::log(d - 2.0) + std::log(d) - (d + 1.0) * std::log(d - 1.0);
    const double log_gammas = log_gamma(HalfInteger::halves(m)) + log_gamma(HalfInteger::halves(2 * n + m + 1)) -
                              log_gamma(HalfInteger::halves(m - 1)) - log_gamma(HalfInteger::halves(2 * n + m));
    return std::exp(log_algebraic + log_gammas);
}

namespace {

class ReportBuilder {
public:
    ReportBuilder(std::string name, std::string domain, double threshold, double slack = 1e-12,
                  bool empirical = false) {
        report_.name = std::move(name);
        report_.domain_scanned = std::move(domain);
        report_.threshold = threshold;
        report_.slack = slack;
        report_.empirical = empirical;
        report_.max_observed = -std::numeric_limits<double>::infinity();
    }

    void observe(double x) {
        if (std::isnan(x))
            nan_seen_ = true;
        report_.max_observed = std::max(report_.max_observed, x);
    }

    InequalityReport finish() {
        report_.passed = !nan_seen_ && report_.max_observed <= report_.threshold + report_.slack;
        return report_;
    }

private:
    InequalityReport report_;
    bool nan_seen_ = false;
};

std::string grid_text(const char* n_range, const char* m_range, const InequalityGrid& g) {
    return std::string(n_range) + " (n_max=" + std::to_string(g.n_max) + "), " + m_range +
           " (m_max=" + std::to_string(g.m_max) + ")";
}

}  // namespace

std::vector<InequalityReport> inequality_suite(const InequalityGrid& grid) {
    if (grid.n_max < 2 || grid.m_max < 2 || grid.k_max < 1)
        throw DomainError("inequality_suite: grid bounds must be at least 2 (k_max at least 1)");

    std::map<std::pair<int, int>, SeriesValue> series;
    std::map<std::pair<int, int>, Interval> tilde;
    for (int n = 1; n <= grid.n_max; ++n) {
        for (int m = 1; m <= grid.m_max; ++m) {
            const DimPair pair(n, m);
            const SeriesValue c = c_series(pair, grid.eps);
            series[{n, m}] = c;
            tilde[{n, m}] = gamma_tilde_interval(pair, c);
        }
    }

    std::vector<InequalityReport> reports;

    {
        ReportBuilder r("term_ratio_nondecreasing_in_k",
                        grid_text("2<=n", "1<=m", grid) + ", 0<=k<=" + std::to_string(grid.k_max) +
                            "; max of t(k) - t(k+1)",
                        0.0, 1e-15);
        ReportBuilder at_zero("term_ratio_minimised_at_k0",
                              grid_text("2<=n", "1<=m", grid) + "; max of t(0) - min_k t(k)", 0.0, 0.0);
        for (int n = 2; n <= grid.n_max; ++n) {
            for (int m = 1; m <= grid.m_max; ++m) {
                const DimPair pair(n, m);
                double prev = term_ratio(pair, 0);
                double smallest = prev;
                for (std::int64_t k = 1; k <= grid.k_max; ++k) {
                    const double next = term_ratio(pair, k);
                    r.observe(prev - next);
                    smallest = std::min(smallest, next);
                    prev = next;
                }
                at_zero.observe(term_ratio(pair, 0) - smallest);
            }
        }
        reports.push_back(r.finish());
        reports.push_back(at_zero.finish());
    }

    {
        ReportBuilder r("c_ratio_lower_bound",
                        grid_text("2<=n", "1<=m", grid) + "; max of (1/n)(1-1/n)^{n+m-1} - c_{n,m}/c_{n-1,m}",
                        0.0);
        for (int n = 2; n <= grid.n_max; ++n)
            for (int m = 1; m <= grid.m_max; ++m) {
                const double ratio_lo = series[{n, m}].lower() / series[{n - 1, m}].upper();
                r.observe(c_ratio_lower_bound(DimPair(n, m)) - ratio_lo);
            }
        reports.push_back(r.finish());
    }

    {
        ReportBuilder bound("phi_le_algebraic_bound",
                            grid_text("2<=n", "1<=m", grid) +
                                "; max of phi - (n+m-2)^{n+m-1}(n+m)(2n+m-1)/(n+m-1)^{n+m+1}",
                            0.0);
        ReportBuilder r("phi_le_5_over_2e", grid_text("2<=n", "1<=m", grid) + "; max of phi_{n,m}",
                        5.0 / (2.0 * kE));
        for (int n = 2; n <= grid.n_max; ++n)
            for (int m = 1; m <= grid.m_max; ++m) {
                const double ph = tilde[{n, m}].hi / tilde[{n - 1, m}].lo;
                const double d = n + m;
                const double algebraic = std::exp((d - 1.0) * std::log(d - 2.0) + std::log(d) +
                                                  std::log(2.0 * n + m - 1.0) - (d + 1.0) * std::log(d - 1.0));
                bound.observe(ph - algebraic);
                r.observe(ph);
            }
        reports.push_back(bound.finish());
        reports.push_back(r.finish());
    }

    {
        ReportBuilder fraction("fraction_le_5_over_2",
                               grid_text("4<=n", "1<=m", grid) + "; max of (n+m)(2n+m-1)/(n+m-1)^2", 2.5, 0.0);
        ReportBuilder quadratic("quadratic_dominance",
                                grid_text("4<=n", "1<=m", grid) +
                                    "; max of (n+m)(2n+m-1) - 5/2 (n+m-1)^2 - (-3/2 m^2 - 4m + 11/2)",
                                0.0, 0.0);
        ReportBuilder parabola("quadratic_nonpositive", "1<=m<=" + std::to_string(grid.m_max) +
                                                            "; max of -3/2 m^2 - 4m + 11/2",
                               0.0, 0.0);
        for (int m = 1; m <= grid.m_max; ++m) {
            const double mm = m;
            const double p = -1.5 * mm * mm - 4.0 * mm + 5.5;
            parabola.observe(p);
            for (int n = 4; n <= grid.n_max; ++n) {
                const double nn = n;
                const double lhs = (nn + mm) * (2.0 * nn + mm - 1.0);
                const double sq = (nn + mm - 1.0) * (nn + mm - 1.0);
                fraction.observe(lhs / sq);
                quadratic.observe(lhs - 2.5 * sq - p);
            }
        }
        reports.push_back(fraction.finish());
        reports.push_back(quadratic.finish());
        reports.push_back(parabola.finish());
    }

    {
        ReportBuilder r1("psi_1m_le_64_over_27e", "n=1, 2<=m<=" + std::to_string(grid.m_max) + "; max of psi_{1,m}",
                         64.0 / (27.0 * kE));
        ReportBuilder r1b("psi_1m_le_cubic_bound",
                          "n=1, 2<=m<=" + std::to_string(grid.m_max) + "; max of psi_{1,m} - (2/e)(m-1)(m+1)^2/m^3",
                          0.0);
        for (int m = 2; m <= grid.m_max; ++m) {
            const double p = psi(DimPair(1, m)).to_double();
            const double mm = m;
            r1.observe(p);
            r1b.observe(p - (2.0 / kE) * (mm - 1.0) * (mm + 1.0) * (mm + 1.0) / (mm * mm * mm));
        }
        reports.push_back(r1.finish());
        reports.push_back(r1b.finish());
    }

    {
        ReportBuilder wendel("psi_squared_le_wendel_bound",
                             grid_text("2<=n", "2<=m", grid) + "; max of psi^2 - (4/e^2)(1 + 3/l - 3/l^2), l=n+m-1",
                             0.0);
        ReportBuilder r("psi_squared_le_20_over_3e2", grid_text("2<=n", "2<=m", grid) + "; max of psi_{n,m}^2",
                        20.0 / (3.0 * kE * kE));
        for (int n = 2; n <= grid.n_max; ++n)
            for (int m = 2; m <= grid.m_max; ++m) {
                const double p = psi(DimPair(n, m)).to_double();
                const double l = n + m - 1.0;
                wendel.observe(p * p - (4.0 / (kE * kE)) * (1.0 + 3.0 / l - 3.0 / (l * l)));
                r.observe(p * p);
            }
        reports.push_back(wendel.finish());
        reports.push_back(r.finish());
    }

    {
        ReportBuilder r("gamma_tilde_decreasing_in_n",
                        grid_text("2<=n", "1<=m", grid) + "; max of upper(gamma~_{n,m}) / lower(gamma~_{n-1,m})",
                        1.0, 0.0);
        bool strict = true;
        for (int n = 2; n <= grid.n_max; ++n)
            for (int m = 1; m <= grid.m_max; ++m) {
                const double q = tilde[{n, m}].hi / tilde[{n - 1, m}].lo;
                strict = strict && q < 1.0;
                r.observe(q);
            }
        InequalityReport rep = r.finish();
        rep.passed = rep.passed && strict;
        reports.push_back(rep);
    }

    {
        ReportBuilder r("gamma_bar_decreasing_in_m",
                        grid_text("1<=n", "2<=m", grid) + "; max of gamma-_{n,m} / gamma-_{n,m-1} (exact)", 1.0, 0.0);
        bool strict = true;
        for (int n = 1; n <= grid.n_max; ++n)
            for (int m = 2; m <= grid.m_max; ++m) {
                const BigRational q = psi(DimPair(n, m));
                strict = strict && q < BigRational(1);
                r.observe(q.to_double());
            }
        InequalityReport rep = r.finish();
        rep.passed = rep.passed && strict;
        reports.push_back(rep);
    }

    {
        // gamma~_{n,m} <= gamma~_{4,m} <= gamma-_{4,m} <= gamma-_{4,2} = 2268/3125
        ReportBuilder r("combination_chain",
                        grid_text("4<=n", "2<=m", grid) + "; max violation over the links of the chain", 0.0, 0.0);
        const BigRational anchor = gamma_bar_exact(DimPair(4, 2));
        r.observe(anchor == BigRational(2268, 3125) ? 0.0 : 1.0);
        for (int m = 2; m <= grid.m_max; ++m) {
            const BigRational bar4 = gamma_bar_exact(DimPair(4, m));
            r.observe(tilde[{4, m}].hi - bar4.to_double());
            r.observe(bar4 <= anchor ? 0.0 : (bar4 - anchor).to_double());
            for (int n = 5; n <= grid.n_max; ++n)
                r.observe(tilde[{n, m}].hi - tilde[{4, m}].lo);
        }
        reports.push_back(r.finish());
    }

    {
        ReportBuilder r("gamma_tilde_decreasing_in_m",
                        grid_text("1<=n", "2<=m", grid) + "; max of upper(gamma~_{n,m}) / lower(gamma~_{n,m-1})",
                        1.0, 0.0, /*empirical=*/true);
        for (int n = 1; n <= grid.n_max; ++n)
            for (int m = 2; m <= grid.m_max; ++m)
                r.observe(tilde[{n, m}].hi / tilde[{n, m - 1}].lo);
        reports.push_back(r.finish());
    }

    return reports;
}

}  // namespace htype
