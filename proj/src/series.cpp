#include "htype/series.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <string>

#include "htype/errors.hpp"

namespace htype {

DimPair::DimPair(int n_, int m_) : n(n_), m(m_) {
    if (n < 1 || m < 1)
        throw DomainError("DimPair requires n >= 1 and m >= 1, got (" + std::to_string(n) + ", " +
                          std::to_string(m) + ")");
}

double series_term(DimPair pair, std::int64_t k) {
    if (k < 0)
        throw DomainError("series_term: negative index");
    const double kk = static_cast<double>(k);
    const double base = 2.0 * kk + pair.n;

    // C(k+n-1, n-1) = prod_{j=1}^{n-1} (k+j)/j
    double binom = 1.0;
    for (int j = 1; j < pair.n; ++j)
        binom *= (kk + j) / j;

    const double scale = std::pow(base, -pair.degree());
    if (std::isfinite(binom) && scale >= DBL_MIN)
        return binom * scale;

    double log_binom = 0.0;
    for (int j = 1; j < pair.n; ++j)
        log_binom += std::log1p(kk / j);
    return std::exp(log_binom - pair.degree() * std::log(base));
}

BigRational series_term_exact(DimPair pair, std::int64_t k) {
    if (k < 0)
        throw DomainError("series_term_exact: negative index");
    const auto uk = static_cast<unsigned long>(k);
    const mpz_class num = binomial(uk + static_cast<unsigned long>(pair.n) - 1, uk);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2 * uk + static_cast<unsigned long>(pair.n),
                  static_cast<unsigned long>(pair.degree()));
    return BigRational(num, den);
}

namespace {

// S = sum over the pairs (j, n-j), j < n/2, of (n/2 - j)^2
double pairing_defect(int n) {
    double s = 0.0;
    for (int j = 1; 2 * j < n; ++j) {
        const double a = 0.5 * n - j;
        s += a * a;
    }
    return s;
}

// ln( 1 / ((n-1)! 2^{n+m}) )
double log_envelope_constant(DimPair pair) {
    return -log_gamma(HalfInteger::integer(pair.n)) - pair.degree() * std::log(2.0);
}

}  // namespace

TailBracket c_tail_bracket(DimPair pair, std::int64_t K) {
    if (K < 1)
        throw DomainError("c_tail_bracket: K must be at least 1");
    const double m = pair.m;
    const double half_n = 0.5 * pair.n;
    const double h_lo = static_cast<double>(K) + half_n;
    const double h_hi = static_cast<double>(K) - 1.0 + half_n;
    const double log_c = log_envelope_constant(pair);

    const double upper = std::exp(log_c - m * std::log(h_hi)) / m;
    const double main = std::exp(log_c - m * std::log(h_lo)) / m;
    const double defect =
        pairing_defect(pair.n) * std::exp(log_c - (m + 2.0) * std::log(h_hi)) / (m + 2.0);
    return {std::max(0.0, main - defect), upper};
}

double c_tail_bound(DimPair pair, std::int64_t K) {
    if (K < 2 || K < pair.n - 1)
        throw DomainError("c_tail_bound: requires K >= max(n-1, 2), got K = " + std::to_string(K));
    const double m = pair.m;
    const double log_bound = -m * std::log(static_cast<double>(K - 1)) -
                             log_gamma(HalfInteger::integer(pair.n)) - (m + 1.0) * std::log(2.0);
    return std::exp(log_bound) / m;
}

namespace {

double rounding_allowance(DimPair pair, double partial_sum) {
    // per-term relative error ~ (2n + 2) ulp, plus the compensated summation
    return partial_sum * (2.0 * pair.n + 8.0) * DBL_EPSILON;
}

}  // namespace

SeriesValue c_series_truncated(DimPair pair, std::int64_t K) {
    if (K < 1)
        throw DomainError("c_series_truncated: K must be at least 1");
    CompensatedSum sum;
    for (std::int64_t k = 0; k < K; ++k)
        sum.add(series_term(pair, k));
    const TailBracket tail = c_tail_bracket(pair, K);
    SeriesValue out;
    out.value = sum.value();
    out.tail_lower = tail.lower;
    out.tail_bound = tail.upper;
    out.rounding_bound = rounding_allowance(pair, out.value);
    out.terms_used = K;
    return out;
}

SeriesValue c_series(DimPair pair, double eps) {
    if (!(eps > 0.0))
        throw DomainError("c_series: eps must be positive");

    const std::int64_t min_terms = std::max<std::int64_t>(pair.n, 16);
    CompensatedSum sum;
    SeriesValue out;
    for (std::int64_t K = 1; K <= kSeriesIterationCap; ++K) {
        sum.add(series_term(pair, K - 1));
        if (K < min_terms)
            continue;
        const TailBracket tail = c_tail_bracket(pair, K);
        out.value = sum.value();
        out.tail_lower = tail.lower;
        out.tail_bound = tail.upper;
        out.rounding_bound = rounding_allowance(pair, out.value);
        out.terms_used = K;
        const double target = eps * std::min(1.0, out.lower());
        if (out.radius() <= target)
            return out;
        // rounding_bound only grows with K
        if (out.rounding_bound > target)
            throw PrecisionUnreachable("c_series: eps is below the floating-point rounding floor", out.radius());
    }
    throw PrecisionUnreachable("c_series: certified radius did not reach eps within the iteration cap",
                               out.radius());
}

mpz_class multiindex_count(int n, std::int64_t K) {
    if (n < 1 || K < 0)
        throw DomainError("multiindex_count: requires n >= 1 and K >= 0");
    const auto uk = static_cast<unsigned long>(K);
    return binomial(uk + static_cast<unsigned long>(n) - 1, uk);
}

std::vector<std::uint64_t> enumerate_shell_counts(int n, int max_shell) {
    if (n < 1 || max_shell < 0)
        throw DomainError("enumerate_shell_counts: requires n >= 1 and max_shell >= 0");
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_shell) + 1, 0);
    // odometer over k_1..k_n with running total |k| <= max_shell
    std::vector<int> index(static_cast<std::size_t>(n), 0);
    int total = 0;
    while (true) {
        ++counts[static_cast<std::size_t>(total)];
        int pos = 0;
        while (pos < n) {
            if (total < max_shell) {
                ++index[static_cast<std::size_t>(pos)];
                ++total;
                break;
            }
            total -= index[static_cast<std::size_t>(pos)];
            index[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n)
            break;
    }
    return counts;
}

}  // namespace htype
