#pragma once

/**
 * @file series.hpp
 * @brief The Landau-level series
 *
 *     c_{n,m} = sum_{k>=0} C(k+n-1, k) / (2k+n)^{n+m}
 *
 * with a certified two-sided bracket on the truncation remainder.
 *
 * Writing h = k + n/2, the summand is P(h) / ((n-1)! (2h)^{n+m}) where
 * P(h) = prod_{j=1}^{n-1} (h + j - n/2). Pairing j with n-j gives
 * h^{n-1} (1 - S/h^2) <= P(h) <= h^{n-1}, S = sum_{j < n/2} (n/2 - j)^2,
 * so the tail is squeezed between two integrals of (h)^{-(m+1)}.
 */

#include <cstdint>
#include <vector>

#include "htype/numerics.hpp"

namespace htype {

/// Dimensions of an H-type group R^{2n} x R^m: dim z^perp = 2n, dim z = m.
struct DimPair {
    int n = 1;
    int m = 1;

    DimPair() = default;
    DimPair(int n_, int m_);

    /// n + m, half the homogeneous dimension.
    int degree() const { return n + m; }
    /// Homogeneous dimension Q = 2n + 2m.
    int homogeneous_dimension() const { return 2 * (n + m); }

    friend bool operator==(const DimPair&, const DimPair&) = default;
    friend auto operator<=>(const DimPair&, const DimPair&) = default;
};

/// A partial sum of a positive series together with a certified remainder bracket.
///
/// The exact sum lies in [lower(), upper()].
struct SeriesValue {
    double value = 0.0;           ///< partial sum over k < terms_used
    double tail_lower = 0.0;      ///< certified lower bound on the omitted remainder
    double tail_bound = 0.0;      ///< certified upper bound on the omitted remainder
    double rounding_bound = 0.0;  ///< bound on floating-point error in `value`
    std::int64_t terms_used = 0;

    double lower() const { return value - rounding_bound + tail_lower; }
    double upper() const { return value + rounding_bound + tail_bound; }
    double estimate() const { return value + 0.5 * (tail_lower + tail_bound); }
    /// Half-width of [lower(), upper()]; |estimate() - exact| <= radius().
    double radius() const { return 0.5 * (tail_bound - tail_lower) + rounding_bound; }
};

struct TailBracket {
    double lower = 0.0;
    double upper = 0.0;
};

/// Summand C(k+n-1, k) / (2k+n)^{n+m} in binary64.
double series_term(DimPair pair, std::int64_t k);

/// Summand in exact rational arithmetic.
BigRational series_term_exact(DimPair pair, std::int64_t k);

/// Certified bracket on sum_{k >= K} of the summand, valid for K >= 1.
TailBracket c_tail_bracket(DimPair pair, std::int64_t K);

/// Coarse certified upper bound on sum_{k >= K}:
/// (K-1)^{-m} / ((n-1)! 2^{m+1} m), valid for K >= max(n-1, 2).
double c_tail_bound(DimPair pair, std::int64_t K);

inline constexpr std::int64_t kSeriesIterationCap = 100'000'000;

/// Sums c_{n,m} until the certified radius is at most eps * min(1, c).
/// Throws PrecisionUnreachable if the iteration cap is hit first.
SeriesValue c_series(DimPair pair, double eps);

/// Partial sum over k < K plus the remainder bracket at K (no stopping rule).
SeriesValue c_series_truncated(DimPair pair, std::int64_t K);

/// Number of multi-indices k in N_0^n with |k| = K, i.e. C(K+n-1, K).
mpz_class multiindex_count(int n, std::int64_t K);

/// Shell sizes #{k in N_0^n : |k| = K} for K = 0..max_shell by walking every multi-index.
std::vector<std::uint64_t> enumerate_shell_counts(int n, int max_shell);

}  // namespace htype
