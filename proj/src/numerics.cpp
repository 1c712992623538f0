#include "htype/numerics.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "htype/errors.hpp"

namespace htype {

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
    if (den == 0)
        throw DomainError("BigRational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

BigRational::BigRational(long num, long den) : BigRational(mpz_class(num), mpz_class(den)) {}

BigRational::BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

BigRational operator/(const BigRational& a, const BigRational& b) {
    if (b.q_ == 0)
        throw DomainError("BigRational: division by zero");
    return BigRational(mpq_class(a.q_ / b.q_));
}

double BigRational::to_double() const { return q_.get_d(); }

std::string BigRational::to_string() const {
    if (q_.get_den() == 1)
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string BigRational::to_decimal(int decimals) const {
    if (decimals < 0)
        throw DomainError("to_decimal: negative digit count");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(decimals));
    const mpz_class num = abs(q_.get_num()) * scale;
    const mpz_class den = q_.get_den();
    mpz_class quot = num / den;
    const mpz_class rem = num - quot * den;
    if (2 * rem >= den)
        ++quot;

    std::string digits = quot.get_str();
    if (decimals > 0) {
        if (digits.size() <= static_cast<std::size_t>(decimals))
            digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
        digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
    }
    const bool negative = q_ < 0 && quot != 0;
    return negative ? "-" + digits : digits;
}

BigRational pow(const BigRational& base, long exponent) {
    if (exponent < 0)
        return BigRational(1) / pow(base, -exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return BigRational(num, den);
}

namespace {

// Above this the direct product would approach the double range; Stirling is
// already accurate to well below an ulp there.
constexpr std::int64_t kProductLimitTwice = 320;

double log_gamma_stirling(double x) {
    // B_{2k} / (2k (2k-1)) for k = 1..6
    constexpr std::array<double, 6> coeff = {
        1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0, 1.0 / 1188.0, -691.0 / 360360.0,
    };
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = 0.0;
    double power = inv;
    for (double c : coeff) {
        series += c * power;
        power *= inv2;
    }
    return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

}  // namespace

double log_gamma(HalfInteger q) {
    const std::int64_t twice = q.twice_value();
    if (twice <= 0)
        throw DomainError("log_gamma: argument must be positive");
    if (twice > kProductLimitTwice)
        return log_gamma_stirling(q.value());

    if (q.is_integer()) {
        // Gamma(k) = (k-1)!
        const std::int64_t k = twice / 2;
        double product = 1.0;
        for (std::int64_t j = 2; j < k; ++j)
            product *= static_cast<double>(j);
        return std::log(product);
    }
    // Gamma(k + 1/2) = sqrt(pi) * prod_{j=1..k} (j - 1/2)
    const std::int64_t k = (twice - 1) / 2;
    double product = 1.0;
    for (std::int64_t j = 1; j <= k; ++j)
        product *= static_cast<double>(j) - 0.5;
    return std::log(product) + 0.5 * std::log(std::numbers::pi);
}

BigRational gamma_ratio_exact(HalfInteger a, HalfInteger b) {
    if (a.twice_value() <= 0 || b.twice_value() <= 0)
        throw DomainError("gamma_ratio_exact: arguments must be positive");
    const std::int64_t diff_twice = a.twice_value() - b.twice_value();
    if (diff_twice % 2 != 0)
        throw UnsupportedRatio("gamma_ratio_exact: argument difference is not an integer");

    // Gamma(hi) / Gamma(lo) = prod_{j=0}^{d-1} (lo + j), d = hi - lo
    const bool inverted = diff_twice < 0;
    const HalfInteger lo = inverted ? a : b;
    const std::int64_t steps = (inverted ? -diff_twice : diff_twice) / 2;
    mpz_class num = 1;
    mpz_class den = 1;
    for (std::int64_t j = 0; j < steps; ++j) {
        num *= mpz_class(static_cast<long>(lo.twice_value() + 2 * j));
        den *= 2;
    }
    BigRational chain(num, den);
    return inverted ? BigRational(1) / chain : chain;
}

mpz_class binomial(unsigned long p, unsigned long q) {
    if (q > p)
        return 0;
    mpz_class result;
    mpz_bin_uiui(result.get_mpz_t(), p, q);
    return result;
}

double sphere_area(int d) {
    if (d < 0)
        throw DomainError("sphere_area: negative dimension");
    const HalfInteger half_dim = HalfInteger::halves(d + 1);
    return std::exp(std::log(2.0) + half_dim.value() * std::log(std::numbers::pi) - log_gamma(half_dim));
}

QuadratureRule gauss_legendre(int points) {
    if (points < 1)
        throw DomainError("gauss_legendre: need at least one node");
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(points));
    rule.weights.resize(static_cast<std::size_t>(points));
    const int n = points;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Tricomi initial guess, then Newton on P_n
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 1.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double step = p1 / dp;
            x -= step;
            if (std::abs(step) < 1e-16)
                break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[lo] = -x;
        rule.nodes[hi] = x;
        rule.weights[lo] = w;
        rule.weights[hi] = w;
    }
    return rule;
}

double zeta(int s) {
    if (s < 2)
        throw DomainError("zeta: only integer s >= 2 is supported");
    // tail over k >= N lies in [N^{1-s}, (N-1)^{1-s}] / (s-1); its width is below (N-1)^{-s}
    const double exponent = static_cast<double>(s);
    const auto cutoff = static_cast<long>(std::ceil(std::pow(1e14, 1.0 / exponent))) + 2;

    CompensatedSum sum;
    for (long k = cutoff - 1; k >= 1; --k)
        sum.add(std::pow(static_cast<double>(k), -exponent));

    const double tail_lo = std::pow(static_cast<double>(cutoff), 1.0 - exponent) / (exponent - 1.0);
    const double tail_hi = std::pow(static_cast<double>(cutoff - 1), 1.0 - exponent) / (exponent - 1.0);
    return sum.value() + 0.5 * (tail_lo + tail_hi);
}

}  // namespace htype
