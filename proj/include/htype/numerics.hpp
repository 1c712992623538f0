#pragma once

/**
 * @file numerics.hpp
 * @brief Special-function primitives shared by the constant computations.
 *
 * Two arithmetic paths live here:
 * - an approximate binary64 path that works in the log domain (Gamma(2n+m)
 *   overflows a double near n = 85, its logarithm never does);
 * - an exact path over arbitrary-precision rationals, used wherever a gamma
 *   ratio has an integer argument difference so that sqrt(pi) cancels.
 */

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace htype {

/// A positive or negative multiple of 1/2, stored as twice its value.
class HalfInteger {
public:
    constexpr HalfInteger() = default;

    static constexpr HalfInteger from_twice(std::int64_t twice) { return HalfInteger(twice); }
    static constexpr HalfInteger integer(std::int64_t value) { return HalfInteger(2 * value); }
    /// numerator / 2
    static constexpr HalfInteger halves(std::int64_t numerator) { return HalfInteger(numerator); }

    constexpr std::int64_t twice_value() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr double value() const { return 0.5 * static_cast<double>(twice_); }

    constexpr HalfInteger operator+(HalfInteger o) const { return HalfInteger(twice_ + o.twice_); }
    constexpr HalfInteger operator-(HalfInteger o) const { return HalfInteger(twice_ - o.twice_); }

    constexpr auto operator<=>(const HalfInteger&) const = default;

private:
    constexpr explicit HalfInteger(std::int64_t twice) : twice_(twice) {}
    std::int64_t twice_ = 0;
};

/// Exact rational in lowest terms with a positive denominator.
class BigRational {
public:
    BigRational() = default;
    BigRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    BigRational(const mpz_class& num, const mpz_class& den);
    BigRational(long num, long den);
    explicit BigRational(const mpq_class& q);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    /// Nearest double up to one ulp (GMP truncates toward zero).
    double to_double() const;
    /// "num/den", or "num" when the denominator is 1.
    std::string to_string() const;
    /// Decimal expansion rounded half away from zero.
    std::string to_decimal(int decimals) const;

    const mpq_class& raw() const { return q_; }

    BigRational operator-() const { return BigRational(mpq_class(-q_)); }
    friend BigRational operator+(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.q_ + b.q_)); }
    friend BigRational operator-(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.q_ - b.q_)); }
    friend BigRational operator*(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.q_ * b.q_)); }
    friend BigRational operator/(const BigRational& a, const BigRational& b);

    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_{0};
};

BigRational pow(const BigRational& base, long exponent);

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// ln Gamma(q) for q > 0. Absolute error below 1e-14 * max(1, |ln Gamma(q)|).
double log_gamma(HalfInteger q);

/// Gamma(a) / Gamma(b) exactly; requires a, b > 0 and a - b integral.
BigRational gamma_ratio_exact(HalfInteger a, HalfInteger b);

/// Binomial coefficient C(p, q); returns 0 when q > p.
mpz_class binomial(unsigned long p, unsigned long q);

/// Surface measure of the unit sphere S^d in R^{d+1}.
double sphere_area(int d);

/// Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree < 2 * points.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
QuadratureRule gauss_legendre(int points);

/// Riemann zeta at an integer s >= 2, by direct summation plus the integral bracket on the tail.
double zeta(int s);

}  // namespace htype
