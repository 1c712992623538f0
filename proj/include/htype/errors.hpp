#pragma once

#include <stdexcept>
#include <string>

namespace htype {

/// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Gamma ratio whose arguments do not differ by an integer (no exact rational form).
class UnsupportedRatio : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A certified bound could not reach the requested tolerance within the iteration cap.
class PrecisionUnreachable : public std::runtime_error {
public:
    PrecisionUnreachable(const std::string& what, double best_bound)
        : std::runtime_error(what), best_bound_(best_bound) {}

    double best_bound() const noexcept { return best_bound_; }

private:
    double best_bound_;
};

/// No H-type structure exists for the requested dimensions.
class ConstructionImpossible : public std::domain_error {
public:
    ConstructionImpossible(const std::string& what, int radon_hurwitz_number)
        : std::domain_error(what), rho_(radon_hurwitz_number) {}

    int radon_hurwitz_number() const noexcept { return rho_; }

private:
    int rho_;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace htype
