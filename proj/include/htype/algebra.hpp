#pragma once

/**
 * @file algebra.hpp
 * @brief Explicit H-type structures on R^{2n} x R^m.
 *
 * A structure is a family U^(1..m) of 2n x 2n integer matrices that are
 * skew-symmetric, orthogonal and pairwise anticommuting. The group law is
 *
 *     (x, t) o (xi, tau) = (x + xi, t_j + tau_j + 1/2 <U^(j) x, xi>),  j = 1..m,
 *
 * and J_z = sum_j z_j U^(j) is orthogonal for every unit z.
 *
 * Construction: left multiplication by the imaginary units of C, H and O
 * (built by Cayley-Dickson doubling) gives maximal families of size 1, 3, 7
 * on R^2, R^4, R^8. Each factor 16 in the dimension adds eight more
 * matrices (Clifford periodicity) and an odd factor q is absorbed by
 * U -> U (x) I_q. All entries stay in {-1, 0, 1}.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "htype/numerics.hpp"
#include "htype/series.hpp"

namespace htype {

using IntMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct HTypeStructure {
    DimPair pair;
    std::vector<IntMatrix> U;

    int x_dim() const { return 2 * pair.n; }
    int t_dim() const { return pair.m; }
};

struct AxiomCheck {
    bool skew_symmetric = false;
    bool orthogonal = false;
    bool anticommuting = false;

    bool ok() const { return skew_symmetric && orthogonal && anticommuting; }
};

/// Throws ConstructionImpossible when m > rho(2n) - 1.
HTypeStructure construct(DimPair pair);

/// Exact integer verification of the three matrix axioms.
AxiomCheck verify_axioms(const HTypeStructure& s);

/// Left-multiplication matrices of the 2^level - 1 imaginary units of the
/// Cayley-Dickson algebra of dimension 2^level (level 1, 2, 3: C, H, O).
std::vector<IntMatrix> cayley_dickson_units(int level);

/// A skew-symmetric signed permutation matrix anticommuting with every U^(j),
/// found by exhaustive search, or nullopt if none exists. Only signed
/// permutations are searched, so nullopt is evidence, not proof, of maximality.
std::optional<IntMatrix> extend_by_signed_permutation(const HTypeStructure& s);

template <typename Scalar>
struct GroupElement {
    std::vector<Scalar> x;
    std::vector<Scalar> t;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

namespace detail {
void check_dimensions(const HTypeStructure& s, std::size_t x_size, std::size_t t_size);
}

template <typename Scalar>
GroupElement<Scalar> group_identity(const HTypeStructure& s) {
    return {std::vector<Scalar>(static_cast<std::size_t>(s.x_dim()), Scalar(0)),
            std::vector<Scalar>(static_cast<std::size_t>(s.t_dim()), Scalar(0))};
}

template <typename Scalar>
GroupElement<Scalar> group_inverse(const GroupElement<Scalar>& a) {
    GroupElement<Scalar> out = a;
    for (auto& v : out.x) v = -v;
    for (auto& v : out.t) v = -v;
    return out;
}

template <typename Scalar>
GroupElement<Scalar> group_mul(const HTypeStructure& s, const GroupElement<Scalar>& a,
                               const GroupElement<Scalar>& b) {
    detail::check_dimensions(s, a.x.size(), a.t.size());
    detail::check_dimensions(s, b.x.size(), b.t.size());
    const auto dim = a.x.size();
    GroupElement<Scalar> out;
    out.x.resize(dim);
    for (std::size_t i = 0; i < dim; ++i)
        out.x[i] = a.x[i] + b.x[i];
    out.t.resize(a.t.size());
    const Scalar half = Scalar(1) / Scalar(2);
    for (std::size_t j = 0; j < a.t.size(); ++j) {
        // <U^(j) x_a, x_b>
        Scalar pairing(0);
        const IntMatrix& u = s.U[j];
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) {
                const int e = u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
                if (e != 0)
                    pairing += Scalar(e) * a.x[c] * b.x[r];
            }
        out.t[j] = a.t[j] + b.t[j] + half * pairing;
    }
    return out;
}

/// J_z = sum_j z_j U^(j).
Eigen::MatrixXd jz_map(const HTypeStructure& s, const std::vector<double>& z);

/// Polynomial in x_1..x_{2n}, t_1..t_m with exact rational coefficients.
/// Monomials are exponent vectors of length 2n + m (x exponents first).
class Polynomial {
public:
    using Exponents = std::vector<int>;

    explicit Polynomial(int variables = 0) : variables_(variables) {}

    static Polynomial monomial(int variables, Exponents exponents, BigRational coefficient = BigRational(1));

    int variables() const { return variables_; }
    const std::map<Exponents, BigRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Polynomial derivative(int variable) const;
    /// Multiply by variable^1.
    Polynomial times_variable(int variable) const;
    Polynomial scaled(const BigRational& c) const;
    BigRational evaluate(const std::vector<BigRational>& point) const;

    Polynomial& operator+=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a += b.scaled(BigRational(-1)); }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

private:
    void add_term(const Exponents& e, const BigRational& c);

    int variables_;
    std::map<Exponents, BigRational> terms_;
};

/// Second-order symbol of Delta = Delta_x + 1/4 |x|^2 Delta_t + sum_j <U^(j) x, grad_x> d/dt_j.
struct SublaplacianCoefficients {
    int x_dim = 0;
    int t_dim = 0;
    BigRational x_laplacian_weight{1};      ///< identity block on d^2/dx_a^2
    BigRational t_laplacian_weight{1, 4};   ///< multiplies |x|^2 on d^2/dt_j^2
    std::vector<IntMatrix> mixed_fields;    ///< x -> U^(j) x, paired with d/dt_j

    Polynomial apply(const Polynomial& u) const;
};

SublaplacianCoefficients sublaplacian_coefficients(const HTypeStructure& s);

/// Left-invariant horizontal field X_i = d/dx_i + 1/2 sum_j (U^(j) x)_i d/dt_j, applied to u.
Polynomial apply_horizontal_field(const HTypeStructure& s, int i, const Polynomial& u);

/// {"n": int, "m": int, "U": [[[int]]]}
std::string structure_to_json(const HTypeStructure& s, int indent = 2);
HTypeStructure structure_from_json(const std::string& text);

}  // namespace htype
