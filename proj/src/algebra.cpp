#include "htype/algebra.hpp"

#include <functional>
#include <string>

#include <json.hpp>

#include "htype/admissibility.hpp"
#include "htype/errors.hpp"

namespace htype {

namespace {

using Octet = std::vector<int>;

Octet conjugate(Octet v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        v[i] = -v[i];
    return v;
}

// (p, q)(r, s) = (p r - s* q, s p + q r*)
Octet cd_multiply(const Octet& a, const Octet& b) {
    if (a.size() == 1)
        return {a[0] * b[0]};
    const auto half = static_cast<std::ptrdiff_t>(a.size() / 2);
    const Octet p(a.begin(), a.begin() + half), q(a.begin() + half, a.end());
    const Octet r(b.begin(), b.begin() + half), s(b.begin() + half, b.end());
    const Octet pr = cd_multiply(p, r);
    const Octet sq = cd_multiply(conjugate(s), q);
    const Octet sp = cd_multiply(s, p);
    const Octet qr = cd_multiply(q, conjugate(r));
    Octet out(a.size());
    for (std::ptrdiff_t i = 0; i < half; ++i) {
        const auto k = static_cast<std::size_t>(i);
        out[k] = pr[k] - sq[k];
        out[k + static_cast<std::size_t>(half)] = sp[k] + qr[k];
    }
    return out;
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

IntMatrix identity(Eigen::Index dim) { return IntMatrix::Identity(dim, dim); }

IntMatrix pauli_j() {
    IntMatrix m(2, 2);
    m << 0, -1, 1, 0;
    return m;
}

IntMatrix pauli_p() {
    IntMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

// The 8-member family on R^16 and its volume element omega = F_1 ... F_8
// (symmetric, omega^2 = I, anticommutes with every F_j).
struct PeriodicityBlock {
    std::vector<IntMatrix> family;
    IntMatrix omega;
};

const PeriodicityBlock& periodicity_block() {
    static const PeriodicityBlock block = [] {
        PeriodicityBlock b;
        b.family.push_back(kron(pauli_j(), identity(8)));
        for (const IntMatrix& e : cayley_dickson_units(3))
            b.family.push_back(kron(pauli_p(), e));
        b.omega = identity(16);
        for (const IntMatrix& f : b.family)
            b.omega = b.omega * f;
        return b;
    }();
    return block;
}

// Maximal family (rho(2^v) - 1 members) on R^{2^v}.
std::vector<IntMatrix> maximal_family(int v) {
    const int b = v % 4;
    std::vector<IntMatrix> family = b == 0 ? std::vector<IntMatrix>{} : cayley_dickson_units(b);
    Eigen::Index dim = Eigen::Index{1} << b;
    const PeriodicityBlock& block = periodicity_block();
    for (int a = 0; a < v / 4; ++a) {
        std::vector<IntMatrix> next;
        for (const IntMatrix& f : block.family)
            next.push_back(kron(f, identity(dim)));
        for (const IntMatrix& u : family)
            next.push_back(kron(block.omega, u));
        family = std::move(next);
        dim *= 16;
    }
    return family;
}

}  // namespace

std::vector<IntMatrix> cayley_dickson_units(int level) {
    if (level < 0 || level > 3)
        throw DomainError("cayley_dickson_units: level must be in 0..3");
    const int dim = 1 << level;
    std::vector<IntMatrix> units;
    for (int i = 1; i < dim; ++i) {
        Octet e(static_cast<std::size_t>(dim), 0);
        e[static_cast<std::size_t>(i)] = 1;
        IntMatrix left(dim, dim);
        for (int j = 0; j < dim; ++j) {
            Octet basis(static_cast<std::size_t>(dim), 0);
            basis[static_cast<std::size_t>(j)] = 1;
            const Octet column = cd_multiply(e, basis);
            for (int r = 0; r < dim; ++r)
                left(r, j) = column[static_cast<std::size_t>(r)];
        }
        units.push_back(std::move(left));
    }
    return units;
}

HTypeStructure construct(DimPair pair) {
    const AdmissibilityVerdict verdict = admissible(pair);
    if (!verdict.admissible)
        throw ConstructionImpossible("no H-type structure on R^" + std::to_string(2 * pair.n) + " x R^" +
                                         std::to_string(pair.m) + ": rho(" + std::to_string(2 * pair.n) +
                                         ") = " + std::to_string(verdict.rho_2n) + " allows at most m = " +
                                         std::to_string(verdict.max_m),
                                     verdict.rho_2n);

    // smallest power of two carrying m matrices; the odd remainder and extra 2s are padding
    int v = 1;
    while (radon_hurwitz(1L << v) - 1 < pair.m)
        ++v;

    const std::vector<IntMatrix> family = maximal_family(v);
    const Eigen::Index padding = (2L * pair.n) >> v;
    HTypeStructure s;
    s.pair = pair;
    for (int j = 0; j < pair.m; ++j)
        s.U.push_back(kron(family[static_cast<std::size_t>(j)], identity(padding)));
    return s;
}

AxiomCheck verify_axioms(const HTypeStructure& s) {
    AxiomCheck check{true, true, true};
    const IntMatrix id = identity(s.x_dim());
    for (std::size_t i = 0; i < s.U.size(); ++i) {
        const IntMatrix& u = s.U[i];
        if (u.rows() != s.x_dim() || u.cols() != s.x_dim())
            return {false, false, false};
        check.skew_symmetric = check.skew_symmetric && (u + u.transpose()).isZero();
        check.orthogonal = check.orthogonal && (u.transpose() * u) == id;
        for (std::size_t j = i + 1; j < s.U.size(); ++j)
            check.anticommuting = check.anticommuting && (u * s.U[j] + s.U[j] * u).isZero();
    }
    return check;
}

std::optional<IntMatrix> extend_by_signed_permutation(const HTypeStructure& s) {
    const int dim = s.x_dim();
    struct SignedPerm {
        std::vector<int> perm;
        std::vector<int> sign;
    };
    std::vector<SignedPerm> family;
    for (const IntMatrix& u : s.U) {
        SignedPerm sp{std::vector<int>(static_cast<std::size_t>(dim), -1),
                      std::vector<int>(static_cast<std::size_t>(dim), 0)};
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c)
                if (u(r, c) != 0) {
                    if (sp.perm[static_cast<std::size_t>(r)] != -1 || (u(r, c) != 1 && u(r, c) != -1))
                        throw DomainError("extend_by_signed_permutation: family is not made of signed permutations");
                    sp.perm[static_cast<std::size_t>(r)] = c;
                    sp.sign[static_cast<std::size_t>(r)] = u(r, c);
                }
        for (int r = 0; r < dim; ++r)
            if (sp.perm[static_cast<std::size_t>(r)] < 0)
                throw DomainError("extend_by_signed_permutation: family is not made of signed permutations");
        family.push_back(std::move(sp));
    }

    // candidate M: M(i, p[i]) = sign[i]; skew forces p an involution without fixed points
    std::vector<int> p(static_cast<std::size_t>(dim), -1);
    std::vector<int> sign(static_cast<std::size_t>(dim), 0);
    auto at = [](std::vector<int>& v, int i) -> int& { return v[static_cast<std::size_t>(i)]; };

    // M U = -U M, row by row: u(p(i)) = p(u(i)) and sign_i sigma_{p(i)} = -sigma_i sign_{u(i)}
    auto consistent = [&] {
        for (const SignedPerm& u : family) {
            for (int i = 0; i < dim; ++i) {
                const int pi = at(p, i);
                const int ui = u.perm[static_cast<std::size_t>(i)];
                if (pi < 0 || at(p, ui) < 0)
                    continue;
                if (u.perm[static_cast<std::size_t>(pi)] != at(p, ui))
                    return false;
                if (at(sign, i) * u.sign[static_cast<std::size_t>(pi)] != -u.sign[static_cast<std::size_t>(i)] * at(sign, ui))
                    return false;
            }
        }
        return true;
    };

    std::function<bool()> search = [&]() -> bool {
        int i = 0;
        while (i < dim && at(p, i) >= 0)
            ++i;
        if (i == dim)
            return true;
        for (int j = i + 1; j < dim; ++j) {
            if (at(p, j) >= 0)
                continue;
            for (int sg : {1, -1}) {
                at(p, i) = j;
                at(p, j) = i;
                at(sign, i) = sg;
                at(sign, j) = -sg;
                if (consistent() && search())
                    return true;
                at(p, i) = -1;
                at(p, j) = -1;
            }
        }
        return false;
    };

    if (dim % 2 != 0 || !search())
        return std::nullopt;
    IntMatrix m = IntMatrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i)
        m(i, at(p, i)) = at(sign, i);
    return m;
}

namespace detail {

void check_dimensions(const HTypeStructure& s, std::size_t x_size, std::size_t t_size) {
    if (x_size != static_cast<std::size_t>(s.x_dim()) || t_size != static_cast<std::size_t>(s.t_dim()))
        throw DimensionMismatch("group element dimensions (" + std::to_string(x_size) + ", " +
                                std::to_string(t_size) + ") do not match structure (" +
                                std::to_string(s.x_dim()) + ", " + std::to_string(s.t_dim()) + ")");
}

}  // namespace detail

Eigen::MatrixXd jz_map(const HTypeStructure& s, const std::vector<double>& z) {
    if (z.size() != static_cast<std::size_t>(s.t_dim()))
        throw DimensionMismatch("jz_map: z has length " + std::to_string(z.size()) + ", expected " +
                                std::to_string(s.t_dim()));
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(s.x_dim(), s.x_dim());
    for (std::size_t k = 0; k < z.size(); ++k)
        j += z[k] * s.U[k].cast<double>();
    return j;
}

Polynomial Polynomial::monomial(int variables, Exponents exponents, BigRational coefficient) {
    if (exponents.size() != static_cast<std::size_t>(variables))
        throw DimensionMismatch("Polynomial::monomial: exponent vector has the wrong length");
    Polynomial p(variables);
    p.add_term(exponents, coefficient);
    return p;
}

void Polynomial::add_term(const Exponents& e, const BigRational& c) {
    if (c == BigRational(0))
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == BigRational(0))
            terms_.erase(it);
    }
}

Polynomial Polynomial::derivative(int variable) const {
    Polynomial out(variables_);
    const auto v = static_cast<std::size_t>(variable);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0)
            continue;
        Exponents lowered = e;
        --lowered[v];
        out.add_term(lowered, c * BigRational(e[v]));
    }
    return out;
}

Polynomial Polynomial::times_variable(int variable) const {
    Polynomial out(variables_);
    for (const auto& [e, c] : terms_) {
        Exponents raised = e;
        ++raised[static_cast<std::size_t>(variable)];
        out.add_term(raised, c);
    }
    return out;
}

Polynomial Polynomial::scaled(const BigRational& c) const {
    Polynomial out(variables_);
    for (const auto& [e, coeff] : terms_)
        out.add_term(e, coeff * c);
    return out;
}

BigRational Polynomial::evaluate(const std::vector<BigRational>& point) const {
    if (point.size() != static_cast<std::size_t>(variables_))
        throw DimensionMismatch("Polynomial::evaluate: point has the wrong length");
    BigRational total(0);
    for (const auto& [e, c] : terms_) {
        BigRational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            term *= pow(point[i], e[i]);
        total += term;
    }
    return total;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (variables_ == 0)
        variables_ = o.variables_;
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Polynomial SublaplacianCoefficients::apply(const Polynomial& u) const {
    if (u.variables() != x_dim + t_dim)
        throw DimensionMismatch("sublaplacian: polynomial has the wrong number of variables");
    Polynomial out(u.variables());

    for (int a = 0; a < x_dim; ++a)
        out += u.derivative(a).derivative(a).scaled(x_laplacian_weight);

    Polynomial t_laplacian(u.variables());
    for (int j = 0; j < t_dim; ++j)
        t_laplacian += u.derivative(x_dim + j).derivative(x_dim + j);
    for (int a = 0; a < x_dim; ++a)
        out += t_laplacian.times_variable(a).times_variable(a).scaled(t_laplacian_weight);

    for (int j = 0; j < t_dim; ++j) {
        const IntMatrix& field = mixed_fields[static_cast<std::size_t>(j)];
        const Polynomial dt = u.derivative(x_dim + j);
        for (int a = 0; a < x_dim; ++a) {
            const Polynomial dxdt = dt.derivative(a);
            for (int b = 0; b < x_dim; ++b)
                if (field(a, b) != 0)
                    out += dxdt.times_variable(b).scaled(BigRational(field(a, b)));
        }
    }
    return out;
}

SublaplacianCoefficients sublaplacian_coefficients(const HTypeStructure& s) {
    SublaplacianCoefficients c;
    c.x_dim = s.x_dim();
    c.t_dim = s.t_dim();
    c.mixed_fields = s.U;
    return c;
}

Polynomial apply_horizontal_field(const HTypeStructure& s, int i, const Polynomial& u) {
    if (i < 0 || i >= s.x_dim())
        throw DimensionMismatch("apply_horizontal_field: index out of range");
    Polynomial out = u.derivative(i);
    const BigRational half(1, 2);
    for (int j = 0; j < s.t_dim(); ++j) {
        const Polynomial dt = u.derivative(s.x_dim() + j);
        const IntMatrix& field = s.U[static_cast<std::size_t>(j)];
        for (int b = 0; b < s.x_dim(); ++b)
            if (field(i, b) != 0)
                out += dt.times_variable(b).scaled(half * BigRational(field(i, b)));
    }
    return out;
}

std::string structure_to_json(const HTypeStructure& s, int indent) {
    nlohmann::json doc;
    doc["n"] = s.pair.n;
    doc["m"] = s.pair.m;
    nlohmann::json mats = nlohmann::json::array();
    for (const IntMatrix& u : s.U) {
        nlohmann::json rows = nlohmann::json::array();
        for (Eigen::Index r = 0; r < u.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (Eigen::Index c = 0; c < u.cols(); ++c)
                row.push_back(u(r, c));
            rows.push_back(std::move(row));
        }
        mats.push_back(std::move(rows));
    }
    doc["U"] = std::move(mats);
    return doc.dump(indent);
}

HTypeStructure structure_from_json(const std::string& text) {
    const nlohmann::json doc = nlohmann::json::parse(text);
    HTypeStructure s;
    s.pair = DimPair(doc.at("n").get<int>(), doc.at("m").get<int>());
    const int dim = s.x_dim();
    const auto& mats = doc.at("U");
    if (mats.size() != static_cast<std::size_t>(s.pair.m))
        throw DimensionMismatch("structure_from_json: expected " + std::to_string(s.pair.m) + " matrices");
    for (const auto& rows : mats) {
        if (rows.size() != static_cast<std::size_t>(dim))
            throw DimensionMismatch("structure_from_json: matrix has the wrong number of rows");
        IntMatrix u(dim, dim);
        for (int r = 0; r < dim; ++r) {
            const auto& row = rows.at(static_cast<std::size_t>(r));
            if (row.size() != static_cast<std::size_t>(dim))
                throw DimensionMismatch("structure_from_json: row has the wrong length");
            for (int c = 0; c < dim; ++c)
                u(r, c) = row.at(static_cast<std::size_t>(c)).get<int>();
        }
        s.U.push_back(std::move(u));
    }
    return s;
}

}  // namespace htype
