#include "htype/report.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "htype/admissibility.hpp"
#include "htype/algebra.hpp"
#include "htype/errors.hpp"
#include "htype/monotonicity.hpp"

namespace htype {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCellTolerance = 5e-5;

struct NamedQuantity {
    Quantity q;
    const char* name;
};

constexpr NamedQuantity kQuantities[] = {
    {Quantity::gamma_tilde, "gamma_tilde"}, {Quantity::gamma_bar, "gamma_bar"},
    {Quantity::sobolev, "sobolev"},         {Quantity::weyl, "weyl"},
    {Quantity::c_series, "c_series"},
};

std::string scientific(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

std::size_t index_of(int n, int m) { return static_cast<std::size_t>((n - 1) * 10 + (m - 1)); }

// Grey cells are never red in the published layout.
bool highlighted(const TableCell& cell) { return cell.admissible && cell.exceeds_one(); }

}  // namespace

std::optional<Quantity> parse_quantity(const std::string& name) {
    for (const auto& [q, text] : kQuantities)
        if (name == text)
            return q;
    return std::nullopt;
}

std::string to_string(Quantity q) {
    for (const auto& [value, text] : kQuantities)
        if (value == q)
            return text;
    return "unknown";
}

std::optional<TableFormat> parse_format(const std::string& name) {
    if (name == "markdown") return TableFormat::markdown;
    if (name == "csv") return TableFormat::csv;
    if (name == "json") return TableFormat::json;
    if (name == "latex") return TableFormat::latex;
    return std::nullopt;
}

void TableSpec::validate() const {
    if (precision < 1 || precision > 12)
        throw DomainError("precision must lie in 1..12");
    if (n_max < 1 || n_max > 30 || m_max < 1 || m_max > 30)
        throw DomainError("n_max and m_max must lie in 1..30");
    if (!(eps > 0.0) || eps >= 1.0)
        throw DomainError("eps must lie in (0, 1)");
}

TableCell compute_cell(Quantity quantity, DimPair pair, double eps) {
    TableCell cell;
    cell.n = pair.n;
    cell.m = pair.m;
    cell.admissible = admissible(pair).admissible;
    switch (quantity) {
    case Quantity::gamma_tilde: {
        const SeriesValue c = c_series(pair, eps);
        cell.value = gamma_tilde(pair, c);
        const Interval iv = gamma_tilde_interval(pair, c);
        cell.error_bound = std::max(iv.hi - cell.value, cell.value - iv.lo);
        break;
    }
    case Quantity::gamma_bar:
        cell.exact = gamma_bar_exact(pair);
        cell.value = cell.exact->to_double();
        cell.error_bound = std::abs(cell.value) * DBL_EPSILON;
        break;
    case Quantity::sobolev:
        cell.value = sobolev_constant(pair);
        cell.error_bound = cell.value * kFactorSlack;
        break;
    case Quantity::weyl: {
        const SeriesValue c = c_series(pair, eps);
        cell.value = weyl_constant(pair, c);
        cell.error_bound = cell.value * (c.radius() / c.lower() + kFactorSlack);
        break;
    }
    case Quantity::c_series: {
        const SeriesValue c = c_series(pair, eps);
        cell.value = c.estimate();
        cell.error_bound = c.radius();
        break;
    }
    }
    return cell;
}

std::vector<TableCell> compute_table(const TableSpec& spec) {
    spec.validate();
    std::vector<TableCell> cells;
    cells.reserve(static_cast<std::size_t>(spec.n_max * spec.m_max));
    for (int n = 1; n <= spec.n_max; ++n)
        for (int m = 1; m <= spec.m_max; ++m)
            cells.push_back(compute_cell(spec.quantity, DimPair(n, m), spec.eps));
    return cells;
}

std::string format_decimal(double value, int precision) {
    if (!std::isfinite(value))
        throw DomainError("format_decimal: value is not finite");
    return BigRational(mpq_class(value)).to_decimal(precision);
}

std::string format_cell(const TableCell& cell, int precision) {
    return cell.exact ? cell.exact->to_decimal(precision) : format_decimal(cell.value, precision);
}

namespace {

std::string title(Quantity q) {
    switch (q) {
    case Quantity::gamma_tilde: return "gamma~(n, m)";
    case Quantity::gamma_bar: return "gamma-(n, m)";
    case Quantity::sobolev: return "C_Sob(n, m)";
    case Quantity::weyl: return "W(n, m)";
    case Quantity::c_series: return "c(n, m)";
    }
    return "";
}

std::string render_markdown(const TableSpec& spec, const std::vector<TableCell>& cells) {
    std::ostringstream out;
    out << "| n \\ m |";
    for (int m = 1; m <= spec.m_max; ++m)
        out << ' ' << m << " |";
    out << "\n|---|";
    for (int m = 1; m <= spec.m_max; ++m)
        out << "---:|";
    out << '\n';
    for (int n = 1; n <= spec.n_max; ++n) {
        out << "| " << n << " |";
        for (int m = 1; m <= spec.m_max; ++m) {
            const TableCell& cell = cells[static_cast<std::size_t>((n - 1) * spec.m_max + (m - 1))];
            std::string text = format_cell(cell, spec.precision);
            if (spec.highlight && highlighted(cell))
                text = "**" + text + "**";
            if (spec.shading && !cell.admissible)
                text = "[" + text + "]";
            out << ' ' << text << " |";
        }
        out << '\n';
    }
    out << "\n" << title(spec.quantity) << ".";
    if (spec.highlight)
        out << " Bold: admissible pair with value greater than 1.";
    if (spec.shading)
        out << " [brackets]: inadmissible pair, no H-type group.";
    out << '\n';
    return out.str();
}

std::string render_csv(const TableSpec& spec, const std::vector<TableCell>& cells) {
    std::ostringstream out;
    out << "n,m,value,error_bound,admissible\n";
    for (const TableCell& cell : cells)
        out << cell.n << ',' << cell.m << ',' << format_cell(cell, spec.precision) << ','
            << scientific(cell.error_bound) << ',' << (cell.admissible ? "true" : "false") << '\n';
    return out.str();
}

std::string render_json(const TableSpec& spec, const std::vector<TableCell>& cells) {
    nlohmann::json doc;
    doc["quantity"] = to_string(spec.quantity);
    doc["n_max"] = spec.n_max;
    doc["m_max"] = spec.m_max;
    doc["precision"] = spec.precision;
    doc["eps"] = spec.eps;
    nlohmann::json rows = nlohmann::json::array();
    for (const TableCell& cell : cells) {
        nlohmann::json row;
        row["n"] = cell.n;
        row["m"] = cell.m;
        row["value"] = cell.value;
        row["display"] = format_cell(cell, spec.precision);
        row["error_bound"] = cell.error_bound;
        row["admissible"] = cell.admissible;
        row["exceeds_one"] = cell.exceeds_one();
        row["highlight"] = highlighted(cell);
        if (cell.exact)
            row["exact"] = cell.exact->to_string();
        rows.push_back(std::move(row));
    }
    doc["cells"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string render_latex(const TableSpec& spec, const std::vector<TableCell>& cells) {
    std::ostringstream out;
    out << "% needs \\usepackage[table]{xcolor}\n";
    out << "\\begin{tabular}{c|" << std::string(static_cast<std::size_t>(spec.m_max), 'c') << "}\n";
    out << "$n \\backslash m$";
    for (int m = 1; m <= spec.m_max; ++m)
        out << " & " << m;
    out << " \\\\\n\\hline\n";
    for (int n = 1; n <= spec.n_max; ++n) {
        out << n;
        for (int m = 1; m <= spec.m_max; ++m) {
            const TableCell& cell = cells[static_cast<std::size_t>((n - 1) * spec.m_max + (m - 1))];
            std::string text = format_cell(cell, spec.precision);
            if (spec.highlight && highlighted(cell))
                text = "\\textcolor{red}{" + text + "}";
            if (spec.shading && !cell.admissible)
                text = "\\cellcolor{gray!50}" + text;
            out << " & " << text;
        }
        out << " \\\\\n";
    }
    out << "\\end{tabular}\n";
    return out.str();
}

}  // namespace

std::string render_table(const TableSpec& spec, const std::vector<TableCell>& cells) {
    spec.validate();
    if (cells.size() != static_cast<std::size_t>(spec.n_max * spec.m_max))
        throw DimensionMismatch("render_table: cell count does not match the table spec");
    switch (spec.format) {
    case TableFormat::markdown: return render_markdown(spec, cells);
    case TableFormat::csv: return render_csv(spec, cells);
    case TableFormat::json: return render_json(spec, cells);
    case TableFormat::latex: return render_latex(spec, cells);
    }
    return {};
}

std::string render_table(const TableSpec& spec) { return render_table(spec, compute_table(spec)); }

std::vector<CellComparison> compare_with_reference(Quantity q, double eps) {
    const ReferenceTable& ref = reference_table(q);
    std::vector<CellComparison> out;
    for (int n = 1; n <= 10; ++n) {
        for (int m = 1; m <= 10; ++m) {
            const TableCell cell = compute_cell(q, DimPair(n, m), eps);
            CellComparison c;
            c.n = n;
            c.m = m;
            c.printed = ref.cells[index_of(n, m)];
            c.computed = format_cell(cell, 4);
            c.value = cell.value;
            c.deviation = std::abs(cell.value - std::stod(c.printed));
            c.matches = c.deviation <= kCellTolerance && c.computed == c.printed;
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::optional<CheckSuite> parse_suite(const std::string& name) {
    if (name == "tables") return CheckSuite::tables;
    if (name == "consistency") return CheckSuite::consistency;
    if (name == "monotonicity") return CheckSuite::monotonicity;
    if (name == "admissibility") return CheckSuite::admissibility;
    if (name == "algebra") return CheckSuite::algebra;
    if (name == "all") return CheckSuite::all;
    return std::nullopt;
}

bool CheckReport::passed() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.passed; });
}

std::string CheckReport::to_json(const std::string& timestamp) const {
    nlohmann::json doc;
    doc["passed"] = passed();
    if (!timestamp.empty())
        doc["timestamp"] = timestamp;
    nlohmann::json list = nlohmann::json::array();
    for (const CheckItem& item : items)
        list.push_back({{"suite", item.suite}, {"name", item.name}, {"passed", item.passed}, {"detail", item.detail}});
    doc["checks"] = std::move(list);
    return doc.dump(2) + "\n";
}

std::string CheckReport::summary() const {
    std::ostringstream out;
    std::size_t ok = 0;
    for (const CheckItem& item : items) {
        ok += item.passed ? 1 : 0;
        out << (item.passed ? "PASS " : "FAIL ") << item.suite << '/' << item.name;
        if (!item.detail.empty())
            out << "  " << item.detail;
        out << '\n';
    }
    out << ok << '/' << items.size() << " checks passed\n";
    return out.str();
}

namespace {

using Items = std::vector<CheckItem>;

void add(Items& items, const char* suite, std::string name, bool passed, std::string detail = {}) {
    items.push_back({suite, std::move(name), passed, std::move(detail)});
}

double relative(double a, double b) { return std::abs(a - b) / std::abs(b); }

void table_checks(Items& items, double eps) {
    for (Quantity q : {Quantity::gamma_tilde, Quantity::gamma_bar}) {
        const ReferenceTable& ref = reference_table(q);
        const std::vector<CellComparison> cmp = compare_with_reference(q, eps);
        std::string detail;
        std::size_t matched = 0;
        for (const CellComparison& c : cmp) {
            if (c.matches) {
                ++matched;
                continue;
            }
            char buf[160];
            std::snprintf(buf, sizeof buf, " (%d,%d) printed %s, computed %.6f (deviation %.2e)", c.n, c.m,
                          c.printed.c_str(), c.value, c.deviation);
            detail += buf;
        }
        add(items, "tables", to_string(q) + "_cells", matched == cmp.size(),
            std::to_string(matched) + "/" + std::to_string(cmp.size()) + " cells match" + detail);

        std::set<std::pair<int, int>> red(ref.red.begin(), ref.red.end());
        std::string red_detail;
        for (const CellComparison& c : cmp) {
            const bool expected = red.count({c.n, c.m}) > 0;
            if (highlighted(compute_cell(q, DimPair(c.n, c.m), eps)) != expected)
                red_detail += " (" + std::to_string(c.n) + "," + std::to_string(c.m) + ")";
        }
        add(items, "tables", to_string(q) + "_highlight", red_detail.empty(),
            red_detail.empty() ? "red cells match" : "mismatched:" + red_detail);
    }

    const std::set<std::pair<int, int>> grey(reference_shaded_cells().begin(), reference_shaded_cells().end());
    const auto mask = shading_mask(10, 10);
    std::string detail;
    for (int n = 1; n <= 10; ++n)
        for (int m = 1; m <= 10; ++m) {
            const bool shaded = !mask[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(m - 1)];
            if (shaded != (grey.count({n, m}) > 0))
                detail += " (" + std::to_string(n) + "," + std::to_string(m) + ")";
        }
    add(items, "tables", "shading", detail.empty(), detail.empty() ? "grey cells match" : "mismatched:" + detail);
}

void consistency_checks(Items& items, double eps) {
    double worst = 0.0;
    for (int n = 1; n <= 10; ++n)
        for (int m = 1; m <= 10; ++m) {
            const DimPair pair(n, m);
            const SeriesValue c = c_series(pair, eps);
            worst = std::max(worst, relative(gamma_tilde_product_form(pair, c), gamma_tilde(pair, c)));
        }
    add(items, "consistency", "closed_vs_product_form", worst <= 1e-8, "max relative difference " + scientific(worst));

    // c_{1,m} = (1 - 2^{-(m+1)}) zeta(m+1); c_{2,m} = zeta(m+1) / 2^{m+2}
    worst = 0.0;
    for (int m = 1; m <= 10; ++m) {
        const double z = zeta(m + 1);
        worst = std::max(worst, relative(c_series(DimPair(1, m), 1e-12).estimate(),
                                         (1.0 - std::ldexp(1.0, -(m + 1))) * z));
        worst = std::max(worst, relative(c_series(DimPair(2, m), 1e-12).estimate(), std::ldexp(z, -(m + 2))));
    }
    add(items, "consistency", "c_series_vs_zeta", worst <= 1e-10, "max relative difference " + scientific(worst));

    const double heisenberg = gamma_tilde(DimPair(1, 1), 1e-12);
    add(items, "consistency", "gamma_tilde_1_1_is_32_over_pi2", std::abs(heisenberg - 32.0 / (kPi * kPi)) <= 1e-10,
        "gamma~(1,1) = " + format_decimal(heisenberg, 12));

    worst = 0.0;
    for (int n = 1; n <= 10; ++n)
        for (int m = 1; m <= 10; ++m) {
            const DimPair pair(n, m);
            worst = std::max(worst, relative(gamma_bar(pair), gamma_bar_exact(pair).to_double()));
        }
    add(items, "consistency", "gamma_bar_log_vs_exact", worst <= 1e-12, "max relative difference " + scientific(worst));

    const BigRational g42 = gamma_bar_exact(DimPair(4, 2));
    const BigRational g23 = gamma_bar_exact(DimPair(2, 3));
    add(items, "consistency", "rational_checkpoints",
        g42 == BigRational(2268, 3125) && g23 == BigRational(15, 16),
        "gamma-(4,2) = " + g42.to_string() + ", gamma-(2,3) = " + g23.to_string());

    worst = 0.0;
    for (const DimPair pair : {DimPair(1, 1), DimPair(2, 2), DimPair(3, 1)}) {
        const double w = weyl_constant(pair, 1e-12);
        for (double lambda : {0.5, 1.0, 2.0}) {
            const WeylDensity dens = weyl_density_bruteforce(pair, lambda, 8);
            worst = std::max(worst, relative(dens.value / std::pow(lambda, pair.degree()), w));
        }
    }
    add(items, "consistency", "weyl_density_vs_constant", worst <= 1e-7, "max relative difference " + scientific(worst));

    const ExceptionalSet ex = exceptional_set(10, 10, eps);
    std::string listed;
    std::vector<DimPair> found;
    for (const ClassifiedPair& p : ex.exceptional) {
        listed += " (" + std::to_string(p.pair.n) + "," + std::to_string(p.pair.m) + ")";
        found.push_back(p.pair);
    }
    const std::vector<DimPair> expected{DimPair(1, 1), DimPair(2, 1), DimPair(2, 2), DimPair(3, 1)};
    add(items, "consistency", "exceptional_set", found == expected && ex.uncertain.empty(),
        "exceptional:" + listed + ", uncertain: " + std::to_string(ex.uncertain.size()));
}

void monotonicity_checks(Items& items) {
    for (const InequalityReport& r : inequality_suite()) {
        char buf[200];
        std::snprintf(buf, sizeof buf, "max %.6g vs threshold %.6g on %s%s", r.max_observed, r.threshold,
                      r.domain_scanned.c_str(), r.empirical ? " [empirical, not proved]" : "");
        add(items, "monotonicity", r.name, r.passed, buf);
    }
}

void admissibility_checks(Items& items) {
    const std::set<std::pair<int, int>> grey(reference_shaded_cells().begin(), reference_shaded_cells().end());
    const auto mask = shading_mask(10, 10);
    std::size_t agree = 0;
    for (int n = 1; n <= 10; ++n)
        for (int m = 1; m <= 10; ++m)
            agree += (!mask[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(m - 1)]) ==
                     (grey.count({n, m}) > 0);
    add(items, "admissibility", "shading_mask", agree == 100, std::to_string(agree) + "/100 cells agree");

    // n = 1, 3: Heisenberg only; n = 2: m <= 3
    const bool special = admissible(DimPair(1, 1)).max_m == 1 && admissible(DimPair(2, 1)).max_m == 3 &&
                         admissible(DimPair(3, 1)).max_m == 1;
    add(items, "admissibility", "special_cases_n_1_2_3", special, "max m for n = 1, 2, 3: 1, 3, 1");

    bool periodic = true;
    for (long N = 1; N <= 1024; ++N) {
        long odd = N;
        while (odd % 2 == 0)
            odd /= 2;
        periodic = periodic && radon_hurwitz(N) == radon_hurwitz(N / odd) && (N % 2 == 0 || radon_hurwitz(N) == 1);
        if (N * 16 <= 1024)
            periodic = periodic && radon_hurwitz(16 * N) == radon_hurwitz(N) + 8;
    }
    add(items, "admissibility", "radon_hurwitz_structure", periodic, "N <= 1024");
}

void algebra_checks(Items& items) {
    std::mt19937_64 rng(20240901);
    std::uniform_int_distribution<long> small(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    auto rational = [&] { return BigRational(small(rng), den(rng)); };

    std::size_t structures = 0;
    std::string failures;
    bool associative = true;
    double jz_error = 0.0;
    bool sublaplacian = true;
    std::normal_distribution<double> gauss;
    for (int n = 1; n <= 8; ++n) {
        for (int m = 1; m <= admissible(DimPair(n, 1)).max_m; ++m) {
            const HTypeStructure s = construct(DimPair(n, m));
            ++structures;
            if (!verify_axioms(s).ok())
                failures += " (" + std::to_string(n) + "," + std::to_string(m) + ")";

            auto element = [&] {
                GroupElement<BigRational> g = group_identity<BigRational>(s);
                for (auto& v : g.x) v = rational();
                for (auto& v : g.t) v = rational();
                return g;
            };
            for (int trial = 0; trial < 20; ++trial) {
                const auto a = element(), b = element(), c = element();
                associative = associative && group_mul(s, group_mul(s, a, b), c) == group_mul(s, a, group_mul(s, b, c));
                associative = associative && group_mul(s, a, group_inverse(a)) == group_identity<BigRational>(s);
            }

            for (int trial = 0; trial < 5; ++trial) {
                std::vector<double> z(static_cast<std::size_t>(m));
                double norm = 0.0;
                for (auto& v : z) {
                    v = gauss(rng);
                    norm += v * v;
                }
                for (auto& v : z) v /= std::sqrt(norm);
                const Eigen::MatrixXd J = jz_map(s, z);
                const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(J.rows(), J.cols());
                jz_error = std::max(jz_error, (J.transpose() * J - I).cwiseAbs().maxCoeff());
            }

            if (n <= 4) {
                // u = x_0^2 t_0^2 + x_0 x_last t_last + t_0^3
                const int vars = s.x_dim() + s.t_dim();
                auto exps = [&](std::initializer_list<std::pair<int, int>> powers) {
                    Polynomial::Exponents e(static_cast<std::size_t>(vars), 0);
                    for (auto [v, p] : powers) e[static_cast<std::size_t>(v)] += p;
                    return e;
                };
                const int t0 = s.x_dim();
                const int tl = vars - 1;
                const Polynomial u = Polynomial::monomial(vars, exps({{0, 2}, {t0, 2}})) +
                                     Polynomial::monomial(vars, exps({{0, 1}, {s.x_dim() - 1, 1}, {tl, 1}})) +
                                     Polynomial::monomial(vars, exps({{t0, 3}}), BigRational(2, 3));
                Polynomial fields(vars);
                for (int i = 0; i < s.x_dim(); ++i)
                    fields += apply_horizontal_field(s, i, apply_horizontal_field(s, i, u));
                sublaplacian = sublaplacian && fields == sublaplacian_coefficients(s).apply(u);
            }
        }
    }
    add(items, "algebra", "axioms_2n_le_16", failures.empty(),
        std::to_string(structures) + " structures" + (failures.empty() ? "" : ", failing:" + failures));
    add(items, "algebra", "group_associativity", associative, "exact rational arithmetic");
    add(items, "algebra", "jz_orthogonal", jz_error <= 1e-12, "max entry error " + scientific(jz_error));
    add(items, "algebra", "sublaplacian_sum_of_squares", sublaplacian, "n <= 4");

    bool refused = false;
    try {
        construct(DimPair(2, 4));
    } catch (const ConstructionImpossible& e) {
        refused = e.radon_hurwitz_number() == 4;
    }
    add(items, "algebra", "construct_refuses_2_4", refused, "rho(4) = 4");
}

}  // namespace

CheckReport run_checks(CheckSuite suite, double eps) {
    CheckReport report;
    const bool all = suite == CheckSuite::all;
    if (all || suite == CheckSuite::tables) table_checks(report.items, eps);
    if (all || suite == CheckSuite::consistency) consistency_checks(report.items, eps);
    if (all || suite == CheckSuite::monotonicity) monotonicity_checks(report.items);
    if (all || suite == CheckSuite::admissibility) admissibility_checks(report.items);
    if (all || suite == CheckSuite::algebra) algebra_checks(report.items);
    return report;
}

}  // namespace htype
