// Command-line front end: value, table, check, exceptional, htype.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "htype/admissibility.hpp"
#include "htype/algebra.hpp"
#include "htype/constants.hpp"
#include "htype/errors.hpp"
#include "htype/report.hpp"

namespace {

constexpr int kExitFailedCheck = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitInadmissible = 3;

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

template <typename T>
T require(const std::optional<T>& parsed, const std::string& what, const std::string& text) {
    if (!parsed)
        throw htype::DomainError("unknown " + what + " '" + text + "'");
    return *parsed;
}

std::string bracket(const htype::Interval& iv) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "[%.10f, %.10f]", iv.lo, iv.hi);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace htype;

    CLI::App app{"Spectral constants of H-type groups R^{2n} x R^m"};
    app.require_subcommand(1);

    int n = 1, m = 1;
    std::string quantity_name, format_name = "markdown", suite_name = "all", output_path;
    int precision = 4, n_max = 10, m_max = 10;
    double eps = kDefaultEps;
    bool no_timestamp = false, no_shading = false, no_highlight = false;

    auto add_eps = [&](CLI::App* cmd) {
        cmd->add_option("--eps", eps, "Relative series tolerance")->check(CLI::PositiveNumber);
    };

    CLI::App* value = app.add_subcommand("value", "One constant with its certified error bound");
    value->add_option("n", n)->required()->check(CLI::PositiveNumber);
    value->add_option("m", m)->required()->check(CLI::PositiveNumber);
    value->add_option("quantity", quantity_name, "gamma_tilde|gamma_bar|sobolev|weyl|c_series")->required();
    value->add_option("--precision", precision)->check(CLI::Range(1, 12));
    add_eps(value);

    CLI::App* table = app.add_subcommand("table", "Table of a constant over 1 <= n <= n_max, 1 <= m <= m_max");
    table->add_option("quantity", quantity_name)->required();
    table->add_option("--format", format_name, "markdown|csv|json|latex");
    table->add_option("--precision", precision)->check(CLI::Range(1, 12));
    table->add_option("--n-max", n_max)->check(CLI::Range(1, 30));
    table->add_option("--m-max", m_max)->check(CLI::Range(1, 30));
    table->add_flag("--no-shading", no_shading, "Do not mark inadmissible pairs");
    table->add_flag("--no-highlight", no_highlight, "Do not mark values above 1");
    add_eps(table);

    CLI::App* check = app.add_subcommand("check", "Run a check suite; JSON on stdout, summary on stderr");
    check->add_option("suite", suite_name, "tables|consistency|monotonicity|admissibility|algebra|all");
    check->add_flag("--no-timestamp", no_timestamp);
    add_eps(check);

    CLI::App* exceptional = app.add_subcommand("exceptional", "Admissible pairs with certified gamma~ >= 1");
    exceptional->add_option("--n-max", n_max)->check(CLI::PositiveNumber);
    exceptional->add_option("--m-max", m_max)->check(CLI::PositiveNumber);
    add_eps(exceptional);

    CLI::App* htype_cmd = app.add_subcommand("htype", "Write an explicit H-type structure as JSON");
    htype_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
    htype_cmd->add_option("m", m)->required()->check(CLI::PositiveNumber);
    htype_cmd->add_option("-o,--output", output_path, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitBadArguments;
    }

    try {
        if (value->parsed()) {
            const Quantity q = require(parse_quantity(quantity_name), "quantity", quantity_name);
            const TableCell cell = compute_cell(q, DimPair(n, m), eps);
            std::cout << format_cell(cell, precision);
            if (cell.exact)
                std::cout << " (= " << cell.exact->to_string() << ")";
            if (!cell.admissible)
                std::cout << " [inadmissible: no H-type group]";
            char buf[64];
            std::snprintf(buf, sizeof buf, "\nerror_bound %.3e\n", cell.error_bound);
            std::cout << buf;
            return 0;
        }

        if (table->parsed()) {
            TableSpec spec;
            spec.quantity = require(parse_quantity(quantity_name), "quantity", quantity_name);
            spec.format = require(parse_format(format_name), "format", format_name);
            spec.precision = precision;
            spec.n_max = n_max;
            spec.m_max = m_max;
            spec.shading = !no_shading;
            spec.highlight = !no_highlight;
            spec.eps = eps;
            spec.validate();
            std::cout << render_table(spec);
            return 0;
        }

        if (check->parsed()) {
            const CheckSuite suite = require(parse_suite(suite_name), "suite", suite_name);
            const CheckReport report = run_checks(suite, eps);
            std::cout << report.to_json(no_timestamp ? std::string() : utc_timestamp());
            std::cerr << report.summary();
            return report.passed() ? 0 : kExitFailedCheck;
        }

        if (exceptional->parsed()) {
            const ExceptionalSet set = exceptional_set(n_max, m_max, eps);
            // listed by centre dimension first
            auto ordered = set.exceptional;
            std::stable_sort(ordered.begin(), ordered.end(), [](const ClassifiedPair& a, const ClassifiedPair& b) {
                return std::make_pair(a.pair.m, a.pair.n) < std::make_pair(b.pair.m, b.pair.n);
            });
            std::string line;
            for (const ClassifiedPair& p : ordered)
                line += (line.empty() ? "" : " ") + std::string("(") + std::to_string(p.pair.n) + "," +
                        std::to_string(p.pair.m) + ")";
            std::cout << line << '\n';
            for (const ClassifiedPair& p : ordered)
                std::cout << "(" << p.pair.n << "," << p.pair.m << ") gamma~ in " << bracket(p.gamma_tilde) << '\n';
            for (const ClassifiedPair& p : set.uncertain)
                std::cout << "uncertain (" << p.pair.n << "," << p.pair.m << ") gamma~ in " << bracket(p.gamma_tilde)
                          << '\n';
            return 0;
        }

        if (htype_cmd->parsed()) {
            const DimPair pair(n, m);
            HTypeStructure s;
            try {
                s = construct(pair);
            } catch (const ConstructionImpossible& e) {
                const AdmissibilityVerdict v = admissible(pair);
                std::cerr << "no H-type group for (n, m) = (" << n << ", " << m << "): rho(" << 2 * n
                          << ") = " << e.radon_hurwitz_number() << ", so m <= " << v.max_m << '\n';
                return kExitInadmissible;
            }
            if (!verify_axioms(s).ok()) {
                std::cerr << "internal error: constructed structure fails the axioms\n";
                return kExitFailedCheck;
            }
            const std::string text = structure_to_json(s) + "\n";
            if (output_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(output_path);
                out << text;
                if (!out) {
                    std::cerr << "cannot write " << output_path << '\n';
                    return kExitBadArguments;
                }
            }
            return 0;
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArguments;
    } catch (const PrecisionUnreachable& e) {
        std::cerr << "error: " << e.what() << " (best bound " << e.best_bound() << ")\n";
        return kExitBadArguments;
    }
    return kExitBadArguments;
}
