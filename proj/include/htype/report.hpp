#pragma once

// Table rendering, reference tables and the aggregated check suites behind the CLI.

#include <optional>
#include <string>
#include <vector>

#include "htype/constants.hpp"
#include "htype/numerics.hpp"

namespace htype {

enum class Quantity { gamma_tilde, gamma_bar, sobolev, weyl, c_series };
enum class TableFormat { markdown, csv, json, latex };

std::optional<Quantity> parse_quantity(const std::string& name);
std::string to_string(Quantity q);
std::optional<TableFormat> parse_format(const std::string& name);

struct TableSpec {
    Quantity quantity = Quantity::gamma_tilde;
    int n_max = 10;
    int m_max = 10;
    TableFormat format = TableFormat::markdown;
    int precision = 4;
    bool shading = true;    ///< mark inadmissible pairs
    bool highlight = true;  ///< mark values above 1
    double eps = kDefaultEps;

    /// Throws DomainError on out-of-range fields (precision 1..12, bounds 1..30).
    void validate() const;
};

struct TableCell {
    int n = 0;
    int m = 0;
    double value = 0.0;
    double error_bound = 0.0;
    bool admissible = false;
    std::optional<BigRational> exact;

    bool exceeds_one() const { return exact ? *exact > BigRational(1) : value > 1.0; }
};

/// One value of `quantity` with its certified error bound.
TableCell compute_cell(Quantity quantity, DimPair pair, double eps = kDefaultEps);

/// Row-major (n outer, m inner).
std::vector<TableCell> compute_table(const TableSpec& spec);

/// Rounds half away from zero; exact cells are rounded from the rational value.
std::string format_cell(const TableCell& cell, int precision);
/// Exact decimal rounding of a binary64 value, half away from zero.
std::string format_decimal(double value, int precision);

std::string render_table(const TableSpec& spec, const std::vector<TableCell>& cells);
std::string render_table(const TableSpec& spec);

/// Reference 4-decimal tables for n, m = 1..10 as printed, row-major.
struct ReferenceTable {
    Quantity quantity;
    std::vector<std::string> cells;        ///< 100 entries, "n/m"-major
    std::vector<std::pair<int, int>> red;  ///< highlighted (n, m)
};
const ReferenceTable& reference_table(Quantity q);  // gamma_tilde or gamma_bar only
/// Shaded (inadmissible) cells of the reference layout as (n, m).
const std::vector<std::pair<int, int>>& reference_shaded_cells();

struct CellComparison {
    int n = 0;
    int m = 0;
    std::string printed;
    std::string computed;  ///< rounded to 4 decimals
    double value = 0.0;
    double deviation = 0.0;  ///< |value - printed|
    bool matches = false;    ///< deviation <= 5e-5 and identical rounding
};

std::vector<CellComparison> compare_with_reference(Quantity q, double eps = kDefaultEps);

enum class CheckSuite { tables, consistency, monotonicity, admissibility, algebra, all };
std::optional<CheckSuite> parse_suite(const std::string& name);

struct CheckItem {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckItem> items;
    bool passed() const;
    /// Deterministic JSON; a timestamp field is added only when `timestamp` is non-empty.
    std::string to_json(const std::string& timestamp = {}) const;
    std::string summary() const;
};

CheckReport run_checks(CheckSuite suite, double eps = kDefaultEps);

}  // namespace htype
