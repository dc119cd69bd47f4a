#ifndef XJAC_APP_REPORT_HPP
#define XJAC_APP_REPORT_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "xjac/stats.hpp"

namespace xjac::app {

inline constexpr int kSchemaVersion = 1;

using Cell = std::variant<std::uint64_t, double, std::string, bool>;

/// Column-ordered rows. Every row starts with schema and experiment.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row);
};

/// Floats with 12 significant digits; strings quoted when they contain a
/// comma or quote.
void write_csv(std::ostream& os, const Table& t);
/// {"schema": 1, "command": ..., "rows": [{column: value, ...}, ...]}.
void write_json(std::ostream& os, const Table& t, const std::string& command);

std::string format_double(double x);

/// Extractor measurement row.
struct ReportRow {
    std::string experiment;
    std::uint64_t p = 0;
    std::size_t n = 0;
    std::uint64_t q = 0;
    std::string f;
    std::uint64_t jacobian_order = 0;
    std::string extractor;
    std::size_t k = 0;
    double sd = 0.0;
    double col = 0.0;
    double bound_thm1 = 0.0;
    double bound_lemma_sk = 0.0;
    double envelope = 0.0;
    double ratio_thm1 = 0.0;
    double sd_sqrt_q = 0.0;
    bool col_sd_relation = false;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t runtime_ms = 0;
    /// pass, fail (outside envelope or relation broken), budget_exceeded, summary
    std::string status;
};

ReportRow make_report_row(const std::string& experiment, const SDReport& r, std::uint64_t jacobian_order);

Table sd_table(const std::vector<ReportRow>& rows);

}  // namespace xjac::app

#endif  // XJAC_APP_REPORT_HPP
