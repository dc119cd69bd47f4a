#include "xjac/app/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace xjac::app {

void Table::add(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("row has " + std::to_string(row.size()) + " cells, table has " +
                               std::to_string(columns.size()) + " columns");
    }
    rows.push_back(std::move(row));
}

std::string format_double(double x) {
    if (x == 0.0) return "0";  // also folds -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

struct CsvCell {
    std::string operator()(std::uint64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(const std::string& v) const { return csv_escape(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
};

}  // namespace

void write_csv(std::ostream& os, const Table& t) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << std::visit(CsvCell{}, row[i]);
        os << '\n';
    }
}

void write_json(std::ostream& os, const Table& t, const std::string& command) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["schema"] = kSchemaVersion;
    doc["command"] = command;
    doc["rows"] = ordered_json::array();
    for (const auto& row : t.rows) {
        ordered_json obj = ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit(
                [&](const auto& v) {
                    using V = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<V, double>) {
                        // Same 12 significant digits as the CSV, so both formats agree.
                        obj[t.columns[i]] = std::stod(format_double(v));
                    } else {
                        obj[t.columns[i]] = v;
                    }
                },
                row[i]);
        }
        doc["rows"].push_back(std::move(obj));
    }
    os << doc.dump(2) << '\n';
}

ReportRow make_report_row(const std::string& experiment, const SDReport& r, std::uint64_t jacobian_order) {
    ReportRow row;
    row.experiment = experiment;
    row.p = r.p;
    row.n = r.n;
    row.q = r.q;
    row.f = r.curve;
    row.jacobian_order = jacobian_order;
    row.extractor = to_string(r.extractor);
    row.k = r.k;
    row.sd = r.sd;
    row.col = r.col;
    row.bound_thm1 = r.bound_thm1;
    row.bound_lemma_sk = r.bound_lemma_sk;
    row.envelope = r.envelope;
    row.ratio_thm1 = r.bound_thm1 > 0 ? r.sd / r.bound_thm1 : 0.0;
    row.sd_sqrt_q = r.sd * std::sqrt(static_cast<double>(r.q));
    row.col_sd_relation = r.relation_holds;
    row.status = r.relation_holds && r.within_envelope ? "pass" : "fail";
    return row;
}

Table sd_table(const std::vector<ReportRow>& rows) {
    Table t;
    t.columns = {"schema",   "experiment", "p",          "n",     "q",          "f",
                 "jacobian_order", "extractor", "k",     "sd",    "col",        "bound_thm1",
                 "bound_lemma_sk", "envelope",  "ratio_thm1", "sd_sqrt_q", "col_sd_relation", "samples",
                 "seed",     "runtime_ms", "status"};
    for (const auto& r : rows) {
        t.add({std::uint64_t{kSchemaVersion}, r.experiment, r.p, std::uint64_t{r.n}, r.q, r.f, r.jacobian_order,
               r.extractor, std::uint64_t{r.k}, r.sd, r.col, r.bound_thm1, r.bound_lemma_sk, r.envelope,
               r.ratio_thm1, r.sd_sqrt_q, r.col_sd_relation, r.samples, r.seed, r.runtime_ms, r.status});
    }
    return t;
}

}  // namespace xjac::app
