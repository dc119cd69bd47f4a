#include "xjac/app/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <sstream>

#include "xjac/app/cache.hpp"
#include "xjac/charsum.hpp"
#include "xjac/extractors.hpp"
#include "xjac/stats.hpp"

namespace xjac::app {

namespace {

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorCode::ConfigError, msg); }

class Stopwatch {
   public:
    explicit Stopwatch(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}

    // 0 unless timing was requested, so reports stay byte-identical across runs.
    std::uint64_t elapsed_ms() const {
        if (!enabled_) return 0;
        const auto d = std::chrono::steady_clock::now() - start_;
        return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(d).count());
    }

   private:
    bool enabled_;
    std::chrono::steady_clock::time_point start_;
};

Curve make_curve(const ExperimentConfig& cfg, std::uint64_t p, std::size_t n, std::uint64_t c_start) {
    const ExtField field = make_field(cfg, p, n);
    return Curve(field, resolve_curve_poly(cfg.f, field, c_start));
}

std::size_t single_k(const ExperimentConfig& cfg) {
    if (cfg.k.size() != 1) config_error("this command takes exactly one --k");
    return cfg.k.front();
}

ExtractorKind single_extractor(const ExperimentConfig& cfg) {
    if (cfg.extractor.size() != 1) config_error("this command takes exactly one --extractor");
    return parse_extractor(cfg.extractor.front());
}

// Extractor preconditions surface as configuration errors.
void check_extractor(const ExtField& field, ExtractorKind kind, std::size_t k) {
    try {
        validate_extractor(field, kind, k);
    } catch (const Error& e) {
        config_error(e.what());
    }
}

bool is_montecarlo(const ExperimentConfig& cfg) {
    if (cfg.mode.empty() || cfg.mode == "exact") return false;
    if (cfg.mode == "montecarlo") {
        if (cfg.samples == 0) config_error("montecarlo mode needs --samples > 0");
        return true;
    }
    config_error("--mode must be exact or montecarlo, got '" + cfg.mode + "'");
}

ReportRow measure(const Curve& c, const JacobianData& data, ExtractorKind kind, std::size_t k,
                  const ExperimentConfig& cfg, bool montecarlo, const std::string& experiment) {
    const Stopwatch watch(cfg.timing);
    const Tally t = montecarlo ? monte_carlo_distribution(c, data.divisors, kind, k, cfg.samples,
                                                          RandomSource(cfg.seed), cfg.jobs)
                               : exact_output_distribution(c, data.divisors, kind, k);
    ReportRow row = make_report_row(experiment, make_sd_report(c, kind, k, t), data.divisors.size());
    if (montecarlo) {
        row.samples = cfg.samples;
        row.seed = cfg.seed;
    } else {
        row.samples = data.divisors.size();
    }
    row.runtime_ms = watch.elapsed_ms();
    return row;
}

struct SpotCheck {
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;

    void expect(bool ok) {
        ++checks;
        if (!ok) ++failures;
    }
};

// Seeded group-law probes over the enumeration.
SpotCheck group_law_spot_checks(const Curve& c, const std::vector<MumfordDivisor>& jac, std::uint64_t seed) {
    SpotCheck s;
    const RandomSource src(seed);
    const std::uint64_t order = jac.size();
    const auto id = MumfordDivisor::identity(c.field());
    for (std::uint64_t i = 0; i < 100; ++i) {
        const auto& a = jac[src.uniform_below(3 * i, order)];
        const auto& b = jac[src.uniform_below(3 * i + 1, order)];
        const auto& d = jac[src.uniform_below(3 * i + 2, order)];
        const auto ab = cantor_add(c, a, b);
        s.expect(is_valid_divisor(c, ab));
        s.expect(ab == cantor_add(c, b, a));
        s.expect(cantor_add(c, ab, d) == cantor_add(c, a, cantor_add(c, b, d)));
        s.expect(cantor_add(c, a, id) == a);
        s.expect(cantor_add(c, a, divisor_neg(c, a)).is_identity());
        s.expect(scalar_mul(c, a, order).is_identity());
    }
    return s;
}

std::string charsum_status(bool ok, const CharSumReport& r) {
    if (!ok) return "fail";
    return r.caveat ? std::string("pass(") + to_string(*r.caveat) + ")" : "pass";
}

Table charsum_table() {
    Table t;
    t.columns = {"schema", "experiment", "p", "n", "q", "params", "magnitude", "bound", "ratio", "status"};
    return t;
}

void add_charsum_row(Table& t, const std::string& mode, const ExtField& field, const CharSumReport& r,
                     bool ok) {
    t.add({std::uint64_t{kSchemaVersion}, "charsum/" + mode, field.characteristic(), std::uint64_t{field.degree()},
           field.order(), r.params, r.magnitude, r.bound, r.ratio, charsum_status(ok, r)});
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (out > limit / base) return limit + 1;
        out *= base;
    }
    return out;
}

}  // namespace

CommandResult cmd_jacobian(const ExperimentConfig& cfg) {
    const Stopwatch watch(cfg.timing);
    const Curve c = make_curve(cfg, single_p(cfg), single_n(cfg), cfg.c.front());
    const JacobianData data = load_or_enumerate(c, cfg.budget, effective_cache_dir(cfg));
    const std::uint64_t order = data.divisors.size();
    const std::uint64_t q = c.field().order();
    const auto [lo, hi] = weil_interval(q);
    const bool weil_ok = static_cast<double>(order) >= lo && static_cast<double>(order) <= hi;
    const SpotCheck spot = group_law_spot_checks(c, data.divisors, cfg.seed);

    CommandResult res;
    res.table.columns = {"schema",      "experiment",    "p",         "n",       "q",
                         "f",           "points",        "jacobian_order", "weil_lo", "weil_hi",
                         "weil_ok",     "q2_plus_q",     "q2_plus_q_plus_1", "spot_checks", "spot_failures",
                         "seed",        "runtime_ms",    "status"};
    const bool ok = weil_ok && spot.failures == 0;
    res.table.add({std::uint64_t{kSchemaVersion}, "jacobian", c.field().characteristic(),
                   std::uint64_t{c.field().degree()}, q, c.f().to_string(), std::uint64_t{data.points.size()}, order,
                   lo, hi, weil_ok, q * q + q, q * q + q + 1, spot.checks, spot.failures, cfg.seed,
                   watch.elapsed_ms(), std::string(ok ? "pass" : "fail")});
    return res;
}

CommandResult cmd_extract_sd(const ExperimentConfig& cfg) {
    const bool montecarlo = is_montecarlo(cfg);
    const ExtField field = make_field(cfg, single_p(cfg), single_n(cfg));
    const ExtractorKind kind = single_extractor(cfg);
    const std::size_t k = single_k(cfg);
    check_extractor(field, kind, k);
    const Curve c(field, resolve_curve_poly(cfg.f, field, cfg.c.front()));
    const JacobianData data = load_or_enumerate(c, cfg.budget, effective_cache_dir(cfg));
    CommandResult res;
    res.table = sd_table(
        {measure(c, data, kind, k, cfg, montecarlo, montecarlo ? "extract-sd/montecarlo" : "extract-sd/exact")});
    return res;
}

CommandResult cmd_charsum(const ExperimentConfig& cfg) {
    CommandResult res;
    res.table = charsum_table();
    Table& t = res.table;
    if (cfg.p.empty() || cfg.n.empty()) config_error("empty parameter list");

    if (cfg.mode == "orthogonality") {
        for (std::uint64_t p : cfg.p) {
            const ExtField fp = ExtField::prime(p);
            const double pd = static_cast<double>(p);
            for (std::uint64_t a = 0; a < p; ++a) {
                CharSumReport r;
                const auto s = orthogonality_sum(p, a);
                const double expected = a == 0 ? pd : 0.0;
                r.magnitude = std::abs(s);
                r.bound = expected;
                r.ratio = expected > 0 ? r.magnitude / expected : 0.0;
                r.params = "a=" + std::to_string(a);
                add_charsum_row(t, cfg.mode, fp, r, std::abs(s - expected) <= 1e-9 * pd);
            }
        }
    } else if (cfg.mode == "mordell") {
        const int d = cfg.degree;
        for (std::uint64_t p : cfg.p) {
            for (std::size_t n : cfg.n) {
                const ExtField field = make_field(cfg, p, n);
                const std::uint64_t q = field.order();
                if (d < 1 || static_cast<std::uint64_t>(d) >= p) {
                    config_error("--degree must lie in [1, p), got " + std::to_string(d));
                }
                // q^d monic polynomials times q - 1 characters, each a q-term sum.
                const std::uint64_t polys = checked_power(q, static_cast<std::uint64_t>(d), cfg.budget);
                if (polys > cfg.budget || polys * (q - 1) > cfg.budget) {
                    throw Error(ErrorCode::BudgetExceeded,
                                "more than " + std::to_string(cfg.budget) + " (polynomial, character) pairs");
                }
                const double sq = std::sqrt(static_cast<double>(q));
                std::vector<std::uint64_t> digits(static_cast<std::size_t>(d), 0);
                for (std::uint64_t idx = 0; idx < polys; ++idx) {
                    std::vector<std::uint64_t> coeffs = digits;
                    coeffs.push_back(1);
                    const Poly P = Poly::from_indices(field, coeffs);
                    for (const auto& a : field.elements()) {
                        if (a.is_zero()) continue;
                        const CharSumReport r = poly_char_sum(field, P, {a});
                        bool ok = r.magnitude <= r.bound + 1e-9 * static_cast<double>(q);
                        if (d == 1) ok = ok && r.magnitude <= 1e-9 * static_cast<double>(q);
                        if (d == 2) ok = ok && std::abs(r.magnitude - sq) <= 1e-6 * sq;
                        add_charsum_row(t, cfg.mode, field, r, ok);
                    }
                    // Next coefficient vector, c0 most significant.
                    for (std::size_t pos = digits.size(); pos-- > 0;) {
                        if (++digits[pos] < q) break;
                        digits[pos] = 0;
                    }
                }
            }
        }
    } else if (cfg.mode == "winterhof") {
        for (std::uint64_t p : cfg.p) {
            for (std::size_t n : cfg.n) {
                const ExtField field = make_field(cfg, p, n);
                if (n >= 20) config_error("winterhof mode enumerates 2^n subgroups; n too large");
                const double q = static_cast<double>(field.order());
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                    const CharSumReport r = winterhof_sum(field, AdditiveSubgroup(mask), cfg.budget);
                    add_charsum_row(t, cfg.mode, field, r, std::abs(r.magnitude - q) <= 1e-6 * q);
                }
            }
        }
    } else if (cfg.mode == "interval") {
        for (std::uint64_t p : cfg.p) {
            const ExtField fp = ExtField::prime(p);
            if (p > cfg.budget / p) throw Error(ErrorCode::BudgetExceeded, "p^2 exceeds budget");
            const std::uint64_t first = cfg.L.value_or(1);
            const std::uint64_t last = cfg.L.value_or(p);
            for (std::uint64_t L = first; L <= last; ++L) {
                const CharSumReport r = interval_char_sum(p, L);
                add_charsum_row(t, cfg.mode, fp, r, r.magnitude <= r.bound);
            }
        }
    } else {
        config_error("--mode must be orthogonality, mordell, winterhof or interval, got '" + cfg.mode + "'");
    }
    if (t.rows.empty()) config_error("no character sums selected");
    return res;
}

CommandResult cmd_sweep(const ExperimentConfig& cfg_in) {
    ExperimentConfig cfg = cfg_in;
    if (!cfg.f) cfg.f = "1,c,0,0,0,1";
    const bool montecarlo = is_montecarlo(cfg);
    if (cfg.p.empty() || cfg.n.empty() || cfg.k.empty() || cfg.extractor.empty()) config_error("empty grid");
    if (cfg.c.size() != 1 && cfg.c.size() != cfg.p.size()) {
        config_error("--c needs one value or one per --p entry");
    }
    std::vector<ExtractorKind> kinds;
    for (const auto& e : cfg.extractor) kinds.push_back(parse_extractor(e));

    // Curves are resolved up front so validation errors abort before heavy work.
    struct Group {
        Curve curve;
        std::optional<JacobianData> data;
        std::string failure;
    };
    std::vector<Group> groups;
    for (std::size_t i = 0; i < cfg.p.size(); ++i) {
        for (std::size_t n : cfg.n) {
            groups.push_back({make_curve(cfg, cfg.p[i], n, cfg.c.size() == 1 ? cfg.c[0] : cfg.c[i]), {}, {}});
        }
    }

    const auto cache_dir = effective_cache_dir(cfg);
    const auto enumerate = [&](Group& g) {
        try {
            g.data = load_or_enumerate(g.curve, cfg.budget, cache_dir);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::BudgetExceeded) throw;
            g.failure = e.what();
        }
    };
    // Groups are independent; results land in their own slots, so row order is grid order.
    for (std::size_t first = 0; first < groups.size(); first += cfg.jobs) {
        std::vector<std::future<void>> running;
        for (std::size_t i = first; i < std::min(groups.size(), first + cfg.jobs); ++i) {
            running.push_back(std::async(cfg.jobs > 1 ? std::launch::async : std::launch::deferred, enumerate,
                                         std::ref(groups[i])));
        }
        for (auto& f : running) f.get();
    }

    CommandResult res;
    std::vector<ReportRow> rows;
    std::size_t skipped = 0;
    ReportRow summary;
    summary.experiment = "summary";
    std::size_t measured = 0;
    for (const auto& g : groups) {
        const ExtField& field = g.curve.field();
        for (auto kind : kinds) {
            for (std::size_t k : cfg.k) {
                try {
                    validate_extractor(field, kind, k);
                } catch (const Error&) {
                    ++skipped;
                    continue;
                }
                if (!g.data) {
                    ReportRow row;
                    row.experiment = "sweep";
                    row.p = field.characteristic();
                    row.n = field.degree();
                    row.q = field.order();
                    row.f = g.curve.f().to_string();
                    row.extractor = to_string(kind);
                    row.k = k;
                    row.status = "budget_exceeded";
                    rows.push_back(row);
                    ++res.warnings;
                    continue;
                }
                ReportRow row = measure(g.curve, *g.data, kind, k, cfg, montecarlo, "sweep");
                summary.sd = std::max(summary.sd, row.sd);
                summary.col = std::max(summary.col, row.col);
                summary.ratio_thm1 = std::max(summary.ratio_thm1, row.ratio_thm1);
                summary.sd_sqrt_q = std::max(summary.sd_sqrt_q, row.sd_sqrt_q);
                if (row.status != "pass") ++res.warnings;
                ++measured;
                rows.push_back(std::move(row));
            }
        }
    }
    if (rows.empty()) config_error("no applicable (extractor, k) cell in the grid");
    if (skipped > 0) res.notes.push_back("skipped " + std::to_string(skipped) + " inapplicable (extractor, k, n) cells");
    summary.col_sd_relation = std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) {
        return r.status == "budget_exceeded" || r.col_sd_relation;
    });
    summary.samples = measured;
    summary.status = res.warnings == 0 ? "pass" : "warnings=" + std::to_string(res.warnings);
    rows.push_back(summary);
    res.table = sd_table(rows);
    return res;
}

int exit_code_for(ErrorCode code) { return code == ErrorCode::BudgetExceeded ? kExitBudget : kExitConfig; }

int run_command(const std::string& command, const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        validate_common(cfg);
        CommandResult res;
        if (command == "jacobian") {
            res = cmd_jacobian(cfg);
        } else if (command == "extract-sd") {
            res = cmd_extract_sd(cfg);
        } else if (command == "charsum") {
            res = cmd_charsum(cfg);
        } else if (command == "sweep") {
            res = cmd_sweep(cfg);
        } else {
            config_error("unknown command '" + command + "'");
        }
        std::ostringstream text;
        if (cfg.format == "json") {
            write_json(text, res.table, command);
        } else {
            write_csv(text, res.table);
        }
        if (cfg.out.empty()) {
            out << text.str();
        } else {
            std::ofstream file(cfg.out, std::ios::binary);
            file << text.str();
            if (!file) config_error("cannot write " + cfg.out);
        }
        for (const auto& note : res.notes) err << "note: " << note << '\n';
        if (res.warnings > 0) err << "warning: " << res.warnings << " row(s) failed or exceeded the budget\n";
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
}

}  // namespace xjac::app
