#ifndef XJAC_APP_CONFIG_HPP
#define XJAC_APP_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xjac/field.hpp"
#include "xjac/hyperelliptic.hpp"

namespace xjac::app {

/// One experiment. List-valued fields hold a single entry except in sweeps.
struct ExperimentConfig {
    std::vector<std::uint64_t> p{7};
    std::vector<std::size_t> n{1};
    /// Irreducible modulus as a coefficient string over F_p; find_irreducible when absent.
    std::optional<std::string> modulus;
    /// Coefficient string, a template containing "c", or "auto" for the first
    /// squarefree quintic.
    std::optional<std::string> f;
    /// Template search start, one value for all p or one per p.
    std::vector<std::uint64_t> c{0};
    std::vector<std::string> extractor{"sum"};
    std::vector<std::size_t> k{1};
    std::string mode;
    std::uint64_t samples = 100'000;
    std::uint64_t seed = 42;
    /// charsum: polynomial degree (mordell) and interval length (interval).
    int degree = 2;
    std::optional<std::uint64_t> L;
    std::string out;
    std::string format = "csv";
    std::optional<std::string> cache_dir;
    std::uint64_t budget = kDefaultBudget;
    unsigned jobs = 1;
    bool timing = false;
};

/// Fields present in the JSON object overwrite cfg. Unknown keys are a ConfigError.
void apply_json(ExperimentConfig& cfg, const std::string& json_text);
ExperimentConfig load_config_file(const std::string& path);

/// Comma-separated unsigned integers.
std::vector<std::uint64_t> parse_uint_list(const std::string& text, const char* what);
std::vector<std::string> parse_name_list(const std::string& text);

/// XJAC_CACHE_DIR when cache_dir is unset.
std::optional<std::string> effective_cache_dir(const ExperimentConfig& cfg);

/// Field for one (p, n), honouring cfg.modulus.
ExtField make_field(const ExperimentConfig& cfg, std::uint64_t p, std::size_t n);

/// Resolves cfg.f over the field: a literal, a template searched from c_start, or "auto".
Poly resolve_curve_poly(const std::optional<std::string>& f, const ExtField& field, std::uint64_t c_start);

/// Single-valued view used by jacobian/extract-sd/charsum. ConfigError on lists.
std::uint64_t single_p(const ExperimentConfig& cfg);
std::size_t single_n(const ExperimentConfig& cfg);

void validate_common(const ExperimentConfig& cfg);

}  // namespace xjac::app

#endif  // XJAC_APP_CONFIG_HPP
