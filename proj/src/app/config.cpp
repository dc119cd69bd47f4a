#include "xjac/app/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "xjac/error.hpp"
#include "xjac/extractors.hpp"

namespace xjac::app {

namespace {

using nlohmann::json;

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorCode::ConfigError, msg); }

std::uint64_t as_uint(const json& v, const std::string& key) {
    if (!v.is_number_unsigned()) config_error("'" + key + "' must be a nonnegative integer");
    return v.get<std::uint64_t>();
}

std::string as_string(const json& v, const std::string& key) {
    if (!v.is_string()) config_error("'" + key + "' must be a string");
    return v.get<std::string>();
}

// Scalar or array of unsigned integers; a string is parsed as a comma list.
std::vector<std::uint64_t> as_uint_list(const json& v, const std::string& key) {
    if (v.is_string()) return parse_uint_list(v.get<std::string>(), key.c_str());
    if (!v.is_array()) return {as_uint(v, key)};
    std::vector<std::uint64_t> out;
    for (const auto& e : v) out.push_back(as_uint(e, key));
    return out;
}

std::vector<std::size_t> to_sizes(const std::vector<std::uint64_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

std::vector<std::uint64_t> parse_uint_list(const std::string& text, const char* what) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const auto b = tok.find_first_not_of(' ');
        const auto e = tok.find_last_not_of(' ');
        if (b == std::string::npos) config_error(std::string("empty entry in --") + what);
        tok = tok.substr(b, e - b + 1);
        std::size_t used = 0;
        unsigned long long value = 0;
        try {
            if (tok.front() == '-') throw std::invalid_argument(tok);
            value = std::stoull(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) config_error(std::string("bad integer '") + tok + "' in --" + what);
        out.push_back(value);
    }
    return out;
}

std::vector<std::string> parse_name_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) config_error("empty entry in name list \"" + text + "\"");
        out.push_back(tok);
    }
    return out;
}

void apply_json(ExperimentConfig& cfg, const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        config_error(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) config_error("config must be a JSON object");
    for (const auto& [key, v] : j.items()) {
        if (key == "p") {
            cfg.p = as_uint_list(v, key);
        } else if (key == "n") {
            cfg.n = to_sizes(as_uint_list(v, key));
        } else if (key == "modulus") {
            cfg.modulus = as_string(v, key);
        } else if (key == "f") {
            cfg.f = as_string(v, key);
        } else if (key == "c") {
            cfg.c = as_uint_list(v, key);
        } else if (key == "extractor") {
            if (v.is_array()) {
                cfg.extractor.clear();
                for (const auto& e : v) cfg.extractor.push_back(as_string(e, key));
            } else {
                cfg.extractor = parse_name_list(as_string(v, key));
            }
        } else if (key == "k") {
            cfg.k = to_sizes(as_uint_list(v, key));
        } else if (key == "mode") {
            cfg.mode = as_string(v, key);
        } else if (key == "samples") {
            cfg.samples = as_uint(v, key);
        } else if (key == "seed") {
            cfg.seed = as_uint(v, key);
        } else if (key == "degree") {
            cfg.degree = static_cast<int>(as_uint(v, key));
        } else if (key == "L") {
            cfg.L = as_uint(v, key);
        } else if (key == "out") {
            cfg.out = as_string(v, key);
        } else if (key == "format") {
            cfg.format = as_string(v, key);
        } else if (key == "cache_dir") {
            cfg.cache_dir = as_string(v, key);
        } else if (key == "budget") {
            cfg.budget = as_uint(v, key);
        } else if (key == "jobs") {
            cfg.jobs = static_cast<unsigned>(as_uint(v, key));
        } else if (key == "timing") {
            if (!v.is_boolean()) config_error("'timing' must be a boolean");
            cfg.timing = v.get<bool>();
        } else {
            config_error("unknown config key '" + key + "'");
        }
    }
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) config_error("cannot read config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    ExperimentConfig cfg;
    apply_json(cfg, ss.str());
    return cfg;
}

std::optional<std::string> effective_cache_dir(const ExperimentConfig& cfg) {
    if (cfg.cache_dir) return cfg.cache_dir;
    if (const char* env = std::getenv("XJAC_CACHE_DIR"); env && *env) return std::string(env);
    return std::nullopt;
}

ExtField make_field(const ExperimentConfig& cfg, std::uint64_t p, std::size_t n) {
    if (!cfg.modulus) return ExtField::with_degree(p, n);
    const Poly m = Poly::parse(ExtField::prime(p), *cfg.modulus);
    if (m.degree() != static_cast<int>(n)) {
        throw Error(ErrorCode::WrongDegree, "modulus has degree " + std::to_string(m.degree()) + ", n = " +
                                                std::to_string(n));
    }
    return ExtField(p, m.indices());
}

Poly resolve_curve_poly(const std::optional<std::string>& f, const ExtField& field, std::uint64_t c_start) {
    if (!f) config_error("no curve given (--f)");
    if (*f == "auto") return first_squarefree_quintic(field);
    if (f->find('c') != std::string::npos) return squarefree_from_template(field, *f, c_start).first;
    return Poly::parse(field, *f);
}

std::uint64_t single_p(const ExperimentConfig& cfg) {
    if (cfg.p.size() != 1) config_error("this command takes exactly one --p");
    return cfg.p.front();
}

std::size_t single_n(const ExperimentConfig& cfg) {
    if (cfg.n.size() != 1) config_error("this command takes exactly one --n");
    return cfg.n.front();
}

void validate_common(const ExperimentConfig& cfg) {
    if (cfg.format != "csv" && cfg.format != "json") config_error("--format must be csv or json");
    if (cfg.budget == 0) config_error("--budget must be positive");
    if (cfg.jobs == 0) config_error("--jobs must be positive");
    for (const auto& e : cfg.extractor) (void)parse_extractor(e);
}

}  // namespace xjac::app
