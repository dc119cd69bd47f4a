#include "xjac/app/cache.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <unistd.h>

#include <json.hpp>

#include "xjac/error.hpp"

namespace xjac::app {

namespace {

using nlohmann::json;

std::string modulus_string(const ExtField& field) {
    std::string out;
    for (std::size_t i = 0; i < field.modulus().size(); ++i) out += (i ? "," : "") + std::to_string(field.modulus()[i]);
    return out;
}

json element_json(const FieldElement& x) { return x.coords(); }

json poly_json(const Poly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(element_json(c));
    return out;
}

FieldElement element_from(const ExtField& field, const json& j) {
    auto coords = j.get<std::vector<std::uint64_t>>();
    if (coords.size() != field.degree()) throw std::runtime_error("coordinate vector of wrong length");
    return field.from_coords(coords);
}

Poly poly_from(const ExtField& field, const json& j) {
    std::vector<FieldElement> coeffs;
    for (const auto& c : j) coeffs.push_back(element_from(field, c));
    return Poly(field, std::move(coeffs));
}

}  // namespace

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string cache_file_name(const Curve& c) {
    const ExtField& field = c.field();
    const std::string key = std::to_string(field.characteristic()) + "|" + std::to_string(field.degree()) + "|" +
                            modulus_string(field) + "|" + c.f().to_string();
    char buf[40];
    std::snprintf(buf, sizeof buf, "jac-%016llx.json", static_cast<unsigned long long>(fnv1a(key)));
    return buf;
}

std::string serialize_jacobian(const Curve& c, const JacobianData& data) {
    const ExtField& field = c.field();
    json doc;
    doc["version"] = kCacheVersion;
    doc["p"] = field.characteristic();
    doc["n"] = field.degree();
    doc["modulus"] = modulus_string(field);
    doc["f"] = c.f().to_string();
    doc["order"] = data.divisors.size();
    json points = json::array();
    for (const auto& pt : data.points) points.push_back({element_json(pt.x), element_json(pt.y)});
    doc["points"] = std::move(points);
    json divisors = json::array();
    for (const auto& d : data.divisors) divisors.push_back({poly_json(d.u()), poly_json(d.v())});
    doc["divisors"] = std::move(divisors);
    return doc.dump();
}

std::optional<JacobianData> deserialize_jacobian(const Curve& c, const std::string& text) {
    const ExtField& field = c.field();
    try {
        const json doc = json::parse(text);
        if (doc.at("version").get<int>() != kCacheVersion) return std::nullopt;
        if (doc.at("p").get<std::uint64_t>() != field.characteristic() ||
            doc.at("n").get<std::size_t>() != field.degree() ||
            doc.at("modulus").get<std::string>() != modulus_string(field) ||
            doc.at("f").get<std::string>() != c.f().to_string()) {
            return std::nullopt;
        }
        JacobianData data;
        data.from_cache = true;
        for (const auto& pt : doc.at("points")) {
            AffinePoint p{element_from(field, pt.at(0)), element_from(field, pt.at(1))};
            if (!c.contains(p.x, p.y)) return std::nullopt;
            data.points.push_back(p);
        }
        for (const auto& d : doc.at("divisors")) {
            MumfordDivisor div(poly_from(field, d.at(0)), poly_from(field, d.at(1)));
            if (!is_valid_divisor(c, div)) return std::nullopt;
            data.divisors.push_back(std::move(div));
        }
        if (data.divisors.size() != doc.at("order").get<std::uint64_t>()) return std::nullopt;
        std::vector<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>> keys;
        keys.reserve(data.divisors.size());
        for (const auto& d : data.divisors) keys.emplace_back(d.u().indices(), d.v().indices());
        std::sort(keys.begin(), keys.end());
        if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) return std::nullopt;
        return data;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

JacobianData load_or_enumerate(const Curve& c, std::uint64_t budget, const std::optional<std::string>& cache_dir) {
    namespace fs = std::filesystem;
    std::optional<fs::path> path;
    if (cache_dir) {
        path = fs::path(*cache_dir) / cache_file_name(c);
        if (std::ifstream in(*path); in) {
            std::stringstream ss;
            ss << in.rdbuf();
            if (auto data = deserialize_jacobian(c, ss.str())) {
                if (data->divisors.size() <= budget) return std::move(*data);
            } else {
                std::cerr << "warning: ignoring invalid cache entry " << path->string() << '\n';
            }
        }
    }
    JacobianData data;
    data.points = curve_points(c, budget);
    data.divisors = jacobian_enumerate(c, budget);
    if (path) {
        std::error_code ec;
        fs::create_directories(path->parent_path(), ec);
        // Write to a temporary name first so concurrent readers never see a partial file.
        const fs::path tmp = path->string() + ".tmp" + std::to_string(::getpid()) + "-" +
                             std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
        {
            std::ofstream out(tmp);
            out << serialize_jacobian(c, data);
            if (!out) {
                std::cerr << "warning: could not write cache entry " << path->string() << '\n';
                return data;
            }
        }
        fs::rename(tmp, *path, ec);
        if (ec) std::cerr << "warning: could not write cache entry " << path->string() << '\n';
    }
    return data;
}

}  // namespace xjac::app
