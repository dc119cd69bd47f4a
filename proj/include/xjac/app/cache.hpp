#ifndef XJAC_APP_CACHE_HPP
#define XJAC_APP_CACHE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xjac/hyperelliptic.hpp"

namespace xjac::app {

inline constexpr int kCacheVersion = 1;

/// A curve's points and full Jacobian enumeration.
struct JacobianData {
    std::vector<AffinePoint> points;
    std::vector<MumfordDivisor> divisors;
    bool from_cache = false;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& bytes);

/// File name "jac-<16 hex digits>.json", hashed over (p, n, modulus, f).
std::string cache_file_name(const Curve& c);

/// Cache JSON text for a curve and its enumeration.
std::string serialize_jacobian(const Curve& c, const JacobianData& data);

/// Parses and re-validates a cache document: header must match the curve,
/// every divisor must pass is_valid_divisor, the count must equal the
/// stored order, and the points must lie on the curve. nullopt otherwise.
std::optional<JacobianData> deserialize_jacobian(const Curve& c, const std::string& text);

/// Loads from cache_dir when a valid entry exists, else enumerates and
/// writes one. Without a cache_dir it just enumerates.
JacobianData load_or_enumerate(const Curve& c, std::uint64_t budget, const std::optional<std::string>& cache_dir);

}  // namespace xjac::app

#endif  // XJAC_APP_CACHE_HPP
