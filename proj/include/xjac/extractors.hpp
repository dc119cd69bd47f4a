#ifndef XJAC_EXTRACTORS_HPP
#define XJAC_EXTRACTORS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "xjac/field.hpp"
#include "xjac/hyperelliptic.hpp"

namespace xjac {

enum class ExtractorKind { Sum, Prod, Sk, Pk };

/// "sum", "prod", "sk", "pk".
std::string to_string(ExtractorKind kind);
ExtractorKind parse_extractor(std::string_view name);

/// First k polynomial-basis coordinates of an F_q element.
struct CoordOutput {
    std::vector<std::uint64_t> coords;

    /// sum coords[i] * p^i, an integer in [0, p^k).
    std::uint64_t encode(std::uint64_t p) const;

    friend bool operator==(const CoordOutput&, const CoordOutput&) = default;
};

/// k bits, least-significant first.
struct BitOutput {
    std::vector<std::uint8_t> bits;

    /// The integer the bits spell, in [0, 2^k).
    std::uint64_t value() const;

    friend bool operator==(const BitOutput&, const BitOutput&) = default;
};

CoordOutput f_k(const FieldElement& x, std::size_t k);

/// Bit length of p - 1: the largest admissible k for lsb_k over F_p.
std::size_t max_lsb_bits(std::uint64_t p);

/// k low-order bits of the residue x in [0, p).
BitOutput lsb_k(std::uint64_t p, std::uint64_t x, std::size_t k);

/// Field element the extractor truncates: -u1 / u0 (weight 2), -u0 (weight 1),
/// 0 for the identity. Sk shares Sum's, Pk shares Prod's.
FieldElement extractor_preimage(const Curve& c, const MumfordDivisor& d, ExtractorKind kind);

CoordOutput sum_extract(const Curve& c, const MumfordDivisor& d, std::size_t k);
CoordOutput prod_extract(const Curve& c, const MumfordDivisor& d, std::size_t k);
BitOutput s_k_extract(const Curve& c, const MumfordDivisor& d, std::size_t k);
BitOutput p_k_extract(const Curve& c, const MumfordDivisor& d, std::size_t k);

/// Checks k (and the prime-field requirement of Sk/Pk) for a field.
void validate_extractor(const ExtField& field, ExtractorKind kind, std::size_t k);

/// p^k for Sum/Prod, 2^k for Sk/Pk.
std::uint64_t output_space_size(const ExtField& field, ExtractorKind kind, std::size_t k);

/// Extractor output as an integer in [0, output_space_size): CoordOutput::encode
/// or BitOutput::value.
std::uint64_t extract_outcome(const Curve& c, const MumfordDivisor& d, ExtractorKind kind, std::size_t k);

}  // namespace xjac

#endif  // XJAC_EXTRACTORS_HPP
