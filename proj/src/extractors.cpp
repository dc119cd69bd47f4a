#include "xjac/extractors.hpp"

#include <bit>

#include "xjac/error.hpp"

namespace xjac {

std::string to_string(ExtractorKind kind) {
    switch (kind) {
        case ExtractorKind::Sum: return "sum";
        case ExtractorKind::Prod: return "prod";
        case ExtractorKind::Sk: return "sk";
        case ExtractorKind::Pk: return "pk";
    }
    return "?";
}

ExtractorKind parse_extractor(std::string_view name) {
    if (name == "sum") return ExtractorKind::Sum;
    if (name == "prod") return ExtractorKind::Prod;
    if (name == "sk") return ExtractorKind::Sk;
    if (name == "pk") return ExtractorKind::Pk;
    throw Error(ErrorCode::ConfigError, "unknown extractor '" + std::string(name) + "' (sum|prod|sk|pk)");
}

std::uint64_t CoordOutput::encode(std::uint64_t p) const {
    std::uint64_t out = 0;
    for (auto it = coords.rbegin(); it != coords.rend(); ++it) out = out * p + *it;
    return out;
}

std::uint64_t BitOutput::value() const {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) out |= std::uint64_t{bits[i]} << i;
    return out;
}

CoordOutput f_k(const FieldElement& x, std::size_t k) {
    if (k < 1 || k > x.field().degree()) {
        throw Error(ErrorCode::KOutOfRange, "k = " + std::to_string(k) + " outside [1, " +
                                                std::to_string(x.field().degree()) + "]");
    }
    auto c = x.coords();
    c.resize(k);
    return {std::move(c)};
}

std::size_t max_lsb_bits(std::uint64_t p) { return static_cast<std::size_t>(std::bit_width(p - 1)); }

BitOutput lsb_k(std::uint64_t p, std::uint64_t x, std::size_t k) {
    if (k < 1 || k > max_lsb_bits(p)) {
        throw Error(ErrorCode::KOutOfRange, "k = " + std::to_string(k) + " outside [1, " +
                                                std::to_string(max_lsb_bits(p)) + "]");
    }
    if (x >= p) throw Error(ErrorCode::OutOfRange, "residue not in [0, p)");
    BitOutput out;
    for (std::size_t i = 0; i < k; ++i) out.bits.push_back(static_cast<std::uint8_t>((x >> i) & 1));
    return out;
}

FieldElement extractor_preimage(const Curve& c, const MumfordDivisor& d, ExtractorKind kind) {
    if (!is_valid_divisor(c, d)) {
        throw Error(ErrorCode::InvalidDivisor, "[" + d.u().to_string() + "; " + d.v().to_string() + "]");
    }
    const Poly& u = d.u();
    switch (u.degree()) {
        case 0:
            return c.field().zero();
        case 1:
            return -u.coeff(0);
        default:
            if (kind == ExtractorKind::Sum || kind == ExtractorKind::Sk) return -u.coeff(1);
            return u.coeff(0);
    }
}

void validate_extractor(const ExtField& field, ExtractorKind kind, std::size_t k) {
    if (kind == ExtractorKind::Sk || kind == ExtractorKind::Pk) {
        if (field.degree() != 1) {
            throw Error(ErrorCode::RequiresPrimeField, to_string(kind) + " needs n = 1, got n = " +
                                                           std::to_string(field.degree()));
        }
        if (k < 1 || k > max_lsb_bits(field.characteristic())) {
            throw Error(ErrorCode::KOutOfRange, "k = " + std::to_string(k) + " outside [1, " +
                                                    std::to_string(max_lsb_bits(field.characteristic())) + "]");
        }
    } else if (k < 1 || k > field.degree()) {
        throw Error(ErrorCode::KOutOfRange,
                    "k = " + std::to_string(k) + " outside [1, " + std::to_string(field.degree()) + "]");
    }
}

CoordOutput sum_extract(const Curve& c, const MumfordDivisor& d, std::size_t k) {
    validate_extractor(c.field(), ExtractorKind::Sum, k);
    return f_k(extractor_preimage(c, d, ExtractorKind::Sum), k);
}

CoordOutput prod_extract(const Curve& c, const MumfordDivisor& d, std::size_t k) {
    validate_extractor(c.field(), ExtractorKind::Prod, k);
    return f_k(extractor_preimage(c, d, ExtractorKind::Prod), k);
}

BitOutput s_k_extract(const Curve& c, const MumfordDivisor& d, std::size_t k) {
    validate_extractor(c.field(), ExtractorKind::Sk, k);
    return lsb_k(c.field().characteristic(), extractor_preimage(c, d, ExtractorKind::Sk).index(), k);
}

BitOutput p_k_extract(const Curve& c, const MumfordDivisor& d, std::size_t k) {
    validate_extractor(c.field(), ExtractorKind::Pk, k);
    return lsb_k(c.field().characteristic(), extractor_preimage(c, d, ExtractorKind::Pk).index(), k);
}

std::uint64_t output_space_size(const ExtField& field, ExtractorKind kind, std::size_t k) {
    validate_extractor(field, kind, k);
    std::uint64_t base = (kind == ExtractorKind::Sum || kind == ExtractorKind::Prod) ? field.characteristic() : 2;
    std::uint64_t m = 1;
    for (std::size_t i = 0; i < k; ++i) m *= base;
    return m;
}

std::uint64_t extract_outcome(const Curve& c, const MumfordDivisor& d, ExtractorKind kind, std::size_t k) {
    switch (kind) {
        case ExtractorKind::Sum: return sum_extract(c, d, k).encode(c.field().characteristic());
        case ExtractorKind::Prod: return prod_extract(c, d, k).encode(c.field().characteristic());
        case ExtractorKind::Sk: return s_k_extract(c, d, k).value();
        case ExtractorKind::Pk: return p_k_extract(c, d, k).value();
    }
    return 0;
}

}  // namespace xjac
