#ifndef XJAC_FIELD_HPP
#define XJAC_FIELD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace xjac {

/// Characteristic is kept below 2^32 so that a product of two residues fits in
/// 64 bits without widening.
inline constexpr std::uint64_t kMaxCharacteristic = std::uint64_t{1} << 32;

/// Field order q = p^n must stay below 2^63; elements are addressed by a
/// packed index in [0, q).
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 63;

/// 3^40 exceeds 2^63, so no admissible field has a larger degree.
inline constexpr std::size_t kMaxExtensionDegree = 39;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// The prime field F_p for an odd prime p. Residues are plain integers in
/// [0, p); the helpers below never leave that range.
class PrimeField {
   public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t characteristic() const noexcept { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept;
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return (a * b) % p_; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
    std::uint64_t inv(std::uint64_t a) const;
    /// Reduces an arbitrary signed integer into [0, p).
    std::uint64_t reduce(std::int64_t value) const noexcept;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

   private:
    std::uint64_t p_;
};

/// Is the monic polynomial (low-degree-first, leading 1 included) irreducible
/// over F_p? Rabin's test.
bool is_irreducible(const PrimeField& base, std::span<const std::uint64_t> monic);

/// Lexicographically smallest monic irreducible polynomial of degree n over
/// F_p. Coefficients are compared low-degree-first, so c0 is the most
/// significant position. Returned with the leading 1, length n + 1.
std::vector<std::uint64_t> find_irreducible(std::uint64_t p, std::size_t n);

class FieldElement;

/// F_{p^n} realized as F_p[x]/(modulus). Cheap to copy: all copies share one
/// immutable context.
class ExtField {
   public:
    /// Validates that modulus is monic, irreducible and that p^n fits.
    ExtField(std::uint64_t p, std::vector<std::uint64_t> modulus);

    /// F_p itself, with modulus x.
    static ExtField prime(std::uint64_t p);
    /// F_{p^n} over the modulus chosen by find_irreducible.
    static ExtField with_degree(std::uint64_t p, std::size_t n);

    std::uint64_t characteristic() const noexcept;
    std::size_t degree() const noexcept;
    std::uint64_t order() const noexcept;
    const PrimeField& base() const noexcept;
    /// Monic modulus, low-degree-first, length n + 1.
    const std::vector<std::uint64_t>& modulus() const noexcept;

    FieldElement zero() const;
    FieldElement one() const;
    /// The class of x, i.e. alpha. Equals zero when n = 1.
    FieldElement generator() const;
    /// Basis vector alpha^i.
    FieldElement basis(std::size_t i) const;
    FieldElement from_coords(std::span<const std::uint64_t> coords) const;
    /// Element whose base-p digits are its coordinates, low-degree-first.
    FieldElement from_index(std::uint64_t index) const;
    /// Image of an integer under Z -> F_p -> F_q.
    FieldElement from_integer(std::int64_t value) const;

    /// Every element, in packed-index order.
    std::vector<FieldElement> elements() const;

    std::string describe() const;

    friend bool operator==(const ExtField& a, const ExtField& b) noexcept;

   private:
    struct Context;
    explicit ExtField(std::shared_ptr<const Context> ctx) : ctx_(std::move(ctx)) {}

    std::shared_ptr<const Context> ctx_;

    friend class FieldElement;
    friend std::uint64_t trace(const FieldElement& x);
};

/// Element of F_{p^n}. Stored as a packed index: coordinate i is the i-th
/// base-p digit. Values are immutable; arithmetic returns new elements.
class FieldElement {
   public:
    const ExtField& field() const noexcept { return field_; }

    std::uint64_t index() const noexcept { return packed_; }
    std::vector<std::uint64_t> coords() const;
    std::uint64_t coord(std::size_t i) const;

    bool is_zero() const noexcept { return packed_ == 0; }
    bool is_one() const noexcept { return packed_ == 1; }

    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t exponent) const;
    FieldElement frobenius() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

    FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
    FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
    FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

    /// Equality requires the same field; elements of different fields never compare equal.
    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.packed_ == b.packed_ && a.field_ == b.field_;
    }
    /// Orders by packed index.
    friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) noexcept {
        return a.packed_ <=> b.packed_;
    }

   private:
    FieldElement(ExtField field, std::uint64_t packed) : field_(std::move(field)), packed_(packed) {}

    ExtField field_;
    std::uint64_t packed_;

    friend class ExtField;
};

/// Polynomial-basis coordinates, low-degree-first.
std::vector<std::uint64_t> coords(const FieldElement& x);

/// Absolute trace to F_p, evaluated through precomputed traces of the basis
/// (Tr is F_p-linear).
std::uint64_t trace(const FieldElement& x);

/// Reference route: x + x^p + ... + x^{p^{n-1}} by repeated Frobenius. The
/// sum always lands in F_p.
std::uint64_t trace_by_frobenius(const FieldElement& x);

}  // namespace xjac

#endif  // XJAC_FIELD_HPP
