#ifndef XJAC_POLY_HPP
#define XJAC_POLY_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xjac/field.hpp"

namespace xjac {

/// Dense univariate polynomial over an ExtField, low-degree-first. The stored
/// vector never ends in a zero; the zero polynomial is the empty vector.
class Poly {
   public:
    explicit Poly(ExtField field) : field_(std::move(field)) {}
    Poly(ExtField field, std::vector<FieldElement> coeffs);

    static Poly constant(const FieldElement& c);
    /// c * x^degree
    static Poly monomial(const FieldElement& c, std::size_t degree);
    /// Coefficients given as packed element indices, low-degree-first.
    static Poly from_indices(const ExtField& field, std::span<const std::uint64_t> indices);
    /// Parses the comma-separated text form, e.g. "1,0,0,0,0,1" for x^5 + 1.
    /// Each token is a packed element index in [0, q).
    static Poly parse(const ExtField& field, std::string_view text);

    const ExtField& field() const noexcept { return field_; }
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().is_one(); }

    /// Coefficient of x^i; zero past the degree.
    FieldElement coeff(std::size_t i) const;
    const FieldElement& leading() const;

    Poly monic() const;
    Poly derivative() const;
    FieldElement eval(const FieldElement& x) const;

    /// Packed indices of the coefficients, low-degree-first.
    std::vector<std::uint64_t> indices() const;
    /// Inverse of parse(). The zero polynomial prints as "0".
    std::string to_string() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const FieldElement& c, const Poly& a);
    friend Poly operator/(const Poly& a, const Poly& b);
    friend Poly operator%(const Poly& a, const Poly& b);

    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

   private:
    void normalize();

    ExtField field_;
    std::vector<FieldElement> coeffs_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// a = quotient * b + remainder with deg remainder < deg b.
DivMod divmod(const Poly& a, const Poly& b);

struct ExtendedGcd {
    Poly g;  // monic
    Poly s;
    Poly t;  // g = s * a + t * b
};

/// Extended Euclid with a monic result. Throws BothZero when a = b = 0.
ExtendedGcd xgcd(const Poly& a, const Poly& b);

Poly gcd(const Poly& a, const Poly& b);

/// gcd(f, f') = 1. Requires f nonzero.
bool is_squarefree(const Poly& f);

}  // namespace xjac

#endif  // XJAC_POLY_HPP
