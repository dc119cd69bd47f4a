#include "xjac/poly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "xjac/error.hpp"

namespace xjac {

namespace {

void require_same_field(const ExtField& a, const ExtField& b) {
    if (!(a == b)) throw Error(ErrorCode::FieldMismatch, a.describe() + " vs " + b.describe());
}

}  // namespace

Poly::Poly(ExtField field, std::vector<FieldElement> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) require_same_field(field_, c.field());
    normalize();
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const FieldElement& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const FieldElement& c, std::size_t degree) {
    std::vector<FieldElement> coeffs(degree + 1, c.field().zero());
    coeffs[degree] = c;
    return Poly(c.field(), std::move(coeffs));
}

Poly Poly::from_indices(const ExtField& field, std::span<const std::uint64_t> indices) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(indices.size());
    for (auto i : indices) coeffs.push_back(field.from_index(i));
    return Poly(field, std::move(coeffs));
}

Poly Poly::parse(const ExtField& field, std::string_view text) {
    std::vector<std::uint64_t> indices;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view token = text.substr(pos, comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        std::uint64_t value = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
            throw Error(ErrorCode::ParseError, "bad coefficient '" + std::string(token) + "' in \"" +
                                                   std::string(text) + "\"");
        }
        if (value >= field.order()) {
            throw Error(ErrorCode::ParseError, "coefficient " + std::to_string(value) + " not below q = " +
                                                   std::to_string(field.order()));
        }
        indices.push_back(value);
        pos = comma + 1;
    }
    return from_indices(field, indices);
}

FieldElement Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }

const FieldElement& Poly::leading() const {
    if (coeffs_.empty()) throw Error(ErrorCode::OutOfRange, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Poly Poly::monic() const {
    if (is_zero() || is_monic()) return *this;
    return leading().inverse() * *this;
}

Poly Poly::derivative() const {
    std::vector<FieldElement> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out.push_back(field_.from_integer(static_cast<std::int64_t>(i % field_.characteristic())) * coeffs_[i]);
    }
    return Poly(field_, std::move(out));
}

FieldElement Poly::eval(const FieldElement& x) const {
    require_same_field(field_, x.field());
    FieldElement acc = field_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<std::uint64_t> Poly::indices() const {
    std::vector<std::uint64_t> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.index());
    return out;
}

std::string Poly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i].index();
    return os.str();
}

Poly Poly::operator-() const {
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(-c);
    return Poly(field_, std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    std::vector<FieldElement> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(a.coeff(i) + b.coeff(i));
    return Poly(a.field_, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    std::vector<FieldElement> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(a.coeff(i) - b.coeff(i));
    return Poly(a.field_, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(a.field_, std::move(out));
}

Poly operator*(const FieldElement& c, const Poly& a) {
    require_same_field(c.field(), a.field_);
    std::vector<FieldElement> out;
    out.reserve(a.coeffs_.size());
    for (const auto& x : a.coeffs_) out.push_back(c * x);
    return Poly(a.field_, std::move(out));
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

DivMod divmod(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    const ExtField& field = a.field();
    if (a.degree() < b.degree()) return {Poly(field), a};
    std::vector<FieldElement> rem = a.coeffs();
    std::vector<FieldElement> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), field.zero());
    const FieldElement lc_inv = b.leading().inverse();
    const auto& bc = b.coeffs();
    for (std::size_t shift = quot.size(); shift-- > 0;) {
        const FieldElement c = rem[shift + bc.size() - 1] * lc_inv;
        quot[shift] = c;
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i < bc.size(); ++i) rem[shift + i] -= c * bc[i];
    }
    rem.resize(bc.size() - 1, field.zero());
    return {Poly(field, std::move(quot)), Poly(field, std::move(rem))};
}

ExtendedGcd xgcd(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
    const ExtField& field = a.field();
    const Poly one = Poly::constant(field.one());
    Poly r0 = a, r1 = b;
    Poly s0 = one, s1 = Poly(field);
    Poly t0 = Poly(field), t1 = one;
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    const FieldElement scale = r0.leading().inverse();
    ExtendedGcd out{scale * r0, scale * s0, scale * t0};
#ifdef XJAC_CHECK_INVARIANTS
    if (!(out.s * a + out.t * b == out.g) || !(a % out.g).is_zero() || !(b % out.g).is_zero()) {
        throw std::logic_error("xgcd: Bezout identity violated");
    }
#endif
    return out;
}

Poly gcd(const Poly& a, const Poly& b) { return xgcd(a, b).g; }

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) throw Error(ErrorCode::OutOfRange, "squarefreeness of the zero polynomial");
    if (f.degree() == 0) return true;
    // f' = 0 only when f is a p-th power, which is never squarefree
    const Poly df = f.derivative();
    if (df.is_zero()) return false;
    return gcd(f, df).is_one();
}

}  // namespace xjac
