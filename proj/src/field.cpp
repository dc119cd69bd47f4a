#include "xjac/field.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>

#include "xjac/error.hpp"

namespace xjac {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Dense polynomials over F_p used only to construct and validate moduli.
using ResiduePoly = std::vector<u64>;

void trim(ResiduePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ResiduePoly rp_mod(ResiduePoly a, const ResiduePoly& m, const PrimeField& fp) {
    trim(a);
    const u64 lc_inv = fp.inv(m.back());
    while (a.size() >= m.size()) {
        const u64 c = fp.mul(a.back(), lc_inv);
        const std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            a[shift + i] = fp.sub(a[shift + i], fp.mul(c, m[i]));
        }
        trim(a);
    }
    return a;
}

ResiduePoly rp_mulmod(const ResiduePoly& a, const ResiduePoly& b, const ResiduePoly& m, const PrimeField& fp) {
    if (a.empty() || b.empty()) return {};
    ResiduePoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = fp.add(r[i + j], fp.mul(a[i], b[j]));
        }
    }
    return rp_mod(std::move(r), m, fp);
}

ResiduePoly rp_powmod(ResiduePoly base, u64 e, const ResiduePoly& m, const PrimeField& fp) {
    ResiduePoly r{1};
    base = rp_mod(std::move(base), m, fp);
    while (e > 0) {
        if (e & 1) r = rp_mulmod(r, base, m, fp);
        base = rp_mulmod(base, base, m, fp);
        e >>= 1;
    }
    return r;
}

ResiduePoly rp_gcd(ResiduePoly a, ResiduePoly b, const PrimeField& fp) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        ResiduePoly r = rp_mod(a, b, fp);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are a deterministic witness set below 3.3 * 10^24.
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// PrimeField

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (p >= kMaxCharacteristic) {
        throw Error(ErrorCode::OutOfRange, "characteristic must be below 2^32");
    }
}

std::uint64_t PrimeField::add(std::uint64_t a, std::uint64_t b) const noexcept {
    const u64 s = a + b;
    return s >= p_ ? s - p_ : s;
}

std::uint64_t PrimeField::sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const noexcept {
    u64 r = 1;
    a %= p_;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a % p_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0 in F_" + std::to_string(p_));
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a % p_);
    while (new_r != 0) {
        const std::int64_t quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    return reduce(t);
}

std::uint64_t PrimeField::reduce(std::int64_t value) const noexcept {
    const auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = value % m;
    if (r < 0) r += m;
    return static_cast<u64>(r);
}

// ---------------------------------------------------------------------------
// Irreducibility

bool is_irreducible(const PrimeField& base, std::span<const std::uint64_t> monic) {
    if (monic.size() < 2 || monic.back() != 1) return false;
    const std::size_t n = monic.size() - 1;
    if (n == 1) return true;
    const ResiduePoly m(monic.begin(), monic.end());
    const u64 p = base.characteristic();
    // frob[i] = x^{p^i} mod m
    std::vector<ResiduePoly> frob{ResiduePoly{0, 1}};
    for (std::size_t i = 1; i <= n; ++i) frob.push_back(rp_powmod(frob.back(), p, m, base));
    ResiduePoly x_mod = rp_mod(ResiduePoly{0, 1}, m, base);
    if (frob[n] != x_mod) return false;
    for (u64 r : prime_factors(n)) {
        ResiduePoly h = frob[n / r];
        h.resize(std::max<std::size_t>(h.size(), 2), 0);
        h[1] = base.sub(h[1], 1);
        trim(h);
        if (h.empty()) return false;
        if (rp_gcd(h, m, base).size() != 1) return false;
    }
    return true;
}

std::vector<std::uint64_t> find_irreducible(std::uint64_t p, std::size_t n) {
    const PrimeField base(p);
    if (n == 0) throw Error(ErrorCode::OutOfRange, "extension degree must be at least 1");
    if (n == 1) return {0, 1};
    // digits[0] = c0 is the most significant position of the search order.
    std::vector<u64> digits(n, 0);
    digits[0] = 1;  // c0 = 0 leaves x as a factor
    while (true) {
        std::vector<u64> cand = digits;
        cand.push_back(1);
        if (is_irreducible(base, cand)) return cand;
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < p) break;
            digits[pos] = 0;
            if (pos == 0) throw Error(ErrorCode::NotIrreducible, "no irreducible polynomial found");
        }
    }
}

// ---------------------------------------------------------------------------
// ExtField

struct ExtField::Context {
    PrimeField base;
    std::size_t n;
    std::vector<u64> modulus;
    u64 q;
    std::vector<u64> place;        // p^i
    std::vector<u64> basis_trace;  // Tr(alpha^i)
};

namespace {

using Digits = std::array<u64, kMaxExtensionDegree>;

}  // namespace

ExtField::ExtField(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    PrimeField base(p);
    if (modulus.size() < 2) throw Error(ErrorCode::WrongDegree, "modulus must have degree >= 1");
    if (modulus.back() != 1) throw Error(ErrorCode::NotMonic, "modulus must be monic");
    for (u64 c : modulus) {
        if (c >= p) throw Error(ErrorCode::OutOfRange, "modulus coefficient out of [0, p)");
    }
    const std::size_t n = modulus.size() - 1;
    if (n > kMaxExtensionDegree) throw Error(ErrorCode::OutOfRange, "extension degree too large");
    std::vector<u64> place{1};
    for (std::size_t i = 1; i <= n; ++i) {
        if (place.back() > (kMaxFieldOrder - 1) / p) {
            throw Error(ErrorCode::OutOfRange, "field order p^n must be below 2^63");
        }
        place.push_back(place.back() * p);
    }
    if (!is_irreducible(base, modulus)) throw Error(ErrorCode::NotIrreducible, "modulus is reducible over F_p");
    const u64 q = place.back();
    place.pop_back();
    auto ctx = std::make_shared<Context>(Context{base, n, std::move(modulus), q, std::move(place), {}});
    // Basis traces need element arithmetic, which only needs the fields filled above.
    ExtField partial(ctx);
    for (std::size_t i = 0; i < n; ++i) ctx->basis_trace.push_back(trace_by_frobenius(partial.basis(i)));
    ctx_ = std::move(ctx);
}

ExtField ExtField::prime(std::uint64_t p) { return ExtField(p, {0, 1}); }

ExtField ExtField::with_degree(std::uint64_t p, std::size_t n) { return ExtField(p, find_irreducible(p, n)); }

std::uint64_t ExtField::characteristic() const noexcept { return ctx_->base.characteristic(); }
std::size_t ExtField::degree() const noexcept { return ctx_->n; }
std::uint64_t ExtField::order() const noexcept { return ctx_->q; }
const PrimeField& ExtField::base() const noexcept { return ctx_->base; }
const std::vector<std::uint64_t>& ExtField::modulus() const noexcept { return ctx_->modulus; }

FieldElement ExtField::zero() const { return FieldElement(*this, 0); }
FieldElement ExtField::one() const { return FieldElement(*this, 1); }

FieldElement ExtField::generator() const {
    if (ctx_->n == 1) return FieldElement(*this, ctx_->base.neg(ctx_->modulus[0]));
    return FieldElement(*this, ctx_->place[1]);
}

FieldElement ExtField::basis(std::size_t i) const {
    if (i >= ctx_->n) throw Error(ErrorCode::OutOfRange, "basis index out of range");
    return FieldElement(*this, ctx_->place[i]);
}

FieldElement ExtField::from_coords(std::span<const std::uint64_t> coords) const {
    if (coords.size() != ctx_->n) throw Error(ErrorCode::OutOfRange, "expected exactly n coordinates");
    u64 packed = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] >= characteristic()) throw Error(ErrorCode::OutOfRange, "coordinate out of [0, p)");
        packed += coords[i] * ctx_->place[i];
    }
    return FieldElement(*this, packed);
}

FieldElement ExtField::from_index(std::uint64_t index) const {
    if (index >= ctx_->q) throw Error(ErrorCode::OutOfRange, "element index out of [0, q)");
    return FieldElement(*this, index);
}

FieldElement ExtField::from_integer(std::int64_t value) const {
    return FieldElement(*this, ctx_->base.reduce(value));
}

std::vector<FieldElement> ExtField::elements() const {
    std::vector<FieldElement> out;
    out.reserve(ctx_->q);
    for (u64 i = 0; i < ctx_->q; ++i) out.push_back(FieldElement(*this, i));
    return out;
}

std::string ExtField::describe() const {
    std::ostringstream os;
    os << "F_" << characteristic();
    if (ctx_->n > 1) {
        os << "^" << ctx_->n << " mod [";
        for (std::size_t i = 0; i < ctx_->modulus.size(); ++i) os << (i ? "," : "") << ctx_->modulus[i];
        os << "]";
    }
    return os.str();
}

bool operator==(const ExtField& a, const ExtField& b) noexcept {
    if (a.ctx_ == b.ctx_) return true;
    return a.ctx_->base == b.ctx_->base && a.ctx_->modulus == b.ctx_->modulus;
}

// ---------------------------------------------------------------------------
// FieldElement

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!(a.field() == b.field())) {
        throw Error(ErrorCode::FieldMismatch, a.field().describe() + " vs " + b.field().describe());
    }
}

void unpack(u64 packed, u64 p, std::size_t n, Digits& out) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = packed % p;
        packed /= p;
    }
}

u64 pack(const Digits& d, u64 p, std::size_t n) {
    u64 packed = 0;
    for (std::size_t i = n; i-- > 0;) packed = packed * p + d[i];
    return packed;
}

}  // namespace

std::vector<std::uint64_t> FieldElement::coords() const {
    const std::size_t n = field_.degree();
    Digits d{};
    unpack(packed_, field_.characteristic(), n, d);
    return {d.begin(), d.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::uint64_t FieldElement::coord(std::size_t i) const {
    if (i >= field_.degree()) throw Error(ErrorCode::OutOfRange, "coordinate index out of range");
    return (packed_ / field_.ctx_->place[i]) % field_.characteristic();
}

FieldElement FieldElement::operator-() const {
    const auto& fp = field_.base();
    if (field_.degree() == 1) return FieldElement(field_, fp.neg(packed_));
    const std::size_t n = field_.degree();
    Digits d{};
    unpack(packed_, fp.characteristic(), n, d);
    for (std::size_t i = 0; i < n; ++i) d[i] = fp.neg(d[i]);
    return FieldElement(field_, pack(d, fp.characteristic(), n));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    const auto& fp = a.field_.base();
    if (a.field_.degree() == 1) return FieldElement(a.field_, fp.add(a.packed_, b.packed_));
    const std::size_t n = a.field_.degree();
    const u64 p = fp.characteristic();
    Digits x{}, y{};
    unpack(a.packed_, p, n, x);
    unpack(b.packed_, p, n, y);
    for (std::size_t i = 0; i < n; ++i) x[i] = fp.add(x[i], y[i]);
    return FieldElement(a.field_, pack(x, p, n));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    const auto& fp = a.field_.base();
    if (a.field_.degree() == 1) return FieldElement(a.field_, fp.sub(a.packed_, b.packed_));
    const std::size_t n = a.field_.degree();
    const u64 p = fp.characteristic();
    Digits x{}, y{};
    unpack(a.packed_, p, n, x);
    unpack(b.packed_, p, n, y);
    for (std::size_t i = 0; i < n; ++i) x[i] = fp.sub(x[i], y[i]);
    return FieldElement(a.field_, pack(x, p, n));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    const auto& fp = a.field_.base();
    if (a.field_.degree() == 1) return FieldElement(a.field_, fp.mul(a.packed_, b.packed_));
    const std::size_t n = a.field_.degree();
    const u64 p = fp.characteristic();
    Digits x{}, y{};
    unpack(a.packed_, p, n, x);
    unpack(b.packed_, p, n, y);
    std::array<u64, 2 * kMaxExtensionDegree> prod{};
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) prod[i + j] = fp.add(prod[i + j], fp.mul(x[i], y[j]));
    }
    const auto& m = a.field_.modulus();
    for (std::size_t deg = 2 * n - 2; deg >= n; --deg) {
        const u64 c = prod[deg];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= n; ++i) prod[deg - n + i] = fp.sub(prod[deg - n + i], fp.mul(c, m[i]));
    }
    Digits out{};
    std::copy_n(prod.begin(), n, out.begin());
    return FieldElement(a.field_, pack(out, p, n));
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
    FieldElement result = field_.one();
    FieldElement base = *this;
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        base = base * base;
        exponent >>= 1;
    }
    return result;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + field_.describe());
    if (field_.degree() == 1) return FieldElement(field_, field_.base().inv(packed_));
    return pow(field_.order() - 2);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return a * b.inverse();
}

FieldElement FieldElement::frobenius() const { return pow(field_.characteristic()); }

std::vector<std::uint64_t> coords(const FieldElement& x) { return x.coords(); }

std::uint64_t trace(const FieldElement& x) {
    const auto& fp = x.field().base();
    const auto& basis_trace = x.field().ctx_->basis_trace;
    if (basis_trace.empty()) return trace_by_frobenius(x);
    u64 t = 0;
    u64 rest = x.index();
    for (u64 bt : basis_trace) {
        t = fp.add(t, fp.mul(rest % fp.characteristic(), bt));
        rest /= fp.characteristic();
    }
    return t;
}

std::uint64_t trace_by_frobenius(const FieldElement& x) {
    FieldElement acc = x;
    FieldElement conj = x;
    for (std::size_t i = 1; i < x.field().degree(); ++i) {
        conj = conj.frobenius();
        acc += conj;
    }
    // Tr(x) is fixed by Frobenius, so only the constant coordinate is nonzero.
    return acc.coord(0);
}

}  // namespace xjac
