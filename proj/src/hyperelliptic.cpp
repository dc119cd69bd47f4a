#include "xjac/hyperelliptic.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "xjac/error.hpp"

namespace xjac {

Curve::Curve(ExtField field, Poly f) : field_(std::move(field)), f_(std::move(f)) {
    if (!(f_.field() == field_)) throw Error(ErrorCode::FieldMismatch, "f is not over " + field_.describe());
    if (field_.characteristic() % 2 == 0) throw Error(ErrorCode::EvenCharacteristic, "characteristic must be odd");
    if (f_.degree() != 5) {
        throw Error(ErrorCode::WrongDegree, "deg f = " + std::to_string(f_.degree()) + ", genus 2 needs 5");
    }
    if (!f_.is_monic()) throw Error(ErrorCode::NotMonic, "f must be monic");
    if (!is_squarefree(f_)) throw Error(ErrorCode::NotSquarefree, "f = [" + f_.to_string() + "] has a repeated factor");
}

bool Curve::contains(const FieldElement& x, const FieldElement& y) const { return y * y == f_.eval(x); }

MumfordDivisor::MumfordDivisor(Poly u, Poly v) : u_(std::move(u)), v_(std::move(v)) {
    if (!(u_.field() == v_.field())) throw Error(ErrorCode::FieldMismatch, "u and v over different fields");
}

MumfordDivisor MumfordDivisor::identity(const ExtField& field) {
    return MumfordDivisor(Poly::constant(field.one()), Poly(field));
}

std::pair<double, double> weil_interval(std::uint64_t q) {
    const double s = std::sqrt(static_cast<double>(q));
    return {std::pow(s - 1.0, 4), std::pow(s + 1.0, 4)};
}

namespace {

void require_budget(std::uint64_t q, std::uint64_t budget) {
    if (q > budget) {
        throw Error(ErrorCode::BudgetExceeded,
                    "field of order " + std::to_string(q) + " exceeds budget " + std::to_string(budget));
    }
}

// root[s] = some y with y^2 = s (index), or -1 when s is a non-square.
std::vector<std::int64_t> square_root_table(const ExtField& field) {
    std::vector<std::int64_t> root(field.order(), -1);
    for (const auto& y : field.elements()) {
        const auto sq = (y * y).index();
        if (root[sq] < 0) root[sq] = static_cast<std::int64_t>(y.index());
    }
    return root;
}

void require_valid(const Curve& c, const MumfordDivisor& d) {
    if (!is_valid_divisor(c, d)) {
        throw Error(ErrorCode::InvalidDivisor, "[" + d.u().to_string() + "; " + d.v().to_string() + "]");
    }
}

}  // namespace

std::vector<AffinePoint> curve_points(const Curve& c, std::uint64_t budget) {
    const ExtField& field = c.field();
    require_budget(field.order(), budget);
    const auto root = square_root_table(field);
    std::vector<AffinePoint> points;
    for (const auto& x : field.elements()) {
        const auto r = root[c.f().eval(x).index()];
        if (r < 0) continue;
        const FieldElement y = field.from_index(static_cast<std::uint64_t>(r));
        const FieldElement neg_y = -y;
        points.push_back({x, std::min(y, neg_y)});
        if (!y.is_zero()) points.push_back({x, std::max(y, neg_y)});
    }
    return points;
}

MumfordDivisor divisor_from_point(const Curve& c, const AffinePoint& point) {
    if (!(point.x.field() == c.field()) || !c.contains(point.x, point.y)) {
        throw Error(ErrorCode::PointNotOnCurve, "(" + std::to_string(point.x.index()) + ", " +
                                                    std::to_string(point.y.index()) + ")");
    }
    const ExtField& field = c.field();
    Poly u(field, {-point.x, field.one()});
    return MumfordDivisor(std::move(u), Poly::constant(point.y));
}

bool is_valid_divisor(const Curve& c, const MumfordDivisor& d) {
    if (!(d.u().field() == c.field())) return false;
    const Poly& u = d.u();
    const Poly& v = d.v();
    if (!u.is_monic() || u.degree() > 2) return false;
    if (u.degree() == 0) return v.is_zero();
    if (v.degree() >= u.degree()) return false;
    return ((v * v - c.f()) % u).is_zero();
}

MumfordDivisor cantor_add(const Curve& c, const MumfordDivisor& d1, const MumfordDivisor& d2) {
    require_valid(c, d1);
    require_valid(c, d2);
    const Poly& u1 = d1.u();
    const Poly& v1 = d1.v();
    const Poly& u2 = d2.u();
    const Poly& v2 = d2.v();
    const Poly& f = c.f();

    // Composition: d = gcd(u1, u2, v1 + v2) = s1*u1 + s2*u2 + s3*(v1 + v2).
    const ExtendedGcd g1 = xgcd(u1, u2);
    const ExtendedGcd g2 = xgcd(g1.g, v1 + v2);
    const Poly& d = g2.g;
    const Poly s1 = g2.s * g1.s;
    const Poly s2 = g2.s * g1.t;
    const Poly& s3 = g2.t;

    Poly u = (u1 * u2) / (d * d);
    Poly v = ((s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + f)) / d) % u;

    // Reduction.
    while (u.degree() > 2) {
        const Poly next_u = ((f - v * v) / u).monic();
        v = (-v) % next_u;
        u = next_u;
    }
    u = u.monic();
    v = v % u;
    return MumfordDivisor(std::move(u), std::move(v));
}

MumfordDivisor divisor_neg(const Curve& c, const MumfordDivisor& d) {
    require_valid(c, d);
    return MumfordDivisor(d.u(), (-d.v()) % d.u());
}

MumfordDivisor scalar_mul(const Curve& c, const MumfordDivisor& d, std::uint64_t m) {
    require_valid(c, d);
    MumfordDivisor result = MumfordDivisor::identity(c.field());
    MumfordDivisor addend = d;
    while (m > 0) {
        if (m & 1) result = cantor_add(c, result, addend);
        m >>= 1;
        if (m > 0) addend = cantor_add(c, addend, addend);
    }
    return result;
}

std::vector<MumfordDivisor> jacobian_enumerate(const Curve& c, std::uint64_t budget) {
    const ExtField& field = c.field();
    const std::uint64_t q = field.order();
    require_budget(q, budget);
    if (weil_interval(q).first > static_cast<double>(budget)) {
        throw Error(ErrorCode::BudgetExceeded, "Jacobian order is at least " +
                                                   std::to_string(weil_interval(q).first) + " > budget " +
                                                   std::to_string(budget));
    }
    const auto overflow = [&](std::size_t count) {
        if (count > budget) {
            throw Error(ErrorCode::BudgetExceeded, "more than " + std::to_string(budget) + " divisors");
        }
    };

    std::vector<MumfordDivisor> out{MumfordDivisor::identity(field)};
    for (const auto& pt : curve_points(c, budget)) {
        out.push_back(divisor_from_point(c, pt));
        overflow(out.size());
    }

    // Weight 2: for u = x^2 + u1 x + u0 with f = r1 x + r0 (mod u), v = v1 x + v0
    // satisfies u | v^2 - f iff
    //   2 v0 v1 - v1^2 u1 = r1   and   v0^2 - v1^2 u0 = r0.
    // v1 != 0 fixes v0 by the first equation; v1 = 0 needs r1 = 0 and v0^2 = r0.
    const auto root = square_root_table(field);
    const auto elements = field.elements();
    const FieldElement two_inv = field.from_integer(2).inverse();
    std::vector<std::pair<FieldElement, FieldElement>> vs;  // (v0, v1)
    for (const auto& u0 : elements) {
        for (const auto& u1 : elements) {
            const Poly u(field, {u0, u1, field.one()});
            const Poly r = c.f() % u;
            const FieldElement r0 = r.coeff(0);
            const FieldElement r1 = r.coeff(1);
            vs.clear();
            for (const auto& v1 : elements) {
                if (v1.is_zero()) {
                    if (!r1.is_zero()) continue;
                    const auto y = root[r0.index()];
                    if (y < 0) continue;
                    const FieldElement v0 = field.from_index(static_cast<std::uint64_t>(y));
                    vs.emplace_back(v0, v1);
                    if (!v0.is_zero()) vs.emplace_back(-v0, v1);
                    continue;
                }
                const FieldElement v1_sq = v1 * v1;
                const FieldElement v0 = (r1 + v1_sq * u1) * two_inv / v1;
                if (v0 * v0 - v1_sq * u0 == r0) vs.emplace_back(v0, v1);
            }
            std::sort(vs.begin(), vs.end());
            for (const auto& [v0, v1] : vs) {
                out.emplace_back(u, Poly(field, {v0, v1}));
                overflow(out.size());
            }
        }
    }
    return out;
}

std::uint64_t jacobian_order(const Curve& c, std::uint64_t budget) { return jacobian_enumerate(c, budget).size(); }

Poly first_squarefree_quintic(const ExtField& field) {
    const std::uint64_t q = field.order();
    std::vector<std::uint64_t> digits(5, 0);  // digits[0] = c0, most significant
    while (true) {
        std::vector<std::uint64_t> coeffs = digits;
        coeffs.push_back(1);
        Poly f = Poly::from_indices(field, coeffs);
        if (is_squarefree(f)) return f;
        std::size_t pos = 5;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < q) break;
            digits[pos] = 0;
            if (pos == 0) throw Error(ErrorCode::NotSquarefree, "no squarefree quintic");
        }
    }
}

std::pair<Poly, std::uint64_t> squarefree_from_template(const ExtField& field, std::string_view templ,
                                                         std::uint64_t start) {
    for (std::uint64_t c = start; c < field.order(); ++c) {
        std::string text;
        std::size_t pos = 0;
        while (pos <= templ.size()) {
            std::size_t comma = templ.find(',', pos);
            if (comma == std::string_view::npos) comma = templ.size();
            std::string_view token = templ.substr(pos, comma - pos);
            if (!text.empty()) text += ',';
            text += token == "c" ? std::to_string(c) : std::string(token);
            pos = comma + 1;
        }
        Poly f = Poly::parse(field, text);
        if (!f.is_zero() && f.is_monic() && is_squarefree(f)) return {std::move(f), c};
        if (templ.find('c') == std::string_view::npos) break;
    }
    throw Error(ErrorCode::NotSquarefree, "no squarefree instance of template \"" + std::string(templ) + "\"");
}

}  // namespace xjac
