#ifndef XJAC_HYPERELLIPTIC_HPP
#define XJAC_HYPERELLIPTIC_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "xjac/field.hpp"
#include "xjac/poly.hpp"

namespace xjac {

/// Default cap on enumerated divisors (and on field size for point scans).
inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Imaginary genus-2 curve y^2 = f(x): f monic, squarefree, degree 5.
class Curve {
   public:
    Curve(ExtField field, Poly f);

    const ExtField& field() const noexcept { return field_; }
    const Poly& f() const noexcept { return f_; }

    bool contains(const FieldElement& x, const FieldElement& y) const;

   private:
    ExtField field_;
    Poly f_;
};

struct AffinePoint {
    FieldElement x;
    FieldElement y;

    friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

/// Reduced divisor [u, v] in Mumford form. The identity is [1, 0].
/// Construction does not validate against a curve; see is_valid_divisor.
class MumfordDivisor {
   public:
    MumfordDivisor(Poly u, Poly v);

    static MumfordDivisor identity(const ExtField& field);

    const Poly& u() const noexcept { return u_; }
    const Poly& v() const noexcept { return v_; }
    /// Number of affine points in the support: deg u.
    int weight() const noexcept { return u_.degree(); }
    bool is_identity() const noexcept { return u_.is_one() && v_.is_zero(); }

    friend bool operator==(const MumfordDivisor&, const MumfordDivisor&) = default;

   private:
    Poly u_;
    Poly v_;
};

/// Weil interval [(sqrt(q)-1)^4, (sqrt(q)+1)^4] for genus 2.
std::pair<double, double> weil_interval(std::uint64_t q);

/// All affine points, sorted by (x index, y index). Throws BudgetExceeded when
/// q exceeds the budget.
std::vector<AffinePoint> curve_points(const Curve& c, std::uint64_t budget = kDefaultBudget);

MumfordDivisor divisor_from_point(const Curve& c, const AffinePoint& point);

/// u monic, deg v < deg u <= 2 (or exactly [1, 0]), u | v^2 - f.
bool is_valid_divisor(const Curve& c, const MumfordDivisor& d);

/// Cantor composition followed by reduction.
MumfordDivisor cantor_add(const Curve& c, const MumfordDivisor& d1, const MumfordDivisor& d2);

MumfordDivisor divisor_neg(const Curve& c, const MumfordDivisor& d);

/// Double-and-add; m = 0 gives the identity.
MumfordDivisor scalar_mul(const Curve& c, const MumfordDivisor& d, std::uint64_t m);

/// Every reduced divisor exactly once: identity, then weight 1 in point order,
/// then weight 2 ordered by (u0, u1, v0, v1) packed indices.
std::vector<MumfordDivisor> jacobian_enumerate(const Curve& c, std::uint64_t budget = kDefaultBudget);

std::uint64_t jacobian_order(const Curve& c, std::uint64_t budget = kDefaultBudget);

/// Smallest-index squarefree monic quintic over the field, searching
/// (c0, ..., c4) with c0 most significant.
Poly first_squarefree_quintic(const ExtField& field);

/// Instantiates a template such as "1,c,0,0,0,1": each "c" is replaced by the
/// packed index start, start+1, ... until the result is monic and
/// squarefree. Returns the polynomial and the index used.
std::pair<Poly, std::uint64_t> squarefree_from_template(const ExtField& field, std::string_view templ,
                                                         std::uint64_t start);

}  // namespace xjac

#endif  // XJAC_HYPERELLIPTIC_HPP
