#ifndef XJAC_CHARSUM_HPP
#define XJAC_CHARSUM_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xjac/error.hpp"
#include "xjac/field.hpp"
#include "xjac/poly.hpp"

namespace xjac {

/// e_p(t) = exp(2 pi i t / p).
std::complex<double> e_p(std::uint64_t p, std::uint64_t t);

/// Indexes the additive character psi_a(x) = e_p(Tr(a x)); a = 0 is the
/// trivial character. Ranging a over the field lists every character once.
struct CharacterIndex {
    FieldElement a;

    bool is_trivial() const noexcept { return a.is_zero(); }
};

std::complex<double> psi_eval(const CharacterIndex& chi, const FieldElement& x);

/// sum_{x=0}^{p-1} e_p(a x): p for a = 0, otherwise 0.
std::complex<double> orthogonality_sum(std::uint64_t p, std::uint64_t a);

struct CharSumReport {
    double magnitude = 0.0;
    double bound = 0.0;
    /// magnitude / bound when bound > 0, otherwise 0.
    double ratio = 0.0;
    /// Set when the bound does not apply (e.g. TrivialCharacter); magnitude is
    /// still meaningful.
    std::optional<ErrorCode> caveat;
    std::string params;
};

/// d * q^{1 - 1/(2d)}.
double mordell_bound(int degree, std::uint64_t q);

/// |sum_{x in F_q} psi(P(x))| against Mordell's bound. Throws DegreeTooHigh
/// when deg P >= p.
CharSumReport poly_char_sum(const ExtField& field, const Poly& P, const CharacterIndex& chi);

/// F_p-span of a subset of the basis {1, alpha, ..., alpha^{n-1}}; bit i of
/// the mask selects alpha^i.
class AdditiveSubgroup {
   public:
    explicit AdditiveSubgroup(std::uint64_t basis_mask) : mask_(basis_mask) {}

    /// span{alpha^first, ..., alpha^{last-1}}.
    static AdditiveSubgroup span_range(std::size_t first, std::size_t last);

    std::uint64_t mask() const noexcept { return mask_; }
    std::size_t dimension() const noexcept;
    /// p^dimension.
    std::uint64_t size(std::uint64_t p) const;
    bool contains_basis(std::size_t i) const noexcept { return (mask_ >> i) & 1; }

   private:
    std::uint64_t mask_;
};

/// All p^dim elements of the span in increasing packed-index order.
std::vector<FieldElement> subgroup_elements(const ExtField& field, const AdditiveSubgroup& V,
                                            std::uint64_t budget = 1'000'000);

/// sum_{a in F_q} |sum_{x in V} psi_1(a x)| against the bound p^n.
CharSumReport winterhof_sum(const ExtField& field, const AdditiveSubgroup& V, std::uint64_t budget = 10'000'000);

/// sum_{x in F_p} |sum_{s=0}^{L-1} e_p(x s)| against p log2 p.
CharSumReport interval_char_sum(std::uint64_t p, std::uint64_t L);

}  // namespace xjac

#endif  // XJAC_CHARSUM_HPP
