#include "xjac/charsum.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

namespace xjac {

std::complex<double> e_p(std::uint64_t p, std::uint64_t t) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(t % p) / static_cast<double>(p);
    return std::polar(1.0, angle);
}

std::complex<double> psi_eval(const CharacterIndex& chi, const FieldElement& x) {
    if (!(chi.a.field() == x.field())) {
        throw Error(ErrorCode::FieldMismatch, chi.a.field().describe() + " vs " + x.field().describe());
    }
    return e_p(x.field().characteristic(), trace(chi.a * x));
}

std::complex<double> orthogonality_sum(std::uint64_t p, std::uint64_t a) {
    std::complex<double> acc{0.0, 0.0};
    for (std::uint64_t x = 0; x < p; ++x) acc += e_p(p, ((a % p) * x) % p);
    return acc;
}

double mordell_bound(int degree, std::uint64_t q) {
    const double d = static_cast<double>(degree);
    return d * std::pow(static_cast<double>(q), 1.0 - 1.0 / (2.0 * d));
}

CharSumReport poly_char_sum(const ExtField& field, const Poly& P, const CharacterIndex& chi) {
    if (!(P.field() == field) || !(chi.a.field() == field)) {
        throw Error(ErrorCode::FieldMismatch, "polynomial, character and field must agree");
    }
    if (P.is_zero()) throw Error(ErrorCode::OutOfRange, "character sum of the zero polynomial");
    if (static_cast<std::uint64_t>(P.degree()) >= field.characteristic()) {
        throw Error(ErrorCode::DegreeTooHigh, "deg P = " + std::to_string(P.degree()) + " >= p");
    }
    std::complex<double> acc{0.0, 0.0};
    for (const auto& x : field.elements()) acc += psi_eval(chi, P.eval(x));

    CharSumReport report;
    report.magnitude = std::abs(acc);
    std::ostringstream params;
    params << "P=[" << P.to_string() << "] a=" << chi.a.index();
    report.params = params.str();
    if (chi.is_trivial() || P.degree() == 0) {
        // Mordell needs a nontrivial character and a nonconstant argument.
        report.caveat = ErrorCode::TrivialCharacter;
        return report;
    }
    report.bound = mordell_bound(P.degree(), field.order());
    report.ratio = report.magnitude / report.bound;
    return report;
}

AdditiveSubgroup AdditiveSubgroup::span_range(std::size_t first, std::size_t last) {
    std::uint64_t mask = 0;
    for (std::size_t i = first; i < last; ++i) mask |= std::uint64_t{1} << i;
    return AdditiveSubgroup(mask);
}

std::size_t AdditiveSubgroup::dimension() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

std::uint64_t AdditiveSubgroup::size(std::uint64_t p) const {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < dimension(); ++i) s *= p;
    return s;
}

std::vector<FieldElement> subgroup_elements(const ExtField& field, const AdditiveSubgroup& V, std::uint64_t budget) {
    const std::size_t n = field.degree();
    if (n < 64 && (V.mask() >> n) != 0) throw Error(ErrorCode::OutOfRange, "mask selects a basis vector beyond n");
    const std::uint64_t p = field.characteristic();
    const std::uint64_t count = V.size(p);
    if (count > budget) {
        throw Error(ErrorCode::BudgetExceeded, "subgroup of size " + std::to_string(count) + " exceeds budget");
    }
    std::vector<std::size_t> selected;
    for (std::size_t i = 0; i < n; ++i) {
        if (V.contains_basis(i)) selected.push_back(i);
    }
    // Counting in base p over the selected coordinates, lowest first, keeps
    // the packed indices increasing.
    std::vector<FieldElement> out;
    out.reserve(count);
    std::vector<std::uint64_t> coords(n, 0);
    for (std::uint64_t step = 0; step < count; ++step) {
        out.push_back(field.from_coords(coords));
        for (std::size_t j = 0; j < selected.size(); ++j) {
            auto& c = coords[selected[j]];
            if (++c < p) break;
            c = 0;
        }
    }
    return out;
}

CharSumReport winterhof_sum(const ExtField& field, const AdditiveSubgroup& V, std::uint64_t budget) {
    const auto elems = subgroup_elements(field, V, budget);
    if (elems.size() > budget / std::max<std::uint64_t>(field.order(), 1)) {
        throw Error(ErrorCode::BudgetExceeded, "q * |V| exceeds budget");
    }
    const CharacterIndex psi1{field.one()};
    double total = 0.0;
    for (const auto& a : field.elements()) {
        std::complex<double> inner{0.0, 0.0};
        for (const auto& x : elems) inner += psi_eval(psi1, a * x);
        total += std::abs(inner);
    }
    CharSumReport report;
    report.magnitude = total;
    report.bound = static_cast<double>(field.order());
    report.ratio = report.magnitude / report.bound;
    std::ostringstream params;
    params << "mask=" << V.mask() << " dim=" << V.dimension();
    report.params = params.str();
    return report;
}

CharSumReport interval_char_sum(std::uint64_t p, std::uint64_t L) {
    if (L < 1 || L > p) throw Error(ErrorCode::LOutOfRange, "L = " + std::to_string(L) + " outside [1, p]");
    double total = 0.0;
    for (std::uint64_t x = 0; x < p; ++x) {
        std::complex<double> inner{0.0, 0.0};
        for (std::uint64_t s = 0; s < L; ++s) inner += e_p(p, (x * s) % p);
        total += std::abs(inner);
    }
    CharSumReport report;
    report.magnitude = total;
    report.bound = static_cast<double>(p) * std::log2(static_cast<double>(p));
    report.ratio = report.magnitude / report.bound;
    report.params = "L=" + std::to_string(L);
    return report;
}

}  // namespace xjac
