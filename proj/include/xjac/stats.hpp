#ifndef XJAC_STATS_HPP
#define XJAC_STATS_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "xjac/extractors.hpp"
#include "xjac/hyperelliptic.hpp"

namespace xjac {

using Rational = boost::multiprecision::cpp_rational;

/// Integer counts of outcomes in [0, space_size). Probabilities are the exact
/// rationals count / total.
class Tally {
   public:
    explicit Tally(std::uint64_t space_size);

    void add(std::uint64_t outcome, std::uint64_t count = 1);
    void merge(const Tally& other);

    std::uint64_t space_size() const noexcept { return space_size_; }
    std::uint64_t total() const noexcept { return total_; }
    std::uint64_t count(std::uint64_t outcome) const;
    /// Nonzero counts only, ascending outcome.
    const std::map<std::uint64_t, std::uint64_t>& counts() const noexcept { return counts_; }

    friend bool operator==(const Tally&, const Tally&) = default;

   private:
    std::uint64_t space_size_;
    std::uint64_t total_ = 0;
    std::map<std::uint64_t, std::uint64_t> counts_;
};

/// SD against the uniform distribution on the tally's space:
/// 1/2 sum_x |c_x/N - 1/m|.
Rational statistical_distance_exact(const Tally& t);
double statistical_distance(const Tally& t);

/// sum_x (c_x/N)^2.
Rational collision_probability_exact(const Tally& t);
double collision_probability(const Tally& t);

/// Col >= (1 + 4 SD^2) / m, decided in exact arithmetic.
bool col_sd_relation_check(const Tally& t);

bool delta_uniform_check(const Tally& t, double delta);

/// sqrt(p^k) / (2 sqrt(q) (q + 1)) with q = p^n; the O-constant is taken as 1.
double bound_thm1(std::uint64_t p, std::size_t n, std::size_t k);

/// sqrt(2^k / p) * (1 + sqrt(log2 p) / (p + 1)), constant 1.
double bound_lemma_sk(std::uint64_t p, std::size_t k);

/// floor((p - 1) / 2^k): number of complete 2^k blocks below p.
std::uint64_t sigma0(std::uint64_t p, std::size_t k);

/// Pass/fail envelope for exact SD: 5 / sqrt(q) for Sum/Prod, 5 * bound_lemma_sk for Sk/Pk.
double sd_envelope(const ExtField& field, ExtractorKind kind, std::size_t k);

/// Counter-based generator: draw i is SplitMix64 applied to seed + (i + 1) * golden
/// gamma. Any split of the draw indices across workers sees the same stream.
class RandomSource {
   public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }
    static constexpr const char* algorithm() { return "splitmix64-counter"; }

    std::uint64_t draw(std::uint64_t counter) const noexcept;
    /// Uniform in [0, bound) for sample number `sample`, by rejection over the
    /// sub-stream (sample, attempt).
    std::uint64_t uniform_below(std::uint64_t sample, std::uint64_t bound) const;

   private:
    std::uint64_t seed_;
};

/// Exact output distribution over an already enumerated Jacobian.
Tally exact_output_distribution(const Curve& c, std::span<const MumfordDivisor> jacobian, ExtractorKind kind,
                                std::size_t k);
Tally exact_output_distribution(const Curve& c, ExtractorKind kind, std::size_t k,
                                std::uint64_t budget = kDefaultBudget);

/// N i.i.d. uniform divisors, drawn as uniform indices into the enumeration.
/// The result does not depend on `workers`.
Tally monte_carlo_distribution(const Curve& c, std::span<const MumfordDivisor> jacobian, ExtractorKind kind,
                               std::size_t k, std::uint64_t samples, const RandomSource& src,
                               unsigned workers = 1);

struct SDReport {
    double sd = 0.0;
    double col = 0.0;
    std::uint64_t m = 0;
    double bound_thm1 = 0.0;
    double bound_lemma_sk = 0.0;
    double envelope = 0.0;
    std::uint64_t p = 0;
    std::size_t n = 0;
    std::uint64_t q = 0;
    std::size_t k = 0;
    ExtractorKind extractor = ExtractorKind::Sum;
    std::string curve;
    bool relation_holds = false;
    bool within_envelope = false;
};

SDReport make_sd_report(const Curve& c, ExtractorKind kind, std::size_t k, const Tally& t);

}  // namespace xjac

#endif  // XJAC_STATS_HPP
