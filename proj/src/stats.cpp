#include "xjac/stats.hpp"

#include <cmath>
#include <future>
#include <vector>

#include "xjac/error.hpp"

namespace xjac {

using boost::multiprecision::cpp_int;

Tally::Tally(std::uint64_t space_size) : space_size_(space_size) {
    if (space_size == 0) throw Error(ErrorCode::OutOfRange, "tally needs a nonempty output space");
}

void Tally::add(std::uint64_t outcome, std::uint64_t count) {
    if (outcome >= space_size_) {
        throw Error(ErrorCode::OutOfRange,
                    "outcome " + std::to_string(outcome) + " outside space of size " + std::to_string(space_size_));
    }
    if (count == 0) return;
    counts_[outcome] += count;
    total_ += count;
}

void Tally::merge(const Tally& other) {
    if (other.space_size_ != space_size_) throw Error(ErrorCode::OutOfRange, "merging tallies of different spaces");
    for (const auto& [outcome, count] : other.counts_) add(outcome, count);
}

std::uint64_t Tally::count(std::uint64_t outcome) const {
    auto it = counts_.find(outcome);
    return it == counts_.end() ? 0 : it->second;
}

namespace {

void require_nonempty(const Tally& t) {
    if (t.total() == 0) throw Error(ErrorCode::OutOfRange, "empty tally");
}

// sum_x |m c_x - N|, so that SD = l1 / (2 N m).
cpp_int scaled_l1(const Tally& t) {
    const cpp_int m = t.space_size();
    const cpp_int N = t.total();
    cpp_int acc = 0;
    for (const auto& [outcome, c] : t.counts()) acc += abs(m * c - N);
    acc += (m - t.counts().size()) * N;
    return acc;
}

cpp_int sum_of_squares(const Tally& t) {
    cpp_int acc = 0;
    for (const auto& [outcome, c] : t.counts()) acc += cpp_int(c) * c;
    return acc;
}

}  // namespace

Rational statistical_distance_exact(const Tally& t) {
    require_nonempty(t);
    return Rational(scaled_l1(t), cpp_int(2) * t.total() * t.space_size());
}

double statistical_distance(const Tally& t) { return statistical_distance_exact(t).convert_to<double>(); }

Rational collision_probability_exact(const Tally& t) {
    require_nonempty(t);
    const cpp_int N = t.total();
    return Rational(sum_of_squares(t), N * N);
}

double collision_probability(const Tally& t) { return collision_probability_exact(t).convert_to<double>(); }

bool col_sd_relation_check(const Tally& t) {
    const Rational sd = statistical_distance_exact(t);
    const Rational col = collision_probability_exact(t);
    return col >= (Rational(1) + 4 * sd * sd) / Rational(t.space_size());
}

bool delta_uniform_check(const Tally& t, double delta) {
    // Compare exactly against the double delta, which is itself a dyadic rational.
    return statistical_distance_exact(t) <= Rational(delta);
}

double bound_thm1(std::uint64_t p, std::size_t n, std::size_t k) {
    if (k < 1 || k > n) throw Error(ErrorCode::KOutOfRange, "need 1 <= k <= n");
    const double q = std::pow(static_cast<double>(p), static_cast<double>(n));
    const double pk = std::pow(static_cast<double>(p), static_cast<double>(k));
    return std::sqrt(pk) / (2.0 * std::sqrt(q) * (q + 1.0));
}

double bound_lemma_sk(std::uint64_t p, std::size_t k) {
    if (k < 1) throw Error(ErrorCode::KOutOfRange, "need k >= 1");
    const double pd = static_cast<double>(p);
    return std::sqrt(std::pow(2.0, static_cast<double>(k)) / pd) * (1.0 + std::sqrt(std::log2(pd)) / (pd + 1.0));
}

std::uint64_t sigma0(std::uint64_t p, std::size_t k) { return k >= 64 ? 0 : (p - 1) >> k; }

double sd_envelope(const ExtField& field, ExtractorKind kind, std::size_t k) {
    if (kind == ExtractorKind::Sum || kind == ExtractorKind::Prod) {
        return 5.0 / std::sqrt(static_cast<double>(field.order()));
    }
    return 5.0 * bound_lemma_sk(field.characteristic(), k);
}

std::uint64_t RandomSource::draw(std::uint64_t counter) const noexcept {
    std::uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t RandomSource::uniform_below(std::uint64_t sample, std::uint64_t bound) const {
    if (bound == 0) throw Error(ErrorCode::OutOfRange, "uniform_below(0)");
    // r = 2^64 mod bound; draws at or above 2^64 - r are rejected.
    const std::uint64_t r = (UINT64_MAX % bound + 1) % bound;
    for (std::uint64_t attempt = 0;; ++attempt) {
        // Sub-stream for this sample: counter = sample * 2^16 + attempt.
        const std::uint64_t x = draw((sample << 16) + attempt);
        if (r == 0 || x <= UINT64_MAX - r) return x % bound;
    }
}

Tally exact_output_distribution(const Curve& c, std::span<const MumfordDivisor> jacobian, ExtractorKind kind,
                                std::size_t k) {
    Tally t(output_space_size(c.field(), kind, k));
    for (const auto& d : jacobian) t.add(extract_outcome(c, d, kind, k));
    return t;
}

Tally exact_output_distribution(const Curve& c, ExtractorKind kind, std::size_t k, std::uint64_t budget) {
    validate_extractor(c.field(), kind, k);
    const auto jacobian = jacobian_enumerate(c, budget);
    return exact_output_distribution(c, jacobian, kind, k);
}

Tally monte_carlo_distribution(const Curve& c, std::span<const MumfordDivisor> jacobian, ExtractorKind kind,
                               std::size_t k, std::uint64_t samples, const RandomSource& src, unsigned workers) {
    if (samples == 0) throw Error(ErrorCode::OutOfRange, "Monte-Carlo needs at least one sample");
    if (jacobian.empty()) throw Error(ErrorCode::OutOfRange, "empty Jacobian enumeration");
    const std::uint64_t m = output_space_size(c.field(), kind, k);
    // Outcomes per divisor index, so sampling is a table lookup.
    std::vector<std::uint64_t> outcome(jacobian.size());
    for (std::size_t i = 0; i < jacobian.size(); ++i) outcome[i] = extract_outcome(c, jacobian[i], kind, k);

    workers = std::max(1u, workers);
    const auto run = [&](std::uint64_t first, std::uint64_t last) {
        Tally part(m);
        for (std::uint64_t s = first; s < last; ++s) part.add(outcome[src.uniform_below(s, jacobian.size())]);
        return part;
    };
    std::vector<std::future<Tally>> parts;
    const std::uint64_t chunk = (samples + workers - 1) / workers;
    for (std::uint64_t first = 0; first < samples; first += chunk) {
        const std::uint64_t last = std::min(samples, first + chunk);
        parts.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, run, first, last));
    }
    Tally total(m);
    for (auto& f : parts) total.merge(f.get());
    return total;
}

SDReport make_sd_report(const Curve& c, ExtractorKind kind, std::size_t k, const Tally& t) {
    const ExtField& field = c.field();
    SDReport r;
    r.sd = statistical_distance(t);
    r.col = collision_probability(t);
    r.m = t.space_size();
    r.p = field.characteristic();
    r.n = field.degree();
    r.q = field.order();
    r.k = k;
    r.extractor = kind;
    r.curve = c.f().to_string();
    if (kind == ExtractorKind::Sum || kind == ExtractorKind::Prod) {
        r.bound_thm1 = bound_thm1(r.p, r.n, k);
    } else {
        r.bound_thm1 = bound_thm1(r.p, r.n, 1);
    }
    r.bound_lemma_sk = bound_lemma_sk(r.p, k);
    r.envelope = sd_envelope(field, kind, k);
    r.relation_holds = col_sd_relation_check(t);
    r.within_envelope = delta_uniform_check(t, r.envelope);
    return r;
}

}  // namespace xjac
