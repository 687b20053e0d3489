#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "pfimi/core.hpp"
#include "pfimi/rng.hpp"

namespace pfimi {

/// Accuracy parameters of the two samples: ε, δ for the database sample D~,
/// ε, δ for the FI sample S~, and ρ, the smallest relative PBEC size of interest.
struct SampleParams {
    double eps_db = 0.01;
    double delta_db = 0.05;
    double eps_fi = 0.05;
    double delta_fi = 0.05;
    double rho = 0.001;

    void validate() const;
};

enum class SampleSource { coverage_exact, coverage_modified, reservoir };
std::string to_string(SampleSource s);

struct FiSample {
    std::vector<Itemset> itemsets;
    SampleSource source = SampleSource::coverage_modified;
    std::uint64_t total_seen = 0;  // reservoir only
    bool short_stream = false;     // reservoir saw fewer than n records
};

/// ceil(ln(2/δ) / (2ε²)): Chernoff bound on the database sample size.
Count db_sample_size(double eps, double delta);
/// ceil(4/(ε²ρ) · ln(2/δ)): coverage-algorithm sample size.
Count coverage_sample_size(double eps, double delta, double rho);
/// x ln(x/y) + (1−x) ln((1−x)/(1−y)) with 0·ln 0 = 0.
double kl_divergence(double x, double y);
/// ceil(−ln(δ/2) / kl(ρ+ε, ρ)): reservoir (hypergeometric) sample size.
Count reservoir_sample_size(double eps, double delta, double rho);

/// Samples subsets of powerset(m_1) ∪ ... ∪ powerset(m_k), ∅ included.
/// MFIs are picked with probability 2^|m_i| / Σ 2^|m_j| from an exact
/// integer alias table; the subset keeps each item on a fair coin.
class CoverageSampler {
public:
    /// Throws ParameterError on an empty family or an MFI longer than 62 items.
    explicit CoverageSampler(std::vector<Itemset> mfis);

    /// exact: reject U ⊆ m_l for l < i (uniform over the union).
    /// modified: no rejection (uniform over the multiset union).
    Itemset draw(Rng& rng, bool exact) const;

    /// Σ |powerset(m_i)|; may exceed 64 bits.
    unsigned __int128 total_weight() const noexcept { return total_; }
    const std::vector<Itemset>& mfis() const noexcept { return mfis_; }

private:
    std::size_t pick(Rng& rng) const;

    std::vector<Itemset> mfis_;
    std::vector<unsigned __int128> prob_;  // in units of total_
    std::vector<std::size_t> alias_;
    unsigned __int128 total_ = 0;
};

FiSample coverage_sample(const std::vector<Itemset>& mfis, Count n, std::uint64_t seed, bool exact);

/// Σ 2^|m| over the family, saturating at 2^64−1.
std::uint64_t powerset_mass(const std::vector<Itemset>& mfis);

enum class ReservoirAlgo { simple, vitter };

/// Admission decisions of a size-n reservoir. simple: record t replaces slot
/// floor(t·Random()) when that is < n. vitter: skip counts from Vitter's
/// Algorithm X (t ≤ 22n) and Algorithm Z beyond.
class ReservoirPolicy {
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    ReservoirPolicy(std::size_t n, std::uint64_t seed, ReservoirAlgo algo);

    /// Slot to overwrite (or append to, while filling) for the next record, or npos to drop it.
    std::size_t admit();
    /// False when the next record is certain to be dropped, so callers can skip materializing it.
    bool wants_next();
    std::uint64_t seen() const noexcept { return t_; }
    std::size_t capacity() const noexcept { return n_; }

private:
    std::uint64_t draw_skip();

    std::size_t n_;
    std::uint64_t t_ = 0;
    Rng rng_;
    ReservoirAlgo algo_;
    bool have_skip_ = false;
    std::uint64_t skip_ = 0;
    double w_ = 0.0;  // Algorithm Z state; 0 until first use
};

template <class T>
class Reservoir {
public:
    Reservoir(std::size_t n, std::uint64_t seed, ReservoirAlgo algo) : policy_(n, seed, algo) {
        items_.reserve(n);
    }

    bool wants_next() { return policy_.wants_next(); }

    void offer(const T& x) {
        std::size_t slot = policy_.admit();
        if (slot == ReservoirPolicy::npos) return;
        if (slot == items_.size()) {
            items_.push_back(x);
        } else {
            items_[slot] = x;
        }
    }

    std::uint64_t seen() const noexcept { return policy_.seen(); }
    const std::vector<T>& items() const noexcept { return items_; }
    std::vector<T> take() { return std::move(items_); }
    std::size_t capacity() const noexcept { return policy_.capacity(); }

private:
    ReservoirPolicy policy_;
    std::vector<T> items_;
};

/// Uniform without-replacement sample of size min(n, |stream|).
FiSample reservoir(const FiList& stream, std::size_t n, std::uint64_t seed, ReservoirAlgo algo);

/// Draws X_i, ΣX_i = n, from the multivariate hypergeometric law with urn
/// counts M_i. Throws ParameterError when n > ΣM_i.
std::vector<Count> multivariate_hypergeom(const std::vector<Count>& counts, Count n, std::uint64_t seed);
std::vector<Count> multivariate_hypergeom(const std::vector<Count>& counts, Count n, Rng& rng);
/// Draws from Multinomial(n, p); p is normalized internally.
std::vector<Count> multinomial(const std::vector<double>& p, Count n, std::uint64_t seed);

/// Bounds on the relative size of a PBEC: with c' = c_est(1−ε)(1+a−b),
/// returns (c' − a, c' + b). a and b are the relative numbers of itemsets
/// wrongly added to / missing from the FI set because of the database sample.
std::pair<double, double> pbec_size_bounds(double c_est, double eps_fi, double a, double b);
/// The same bounds without the sampling error ε.
std::pair<double, double> pbec_size_bounds_exact(double c_est, double a, double b);

}  // namespace pfimi
