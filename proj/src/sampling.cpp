#include "pfimi/sampling.hpp"

#include <algorithm>
#include <cstdint>
#include <cmath>
#include <limits>
#include <random>

#include "pfimi/errors.hpp"

namespace pfimi {
namespace {

void check_open01(double v, const char* name) {
    if (!(v > 0.0 && v < 1.0)) throw ParameterError(std::string(name) + " must be in (0,1)");
}

Count ceil_count(double x) {
    // Values within a few ulps of an integer are treated as that integer, so
    // that e.g. 3.0000000000000004 does not round up to 4.
    double r = std::round(x);
    double tol = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x));
    if (std::abs(x - r) <= tol) return static_cast<Count>(r);
    return static_cast<Count>(std::ceil(x));
}

// x·ln(x/y) with 0·ln 0 = 0.
double xlog(double x, double y) {
    return x == 0.0 ? 0.0 : x * std::log(x / y);
}

unsigned __int128 random_below_u128(Rng& rng, unsigned __int128 bound) {
    if (bound <= std::numeric_limits<std::uint64_t>::max())
        return random_below(rng, static_cast<std::uint64_t>(bound));
    int bits = 0;
    for (unsigned __int128 b = bound - 1; b != 0; b >>= 1) ++bits;
    const unsigned __int128 mask = bits >= 128 ? ~static_cast<unsigned __int128>(0)
                                               : (static_cast<unsigned __int128>(1) << bits) - 1;
    for (;;) {
        unsigned __int128 r = (static_cast<unsigned __int128>(rng()) << 64) | rng();
        r &= mask;
        if (r < bound) return r;
    }
}

}  // namespace

void SampleParams::validate() const {
    check_open01(eps_db, "eps_db");
    check_open01(delta_db, "delta_db");
    check_open01(eps_fi, "eps_fi");
    check_open01(delta_fi, "delta_fi");
    check_open01(rho, "rho");
}

std::string to_string(SampleSource s) {
    switch (s) {
        case SampleSource::coverage_exact: return "coverage-exact";
        case SampleSource::coverage_modified: return "coverage-modified";
        case SampleSource::reservoir: return "reservoir";
    }
    return "?";
}

Count db_sample_size(double eps, double delta) {
    if (!(eps > 0.0)) throw ParameterError("eps must be > 0");
    if (!(delta > 0.0 && delta < 2.0)) throw ParameterError("delta must be in (0,2)");
    return ceil_count(std::log(2.0 / delta) / (2.0 * eps * eps));
}

Count coverage_sample_size(double eps, double delta, double rho) {
    if (!(eps > 0.0)) throw ParameterError("eps must be > 0");
    if (!(delta > 0.0 && delta < 2.0)) throw ParameterError("delta must be in (0,2)");
    if (!(rho > 0.0 && rho <= 1.0)) throw ParameterError("rho must be in (0,1]");
    return ceil_count(4.0 / (eps * eps * rho) * std::log(2.0 / delta));
}

double kl_divergence(double x, double y) {
    if (!(x >= 0.0 && x <= 1.0) || !(y > 0.0 && y < 1.0)) throw ParameterError("kl arguments out of range");
    return xlog(x, y) + xlog(1.0 - x, 1.0 - y);
}

Count reservoir_sample_size(double eps, double delta, double rho) {
    if (!(eps > 0.0)) throw ParameterError("eps must be > 0 (kl(rho,rho) = 0)");
    check_open01(delta, "delta");
    check_open01(rho, "rho");
    if (rho + eps >= 1.0) throw ParameterError("rho + eps must be < 1");
    return ceil_count(-std::log(delta / 2.0) / kl_divergence(rho + eps, rho));
}

std::uint64_t powerset_mass(const std::vector<Itemset>& mfis) {
    unsigned __int128 total = 0;
    for (const auto& m : mfis) {
        if (m.size() >= 64) return std::numeric_limits<std::uint64_t>::max();
        total += static_cast<unsigned __int128>(1) << m.size();
    }
    return total > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                             : static_cast<std::uint64_t>(total);
}

CoverageSampler::CoverageSampler(std::vector<Itemset> mfis) : mfis_(std::move(mfis)) {
    if (mfis_.empty()) throw ParameterError("coverage sampling needs at least one MFI");
    const std::size_t k = mfis_.size();
    std::vector<unsigned __int128> scaled(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (mfis_[i].size() > 62) throw ParameterError("MFI longer than 62 items; powerset size overflows");
        auto w = static_cast<unsigned __int128>(1) << mfis_[i].size();
        total_ += w;
        scaled[i] = w * k;
    }
    // Vose alias method in exact integer arithmetic; each column holds total_.
    prob_.assign(k, total_);
    alias_.resize(k);
    for (std::size_t i = 0; i < k; ++i) alias_[i] = i;
    std::vector<std::size_t> small, large;
    for (std::size_t i = 0; i < k; ++i) (scaled[i] < total_ ? small : large).push_back(i);
    while (!small.empty() && !large.empty()) {
        std::size_t l = small.back();
        small.pop_back();
        std::size_t g = large.back();
        large.pop_back();
        prob_[l] = scaled[l];
        alias_[l] = g;
        scaled[g] -= total_ - scaled[l];
        (scaled[g] < total_ ? small : large).push_back(g);
    }
}

std::size_t CoverageSampler::pick(Rng& rng) const {
    std::size_t col = random_below(rng, mfis_.size());
    return random_below_u128(rng, total_) < prob_[col] ? col : alias_[col];
}

Itemset CoverageSampler::draw(Rng& rng, bool exact) const {
    for (;;) {
        std::size_t i = pick(rng);
        std::vector<Item> u;
        const auto& m = mfis_[i];
        for (std::size_t pos = 0; pos < m.size(); pos += 64) {
            std::uint64_t bits = rng();
            for (std::size_t k = pos; k < std::min(m.size(), pos + 64); ++k)
                if (bits >> (k - pos) & 1U) u.push_back(m[k]);
        }
        Itemset s = Itemset::from_sorted(std::move(u));
        if (exact) {
            // Only the lowest-index MFI containing s may produce it.
            bool owned = true;
            for (std::size_t l = 0; l < i && owned; ++l)
                if (s.is_subset_of(mfis_[l])) owned = false;
            if (!owned) continue;
        }
        return s;
    }
}

FiSample coverage_sample(const std::vector<Itemset>& mfis, Count n, std::uint64_t seed, bool exact) {
    CoverageSampler sampler(mfis);
    Rng rng(seed);
    FiSample out;
    out.source = exact ? SampleSource::coverage_exact : SampleSource::coverage_modified;
    out.itemsets.reserve(n);
    for (Count k = 0; k < n; ++k) out.itemsets.push_back(sampler.draw(rng, exact));
    return out;
}

ReservoirPolicy::ReservoirPolicy(std::size_t n, std::uint64_t seed, ReservoirAlgo algo)
    : n_(n), rng_(seed), algo_(algo) {
    if (n == 0) throw ParameterError("reservoir size must be >= 1");
}

std::size_t ReservoirPolicy::admit() {
    if (t_ < n_) return static_cast<std::size_t>(t_++);
    if (algo_ == ReservoirAlgo::simple) {
        ++t_;
        auto m = static_cast<std::uint64_t>(std::floor(static_cast<double>(t_) * random01(rng_)));
        return m < n_ ? static_cast<std::size_t>(m) : npos;
    }
    if (!have_skip_) {
        skip_ = draw_skip();
        have_skip_ = true;
    }
    ++t_;
    if (skip_ > 0) {
        --skip_;
        return npos;
    }
    have_skip_ = false;
    return static_cast<std::size_t>(random_below(rng_, n_));
}

bool ReservoirPolicy::wants_next() {
    if (t_ < n_ || algo_ == ReservoirAlgo::simple) return true;
    if (!have_skip_) {
        skip_ = draw_skip();
        have_skip_ = true;
    }
    return skip_ == 0;
}

// Number of records to skip before the next admitted one, given t_ records seen.
std::uint64_t ReservoirPolicy::draw_skip() {
    const double n = static_cast<double>(n_);
    double t = static_cast<double>(t_);
    if (t <= 22.0 * n) {
        // Algorithm X: sequential search of the skip distribution.
        double v = random01(rng_);
        std::uint64_t s = 0;
        double t1 = t + 1.0;
        double quot = (t1 - n) / t1;
        while (quot > v) {
            ++s;
            t1 += 1.0;
            quot *= (t1 - n) / t1;
        }
        return s;
    }
    // Algorithm Z: rejection sampling with the squeeze from Vitter (1985).
    auto open01 = [&] { return 1.0 - random01(rng_); };  // (0,1]
    if (w_ == 0.0) w_ = std::exp(-std::log(open01()) / n);
    const double term = t - n + 1.0;
    for (;;) {
        double u = random01(rng_);
        double x = t * (w_ - 1.0);
        double s = std::floor(x);
        double lhs = std::exp(std::log(((u * std::pow((t + 1.0) / term, 2.0)) * (term + s)) / (t + x)) / n);
        double rhs = (((t + x) / (term + s)) * term) / t;
        if (lhs <= rhs) {
            w_ = rhs / lhs;
            return static_cast<std::uint64_t>(s);
        }
        double y = (((u * (t + 1.0)) / term) * (t + s + 1.0)) / (t + x);
        double denom, numer_lim;
        if (n < s) {
            denom = t;
            numer_lim = term + s;
        } else {
            denom = t - n + s;
            numer_lim = t + 1.0;
        }
        for (double numer = t + s; numer >= numer_lim; numer -= 1.0) {
            y = (y * numer) / denom;
            denom -= 1.0;
        }
        w_ = std::exp(-std::log(open01()) / n);
        if (std::exp(std::log(y) / n) <= (t + x) / t) return static_cast<std::uint64_t>(s);
    }
}

FiSample reservoir(const FiList& stream, std::size_t n, std::uint64_t seed, ReservoirAlgo algo) {
    Reservoir<Itemset> r(n, seed, algo);
    for (const auto& rec : stream) {
        if (r.wants_next()) {
            r.offer(rec.itemset);
        } else {
            r.offer(Itemset{});  // dropped by the policy; counts as seen
        }
    }
    FiSample out;
    out.source = SampleSource::reservoir;
    out.total_seen = r.seen();
    out.short_stream = r.seen() < n;
    out.itemsets = r.take();
    return out;
}

std::vector<Count> multivariate_hypergeom(const std::vector<Count>& counts, Count n, Rng& rng) {
    Count total = 0;
    for (Count c : counts) total += c;
    if (n > total) throw ParameterError("hypergeometric draw larger than the urn");
    std::vector<Count> remaining = counts;
    std::vector<Count> out(counts.size(), 0);
    Count left = total;
    // Draw balls one at a time without replacement.
    for (Count k = 0; k < n; ++k) {
        Count r = random_below(rng, left);
        std::size_t i = 0;
        while (r >= remaining[i]) r -= remaining[i++];
        --remaining[i];
        ++out[i];
        --left;
    }
    return out;
}

std::vector<Count> multivariate_hypergeom(const std::vector<Count>& counts, Count n, std::uint64_t seed) {
    Rng rng(seed);
    return multivariate_hypergeom(counts, n, rng);
}

std::vector<Count> multinomial(const std::vector<double>& p, Count n, std::uint64_t seed) {
    double total = 0.0;
    for (double v : p) {
        if (!(v >= 0.0)) throw ParameterError("multinomial probabilities must be >= 0");
        total += v;
    }
    if (!(total > 0.0)) throw ParameterError("multinomial probabilities sum to zero");
    Rng rng(seed);
    std::vector<Count> out(p.size(), 0);
    Count left = n;
    double mass = total;
    // Conditional binomials; the last category takes the remainder.
    for (std::size_t i = 0; i + 1 < p.size() && left > 0; ++i) {
        double q = std::clamp(p[i] / mass, 0.0, 1.0);
        Count x = std::binomial_distribution<Count>(left, q)(rng);
        out[i] = x;
        left -= x;
        mass -= p[i];
    }
    if (!p.empty()) out.back() += left;
    return out;
}

std::pair<double, double> pbec_size_bounds(double c_est, double eps_fi, double a, double b) {
    if (!(c_est >= 0.0 && c_est <= 1.0)) throw ParameterError("c_est must be in [0,1]");
    if (!(a >= 0.0 && a < 1.0) || !(b >= 0.0 && b < 1.0)) throw ParameterError("a and b must be in [0,1)");
    if (!(eps_fi >= 0.0 && eps_fi <= 1.0)) throw ParameterError("eps must be in [0,1]");
    // The upper side also uses (1 − ε); a strictly sound bound would use (1 + ε) there.
    double c = c_est * (1.0 - eps_fi) * (1.0 + a - b);
    return {c - a, c + b};
}

std::pair<double, double> pbec_size_bounds_exact(double c_est, double a, double b) {
    return pbec_size_bounds(c_est, 0.0, a, b);
}

}  // namespace pfimi
