#include "pfimi/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "pfimi/errors.hpp"
#include "pfimi/rng.hpp"

namespace pfimi {
namespace {

// A transaction never has zero items; redraw zeros.
std::size_t draw_txn_len(std::poisson_distribution<long>& dist, Rng& rng) {
    long n = 0;
    while (n == 0) n = dist(rng);
    return static_cast<std::size_t>(n);
}

// Drops items one at a time while a fresh uniform draw is below c.
std::vector<Item> corrupt(const Itemset& pattern, double c, Rng& rng) {
    std::vector<Item> items(pattern.begin(), pattern.end());
    while (!items.empty() && random01(rng) < c) {
        items.erase(items.begin() + static_cast<std::ptrdiff_t>(random_below(rng, items.size())));
    }
    return items;
}

std::size_t count_new(const std::vector<Item>& txn, const std::vector<Item>& add) {
    std::size_t n = 0;
    for (Item b : add)
        if (!std::binary_search(txn.begin(), txn.end(), b)) ++n;
    return n;
}

void merge_into(std::vector<Item>& txn, const std::vector<Item>& add) {
    for (Item b : add) {
        auto it = std::lower_bound(txn.begin(), txn.end(), b);
        if (it == txn.end() || *it != b) txn.insert(it, b);
    }
}

// Stop filling after this many patterns in a row added nothing new.
constexpr int kMaxStall = 16;

}  // namespace

void GenParams::validate() const {
    if (n_items == 0 || n_patterns == 0 || n_txns == 0) throw ParameterError("generator counts must be >= 1");
    if (!(avg_pattern_len > 0) || !(avg_txn_len > 0) || !(weight_mean > 0))
        throw ParameterError("generator means must be > 0");
    if (corruption_mean < 0) throw ParameterError("corruption_mean must be >= 0");
}

std::vector<Pattern> generate_patterns(const GenParams& p) {
    p.validate();
    Rng rng(mix_seed(p.seed, 0));
    std::poisson_distribution<long> len_dist(p.avg_pattern_len);
    std::exponential_distribution<double> reuse_dist(1.0 / 0.5);
    std::exponential_distribution<double> weight_dist(1.0 / p.weight_mean);

    std::vector<Pattern> out;
    out.reserve(p.n_patterns);
    double total = 0.0;
    for (std::size_t k = 0; k < p.n_patterns; ++k) {
        auto len = static_cast<std::size_t>(std::clamp<long>(len_dist(rng), 1, static_cast<long>(p.n_items)));
        std::vector<Item> items;
        if (k > 0) {
            double f = std::min(1.0, reuse_dist(rng));
            std::vector<Item> prev(out.back().items.begin(), out.back().items.end());
            std::size_t ncopy = std::min(prev.size(), static_cast<std::size_t>(std::floor(f * static_cast<double>(len))));
            // Partial Fisher-Yates: the first ncopy entries become a uniform subset.
            for (std::size_t i = 0; i < ncopy; ++i) {
                std::swap(prev[i], prev[i + random_below(rng, prev.size() - i)]);
                items.push_back(prev[i]);
            }
            std::sort(items.begin(), items.end());
        }
        while (items.size() < len) {
            auto b = static_cast<Item>(random_below(rng, p.n_items));
            auto it = std::lower_bound(items.begin(), items.end(), b);
            if (it == items.end() || *it != b) items.insert(it, b);
        }
        Pattern pat;
        pat.items = Itemset::from_sorted(std::move(items));
        pat.weight = weight_dist(rng);
        pat.corruption = std::min(1.0, 2.0 * p.corruption_mean * random01(rng));
        total += pat.weight;
        out.push_back(std::move(pat));
    }
    for (auto& pat : out) pat.weight /= total;
    return out;
}

TransactionDB generate_db(const GenParams& p) {
    auto patterns = generate_patterns(p);
    Rng rng(mix_seed(p.seed, 1));
    std::vector<double> w;
    w.reserve(patterns.size());
    for (const auto& pat : patterns) w.push_back(pat.weight);
    std::discrete_distribution<std::size_t> pick(w.begin(), w.end());
    std::poisson_distribution<long> len_dist(p.avg_txn_len);

    std::vector<Transaction> txns;
    txns.reserve(p.n_txns);
    bool has_deferred = false;
    std::size_t deferred = 0;
    for (std::size_t t = 0; t < p.n_txns; ++t) {
        std::size_t target = draw_txn_len(len_dist, rng);
        std::vector<Item> items;
        int stall = 0;
        while (items.size() < target && stall < kMaxStall) {
            std::size_t k = has_deferred ? deferred : pick(rng);
            has_deferred = false;
            auto add = corrupt(patterns[k].items, patterns[k].corruption, rng);
            std::size_t fresh = count_new(items, add);
            if (!items.empty() && items.size() + fresh > target) {
                // Overflow: keep it half of the time, otherwise start the next transaction with it.
                if (random01(rng) < 0.5) {
                    merge_into(items, add);
                } else {
                    has_deferred = true;
                    deferred = k;
                }
                break;
            }
            merge_into(items, add);
            stall = fresh == 0 ? stall + 1 : 0;
        }
        txns.push_back({static_cast<Tid>(t), Itemset::from_sorted(std::move(items))});
    }
    return TransactionDB(std::move(txns), p.n_items);
}

TransactionDB generate_clustered_db(const ClusteredParams& p) {
    if (p.n_clusters == 0 || p.items_per_cluster == 0 || p.patterns_per_cluster == 0 || p.n_txns == 0)
        throw ParameterError("clustered generator counts must be >= 1");
    if (!(p.avg_pattern_len > 0) || !(p.avg_txn_len > 0) || !(p.skew > 0))
        throw ParameterError("clustered generator means must be > 0");
    Rng rng(p.seed);
    std::poisson_distribution<long> plen(p.avg_pattern_len);
    std::poisson_distribution<long> tlen(p.avg_txn_len);
    std::exponential_distribution<double> wdist(1.0);

    std::vector<double> cw;
    for (std::size_t k = 0; k < p.n_clusters; ++k) cw.push_back(std::pow(p.skew, static_cast<double>(k)));
    std::discrete_distribution<std::size_t> pick_cluster(cw.begin(), cw.end());

    struct Block {
        std::vector<Pattern> patterns;
        std::discrete_distribution<std::size_t> pick;
    };
    std::vector<Block> blocks(p.n_clusters);
    for (std::size_t k = 0; k < p.n_clusters; ++k) {
        auto base = static_cast<Item>(k * p.items_per_cluster);
        std::vector<double> w;
        for (std::size_t j = 0; j < p.patterns_per_cluster; ++j) {
            auto len = static_cast<std::size_t>(
                std::clamp<long>(plen(rng), 1, static_cast<long>(p.items_per_cluster)));
            std::vector<Item> local(p.items_per_cluster);
            for (std::size_t i = 0; i < local.size(); ++i) local[i] = base + static_cast<Item>(i);
            std::shuffle(local.begin(), local.end(), rng);
            local.resize(len);
            Pattern pat{Itemset(std::move(local)), wdist(rng), 0.5 * random01(rng)};
            w.push_back(pat.weight);
            blocks[k].patterns.push_back(std::move(pat));
        }
        blocks[k].pick = std::discrete_distribution<std::size_t>(w.begin(), w.end());
    }

    std::vector<Transaction> txns;
    txns.reserve(p.n_txns);
    for (std::size_t t = 0; t < p.n_txns; ++t) {
        auto& blk = blocks[pick_cluster(rng)];
        std::size_t target = std::min(draw_txn_len(tlen, rng), p.items_per_cluster);
        std::vector<Item> items;
        int stall = 0;
        while (items.size() < target && stall < kMaxStall) {
            const auto& pat = blk.patterns[blk.pick(rng)];
            auto add = corrupt(pat.items, pat.corruption, rng);
            std::size_t before = items.size();
            merge_into(items, add);
            stall = items.size() == before ? stall + 1 : 0;
        }
        txns.push_back({static_cast<Tid>(t), Itemset::from_sorted(std::move(items))});
    }
    return TransactionDB(std::move(txns), p.n_clusters * p.items_per_cluster);
}

}  // namespace pfimi
