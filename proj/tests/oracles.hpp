#pragma once

// Fixtures and brute-force references shared by the unit and acceptance tests.
// Nothing here calls the library's miners.

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "pfimi/core.hpp"

namespace oracle {

using pfimi::Count;
using pfimi::Item;
using pfimi::Itemset;
using pfimi::TransactionDB;

// 15 transactions, tids 1..15, items 1..6.
inline TransactionDB example15() {
    return TransactionDB::from_rows({{1, 2, 3, 4, 6}, {3, 5, 6}, {1, 3, 4}, {1, 2, 6}, {1, 4, 5, 6},
                                     {1, 2, 3, 4, 5}, {2, 3, 4, 5, 6}, {2, 3, 4, 5, 6}, {3, 4, 5, 6}, {3, 4, 5, 6},
                                     {1, 2, 3, 4, 5}, {2, 4, 5}, {4, 5, 6}, {4, 5, 6}, {1, 3, 4, 5, 6}},
                                    1);
}

inline TransactionDB apriori_trace_db() {
    return TransactionDB::from_rows({{1, 2, 5}, {1, 3, 5}, {2, 4, 5}, {1, 2, 3, 5}}, 1);
}

inline TransactionDB eclat_trace_db() {
    return TransactionDB::from_rows({{1, 2, 3, 4}, {3, 5}, {1, 3, 4}, {1, 2}, {1, 3, 4, 5}, {1, 2, 3, 4, 5}}, 1);
}

inline TransactionDB fptree_example() {
    return TransactionDB::from_rows({{1, 3, 4}, {5, 4, 6}, {1, 3, 5, 6}, {1, 3, 2}}, 1);
}

using FiMap = std::map<std::vector<Item>, Count>;

inline Count count(const TransactionDB& db, const std::vector<Item>& u) {
    Count c = 0;
    for (const auto& t : db.transactions()) {
        const auto& v = t.items.items();
        if (std::includes(v.begin(), v.end(), u.begin(), u.end())) ++c;
    }
    return c;
}

// Every nonempty subset of the items that occur, counted by a full scan.
inline FiMap brute_fis(const TransactionDB& db, Count minsup) {
    std::set<Item> seen;
    for (const auto& t : db.transactions()) seen.insert(t.items.begin(), t.items.end());
    std::vector<Item> items(seen.begin(), seen.end());
    FiMap out;
    const std::size_t n = items.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Item> u;
        for (std::size_t k = 0; k < n; ++k)
            if (mask >> k & 1) u.push_back(items[k]);
        Count c = count(db, u);
        if (c >= minsup) out[u] = c;
    }
    return out;
}

inline std::set<std::vector<Item>> maximal(const FiMap& fis) {
    std::set<std::vector<Item>> out;
    for (const auto& [u, c] : fis) {
        bool max = true;
        for (const auto& [v, d] : fis)
            if (v.size() > u.size() && std::includes(v.begin(), v.end(), u.begin(), u.end())) {
                max = false;
                break;
            }
        if (max) out.insert(u);
    }
    return out;
}

inline FiMap to_map(const pfimi::FiList& fis) {
    FiMap m;
    for (const auto& r : fis) m[r.itemset.items()] = r.support;
    return m;
}

inline std::set<std::vector<Item>> to_set(const std::vector<Itemset>& v) {
    std::set<std::vector<Item>> s;
    for (const auto& x : v) s.insert(x.items());
    return s;
}

// Each of n_items items enters a row independently with probability p.
inline TransactionDB random_db(std::uint64_t seed, std::size_t n_items, std::size_t n_txns, double p) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<std::vector<Item>> rows(n_txns);
    for (auto& r : rows)
        for (Item b = 0; b < n_items; ++b)
            if (coin(rng)) r.push_back(b);
    return TransactionDB::from_rows(rows);
}

// Upper 0.001 quantile of chi-square(df), Wilson-Hilferty approximation.
inline double chi2_critical_001(double df) {
    const double z = 3.090232306167813;
    double a = 2.0 / (9.0 * df);
    double c = 1.0 - a + z * std::sqrt(a);
    return df * c * c * c;
}

inline double chi2_stat(const std::vector<double>& observed, const std::vector<double>& expected) {
    double s = 0;
    for (std::size_t k = 0; k < observed.size(); ++k) {
        double d = observed[k] - expected[k];
        s += d * d / expected[k];
    }
    return s;
}

}  // namespace oracle
