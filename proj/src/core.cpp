#include "pfimi/core.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <unordered_set>

#include "pfimi/errors.hpp"

namespace pfimi {

Itemset::Itemset(std::initializer_list<Item> items) : Itemset(std::vector<Item>(items)) {}

Itemset::Itemset(std::vector<Item> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

Itemset Itemset::from_sorted(std::vector<Item> items) {
    Itemset s;
    s.items_ = std::move(items);
    return s;
}

bool Itemset::contains(Item b) const {
    return std::binary_search(items_.begin(), items_.end(), b);
}

bool Itemset::is_subset_of(const Itemset& other) const {
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

Itemset Itemset::with(Item b) const {
    Itemset out = *this;
    auto it = std::lower_bound(out.items_.begin(), out.items_.end(), b);
    if (it == out.items_.end() || *it != b) out.items_.insert(it, b);
    return out;
}

Itemset Itemset::unite(const Itemset& other) const {
    Itemset out;
    out.items_.reserve(size() + other.size());
    std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out.items_));
    return out;
}

Itemset Itemset::minus(const Itemset& other) const {
    Itemset out;
    std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out.items_));
    return out;
}

Itemset Itemset::intersect(const Itemset& other) const {
    Itemset out;
    std::set_intersection(begin(), end(), other.begin(), other.end(),
                          std::back_inserter(out.items_));
    return out;
}

std::string Itemset::str() const {
    std::string s;
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(items_[i]);
    }
    return s;
}

std::size_t ItemsetHash::operator()(const Itemset& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Item b : s) {
        h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

bool is_strictly_ascending(const std::vector<Item>& items) {
    return std::adjacent_find(items.begin(), items.end(), std::greater_equal<Item>()) == items.end();
}

TransactionDB::TransactionDB(std::vector<Transaction> txns, std::size_t n_items)
    : txns_(std::move(txns)), n_items_(n_items) {
    std::unordered_set<Tid> seen;
    seen.reserve(txns_.size());
    std::size_t max_plus_one = 0;
    for (const auto& t : txns_) {
        if (!seen.insert(t.tid).second) {
            throw ParameterError("duplicate tid " + std::to_string(t.tid));
        }
        if (!t.items.empty()) max_plus_one = std::max<std::size_t>(max_plus_one, t.items.back() + 1);
    }
    if (n_items_ == 0) {
        n_items_ = max_plus_one;
    } else if (max_plus_one > n_items_) {
        throw ParameterError("item id outside the declared universe");
    }
}

TransactionDB TransactionDB::from_rows(const std::vector<std::vector<Item>>& rows, Tid first_tid) {
    std::vector<Transaction> txns;
    txns.reserve(rows.size());
    Tid tid = first_tid;
    for (const auto& r : rows) txns.push_back({tid++, Itemset(r)});
    return TransactionDB(std::move(txns));
}

std::uint64_t TransactionDB::label(Item dense) const {
    return labels_.empty() ? dense : labels_.at(dense);
}

void TransactionDB::set_labels(std::vector<std::uint64_t> labels) {
    if (!labels.empty() && labels.size() != n_items_) {
        throw ParameterError("label table size differs from item count");
    }
    labels_ = std::move(labels);
}

VerticalDb TransactionDB::vertical() const {
    VerticalDb v;
    v.tidlists.resize(n_items_);
    // Tidlists must be ascending even if the horizontal order is not.
    std::vector<std::size_t> idx(txns_.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return txns_[a].tid < txns_[b].tid; });
    for (std::size_t i : idx) {
        v.all_tids.push_back(txns_[i].tid);
        for (Item b : txns_[i].items) v.tidlists[b].push_back(txns_[i].tid);
    }
    return v;
}

std::vector<Count> TransactionDB::item_supports() const {
    std::vector<Count> s(n_items_, 0);
    for (const auto& t : txns_)
        for (Item b : t.items) ++s[b];
    return s;
}

bool equivalent(const TransactionDB& a, const TransactionDB& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& x = a[i].items;
        const auto& y = b[i].items;
        if (x.size() != y.size()) return false;
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (a.label(x[k]) != b.label(y[k])) return false;
        }
    }
    return true;
}

WorkCounters& WorkCounters::operator+=(const WorkCounters& o) {
    intersections += o.intersections;
    tids_scanned += o.tids_scanned;
    support_computations += o.support_computations;
    fis_emitted += o.fis_emitted;
    closure_events += o.closure_events;
    return *this;
}

Count support(const TransactionDB& db, const Itemset& u) {
    Count n = 0;
    for (const auto& t : db.transactions())
        if (u.is_subset_of(t.items)) ++n;
    return n;
}

Tidlist tidlist(const TransactionDB& db, const Itemset& u) {
    Tidlist out;
    for (const auto& t : db.transactions())
        if (u.is_subset_of(t.items)) out.push_back(t.tid);
    std::sort(out.begin(), out.end());
    return out;
}

Tidlist tidlist(const VerticalDb& vdb, const Itemset& u) {
    if (u.empty()) return vdb.all_tids;
    for (Item b : u)
        if (b >= vdb.tidlists.size()) return {};
    Tidlist acc = vdb.tidlists[u[0]];
    for (std::size_t k = 1; k < u.size() && !acc.empty(); ++k) acc = intersect(acc, vdb.tidlists[u[k]]);
    return acc;
}

Tidlist intersect(const Tidlist& a, const Tidlist& b) {
    Tidlist out;
    out.reserve(std::min(a.size(), b.size()));
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Tidlist intersect(const Tidlist& a, const Tidlist& b, WorkCounters& work) {
    ++work.intersections;
    ++work.support_computations;
    work.tids_scanned += a.size() + b.size();
    return intersect(a, b);
}

Tidlist difference(const Tidlist& a, const Tidlist& b) {
    Tidlist out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Tidlist difference(const Tidlist& a, const Tidlist& b, WorkCounters& work) {
    ++work.intersections;
    ++work.support_computations;
    work.tids_scanned += a.size() + b.size();
    return difference(a, b);
}

Diffset diffset_from_parent(const Diffset& d_pj, const Diffset& d_pi) {
    return difference(d_pj, d_pi);
}

Count absolute_minsup(double rminsup, std::size_t n) {
    if (!(rminsup > 0.0) || rminsup > 1.0) throw ParameterError("relative minsup must be in (0,1]");
    // Guard against 0.3*10 = 3.0000000000000004 rounding up to 4.
    double x = rminsup * static_cast<double>(n);
    double r = std::round(x);
    Count m = std::abs(x - r) < 1e-9 ? static_cast<Count>(r) : static_cast<Count>(std::ceil(x));
    return std::max<Count>(1, m);
}

bool pbec_contains(const Pbec& p, const Itemset& x) {
    if (x.size() <= p.prefix.size() || !p.prefix.is_subset_of(x)) return false;
    for (Item b : x) {
        if (p.prefix.contains(b)) continue;
        if (std::find(p.extensions.begin(), p.extensions.end(), b) == p.extensions.end()) return false;
    }
    return true;
}

void canonicalize(FiList& fis) {
    std::sort(fis.begin(), fis.end());
}

}  // namespace pfimi
