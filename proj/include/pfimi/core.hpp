#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace pfimi {

using Item = std::uint32_t;
using Tid = std::uint32_t;
using Count = std::uint64_t;

/// Strictly ascending set of item ids. Ordering is lexicographic on the
/// ascending sequence, so a proper prefix sorts before its extensions.
class Itemset {
public:
    Itemset() = default;
    Itemset(std::initializer_list<Item> items);
    /// Sorts and removes duplicates.
    explicit Itemset(std::vector<Item> items);
    /// Caller guarantees `items` is already strictly ascending.
    static Itemset from_sorted(std::vector<Item> items);

    const std::vector<Item>& items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }
    Item operator[](std::size_t i) const { return items_[i]; }
    Item back() const { return items_.back(); }

    bool contains(Item b) const;
    bool is_subset_of(const Itemset& other) const;
    /// Contains every item of `other`.
    bool includes(const Itemset& other) const { return other.is_subset_of(*this); }
    Itemset with(Item b) const;
    Itemset unite(const Itemset& other) const;
    Itemset minus(const Itemset& other) const;
    Itemset intersect(const Itemset& other) const;

    /// Space separated ids, e.g. "1 3 4".
    std::string str() const;

    friend bool operator==(const Itemset&, const Itemset&) = default;
    friend auto operator<=>(const Itemset& a, const Itemset& b) { return a.items_ <=> b.items_; }

private:
    std::vector<Item> items_;
};

struct ItemsetHash {
    std::size_t operator()(const Itemset& s) const noexcept;
};

/// Returns true when the ids are strictly ascending.
bool is_strictly_ascending(const std::vector<Item>& items);

struct Transaction {
    Tid tid = 0;
    Itemset items;
    friend bool operator==(const Transaction&, const Transaction&) = default;
};

/// Ascending, duplicate-free transaction ids.
using Tidlist = std::vector<Tid>;
/// Tids of the parent prefix missing from the child (see diffset_from_parent).
using Diffset = std::vector<Tid>;

/// Vertical view: one tidlist per item id.
struct VerticalDb {
    std::vector<Tidlist> tidlists;
    Tidlist all_tids;
};

/// Horizontal database. Item ids are dense in [0, n_items); labels() maps a
/// dense id back to the original label (identity when constructed in memory).
class TransactionDB {
public:
    TransactionDB() = default;
    /// Tids must be unique. n_items = 0 means "max id + 1".
    explicit TransactionDB(std::vector<Transaction> txns, std::size_t n_items = 0);
    /// Rows get tids first_tid, first_tid+1, ...
    static TransactionDB from_rows(const std::vector<std::vector<Item>>& rows, Tid first_tid = 0);

    const std::vector<Transaction>& transactions() const noexcept { return txns_; }
    std::size_t size() const noexcept { return txns_.size(); }
    bool empty() const noexcept { return txns_.empty(); }
    std::size_t n_items() const noexcept { return n_items_; }
    const Transaction& operator[](std::size_t i) const { return txns_[i]; }

    std::uint64_t label(Item dense) const;
    const std::vector<std::uint64_t>& labels() const noexcept { return labels_; }
    void set_labels(std::vector<std::uint64_t> labels);

    VerticalDb vertical() const;
    /// supp({i}) for every dense id.
    std::vector<Count> item_supports() const;

    friend bool operator==(const TransactionDB&, const TransactionDB&) = default;

private:
    std::vector<Transaction> txns_;
    std::size_t n_items_ = 0;
    std::vector<std::uint64_t> labels_;
};

/// Same transaction sequence in original-label space, ignoring tids and the
/// item universe size. This is the equality that survives a FIMI round trip.
bool equivalent(const TransactionDB& a, const TransactionDB& b);

/// Work counters; the desk-scale stand-in for per-PBEC cost.
struct WorkCounters {
    std::uint64_t intersections = 0;
    std::uint64_t tids_scanned = 0;
    std::uint64_t support_computations = 0;
    std::uint64_t fis_emitted = 0;
    std::uint64_t closure_events = 0;

    WorkCounters& operator+=(const WorkCounters& o);
};

Count support(const TransactionDB& db, const Itemset& u);
Tidlist tidlist(const TransactionDB& db, const Itemset& u);
Tidlist tidlist(const VerticalDb& vdb, const Itemset& u);

Tidlist intersect(const Tidlist& a, const Tidlist& b);
Tidlist intersect(const Tidlist& a, const Tidlist& b, WorkCounters& work);
/// a \ b for ascending lists.
Tidlist difference(const Tidlist& a, const Tidlist& b);
Tidlist difference(const Tidlist& a, const Tidlist& b, WorkCounters& work);

/// d(P ∪ {i,j}) = d(P ∪ {j}) \ d(P ∪ {i}); supp(P∪{i,j}) = supp(P∪{i}) − |result|.
/// Both arguments must be diffsets against the same parent prefix P.
Diffset diffset_from_parent(const Diffset& d_pj, const Diffset& d_pi);

/// ceil(rminsup·n), at least 1. rminsup must lie in (0,1].
Count absolute_minsup(double rminsup, std::size_t n);

/// Prefix-based equivalence class [prefix | extensions].
struct Pbec {
    Itemset prefix;
    std::vector<Item> extensions;
    Count est_count = 0;

    friend bool operator==(const Pbec&, const Pbec&) = default;
};

/// prefix ⊊ x and x \ prefix ⊆ extensions.
bool pbec_contains(const Pbec& p, const Itemset& x);

struct FiRecord {
    Itemset itemset;
    Count support = 0;
    friend bool operator==(const FiRecord&, const FiRecord&) = default;
    friend auto operator<=>(const FiRecord&, const FiRecord&) = default;
};

using FiSink = std::function<void(const Itemset&, Count)>;
using FiList = std::vector<FiRecord>;

/// Sorts lexicographically by itemset; used only when comparing or reporting.
void canonicalize(FiList& fis);

}  // namespace pfimi
