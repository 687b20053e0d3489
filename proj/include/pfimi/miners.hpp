#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pfimi/core.hpp"

namespace pfimi {

/// Apriori with a prefix trie: join + subset-prune candidate generation and
/// trie-walk support counting. Streams every FI (never ∅) into `sink`.
WorkCounters apriori(const TransactionDB& db, Count minsup, const FiSink& sink);

struct EclatOptions {
    bool use_diffsets = false;
    /// Process extensions in ascending support of prefix ∪ {e}, ties by id.
    bool dynamic_order = false;
    /// Absorb extensions e with supp(prefix ∪ {e}) = supp(prefix).
    bool closure_opt = false;
};

/// Reported once per PBEC visited when closure_opt is on:
/// |W| absorbed at this level and |prefix ∪ W| including earlier absorptions.
using ClosureObserver = std::function<void(std::size_t w_size, std::size_t closed_size)>;

WorkCounters eclat(const TransactionDB& db, Count minsup, const EclatOptions& opts, const FiSink& sink,
                   const ClosureObserver& observer = {});

/// One extension of an Eclat class: item and tidlist of prefix ∪ {item}.
struct EclatMember {
    Item item;
    Tidlist tids;
};

/// DFS over [prefix | members] in the given member order (dynamic_order may
/// reorder). Members must already be frequent. Emits every prefix ∪ X with X
/// nonempty; the prefix itself is not emitted.
void eclat_enumerate(const Itemset& prefix, Count prefix_support, std::vector<EclatMember> members,
                     Count minsup, const EclatOptions& opts, const FiSink& sink, WorkCounters& work,
                     const ClosureObserver& observer = {});

/// FP-growth: two-scan FP-tree with descending-support item order,
/// conditional pattern bases and the single-path shortcut.
WorkCounters fpgrowth(const TransactionDB& db, Count minsup, const FiSink& sink);

/// DFS-MFI schema. Roots are visited in ascending id; a candidate (no frequent
/// extension by a larger item) is kept iff no superset is already in the
/// result. With all frequent items as roots the result is the exact MFI set.
std::vector<Itemset> mfi_mine(const TransactionDB& db, Count minsup, const std::vector<Item>& roots,
                              WorkCounters* work = nullptr);
std::vector<Itemset> mfi_mine(const TransactionDB& db, Count minsup);

/// Items with supp({i}) >= minsup, ascending.
std::vector<Item> frequent_items(const TransactionDB& db, Count minsup);

enum class Algo { apriori, eclat, fpgrowth };
Algo parse_algo(const std::string& name);

/// Runs a miner and collects its stream, canonically sorted.
FiList mine(const TransactionDB& db, Count minsup, Algo algo, const EclatOptions& opts = {},
            WorkCounters* work = nullptr);

struct Rule {
    Itemset antecedent;
    Itemset consequent;
    double confidence = 0.0;
    Count support = 0;
};

/// All rules V ⇒ U\V with supp(U)/supp(V) >= minconf. Antecedents shrink one
/// item at a time; a failed antecedent is not shrunk further. Throws
/// std::logic_error when a needed subset support is missing from `fis`.
std::vector<Rule> generate_rules(const FiList& fis, double minconf);

}  // namespace pfimi
