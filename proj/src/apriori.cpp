#include <algorithm>

#include "pfimi/miners.hpp"

namespace pfimi {
namespace {

// Prefix trie. Node 0 is the root (∅); a node at depth k stores a k-itemset
// as the path of items from the root. Children are kept sorted by item.
class PrefixTrie {
public:
    struct Node {
        Item item = 0;
        Count support = 0;
        std::size_t depth = 0;
        std::vector<std::pair<Item, std::uint32_t>> children;
    };

    PrefixTrie() { nodes_.push_back(Node{}); }

    std::uint32_t add_child(std::uint32_t parent, Item b) {
        auto id = static_cast<std::uint32_t>(nodes_.size());
        nodes_.push_back(Node{b, 0, nodes_[parent].depth + 1, {}});
        nodes_[parent].children.emplace_back(b, id);
        return id;
    }

    void set_support(std::uint32_t node, Count s) { nodes_[node].support = s; }

    int find_child(std::uint32_t parent, Item b) const {
        const auto& ch = nodes_[parent].children;
        auto it = std::lower_bound(ch.begin(), ch.end(), b,
                                   [](const auto& e, Item x) { return e.first < x; });
        return it != ch.end() && it->first == b ? static_cast<int>(it->second) : -1;
    }

    bool contains(const std::vector<Item>& path) const {
        std::uint32_t cur = 0;
        for (Item b : path) {
            int c = find_child(cur, b);
            if (c < 0) return false;
            cur = static_cast<std::uint32_t>(c);
        }
        return true;
    }

    // Increment-Support: walk the transaction through the trie down to depth k.
    void increment(std::uint32_t node, const std::vector<Item>& t, std::size_t pos, std::size_t k,
                   WorkCounters& work) {
        const Node& n = nodes_[node];
        if (n.depth == k) {
            ++nodes_[node].support;
            return;
        }
        std::size_t need = k - n.depth;
        for (std::size_t p = pos; p + need <= t.size(); ++p) {
            int c = find_child(node, t[p]);
            ++work.support_computations;
            if (c >= 0) increment(static_cast<std::uint32_t>(c), t, p + 1, k, work);
        }
    }

    // Drops children at depth k below minsup; returns how many survived.
    std::size_t prune_level(std::uint32_t node, std::size_t k, Count minsup) {
        Node& n = nodes_[node];
        if (n.depth + 1 == k) {
            std::erase_if(n.children, [&](const auto& e) { return nodes_[e.second].support < minsup; });
            return n.children.size();
        }
        std::size_t kept = 0;
        for (auto& [b, c] : nodes_[node].children) kept += prune_level(c, k, minsup);
        return kept;
    }

    // Generate-Candidates: join siblings at depth k-1, prune by the (k-1)-subsets.
    std::size_t generate(std::uint32_t node, std::vector<Item>& path, std::size_t k) {
        std::size_t made = 0;
        if (nodes_[node].depth + 2 == k) {
            auto siblings = nodes_[node].children;
            for (std::size_t i = 0; i < siblings.size(); ++i) {
                path.push_back(siblings[i].first);
                for (std::size_t j = i + 1; j < siblings.size(); ++j) {
                    path.push_back(siblings[j].first);
                    if (subsets_frequent(path)) {
                        add_child(siblings[i].second, siblings[j].first);
                        ++made;
                    }
                    path.pop_back();
                }
                path.pop_back();
            }
            return made;
        }
        auto children = nodes_[node].children;
        for (auto& [b, c] : children) {
            path.push_back(b);
            made += generate(c, path, k);
            path.pop_back();
        }
        return made;
    }

    void emit_level(std::uint32_t node, std::vector<Item>& path, std::size_t k, const FiSink& sink,
                    WorkCounters& work) const {
        const Node& n = nodes_[node];
        if (n.depth == k) {
            ++work.fis_emitted;
            sink(Itemset::from_sorted(path), n.support);
            return;
        }
        for (const auto& [b, c] : n.children) {
            path.push_back(b);
            emit_level(c, path, k, sink, work);
            path.pop_back();
        }
    }

private:
    // Test-Subset: every subset missing one of the first k-2 items must be in the trie.
    bool subsets_frequent(const std::vector<Item>& cand) const {
        std::vector<Item> sub;
        for (std::size_t skip = 0; skip + 2 < cand.size(); ++skip) {
            sub.clear();
            for (std::size_t i = 0; i < cand.size(); ++i)
                if (i != skip) sub.push_back(cand[i]);
            if (!contains(sub)) return false;
        }
        return true;
    }

    std::vector<Node> nodes_;
};

}  // namespace

WorkCounters apriori(const TransactionDB& db, Count minsup, const FiSink& sink) {
    WorkCounters work;
    if (minsup > db.size()) return work;
    PrefixTrie trie;
    auto supp = db.item_supports();
    for (Item b = 0; b < supp.size(); ++b)
        if (supp[b] >= minsup) trie.set_support(trie.add_child(0, b), supp[b]);
    std::vector<Item> path;
    trie.emit_level(0, path, 1, sink, work);

    std::vector<Item> t;
    for (std::size_t k = 2;; ++k) {
        if (trie.generate(0, path, k) == 0) break;
        for (const auto& tx : db.transactions()) {
            if (tx.items.size() < k) continue;
            t.assign(tx.items.begin(), tx.items.end());
            trie.increment(0, t, 0, k, work);
        }
        if (trie.prune_level(0, k, minsup) == 0) break;
        trie.emit_level(0, path, k, sink, work);
    }
    return work;
}

}  // namespace pfimi
