#include <algorithm>

#include "pfimi/miners.hpp"

namespace pfimi {
namespace {

// FP-tree with index links. Node 0 is the root.
struct FpTree {
    struct Node {
        Item item = 0;
        Count count = 0;
        int parent = -1;
        int next = -1;  // next node carrying the same item
        std::vector<int> children;
    };
    struct Header {
        Item item;
        Count support;
        int head;
    };

    std::vector<Node> nodes{Node{}};
    std::vector<Header> header;  // descending support; ties by id
    std::vector<int> rank;       // item -> header index, -1 if infrequent

    // Items of each weighted path must already be sorted by header rank.
    void insert(const std::vector<Item>& path, Count count) {
        int cur = 0;
        for (Item b : path) {
            int found = -1;
            for (int c : nodes[static_cast<std::size_t>(cur)].children) {
                if (nodes[static_cast<std::size_t>(c)].item == b) {
                    found = c;
                    break;
                }
            }
            if (found < 0) {
                found = static_cast<int>(nodes.size());
                Node n;
                n.item = b;
                n.parent = cur;
                auto& h = header[static_cast<std::size_t>(rank[b])];
                n.next = h.head;
                h.head = found;
                nodes.push_back(std::move(n));
                nodes[static_cast<std::size_t>(cur)].children.push_back(found);
            }
            nodes[static_cast<std::size_t>(found)].count += count;
            cur = found;
        }
    }

    bool single_path() const {
        for (const auto& n : nodes)
            if (n.children.size() > 1) return false;
        return true;
    }
};

struct WeightedPath {
    std::vector<Item> items;
    Count count;
};

// Builds a tree from weighted paths: first scan counts, second scan inserts.
FpTree build_tree(const std::vector<WeightedPath>& paths, std::size_t n_items, Count minsup) {
    FpTree tree;
    std::vector<Count> supp(n_items, 0);
    for (const auto& p : paths)
        for (Item b : p.items) supp[b] += p.count;
    for (Item b = 0; b < n_items; ++b)
        if (supp[b] >= minsup) tree.header.push_back({b, supp[b], -1});
    std::sort(tree.header.begin(), tree.header.end(), [](const auto& a, const auto& b) {
        return a.support != b.support ? a.support > b.support : a.item < b.item;
    });
    tree.rank.assign(n_items, -1);
    for (std::size_t r = 0; r < tree.header.size(); ++r) tree.rank[tree.header[r].item] = static_cast<int>(r);
    std::vector<Item> filtered;
    for (const auto& p : paths) {
        filtered.clear();
        for (Item b : p.items)
            if (tree.rank[b] >= 0) filtered.push_back(b);
        std::sort(filtered.begin(), filtered.end(), [&](Item a, Item b) { return tree.rank[a] < tree.rank[b]; });
        if (!filtered.empty()) tree.insert(filtered, p.count);
    }
    return tree;
}

class FpGrowth {
public:
    FpGrowth(std::size_t n_items, Count minsup, const FiSink& sink, WorkCounters& work)
        : n_items_(n_items), minsup_(minsup), sink_(sink), work_(work) {}

    void mine(const FpTree& tree, std::vector<Item>& suffix) {
        if (tree.single_path()) {
            emit_single_path(tree, suffix);
            return;
        }
        // Least frequent header item first.
        for (std::size_t r = tree.header.size(); r-- > 0;) {
            const auto& h = tree.header[r];
            suffix.push_back(h.item);
            emit(suffix, h.support);
            std::vector<WeightedPath> base;
            for (int n = h.head; n >= 0; n = tree.nodes[static_cast<std::size_t>(n)].next) {
                const auto& node = tree.nodes[static_cast<std::size_t>(n)];
                WeightedPath wp{{}, node.count};
                for (int up = node.parent; up > 0; up = tree.nodes[static_cast<std::size_t>(up)].parent)
                    wp.items.push_back(tree.nodes[static_cast<std::size_t>(up)].item);
                ++work_.support_computations;
                work_.tids_scanned += wp.items.size();
                if (!wp.items.empty()) base.push_back(std::move(wp));
            }
            if (!base.empty()) {
                FpTree cond = build_tree(base, n_items_, minsup_);
                if (!cond.header.empty()) mine(cond, suffix);
            }
            suffix.pop_back();
        }
    }

private:
    // Every nonempty combination of the path's nodes; support is the count of the deepest chosen node.
    void emit_single_path(const FpTree& tree, std::vector<Item>& suffix) {
        std::vector<std::pair<Item, Count>> path;
        for (int cur = 0; !tree.nodes[static_cast<std::size_t>(cur)].children.empty();) {
            cur = tree.nodes[static_cast<std::size_t>(cur)].children[0];
            const auto& n = tree.nodes[static_cast<std::size_t>(cur)];
            if (n.count >= minsup_) path.emplace_back(n.item, n.count);
        }
        combine(path, 0, suffix);
    }

    void combine(const std::vector<std::pair<Item, Count>>& path, std::size_t from, std::vector<Item>& items) {
        for (std::size_t k = from; k < path.size(); ++k) {
            items.push_back(path[k].first);
            emit(items, path[k].second);
            combine(path, k + 1, items);
            items.pop_back();
        }
    }

    void emit(const std::vector<Item>& items, Count supp) {
        ++work_.fis_emitted;
        sink_(Itemset(items), supp);
    }

    std::size_t n_items_;
    Count minsup_;
    const FiSink& sink_;
    WorkCounters& work_;
};

}  // namespace

WorkCounters fpgrowth(const TransactionDB& db, Count minsup, const FiSink& sink) {
    WorkCounters work;
    if (minsup > db.size()) return work;
    std::vector<WeightedPath> paths;
    paths.reserve(db.size());
    for (const auto& t : db.transactions()) paths.push_back({{t.items.begin(), t.items.end()}, 1});
    FpTree tree = build_tree(paths, db.n_items(), minsup);
    if (tree.header.empty()) return work;
    std::vector<Item> suffix;
    FpGrowth(db.n_items(), minsup, sink, work).mine(tree, suffix);
    return work;
}

}  // namespace pfimi
