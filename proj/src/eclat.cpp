#include <algorithm>

#include "pfimi/miners.hpp"

namespace pfimi {
namespace {

// One class member: its item, tidlist or diffset (depending on the level), support.
struct Node {
    Item item;
    Tidlist set;
    Count support;
};

class EclatRun {
public:
    EclatRun(Count minsup, const EclatOptions& opts, const FiSink& sink, WorkCounters& work,
             const ClosureObserver& observer)
        : minsup_(minsup), opts_(opts), sink_(sink), work_(work), observer_(observer) {}

    // `members_diff` tells whether members carry diffsets (true) or tidlists.
    void visit(std::vector<Item>& prefix, Count prefix_support, std::vector<Node>& members, bool members_diff) {
        const std::size_t old_absorbed = absorbed_.size();
        if (opts_.closure_opt) {
            std::erase_if(members, [&](const Node& m) {
                if (m.support != prefix_support) return false;
                absorbed_.push_back(m.item);
                return true;
            });
            std::size_t w = absorbed_.size() - old_absorbed;
            if (w > 0) {
                ++work_.closure_events;
                // prefix ∪ (earlier absorbed subset) ∪ (nonempty new subset)
                emit_combos(prefix, prefix_support, old_absorbed);
            }
            if (observer_) observer_(w, prefix.size() + absorbed_.size());
        }
        if (opts_.dynamic_order) {
            std::sort(members.begin(), members.end(), [](const Node& a, const Node& b) {
                return a.support != b.support ? a.support < b.support : a.item < b.item;
            });
        }
        for (std::size_t i = 0; i < members.size(); ++i) {
            const Node& mi = members[i];
            prefix.push_back(mi.item);
            emit_combos(prefix, mi.support, absorbed_.size());
            std::vector<Node> children;
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const Node& mj = members[j];
                Node child{mj.item, {}, 0};
                if (!opts_.use_diffsets) {
                    child.set = intersect(mi.set, mj.set, work_);
                    child.support = child.set.size();
                } else {
                    // d(Pij) = t(Pi) \ t(Pj) from tidlists, d(Pj) \ d(Pi) from diffsets.
                    child.set = members_diff ? difference(mj.set, mi.set, work_) : difference(mi.set, mj.set, work_);
                    child.support = mi.support - child.set.size();
                }
                if (child.support >= minsup_) children.push_back(std::move(child));
            }
            if (!children.empty() || opts_.closure_opt) {
                visit(prefix, mi.support, children, opts_.use_diffsets);
            }
            prefix.pop_back();
        }
        absorbed_.resize(old_absorbed);
    }

private:
    // Emits prefix ∪ S for every subset S of the absorbed items that contains
    // at least one absorbed item at index >= first_required.
    void emit_combos(const std::vector<Item>& prefix, Count supp, std::size_t first_required) {
        const std::size_t n = absorbed_.size();
        std::vector<Item> items;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (first_required < n && (mask >> first_required) == 0) continue;
            items.assign(prefix.begin(), prefix.end());
            for (std::size_t k = 0; k < n; ++k)
                if (mask >> k & 1U) items.push_back(absorbed_[k]);
            ++work_.fis_emitted;
            sink_(Itemset(items), supp);
        }
    }

    Count minsup_;
    const EclatOptions& opts_;
    const FiSink& sink_;
    WorkCounters& work_;
    const ClosureObserver& observer_;
    std::vector<Item> absorbed_;
};

}  // namespace

void eclat_enumerate(const Itemset& prefix, Count prefix_support, std::vector<EclatMember> members,
                     Count minsup, const EclatOptions& opts, const FiSink& sink, WorkCounters& work,
                     const ClosureObserver& observer) {
    std::vector<Node> nodes;
    nodes.reserve(members.size());
    for (auto& m : members) {
        Count s = m.tids.size();
        if (s >= minsup) nodes.push_back(Node{m.item, std::move(m.tids), s});
    }
    std::vector<Item> path(prefix.begin(), prefix.end());
    EclatRun run(minsup, opts, sink, work, observer);
    run.visit(path, prefix_support, nodes, false);
}

WorkCounters eclat(const TransactionDB& db, Count minsup, const EclatOptions& opts, const FiSink& sink,
                   const ClosureObserver& observer) {
    WorkCounters work;
    if (minsup > db.size()) return work;
    auto vdb = db.vertical();
    std::vector<EclatMember> members;
    for (Item b = 0; b < vdb.tidlists.size(); ++b) {
        if (vdb.tidlists[b].size() >= minsup) members.push_back({b, std::move(vdb.tidlists[b])});
    }
    eclat_enumerate(Itemset{}, db.size(), std::move(members), minsup, opts, sink, work, observer);
    return work;
}

}  // namespace pfimi
