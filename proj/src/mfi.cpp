#include <algorithm>
#include <map>
#include <stdexcept>

#include "pfimi/errors.hpp"
#include "pfimi/miners.hpp"

namespace pfimi {
namespace {

class MfiDfs {
public:
    MfiDfs(const VerticalDb& vdb, Count minsup, WorkCounters& work) : vdb_(vdb), minsup_(minsup), work_(work) {}

    void root(Item r, const std::vector<Item>& tail) {
        std::vector<Item> prefix{r};
        visit(prefix, vdb_.tidlists[r], tail);
    }

    std::vector<Itemset> take() { return std::move(result_); }

private:
    void visit(std::vector<Item>& prefix, const Tidlist& tids, const std::vector<Item>& tail) {
        std::vector<Item> ext;
        std::vector<Tidlist> ext_tids;
        for (Item e : tail) {
            Tidlist t = intersect(tids, vdb_.tidlists[e], work_);
            if (t.size() >= minsup_) {
                ext.push_back(e);
                ext_tids.push_back(std::move(t));
            }
        }
        if (ext.empty()) {
            // Candidate on an MFI: keep it unless something found earlier covers it.
            Itemset cand = Itemset::from_sorted(prefix);
            if (!covered(cand)) result_.push_back(std::move(cand));
            return;
        }
        // Lookahead: if prefix ∪ ext is already covered, every candidate below is too.
        std::vector<Item> all = prefix;
        all.insert(all.end(), ext.begin(), ext.end());
        if (covered(Itemset::from_sorted(std::move(all)))) return;
        for (std::size_t i = 0; i < ext.size(); ++i) {
            prefix.push_back(ext[i]);
            std::vector<Item> rest(ext.begin() + static_cast<std::ptrdiff_t>(i + 1), ext.end());
            visit(prefix, ext_tids[i], rest);
            prefix.pop_back();
        }
    }

    bool covered(const Itemset& x) const {
        return std::any_of(result_.begin(), result_.end(), [&](const Itemset& m) { return x.is_subset_of(m); });
    }

    const VerticalDb& vdb_;
    Count minsup_;
    WorkCounters& work_;
    std::vector<Itemset> result_;
};

}  // namespace

std::vector<Item> frequent_items(const TransactionDB& db, Count minsup) {
    std::vector<Item> out;
    auto supp = db.item_supports();
    for (Item b = 0; b < supp.size(); ++b)
        if (supp[b] >= minsup) out.push_back(b);
    return out;
}

std::vector<Itemset> mfi_mine(const TransactionDB& db, Count minsup, const std::vector<Item>& roots,
                              WorkCounters* work) {
    WorkCounters local;
    WorkCounters& w = work ? *work : local;
    if (minsup > db.size()) return {};
    auto vdb = db.vertical();
    auto freq = frequent_items(db, minsup);
    std::vector<Item> sorted_roots = roots;
    std::sort(sorted_roots.begin(), sorted_roots.end());
    MfiDfs dfs(vdb, minsup, w);
    for (Item r : sorted_roots) {
        if (r >= vdb.tidlists.size() || vdb.tidlists[r].size() < minsup) continue;
        std::vector<Item> tail(std::upper_bound(freq.begin(), freq.end(), r), freq.end());
        dfs.root(r, tail);
    }
    return dfs.take();
}

std::vector<Itemset> mfi_mine(const TransactionDB& db, Count minsup) {
    return mfi_mine(db, minsup, frequent_items(db, minsup));
}

Algo parse_algo(const std::string& name) {
    if (name == "apriori") return Algo::apriori;
    if (name == "eclat") return Algo::eclat;
    if (name == "fpgrowth") return Algo::fpgrowth;
    throw ParameterError("unknown algorithm '" + name + "'");
}

FiList mine(const TransactionDB& db, Count minsup, Algo algo, const EclatOptions& opts, WorkCounters* work) {
    if (minsup == 0) throw ParameterError("minsup must be >= 1");
    FiList out;
    FiSink sink = [&](const Itemset& s, Count c) { out.push_back({s, c}); };
    WorkCounters w;
    switch (algo) {
        case Algo::apriori: w = apriori(db, minsup, sink); break;
        case Algo::eclat: w = eclat(db, minsup, opts, sink); break;
        case Algo::fpgrowth: w = fpgrowth(db, minsup, sink); break;
    }
    if (work) *work = w;
    canonicalize(out);
    return out;
}

std::vector<Rule> generate_rules(const FiList& fis, double minconf) {
    std::map<Itemset, Count> supp;
    for (const auto& f : fis) supp.emplace(f.itemset, f.support);
    auto lookup = [&](const Itemset& s) {
        auto it = supp.find(s);
        if (it == supp.end()) throw std::logic_error("support of subset {" + s.str() + "} missing from FI set");
        return it->second;
    };

    std::vector<Rule> rules;
    for (const auto& f : fis) {
        if (f.itemset.size() < 2) continue;
        // Breadth over antecedent sizes; only antecedents whose rule held are shrunk.
        std::vector<Itemset> frontier{f.itemset};
        std::map<Itemset, bool> seen;
        while (!frontier.empty()) {
            std::vector<Itemset> next;
            for (const auto& v : frontier) {
                if (v.size() < 2) continue;
                for (Item b : v) {
                    Itemset a = v.minus(Itemset{b});
                    if (!seen.emplace(a, true).second) continue;
                    double conf = static_cast<double>(f.support) / static_cast<double>(lookup(a));
                    if (conf >= minconf) {
                        rules.push_back({a, f.itemset.minus(a), conf, f.support});
                        next.push_back(std::move(a));
                    }
                }
            }
            frontier = std::move(next);
        }
    }
    return rules;
}

}  // namespace pfimi
