#include "pfimi/scheduler.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "pfimi/errors.hpp"

namespace pfimi {
namespace {

std::vector<Pbec> partition_with(const Itemset& prefix, const std::vector<Item>& extensions, const VerticalDb& vdb,
                                 const std::vector<Itemset>& fi_sample) {
    Tidlist base = tidlist(vdb, prefix);
    std::vector<std::pair<Count, Item>> order;
    order.reserve(extensions.size());
    for (Item b : extensions) {
        Count s = b < vdb.tidlists.size() ? intersect(base, vdb.tidlists[b]).size() : 0;
        order.emplace_back(s, b);
    }
    std::sort(order.begin(), order.end());  // ascending support, ties by id

    std::vector<Pbec> children(order.size());
    std::vector<std::size_t> rank_of;
    for (std::size_t r = 0; r < order.size(); ++r) {
        Item b = order[r].second;
        children[r].prefix = prefix.with(b);
        for (std::size_t k = r + 1; k < order.size(); ++k) children[r].extensions.push_back(order[k].second);
        if (rank_of.size() <= b) rank_of.resize(b + 1, SIZE_MAX);
        rank_of[b] = r;
    }
    // A sample itemset x ⊋ prefix with x \ prefix ⊆ E lies in the child of its
    // lowest-ranked extra item, unless it is exactly that child's prefix.
    for (const auto& x : fi_sample) {
        if (x.size() < prefix.size() + 2 || !prefix.is_subset_of(x)) continue;
        std::size_t best = SIZE_MAX;
        bool inside = true;
        for (Item b : x) {
            if (prefix.contains(b)) continue;
            if (b >= rank_of.size() || rank_of[b] == SIZE_MAX) {
                inside = false;
                break;
            }
            best = std::min(best, rank_of[b]);
        }
        if (inside) ++children[best].est_count;
    }
    return children;
}

}  // namespace

std::vector<Count> PbecPlan::loads() const {
    std::vector<Count> out(assignment.size(), 0);
    for (std::size_t p = 0; p < assignment.size(); ++p)
        for (std::size_t k : assignment[p]) out[p] += pbecs[k].est_count;
    return out;
}

std::vector<Itemset> PbecPlan::node_prefixes() const {
    std::vector<Itemset> out = split_prefixes;
    for (const auto& p : pbecs) out.push_back(p.prefix);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Pbec> partition_pbec(const Itemset& prefix, const std::vector<Item>& extensions,
                                 const TransactionDB& db_sample, const std::vector<Itemset>& fi_sample) {
    return partition_with(prefix, extensions, db_sample.vertical(), fi_sample);
}

PbecPlan plan_phase2(const std::vector<Itemset>& fi_sample, const TransactionDB& db_sample,
                     const std::vector<Item>& base, double alpha, std::size_t P) {
    if (!(alpha > 0.0)) throw ParameterError("alpha must be > 0");
    if (P == 0) throw ParameterError("P must be >= 1");
    VerticalDb vdb = db_sample.vertical();
    std::vector<Item> sorted_base = base;
    std::sort(sorted_base.begin(), sorted_base.end());
    sorted_base.erase(std::unique(sorted_base.begin(), sorted_base.end()), sorted_base.end());

    PbecPlan plan;
    plan.alpha = alpha;
    plan.P = P;
    plan.sample_size = fi_sample.size();
    plan.pbecs = partition_with(Itemset{}, sorted_base, vdb, fi_sample);
    const double bound = alpha * static_cast<double>(fi_sample.size()) / static_cast<double>(P);

    for (;;) {
        std::size_t pick = SIZE_MAX;
        for (std::size_t k = 0; k < plan.pbecs.size(); ++k) {
            const auto& q = plan.pbecs[k];
            if (q.extensions.empty() || !(static_cast<double>(q.est_count) > bound)) continue;
            if (pick == SIZE_MAX || q.est_count > plan.pbecs[pick].est_count ||
                (q.est_count == plan.pbecs[pick].est_count && q.prefix < plan.pbecs[pick].prefix)) {
                pick = k;
            }
        }
        if (pick == SIZE_MAX) break;
        Pbec q = std::move(plan.pbecs[pick]);
        plan.pbecs.erase(plan.pbecs.begin() + static_cast<std::ptrdiff_t>(pick));
        plan.split_prefixes.push_back(q.prefix);
        auto children = partition_with(q.prefix, q.extensions, vdb, fi_sample);
        for (auto& c : children) plan.pbecs.push_back(std::move(c));
    }
    std::sort(plan.pbecs.begin(), plan.pbecs.end(), [](const Pbec& a, const Pbec& b) { return a.prefix < b.prefix; });
    std::sort(plan.split_prefixes.begin(), plan.split_prefixes.end());

    std::vector<Count> sizes;
    sizes.reserve(plan.pbecs.size());
    for (const auto& q : plan.pbecs) sizes.push_back(q.est_count);
    plan.assignment = lpt_schedule(sizes, P);
    return plan;
}

PbecPlan plan_phase2(const std::vector<Itemset>& fi_sample, const TransactionDB& db_sample, double alpha,
                     std::size_t P) {
    std::vector<Item> base;
    auto supp = db_sample.item_supports();
    for (Item b = 0; b < supp.size(); ++b)
        if (supp[b] > 0) base.push_back(b);
    return plan_phase2(fi_sample, db_sample, base, alpha, P);
}

Assignment lpt_schedule(const std::vector<Count>& sizes, std::size_t P) {
    if (P == 0) throw ParameterError("P must be >= 1");
    std::vector<std::size_t> order(sizes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });
    Assignment a(P);
    std::vector<Count> load(P, 0);
    for (std::size_t j : order) {
        std::size_t p = static_cast<std::size_t>(std::min_element(load.begin(), load.end()) - load.begin());
        a[p].push_back(j);
        load[p] += sizes[j];
    }
    return a;
}

Count makespan(const std::vector<Count>& sizes, const Assignment& a) {
    Count best = 0;
    for (const auto& proc : a) {
        Count s = 0;
        for (std::size_t j : proc) s += sizes[j];
        best = std::max(best, s);
    }
    return best;
}

std::vector<std::vector<Count>> share_matrix(const std::vector<Itemset>& prefixes, const TransactionDB& db) {
    VerticalDb vdb = db.vertical();
    std::vector<Tidlist> t;
    t.reserve(prefixes.size());
    for (const auto& u : prefixes) t.push_back(tidlist(vdb, u));
    const std::size_t n = prefixes.size();
    std::vector<std::vector<Count>> s(n, std::vector<Count>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Count c = intersect(t[i], t[j]).size();
            s[i][j] = s[j][i] = c;
        }
    }
    return s;
}

Assignment db_repl_min(const std::vector<std::vector<Count>>& share, const std::vector<Count>& weights,
                       std::size_t P) {
    if (P == 0) throw ParameterError("P must be >= 1");
    const std::size_t n = weights.size();
    if (share.size() != n) throw ParameterError("share matrix and weights differ in size");
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    const double cap = total / static_cast<double>(P);
    const double wmax = weights.empty() ? 0.0 : static_cast<double>(*std::max_element(weights.begin(), weights.end()));
    // Zero-weight PBECs get a tiny positive weight so density stays finite.
    const double tiny = 1e-9 * (wmax + 1.0);
    auto w = [&](std::size_t i) { return static_cast<double>(weights[i]) + tiny; };

    Assignment a(P);
    std::vector<bool> taken(n, false);
    std::size_t left = n;
    for (std::size_t p = 0; p + 1 < P && left > 0; ++p) {
        std::vector<std::size_t> k;
        std::vector<double> contrib(n, 0.0);  // Σ_{j∈K} S_ij
        std::vector<bool> in(n, false);
        double load = 0.0;
        auto add = [&](std::size_t i) {
            in[i] = true;
            k.push_back(i);
            load += static_cast<double>(weights[i]);
            for (std::size_t j = 0; j < n; ++j) contrib[j] += static_cast<double>(share[j][i]);
        };
        auto remove = [&](std::size_t i) {
            in[i] = false;
            k.erase(std::find(k.begin(), k.end(), i));
            load -= static_cast<double>(weights[i]);
            for (std::size_t j = 0; j < n; ++j) contrib[j] -= static_cast<double>(share[j][i]);
        };

        // Seed: best potential profit density against everything still free.
        std::size_t seed = SIZE_MAX;
        double seed_score = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (taken[i]) continue;
            double pot = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (!taken[j]) pot += static_cast<double>(share[i][j]);
            double score = pot / w(i);
            if (score > seed_score) {
                seed_score = score;
                seed = i;
            }
        }
        add(seed);

        // Greedy by marginal profit density among items that still fit.
        for (;;) {
            std::size_t best = SIZE_MAX;
            double best_score = -1.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (taken[i] || in[i] || load + static_cast<double>(weights[i]) > cap + 1e-9) continue;
                double score = contrib[i] / w(i);
                if (score > best_score) {
                    best_score = score;
                    best = i;
                }
            }
            if (best == SIZE_MAX) break;
            add(best);
        }

        // Single swaps: replace i ∈ K by j ∉ K when it raises the profit and fits.
        for (std::size_t iter = 0; iter < 100 * (k.size() + 1); ++iter) {
            double best_gain = 1e-9;
            std::size_t out = SIZE_MAX, inn = SIZE_MAX;
            for (std::size_t i : k) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (taken[j] || in[j]) continue;
                    if (load - static_cast<double>(weights[i]) + static_cast<double>(weights[j]) > cap + 1e-9) continue;
                    double gain = (contrib[j] - static_cast<double>(share[j][i])) - contrib[i];
                    if (gain > best_gain) {
                        best_gain = gain;
                        out = i;
                        inn = j;
                    }
                }
            }
            if (out == SIZE_MAX) break;
            remove(out);
            add(inn);
        }

        std::sort(k.begin(), k.end());
        for (std::size_t i : k) taken[i] = true;
        left -= k.size();
        a[p] = std::move(k);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!taken[i]) a[P - 1].push_back(i);
    return a;
}

double replication_factor(const Assignment& a, const TransactionDB& db, const std::vector<Itemset>& prefixes) {
    if (db.empty()) return 0.0;
    std::size_t total = 0;
    for (const auto& proc : a) {
        for (const auto& t : db.transactions()) {
            bool hit = std::any_of(proc.begin(), proc.end(),
                                   [&](std::size_t k) { return prefixes[k].is_subset_of(t.items); });
            if (hit) ++total;
        }
    }
    return static_cast<double>(total) / static_cast<double>(db.size());
}

double balance_ratio(const std::vector<Count>& loads) {
    if (loads.empty()) return 1.0;
    double sum = 0.0, mx = 0.0;
    for (Count l : loads) {
        sum += static_cast<double>(l);
        mx = std::max(mx, static_cast<double>(l));
    }
    if (sum == 0.0) return 1.0;
    return mx / (sum / static_cast<double>(loads.size()));
}

}  // namespace pfimi
