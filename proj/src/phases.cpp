#include <algorithm>
#include <chrono>
#include <numeric>
#include <ostream>

#include "dynamic.hpp"
#include "pfimi/errors.hpp"
#include "pfimi/kernels.hpp"
#include "pfimi/rng.hpp"

namespace pfimi {
namespace {

std::size_t n_items_of(const std::vector<TransactionDB>& parts) {
    std::size_t n = 0;
    for (const auto& p : parts) n = std::max(n, p.n_items());
    return n;
}

std::size_t total_size(const std::vector<TransactionDB>& parts) {
    std::size_t n = 0;
    for (const auto& p : parts) n += p.size();
    return n;
}

TransactionDB make_db(std::vector<Transaction> txns, const std::vector<TransactionDB>& parts) {
    TransactionDB db(std::move(txns), n_items_of(parts));
    if (!parts.empty() && parts.front().n_items() == db.n_items()) db.set_labels(parts.front().labels());
    return db;
}

bool matches_any(const Itemset& t, const std::vector<const Itemset*>& prefixes) {
    return std::any_of(prefixes.begin(), prefixes.end(), [&](const Itemset* u) { return u->is_subset_of(t); });
}

std::vector<std::vector<const Itemset*>> prefixes_by_worker(const PbecPlan& plan, std::size_t P) {
    std::vector<std::vector<const Itemset*>> out(P);
    for (std::size_t w = 0; w < P && w < plan.assignment.size(); ++w)
        for (std::size_t k : plan.assignment[w]) out[w].push_back(&plan.pbecs.at(k).prefix);
    return out;
}

// Plan wire format: ints = [#pbecs, (est, |E|, E...)*, P, (|L|, L...)*],
// itemsets = prefixes followed by split prefixes.
Message encode_plan(const PbecPlan& plan, std::size_t to) {
    Message m{0, to, MsgKind::plan, {}, {}, {}, 0};
    m.ints.push_back(plan.pbecs.size());
    for (const auto& q : plan.pbecs) {
        m.ints.push_back(q.est_count);
        m.ints.push_back(q.extensions.size());
        m.ints.insert(m.ints.end(), q.extensions.begin(), q.extensions.end());
        m.itemsets.push_back(q.prefix);
    }
    m.ints.push_back(plan.assignment.size());
    for (const auto& l : plan.assignment) {
        m.ints.push_back(l.size());
        m.ints.insert(m.ints.end(), l.begin(), l.end());
    }
    m.itemsets.insert(m.itemsets.end(), plan.split_prefixes.begin(), plan.split_prefixes.end());
    return m;
}

PbecPlan decode_plan(const Message& m, double alpha, std::size_t sample_size) {
    PbecPlan plan;
    plan.alpha = alpha;
    plan.sample_size = sample_size;
    std::size_t pos = 0;
    auto next = [&] { return m.ints.at(pos++); };
    std::size_t n = next();
    for (std::size_t k = 0; k < n; ++k) {
        Pbec q;
        q.prefix = m.itemsets.at(k);
        q.est_count = next();
        std::size_t e = next();
        for (std::size_t i = 0; i < e; ++i) q.extensions.push_back(static_cast<Item>(next()));
        plan.pbecs.push_back(std::move(q));
    }
    plan.P = next();
    plan.assignment.resize(plan.P);
    for (auto& l : plan.assignment) {
        std::size_t len = next();
        for (std::size_t i = 0; i < len; ++i) l.push_back(next());
    }
    plan.split_prefixes.assign(m.itemsets.begin() + static_cast<std::ptrdiff_t>(n), m.itemsets.end());
    return plan;
}

template <class F>
auto as_worker(std::size_t w, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const WorkerError&) {
        throw;
    } catch (const ParameterError&) {
        throw;
    } catch (const std::exception& e) {
        throw WorkerError(w, e.what());
    }
}

Count sample_minsup(Count minsup, std::size_t db_size, std::size_t sample_size) {
    if (db_size == 0 || sample_size == 0) return 1;
    double r = std::min(1.0, static_cast<double>(minsup) / static_cast<double>(db_size));
    return absolute_minsup(r, sample_size);
}

}  // namespace

std::vector<Item> global_base(SimCluster& cluster, const std::vector<TransactionDB>& partitions, Count minsup) {
    const std::size_t P = cluster.size();
    const std::size_t m = n_items_of(partitions);
    std::vector<std::vector<Count>> local(P);
    for (std::size_t w = 0; w < P; ++w) {
        local[w] = kernels::item_supports(partitions[w]);
        local[w].resize(m, 0);
        if (w != 0) cluster.send({w, 0, MsgKind::item_counts, local[w], {}, {}, 0});
    }
    cluster.deliver();
    std::vector<Count> total = local[0];
    for (std::size_t w = 1; w < P; ++w) {
        auto msg = cluster.expect(0, MsgKind::item_counts);
        for (std::size_t b = 0; b < m; ++b) total[b] += msg.ints.at(b);
    }
    std::vector<Item> base;
    for (Item b = 0; b < m; ++b)
        if (total[b] >= minsup) base.push_back(b);
    std::vector<std::uint64_t> wire(base.begin(), base.end());
    for (std::size_t w = 1; w < P; ++w) cluster.send({0, w, MsgKind::item_counts, wire, {}, {}, 0});
    cluster.deliver();
    for (std::size_t w = 1; w < P; ++w) {
        auto msg = cluster.expect(w, MsgKind::item_counts);
        if (msg.ints != wire) throw WorkerError(w, "base set broadcast corrupted");
    }
    return base;
}

TransactionDB draw_db_sample(SimCluster& cluster, const std::vector<TransactionDB>& partitions,
                             const std::vector<Item>& base, std::size_t n_total, std::uint64_t seed, bool to_all) {
    const std::size_t P = cluster.size();
    const std::size_t m = n_items_of(partitions);
    std::vector<bool> keep(m, false);
    for (Item b : base)
        if (b < m) keep[b] = true;
    const std::size_t per_worker = std::max<std::size_t>(1, (n_total + P - 1) / P);

    std::vector<std::vector<Transaction>> parts(P);
    for (std::size_t w = 0; w < P; ++w) {
        const auto& d = partitions[w];
        if (d.empty()) continue;
        Rng rng(mix_seed(seed, 100 + w));
        for (std::size_t k = 0; k < per_worker; ++k) {
            const auto& t = d[random_below(rng, d.size())];
            std::vector<Item> items;
            for (Item b : t.items)
                if (keep[b]) items.push_back(b);
            parts[w].push_back({0, Itemset::from_sorted(std::move(items))});
        }
        for (std::size_t to = 0; to < P; ++to) {
            if (to == w || (!to_all && to != 0)) continue;
            cluster.send({w, to, MsgKind::db_sample, {}, {}, parts[w], 0});
        }
    }
    cluster.deliver();
    // Every receiver assembles the parts in worker order; all copies agree.
    for (std::size_t to = 0; to < P; ++to) {
        if (!to_all && to != 0) continue;
        for (std::size_t w = 0; w < P; ++w) {
            if (w == to || partitions[w].empty()) continue;
            auto msg = cluster.expect(to, MsgKind::db_sample);
            (void)msg;
        }
    }
    std::vector<Transaction> all;
    for (auto& part : parts)
        for (auto& t : part) {
            t.tid = static_cast<Tid>(all.size());
            all.push_back(std::move(t));
        }
    return make_db(std::move(all), partitions);
}

std::vector<Count> proportional_counts(const std::vector<std::uint64_t>& weights, Count n) {
    std::vector<Count> out(weights.size(), 0);
    unsigned __int128 total = 0;
    for (auto w : weights) total += w;
    if (total == 0) return out;
    std::vector<std::pair<unsigned __int128, std::size_t>> rem;
    Count assigned = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        unsigned __int128 num = static_cast<unsigned __int128>(n) * weights[i];
        out[i] = static_cast<Count>(num / total);
        assigned += out[i];
        rem.emplace_back(num % total, i);
    }
    std::sort(rem.begin(), rem.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (std::size_t k = 0; assigned < n && k < rem.size(); ++k, ++assigned) ++out[rem[k].second];
    return out;
}

Phase1Result phase1_coverage_seq(SimCluster& cluster, const std::vector<TransactionDB>& partitions,
                                 const std::vector<Item>& base, Count minsup, std::size_t n_total,
                                 const RunParams& params) {
    Phase1Result r;
    r.source = SampleSource::coverage_modified;
    r.db_sample = draw_db_sample(cluster, partitions, base, n_total, params.seed, false);
    r.sample_minsup = sample_minsup(minsup, total_size(partitions), r.db_sample.size());
    as_worker(0, [&] {
        r.mfis = mfi_mine(r.db_sample, r.sample_minsup, base);
        std::sort(r.mfis.begin(), r.mfis.end());
        if (!r.mfis.empty()) {
            CoverageSampler sampler(r.mfis);
            Rng rng(mix_seed(params.seed, 200));
            r.fi_sample.reserve(params.n_fi_sample);
            for (std::size_t k = 0; k < params.n_fi_sample; ++k) r.fi_sample.push_back(sampler.draw(rng, false));
        }
        return 0;
    });
    return r;
}

Phase1Result phase1_coverage_par(SimCluster& cluster, const std::vector<TransactionDB>& partitions,
                                 const std::vector<Item>& base, Count minsup, std::size_t n_total,
                                 const RunParams& params) {
    const std::size_t P = cluster.size();
    Phase1Result r;
    r.source = SampleSource::coverage_modified;
    r.db_sample = draw_db_sample(cluster, partitions, base, n_total, params.seed, true);
    r.sample_minsup = sample_minsup(minsup, total_size(partitions), r.db_sample.size());

    auto pm = parallel_mfi(cluster, r.db_sample, r.sample_minsup, base, params.dynamic_lb, params.round_budget);
    r.dyn = pm.dyn;
    r.mfis = pm.merged;

    // Broadcast s_i = Σ|powerset(m)| so every worker can compute its share.
    r.mass.resize(P);
    for (std::size_t w = 0; w < P; ++w) {
        r.mass[w] = powerset_mass(pm.per_worker[w]);
        for (std::size_t to = 0; to < P; ++to)
            if (to != w) cluster.send({w, to, MsgKind::powerset_mass, {r.mass[w]}, {}, {}, 0});
    }
    cluster.deliver();
    for (std::size_t to = 0; to < P; ++to)
        for (std::size_t w = 0; w + 1 < P; ++w) cluster.expect(to, MsgKind::powerset_mass);

    r.requested = proportional_counts(r.mass, params.n_fi_sample);
    std::vector<std::vector<Itemset>> parts(P);
    for (std::size_t w = 0; w < P; ++w) {
        as_worker(w, [&] {
            if (r.requested[w] > 0) {
                CoverageSampler sampler(pm.per_worker[w]);
                Rng rng(mix_seed(params.seed, 300 + w));
                for (Count k = 0; k < r.requested[w]; ++k) parts[w].push_back(sampler.draw(rng, false));
            }
            return 0;
        });
        if (w != 0) cluster.send({w, 0, MsgKind::fi_sample, {}, parts[w], {}, 0});
    }
    cluster.deliver();
    for (std::size_t w = 1; w < P; ++w) cluster.expect(0, MsgKind::fi_sample);
    for (auto& part : parts) r.fi_sample.insert(r.fi_sample.end(), part.begin(), part.end());
    return r;
}

Phase1Result phase1_reservoir(SimCluster& cluster, const std::vector<TransactionDB>& partitions,
                              const std::vector<Item>& base, Count minsup, std::size_t n_total,
                              const RunParams& params) {
    const std::size_t P = cluster.size();
    Phase1Result r;
    r.source = SampleSource::reservoir;
    r.db_sample = draw_db_sample(cluster, partitions, base, n_total, params.seed, true);
    r.sample_minsup = sample_minsup(minsup, total_size(partitions), r.db_sample.size());
    const Count ms = r.sample_minsup;

    VerticalDb vdb = r.db_sample.vertical();
    std::vector<Item> freq;
    for (Item b : base)
        if (b < vdb.tidlists.size() && vdb.tidlists[b].size() >= ms) freq.push_back(b);

    const std::size_t cap = std::max<std::size_t>(1, params.n_fi_sample);
    std::vector<Reservoir<Itemset>> res;
    std::vector<WorkCounters> work(P);
    for (std::size_t w = 0; w < P; ++w) res.emplace_back(cap, mix_seed(params.seed, 400 + w), params.reservoir_algo);

    auto process = [&](std::size_t w, Item root) -> std::uint64_t {
        std::uint64_t before = work[w].tids_scanned;
        if (root >= vdb.tidlists.size() || vdb.tidlists[root].size() < ms) return 1;
        const Tidlist& tr = vdb.tidlists[root];
        res[w].offer(Itemset{root});
        std::vector<EclatMember> members;
        for (auto it = std::upper_bound(freq.begin(), freq.end(), root); it != freq.end(); ++it) {
            Tidlist t = intersect(tr, vdb.tidlists[*it], work[w]);
            if (t.size() >= ms) members.push_back({*it, std::move(t)});
        }
        FiSink sink = [&](const Itemset& s, Count) { res[w].offer(s); };
        eclat_enumerate(Itemset{root}, tr.size(), std::move(members), ms, {}, sink, work[w]);
        return work[w].tids_scanned - before + 1;
    };
    r.dyn = detail::run_dynamic(cluster, static_root_split(base, P), params.dynamic_lb, params.round_budget, process);

    // f_i to worker 0; X ~ MVHypergeom(f, min(N, Σf)); X_i back to each worker.
    r.fi_counts.resize(P);
    for (std::size_t w = 0; w < P; ++w) {
        r.fi_counts[w] = res[w].seen();
        if (w != 0) cluster.send({w, 0, MsgKind::fi_count, {r.fi_counts[w]}, {}, {}, 0});
    }
    cluster.deliver();
    for (std::size_t w = 1; w < P; ++w) cluster.expect(0, MsgKind::fi_count);
    Count total = std::accumulate(r.fi_counts.begin(), r.fi_counts.end(), Count{0});
    Rng rng0(mix_seed(params.seed, 500));
    r.requested = multivariate_hypergeom(r.fi_counts, std::min<Count>(params.n_fi_sample, total), rng0);
    for (std::size_t w = 1; w < P; ++w) cluster.send({0, w, MsgKind::draw_count, {r.requested[w]}, {}, {}, 0});
    cluster.deliver();
    for (std::size_t w = 1; w < P; ++w) cluster.expect(w, MsgKind::draw_count);

    std::vector<std::vector<Itemset>> parts(P);
    for (std::size_t w = 0; w < P; ++w) {
        auto items = res[w].take();
        Rng rng(mix_seed(params.seed, 600 + w));
        auto x = static_cast<std::size_t>(r.requested[w]);
        if (x > items.size()) throw WorkerError(w, "hypergeometric draw exceeds the reservoir");
        for (std::size_t k = 0; k < x; ++k) std::swap(items[k], items[k + random_below(rng, items.size() - k)]);
        items.resize(x);
        parts[w] = std::move(items);
        if (w != 0) cluster.send({w, 0, MsgKind::fi_sample, {}, parts[w], {}, 0});
    }
    cluster.deliver();
    for (std::size_t w = 1; w < P; ++w) cluster.expect(0, MsgKind::fi_sample);
    for (auto& part : parts) r.fi_sample.insert(r.fi_sample.end(), part.begin(), part.end());
    return r;
}

std::vector<TransactionDB> phase3_exchange(SimCluster& cluster, const PbecPlan& plan,
                                           const std::vector<TransactionDB>& partitions) {
    const std::size_t P = cluster.size();
    auto prefixes = prefixes_by_worker(plan, P);
    std::vector<std::vector<Transaction>> out(P);
    for (std::size_t w = 0; w < P; ++w)
        for (const auto& t : partitions[w].transactions())
            if (matches_any(t.items, prefixes[w])) out[w].push_back(t);

    auto select = [&](std::size_t from, std::size_t to) {
        std::vector<Transaction> sel;
        for (const auto& t : partitions[from].transactions())
            if (matches_any(t.items, prefixes[to])) sel.push_back(t);
        return sel;
    };
    for (const auto& round : exchange_schedule(P).rounds) {
        for (auto [a, b] : round) {
            cluster.send({a, b, MsgKind::transactions, {}, {}, select(a, b), 0});
            cluster.send({b, a, MsgKind::transactions, {}, {}, select(b, a), 0});
        }
        cluster.deliver();
        for (auto [a, b] : round) {
            auto mb = cluster.expect(b, MsgKind::transactions);
            auto ma = cluster.expect(a, MsgKind::transactions);
            out[b].insert(out[b].end(), mb.txns.begin(), mb.txns.end());
            out[a].insert(out[a].end(), ma.txns.begin(), ma.txns.end());
        }
    }
    std::vector<TransactionDB> result;
    for (auto& txns : out) {
        std::sort(txns.begin(), txns.end(), [](const Transaction& x, const Transaction& y) { return x.tid < y.tid; });
        result.push_back(make_db(std::move(txns), partitions));
    }
    return result;
}

std::vector<TransactionDB> phase3_reference(const PbecPlan& plan, const std::vector<TransactionDB>& partitions) {
    const std::size_t P = partitions.size();
    auto prefixes = prefixes_by_worker(plan, P);
    std::vector<TransactionDB> result;
    for (std::size_t j = 0; j < P; ++j) {
        std::vector<Transaction> txns;
        for (const auto& d : partitions)
            for (const auto& t : d.transactions())
                if (matches_any(t.items, prefixes[j])) txns.push_back(t);
        std::sort(txns.begin(), txns.end(), [](const Transaction& x, const Transaction& y) { return x.tid < y.tid; });
        result.push_back(make_db(std::move(txns), partitions));
    }
    return result;
}

const Tidlist& TidlistCache::advance(const Itemset& prefix, WorkCounters& work) {
    static const Tidlist kEmpty;
    std::size_t lcp = 0;
    while (lcp < levels_.size() && lcp < prefix.size() && levels_[lcp].first == prefix[lcp]) ++lcp;
    reuse_ += lcp;
    levels_.resize(lcp);
    for (std::size_t d = lcp; d < prefix.size(); ++d) {
        Item b = prefix[d];
        const Tidlist& col = b < vdb_.tidlists.size() ? vdb_.tidlists[b] : kEmpty;
        if (d == 0) {
            levels_.emplace_back(b, col);
        } else {
            levels_.emplace_back(b, intersect(levels_[d - 1].second, col, work));
        }
    }
    return levels_.empty() ? vdb_.all_tids : levels_.back().second;
}

ExecEclatResult exec_eclat(std::vector<Pbec> pbecs, const TransactionDB& db_prime, Count minsup,
                           const EclatOptions& opts) {
    std::sort(pbecs.begin(), pbecs.end(), [](const Pbec& a, const Pbec& b) { return a.prefix < b.prefix; });
    VerticalDb vdb = db_prime.vertical();
    TidlistCache cache(vdb);
    ExecEclatResult r;
    FiSink sink = [&](const Itemset& s, Count c) { r.fis.push_back({s, c}); };
    for (const auto& q : pbecs) {
        const Tidlist& tu = cache.advance(q.prefix, r.work);
        if (tu.size() < minsup) continue;
        std::vector<EclatMember> members;
        for (Item e : q.extensions) {
            if (e >= vdb.tidlists.size()) continue;
            Tidlist t = intersect(tu, vdb.tidlists[e], r.work);
            if (t.size() >= minsup) members.push_back({e, std::move(t)});
        }
        eclat_enumerate(q.prefix, tu.size(), std::move(members), minsup, opts, sink, r.work);
    }
    r.cache_reuse = cache.reuse_count();
    return r;
}

FiList phase4_prefix_supports(SimCluster& cluster, const PbecPlan& plan, const std::vector<TransactionDB>& partitions,
                              Count minsup) {
    const std::size_t P = cluster.size();
    auto candidates = plan.node_prefixes();
    std::vector<Count> total;
    for (std::size_t w = 0; w < P; ++w) {
        auto local = kernels::count_supports(partitions[w], candidates);
        if (w == 0) {
            total = std::move(local);
        } else {
            cluster.send({w, 0, MsgKind::prefix_supports, local, {}, {}, 0});
        }
    }
    cluster.deliver();
    for (std::size_t w = 1; w < P; ++w) {
        auto msg = cluster.expect(0, MsgKind::prefix_supports);
        for (std::size_t k = 0; k < total.size(); ++k) total[k] += msg.ints.at(k);
    }
    FiList out;
    for (std::size_t k = 0; k < candidates.size(); ++k)
        if (total[k] >= minsup) out.push_back({candidates[k], total[k]});
    return out;
}

FiList RunResult::merged() const {
    FiList all;
    for (const auto& part : per_worker) all.insert(all.end(), part.begin(), part.end());
    canonicalize(all);
    return all;
}

RunResult run_parallel_fimi(const std::vector<TransactionDB>& partitions, const RunParams& params) {
    const std::size_t P = partitions.size();
    if (P == 0) throw ParameterError("P must be >= 1");
    if (params.minsup == 0) throw ParameterError("minsup must be >= 1");
    if (!(params.alpha > 0.0)) throw ParameterError("alpha must be > 0");
    const auto t0 = std::chrono::steady_clock::now();
    SimCluster cluster(P);
    RunResult r;
    const std::size_t db_size = total_size(partitions);

    // Base set B: globally frequent items.
    r.base = global_base(cluster, partitions, params.minsup);

    // Phase 1: sampling.
    switch (params.variant) {
        case Variant::seq:
            r.phase1 = phase1_coverage_seq(cluster, partitions, r.base, params.minsup, params.n_db_sample, params);
            break;
        case Variant::par:
            r.phase1 = phase1_coverage_par(cluster, partitions, r.base, params.minsup, params.n_db_sample, params);
            break;
        case Variant::reservoir:
            r.phase1 = phase1_reservoir(cluster, partitions, r.base, params.minsup, params.n_db_sample, params);
            break;
    }

    // Phase 2: planning on worker 0, then broadcast.
    PbecPlan plan = as_worker(0, [&] {
        PbecPlan p = plan_phase2(r.phase1.fi_sample, r.phase1.db_sample, r.base, params.alpha, P);
        if (params.scheduler == SchedulerKind::qkp) {
            std::vector<Itemset> prefixes;
            std::vector<Count> weights;
            for (const auto& q : p.pbecs) {
                prefixes.push_back(q.prefix);
                weights.push_back(q.est_count);
            }
            p.assignment = db_repl_min(share_matrix(prefixes, r.phase1.db_sample), weights, P);
        }
        return p;
    });
    for (std::size_t w = 1; w < P; ++w) cluster.send(encode_plan(plan, w));
    cluster.deliver();
    std::vector<PbecPlan> local_plan(P);
    local_plan[0] = plan;
    for (std::size_t w = 1; w < P; ++w)
        local_plan[w] = decode_plan(cluster.expect(w, MsgKind::plan), plan.alpha, plan.sample_size);
    r.plan = plan;

    // Phase 3: database exchange.
    auto db_prime = phase3_exchange(cluster, plan, partitions);

    // Phase 4: prefix supports on the original partitions, then Exec-Eclat per worker.
    r.per_worker.assign(P, {});
    r.workers.assign(P, {});
    r.per_worker[0] = phase4_prefix_supports(cluster, plan, partitions, params.minsup);
    std::vector<ExecEclatResult> exec(P);
    auto run_worker = [&](std::size_t w) {
        std::vector<Pbec> mine;
        for (std::size_t k : local_plan[w].assignment[w]) mine.push_back(local_plan[w].pbecs.at(k));
        exec[w] = exec_eclat(std::move(mine), db_prime[w], params.minsup, params.eclat);
    };
    if (params.threads) {
        std::vector<std::string> errors(P);
        const auto n = static_cast<std::ptrdiff_t>(P);
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t w = 0; w < n; ++w) {
            try {
                run_worker(static_cast<std::size_t>(w));
            } catch (const std::exception& e) {
                errors[static_cast<std::size_t>(w)] = e.what();
            }
        }
        for (std::size_t w = 0; w < P; ++w)
            if (!errors[w].empty()) throw WorkerError(w, errors[w]);
    } else {
        for (std::size_t w = 0; w < P; ++w) as_worker(w, [&] { run_worker(w); return 0; });
    }

    std::size_t prime_total = 0;
    std::vector<Count> work(P);
    for (std::size_t w = 0; w < P; ++w) {
        auto& out = r.per_worker[w];
        out.insert(out.end(), exec[w].fis.begin(), exec[w].fis.end());
        auto& m = r.workers[w];
        m.phase4 = exec[w].work;
        m.cache_reuse = exec[w].cache_reuse;
        m.db_prime_size = db_prime[w].size();
        m.pbecs_assigned = plan.assignment[w].size();
        m.fis_out = out.size();
        m.messages_sent = cluster.messages_sent(w);
        m.bytes_sent = cluster.bytes_sent(w);
        prime_total += db_prime[w].size();
        work[w] = exec[w].work.tids_scanned;
    }
    r.replication_factor = db_size == 0 ? 0.0 : static_cast<double>(prime_total) / static_cast<double>(db_size);
    r.balance = balance_ratio(work);
    r.rounds = cluster.round();
    r.messages = cluster.messages_sent();
    r.bytes = cluster.bytes_sent();
    r.sent_equals_received = cluster.quiescent() && cluster.messages_sent() == cluster.messages_received();
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

double phase4_balance(const PbecPlan& plan, const Assignment& assignment, const std::vector<TransactionDB>& partitions,
                      Count minsup, std::vector<std::uint64_t>* work_out) {
    PbecPlan p = plan;
    p.assignment = assignment;
    auto db_prime = phase3_reference(p, partitions);
    std::vector<Count> work(assignment.size(), 0);
    for (std::size_t w = 0; w < assignment.size(); ++w) {
        std::vector<Pbec> mine;
        for (std::size_t k : assignment[w]) mine.push_back(p.pbecs.at(k));
        work[w] = exec_eclat(std::move(mine), db_prime[w], minsup).work.tids_scanned;
    }
    if (work_out) *work_out = work;
    return balance_ratio(work);
}

void write_manifest(std::ostream& out, const RunParams& p, std::size_t P) {
    out << "variant=" << to_string(p.variant) << '\n'
        << "P=" << P << '\n'
        << "seed=" << p.seed << '\n'
        << "minsup=" << p.minsup << '\n'
        << "alpha=" << p.alpha << '\n'
        << "n_db_sample=" << p.n_db_sample << '\n'
        << "n_fi_sample=" << p.n_fi_sample << '\n'
        << "dynamic_lb=" << (p.dynamic_lb ? 1 : 0) << '\n'
        << "reservoir_algo=" << (p.reservoir_algo == ReservoirAlgo::vitter ? "vitter" : "simple") << '\n'
        << "scheduler=" << to_string(p.scheduler) << '\n'
        << "eclat_diffsets=" << (p.eclat.use_diffsets ? 1 : 0) << '\n'
        << "eclat_dynamic_order=" << (p.eclat.dynamic_order ? 1 : 0) << '\n'
        << "eclat_closure=" << (p.eclat.closure_opt ? 1 : 0) << '\n'
        << "threads=" << (p.threads ? 1 : 0) << '\n'
        << "round_budget=" << p.round_budget << '\n';
}

void write_metrics_csv(std::ostream& out, const RunResult& r) {
    out << "worker,pbecs,db_prime,fis,intersections,tids_scanned,support_computations,cache_reuse,"
           "messages_sent,bytes_sent,replication_factor,balance,rounds,wall_ms\n";
    for (std::size_t w = 0; w < r.workers.size(); ++w) {
        const auto& m = r.workers[w];
        out << w << ',' << m.pbecs_assigned << ',' << m.db_prime_size << ',' << m.fis_out << ','
            << m.phase4.intersections << ',' << m.phase4.tids_scanned << ',' << m.phase4.support_computations << ','
            << m.cache_reuse << ',' << m.messages_sent << ',' << m.bytes_sent << ',' << r.replication_factor << ','
            << r.balance << ',' << r.rounds << ',' << r.wall_ms << '\n';
    }
}

}  // namespace pfimi
