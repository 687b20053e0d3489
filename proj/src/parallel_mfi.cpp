#include <algorithm>
#include <deque>

#include "dynamic.hpp"
#include "pfimi/errors.hpp"

namespace pfimi {
namespace detail {
namespace {

struct WorkerState {
    std::deque<Item> queue;  // unstarted roots, ascending
    std::uint64_t busy = 0;  // rounds of work still to run
    bool outstanding = false;
    std::size_t target = 0;  // offset of the next successor to poll
    bool black = false;
    bool has_token = false;
    bool token_black = false;
    bool terminated = false;

    bool active() const { return busy > 0 || !queue.empty(); }
};

constexpr std::uint64_t kMaxRounds = 50'000'000;

}  // namespace

DynamicStats run_dynamic(SimCluster& cluster, std::vector<std::vector<Item>> initial, bool dynamic_lb,
                         std::uint64_t round_budget, const RootProcessor& process) {
    const std::size_t P = cluster.size();
    if (round_budget == 0) round_budget = 1;
    std::vector<WorkerState> ws(P);
    DynamicStats st;
    st.roots_done.resize(P);
    for (std::size_t w = 0; w < P && w < initial.size(); ++w) {
        std::sort(initial[w].begin(), initial[w].end());
        ws[w].queue.assign(initial[w].begin(), initial[w].end());
    }
    bool probe_running = false;
    const std::uint64_t start_round = cluster.round();

    auto step = [&](std::size_t w) {
        WorkerState& s = ws[w];
        while (auto m = cluster.receive(w)) {
            switch (m->kind) {
                case MsgKind::steal_request:
                    // Donate only while keeping work: an idle worker that gave
                    // away its sole root could get it straight back, forever.
                    if (!s.terminated && (s.queue.size() > 1 || (s.busy > 0 && !s.queue.empty()))) {
                        Item root = s.queue.back();
                        s.queue.pop_back();
                        cluster.send({w, m->from, MsgKind::steal_work, {root}, {}, {}, 0});
                        s.black = true;
                        ++st.steals;
                    } else {
                        cluster.send({w, m->from, MsgKind::steal_none, {}, {}, {}, 0});
                    }
                    break;
                case MsgKind::steal_work: {
                    if (s.terminated) throw WorkerError(w, "work received after termination");
                    auto root = static_cast<Item>(m->ints.at(0));
                    s.queue.insert(std::upper_bound(s.queue.begin(), s.queue.end(), root), root);
                    s.outstanding = false;
                    break;
                }
                case MsgKind::steal_none:
                    s.outstanding = false;
                    s.target = (s.target + 1) % (P - 1);
                    ++st.refused;
                    break;
                case MsgKind::token:
                    s.has_token = true;
                    s.token_black = m->ints.at(0) != 0;
                    break;
                case MsgKind::terminate:
                    s.terminated = true;
                    break;
                default:
                    throw WorkerError(w, std::string("unexpected message ") + to_string(m->kind));
            }
        }

        if (s.busy > 0) {
            --s.busy;
        } else if (!s.queue.empty()) {
            Item root = s.queue.front();
            s.queue.pop_front();
            st.roots_done[w].push_back(root);
            std::uint64_t cost = process(w, root);
            std::uint64_t rounds = (cost + round_budget - 1) / round_budget;
            s.busy = rounds > 0 ? rounds - 1 : 0;
        }

        if (!s.active() && dynamic_lb && !s.terminated && !s.outstanding && P > 1) {
            std::size_t to = (w + 1 + s.target) % P;
            cluster.send({w, to, MsgKind::steal_request, {}, {}, {}, 0});
            s.outstanding = true;
        }

        // Dijkstra's token ring: 0 -> 1 -> ... -> P-1 -> 0.
        if (s.terminated || s.active()) return;
        if (w == 0 && !probe_running && !s.has_token) {
            if (P == 1) {
                s.terminated = true;
                return;
            }
            s.black = false;
            cluster.send({0, 1, MsgKind::token, {0}, {}, {}, 0});
            probe_running = true;
            ++st.token_probes;
            return;
        }
        if (!s.has_token) return;
        s.has_token = false;
        if (w == 0) {
            if (!s.token_black && !s.black) {
                for (std::size_t k = 1; k < P; ++k) cluster.send({0, k, MsgKind::terminate, {}, {}, {}, 0});
                s.terminated = true;
            } else {
                s.black = false;
                cluster.send({0, 1, MsgKind::token, {0}, {}, {}, 0});
                ++st.token_probes;
            }
        } else {
            std::uint64_t color = (s.token_black || s.black) ? 1 : 0;
            cluster.send({w, (w + 1) % P, MsgKind::token, {color}, {}, {}, 0});
            s.black = false;
        }
    };

    for (;;) {
        for (std::size_t w = 0; w < P; ++w) {
            try {
                step(w);
            } catch (const WorkerError&) {
                throw;
            } catch (const std::exception& e) {
                throw WorkerError(w, e.what());
            }
        }
        cluster.deliver();
        bool done = std::all_of(ws.begin(), ws.end(), [](const WorkerState& s) { return s.terminated; });
        if (done && cluster.quiescent()) break;
        if (cluster.round() - start_round > kMaxRounds) throw WorkerError(0, "dynamic phase did not terminate");
    }
    for (const auto& s : ws)
        if (s.active()) throw WorkerError(0, "termination detected while work remained");
    st.rounds = cluster.round() - start_round;
    return st;
}

}  // namespace detail

namespace {

// DFS-MFI over the roots handed to one worker. Keeps only maximal candidates,
// so the result does not depend on the order in which roots arrive.
class MfiWorker {
public:
    MfiWorker(const VerticalDb& vdb, const std::vector<Item>& freq, Count minsup)
        : vdb_(vdb), freq_(freq), minsup_(minsup) {}

    std::uint64_t root(Item r) {
        std::uint64_t before = work_.tids_scanned;
        if (r < vdb_.tidlists.size() && vdb_.tidlists[r].size() >= minsup_) {
            std::vector<Item> tail(std::upper_bound(freq_.begin(), freq_.end(), r), freq_.end());
            std::vector<Item> prefix{r};
            visit(prefix, vdb_.tidlists[r], tail);
        }
        return work_.tids_scanned - before + 1;
    }

    std::vector<Itemset>& result() { return m_; }

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
            Itemset cand = Itemset::from_sorted(prefix);
            if (covered(cand)) return;
            std::erase_if(m_, [&](const Itemset& m) { return m.is_subset_of(cand); });
            m_.push_back(std::move(cand));
            return;
        }
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
        return std::any_of(m_.begin(), m_.end(), [&](const Itemset& m) { return x.is_subset_of(m); });
    }

    const VerticalDb& vdb_;
    const std::vector<Item>& freq_;
    Count minsup_;
    WorkCounters work_;
    std::vector<Itemset> m_;
};

}  // namespace

std::vector<std::vector<Item>> static_root_split(const std::vector<Item>& base, std::size_t P) {
    if (P == 0) throw ParameterError("P must be >= 1");
    std::vector<Item> sorted = base;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::vector<Item>> out(P);
    const std::size_t n = sorted.size();
    for (std::size_t j = 1; j <= n; ++j) {
        std::size_t worker = (j * P + n - 1) / n;  // ceil(j·P/|B|), 1-based
        out[worker - 1].push_back(sorted[j - 1]);
    }
    return out;
}

ParallelMfiResult parallel_mfi(SimCluster& cluster, const TransactionDB& db_sample, Count minsup,
                               const std::vector<Item>& base, bool dynamic_lb, std::uint64_t round_budget) {
    const std::size_t P = cluster.size();
    // The sample is replicated, so every worker derives the same vertical view.
    VerticalDb vdb = db_sample.vertical();
    std::vector<Item> freq;
    for (Item b : base)
        if (b < vdb.tidlists.size() && vdb.tidlists[b].size() >= minsup) freq.push_back(b);
    std::sort(freq.begin(), freq.end());

    std::vector<MfiWorker> workers;
    workers.reserve(P);
    for (std::size_t w = 0; w < P; ++w) workers.emplace_back(vdb, freq, minsup);

    ParallelMfiResult res;
    res.dyn = detail::run_dynamic(cluster, static_root_split(base, P), dynamic_lb, round_budget,
                                  [&](std::size_t w, Item r) { return workers[w].root(r); });
    for (auto& w : workers) {
        std::sort(w.result().begin(), w.result().end());
        res.per_worker.push_back(w.result());
        res.merged.insert(res.merged.end(), w.result().begin(), w.result().end());
    }
    std::sort(res.merged.begin(), res.merged.end());
    res.merged.erase(std::unique(res.merged.begin(), res.merged.end()), res.merged.end());
    return res;
}

ParallelMfiResult parallel_mfi(const TransactionDB& db_sample, Count minsup, std::size_t P, bool dynamic_lb) {
    SimCluster cluster(P);
    return parallel_mfi(cluster, db_sample, minsup, frequent_items(db_sample, minsup), dynamic_lb);
}

}  // namespace pfimi
