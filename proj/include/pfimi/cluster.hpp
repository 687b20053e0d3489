#pragma once

#include <cstdint>
#include <deque>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pfimi/core.hpp"
#include "pfimi/miners.hpp"
#include "pfimi/sampling.hpp"
#include "pfimi/scheduler.hpp"

namespace pfimi {

// ---------------------------------------------------------------------------
// Simulated message-passing cluster

enum class MsgKind {
    item_counts,
    db_sample,
    powerset_mass,
    fi_sample,
    fi_count,
    draw_count,
    plan,
    transactions,
    prefix_supports,
    steal_request,
    steal_work,
    steal_none,
    token,
    terminate,
};
const char* to_string(MsgKind k);

struct Message {
    std::size_t from = 0;
    std::size_t to = 0;
    MsgKind kind = MsgKind::item_counts;
    std::vector<std::uint64_t> ints;
    std::vector<Itemset> itemsets;
    std::vector<Transaction> txns;
    std::uint64_t bytes = 0;  // filled in by send()
};

/// Thrown when worker code fails; the simulation stops and reports the worker.
class WorkerError : public std::runtime_error {
public:
    WorkerError(std::size_t worker, const std::string& what)
        : std::runtime_error("worker " + std::to_string(worker) + ": " + what), worker_(worker) {}
    std::size_t worker() const noexcept { return worker_; }

private:
    std::size_t worker_;
};

/// P workers with FIFO inboxes. Messages sent during a round become visible
/// at the next deliver(), so execution order within a round cannot leak
/// information between workers.
class SimCluster {
public:
    explicit SimCluster(std::size_t P);

    std::size_t size() const noexcept { return inboxes_.size(); }
    void send(Message m);
    /// Ends the round: pending messages move into the inboxes.
    void deliver();
    std::optional<Message> receive(std::size_t worker);
    /// First message of the given kind (selective receive).
    std::optional<Message> receive(std::size_t worker, MsgKind kind);
    /// Like receive(worker, kind) but a missing message is a protocol error.
    Message expect(std::size_t worker, MsgKind kind);

    bool quiescent() const;
    std::uint64_t round() const noexcept { return round_; }
    std::uint64_t messages_sent() const noexcept { return total_sent_; }
    std::uint64_t messages_received() const noexcept { return total_received_; }
    std::uint64_t bytes_sent() const noexcept { return total_bytes_; }
    std::uint64_t messages_sent(std::size_t w) const { return sent_[w]; }
    std::uint64_t bytes_sent(std::size_t w) const { return bytes_[w]; }

    /// One line per delivered message: "round from to kind bytes".
    const std::vector<std::string>& trace() const noexcept { return trace_; }
    void set_tracing(bool on) { tracing_ = on; }

private:
    std::vector<std::deque<Message>> inboxes_;
    std::vector<std::deque<Message>> pending_;
    std::vector<std::uint64_t> sent_, bytes_;
    std::uint64_t total_sent_ = 0, total_received_ = 0, total_bytes_ = 0;
    std::uint64_t round_ = 0;
    bool tracing_ = false;
    std::vector<std::string> trace_;
};

/// Round-robin tournament pairings (0-based worker ids, lower id first).
/// Even P: P−1 rounds of P/2 pairs. Odd P: P rounds, one idle worker each.
struct ExchangeSchedule {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> rounds;
};
ExchangeSchedule exchange_schedule(std::size_t P);

// ---------------------------------------------------------------------------
// Parallel-FIMI

enum class Variant { seq, par, reservoir };
Variant parse_variant(const std::string& s);
std::string to_string(Variant v);

enum class SchedulerKind { lpt, qkp };
SchedulerKind parse_scheduler(const std::string& s);
std::string to_string(SchedulerKind s);

struct RunParams {
    Variant variant = Variant::reservoir;
    Count minsup = 1;  // absolute, on the whole database
    double alpha = 0.3;
    std::size_t n_db_sample = 10000;  // |D~|
    std::size_t n_fi_sample = 19869;  // |S~|
    bool dynamic_lb = true;
    ReservoirAlgo reservoir_algo = ReservoirAlgo::vitter;
    SchedulerKind scheduler = SchedulerKind::lpt;
    EclatOptions eclat;       // Phase-4 miner options
    std::uint64_t seed = 1;
    bool threads = false;     // run Phase-4 mining of the workers on OpenMP threads
    /// Work units (tids scanned) one worker completes per simulated round in
    /// the dynamically balanced parts of Phase 1.
    std::uint64_t round_budget = 4096;
};

/// State of a dynamically balanced Phase-1 computation over 1-prefix PBECs.
struct DynamicStats {
    std::uint64_t rounds = 0;
    std::uint64_t steals = 0;          // successful donations
    std::uint64_t refused = 0;         // steal_none replies
    std::uint64_t token_probes = 0;    // probes started by worker 0
    std::vector<std::vector<Item>> roots_done;  // per worker, in processing order
};

struct ParallelMfiResult {
    std::vector<std::vector<Itemset>> per_worker;  // M_i
    std::vector<Itemset> merged;                   // M = ∪ M_i, sorted, duplicates removed
    DynamicStats dyn;
};

/// Parallel-DFS-MFI schema on a replicated db sample. Item j (1-based among
/// `base`) starts on worker ceil(j·P/|base|) − 1. Each worker keeps only its
/// own maximal candidates. With dynamic_lb an idle worker polls its
/// successors and the donor yields its last unstarted root, provided it keeps
/// some work for itself.
ParallelMfiResult parallel_mfi(SimCluster& cluster, const TransactionDB& db_sample, Count minsup,
                               const std::vector<Item>& base, bool dynamic_lb, std::uint64_t round_budget = 4096);
ParallelMfiResult parallel_mfi(const TransactionDB& db_sample, Count minsup, std::size_t P, bool dynamic_lb);

/// Static root split used by the MFI and reservoir Phase-1 variants.
std::vector<std::vector<Item>> static_root_split(const std::vector<Item>& base, std::size_t P);

struct Phase1Result {
    TransactionDB db_sample;            // projected onto the base set
    std::vector<Itemset> fi_sample;
    SampleSource source = SampleSource::coverage_modified;
    Count sample_minsup = 1;
    std::vector<Itemset> mfis;          // seq/par: the MFI set the sampler used
    std::vector<std::uint64_t> mass;    // par: s_i
    std::vector<Count> requested;       // par: n_i; reservoir: X_i
    std::vector<Count> fi_counts;       // reservoir: f_i
    DynamicStats dyn;
};

/// Union of per-worker i.i.d. with-replacement draws of ceil(N/P) (>= 1)
/// transactions, gathered at every worker (or only at worker 0). Items
/// outside `base` are dropped; tids are renumbered 0..N-1.
TransactionDB draw_db_sample(SimCluster& cluster, const std::vector<TransactionDB>& partitions,
                             const std::vector<Item>& base, std::size_t n_total, std::uint64_t seed,
                             bool to_all = true);

/// Globally frequent items: per-worker item counts reduced at worker 0 and broadcast.
std::vector<Item> global_base(SimCluster& cluster, const std::vector<TransactionDB>& partitions, Count minsup);

Phase1Result phase1_coverage_seq(SimCluster& cluster, const std::vector<TransactionDB>& partitions,
                                 const std::vector<Item>& base, Count minsup, std::size_t n_total,
                                 const RunParams& params);
Phase1Result phase1_coverage_par(SimCluster& cluster, const std::vector<TransactionDB>& partitions,
                                 const std::vector<Item>& base, Count minsup, std::size_t n_total,
                                 const RunParams& params);
Phase1Result phase1_reservoir(SimCluster& cluster, const std::vector<TransactionDB>& partitions,
                              const std::vector<Item>& base, Count minsup, std::size_t n_total,
                              const RunParams& params);

/// Splits n proportionally to weights by largest remainder; sums to n exactly.
std::vector<Count> proportional_counts(const std::vector<std::uint64_t>& weights, Count n);

/// D'_j = {t : some prefix assigned to j is ⊆ t}, built over the round-robin
/// schedule (lower id sends first within a pair).
std::vector<TransactionDB> phase3_exchange(SimCluster& cluster, const PbecPlan& plan,
                                           const std::vector<TransactionDB>& partitions);
/// Direct set-builder version used as the reference.
std::vector<TransactionDB> phase3_reference(const PbecPlan& plan, const std::vector<TransactionDB>& partitions);

/// Tidlists of the current prefix, one entry per depth. advance() keeps the
/// entries shared with the previous prefix and recomputes the rest.
class TidlistCache {
public:
    explicit TidlistCache(const VerticalDb& vdb) : vdb_(vdb) {}
    const Tidlist& advance(const Itemset& prefix, WorkCounters& work);
    std::uint64_t reuse_count() const noexcept { return reuse_; }
    std::size_t depth() const noexcept { return levels_.size(); }

private:
    const VerticalDb& vdb_;
    std::vector<std::pair<Item, Tidlist>> levels_;
    std::uint64_t reuse_ = 0;
};

struct ExecEclatResult {
    FiList fis;
    WorkCounters work;
    std::uint64_t cache_reuse = 0;
};

/// Sorts the PBECs by prefix, then for each one advances the tidlist cache
/// and runs Eclat over [U|E] on db_prime. Prefixes themselves are not emitted.
ExecEclatResult exec_eclat(std::vector<Pbec> pbecs, const TransactionDB& db_prime, Count minsup,
                           const EclatOptions& opts = {});

/// Every worker counts all partition-tree prefixes on its original
/// partition; worker 0 sums and keeps those with support >= minsup.
FiList phase4_prefix_supports(SimCluster& cluster, const PbecPlan& plan, const std::vector<TransactionDB>& partitions,
                              Count minsup);

struct WorkerMetrics {
    WorkCounters phase4;
    std::uint64_t messages_sent = 0;
    std::uint64_t bytes_sent = 0;
    std::size_t db_prime_size = 0;
    std::size_t pbecs_assigned = 0;
    std::size_t fis_out = 0;
    std::uint64_t cache_reuse = 0;
};

struct RunResult {
    std::vector<FiList> per_worker;
    std::vector<WorkerMetrics> workers;
    std::vector<Item> base;
    PbecPlan plan;
    Phase1Result phase1;
    double replication_factor = 0.0;
    double balance = 1.0;  // max/mean Phase-4 tids scanned
    std::uint64_t rounds = 0;
    std::uint64_t messages = 0;
    std::uint64_t bytes = 0;
    bool sent_equals_received = false;
    double wall_ms = 0.0;

    /// Union of all worker outputs, canonically sorted.
    FiList merged() const;
};

RunResult run_parallel_fimi(const std::vector<TransactionDB>& partitions, const RunParams& params);

/// max/mean of Phase-4 tids scanned for a given assignment of the plan's
/// PBECs, each mined on its worker's D'. Used for baselines.
double phase4_balance(const PbecPlan& plan, const Assignment& assignment, const std::vector<TransactionDB>& partitions,
                      Count minsup, std::vector<std::uint64_t>* work_out = nullptr);

void write_manifest(std::ostream& out, const RunParams& params, std::size_t P);
void write_metrics_csv(std::ostream& out, const RunResult& r);

}  // namespace pfimi
