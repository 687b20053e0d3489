#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "pfimi/core.hpp"

namespace pfimi {

using Assignment = std::vector<std::vector<std::size_t>>;  // per processor: PBEC indices

struct PbecPlan {
    std::vector<Pbec> pbecs;
    /// Prefixes of PBECs that were split while planning (excluding ∅). With
    /// the final prefixes they are the nodes of the partition tree; Phase 4
    /// counts their supports directly.
    std::vector<Itemset> split_prefixes;
    Assignment assignment;
    double alpha = 0.3;
    std::size_t P = 1;
    std::size_t sample_size = 0;

    /// Σ est_count per processor.
    std::vector<Count> loads() const;
    /// Every prefix of the partition tree: split prefixes and final prefixes.
    std::vector<Itemset> node_prefixes() const;
};

/// One child per extension b, in ascending order of supp(prefix ∪ {b}) on
/// db_sample (ties by id): prefix' = prefix ∪ {b}, extensions' = the items
/// after b in that order, est = |[prefix'|extensions'] ∩ fi_sample|.
std::vector<Pbec> partition_pbec(const Itemset& prefix, const std::vector<Item>& extensions,
                                 const TransactionDB& db_sample, const std::vector<Itemset>& fi_sample);

/// Starts from partition_pbec(∅, base) and splits the largest PBEC (ties:
/// lexicographically smallest prefix) while est > alpha·|fi_sample|/P, then
/// assigns with lpt_schedule. PBECs without extensions are never split.
PbecPlan plan_phase2(const std::vector<Itemset>& fi_sample, const TransactionDB& db_sample,
                     const std::vector<Item>& base, double alpha, std::size_t P);
/// Base set = every item occurring in db_sample.
PbecPlan plan_phase2(const std::vector<Itemset>& fi_sample, const TransactionDB& db_sample, double alpha,
                     std::size_t P);

/// Longest processing time first: jobs by descending size (ties by index),
/// each to the least loaded processor (ties to the lowest id).
Assignment lpt_schedule(const std::vector<Count>& sizes, std::size_t P);
Count makespan(const std::vector<Count>& sizes, const Assignment& a);

/// S_ij = |tidlist(U_i ∪ U_j)| over db, S_ii = 0.
std::vector<std::vector<Count>> share_matrix(const std::vector<Itemset>& prefixes, const TransactionDB& db);

/// P−1 sequential quadratic-knapsack fills of capacity Σw/P, each maximizing
/// the pairwise shared-transaction profit of its set; the last processor
/// takes what is left. The knapsack step is a greedy by marginal profit
/// density followed by single-swap improvement.
Assignment db_repl_min(const std::vector<std::vector<Count>>& share, const std::vector<Count>& weights,
                       std::size_t P);

/// Σ_i |D'_i| / |db| with D'_i = {t ∈ db : some prefix assigned to i is ⊆ t}.
double replication_factor(const Assignment& a, const TransactionDB& db, const std::vector<Itemset>& prefixes);

/// Predicted balance: max load / mean load (1 when all loads are zero).
double balance_ratio(const std::vector<Count>& loads);

/// JSON: {"P","alpha","sample_size","pbecs":[{"prefix","extensions","est"}],
/// "split_prefixes","assignment"}; item ids are dense ids.
std::string plan_to_json(const PbecPlan& plan, int indent = 2);
PbecPlan plan_from_json(const std::string& text);

}  // namespace pfimi
