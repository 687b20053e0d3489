#pragma once

// Internal: dynamically balanced execution of 1-prefix PBECs on the simulated
// cluster, shared by Parallel-DFS-MFI and the reservoir Phase-1 variant.

#include <functional>

#include "pfimi/cluster.hpp"

namespace pfimi::detail {

/// process(worker, root) does the root's work and returns its cost in work
/// units; the worker then stays busy for ceil(cost / round_budget) rounds.
using RootProcessor = std::function<std::uint64_t(std::size_t, Item)>;

DynamicStats run_dynamic(SimCluster& cluster, std::vector<std::vector<Item>> initial, bool dynamic_lb,
                         std::uint64_t round_budget, const RootProcessor& process);

}  // namespace pfimi::detail
