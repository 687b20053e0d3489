#pragma once

#include <vector>

#include "pfimi/core.hpp"

namespace pfimi::kernels {

// Data-parallel counting kernels. `serial` is the reference; `openmp` must
// return identical results and is what the runtime uses by default.
enum class Exec { serial, openmp };

/// supp(c) in db for every candidate.
std::vector<Count> count_supports(const TransactionDB& db, const std::vector<Itemset>& candidates,
                                  Exec exec = Exec::openmp);

/// supp({i}) for every dense item id.
std::vector<Count> item_supports(const TransactionDB& db, Exec exec = Exec::openmp);

/// Vertical view; the OpenMP version builds each item's tidlist independently.
VerticalDb build_vertical(const TransactionDB& db, Exec exec = Exec::openmp);

}  // namespace pfimi::kernels
