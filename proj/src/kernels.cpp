#include "pfimi/kernels.hpp"

#include <algorithm>

#include <omp.h>

namespace pfimi::kernels {

std::vector<Count> count_supports(const TransactionDB& db, const std::vector<Itemset>& candidates, Exec exec) {
    std::vector<Count> out(candidates.size(), 0);
    const auto& txns = db.transactions();
    if (exec == Exec::serial) {
        for (std::size_t c = 0; c < candidates.size(); ++c)
            for (const auto& t : txns)
                if (candidates[c].is_subset_of(t.items)) ++out[c];
        return out;
    }
    const auto n = static_cast<std::ptrdiff_t>(candidates.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t c = 0; c < n; ++c) {
        Count s = 0;
        const auto& cand = candidates[static_cast<std::size_t>(c)];
        for (const auto& t : txns)
            if (cand.is_subset_of(t.items)) ++s;
        out[static_cast<std::size_t>(c)] = s;
    }
    return out;
}

std::vector<Count> item_supports(const TransactionDB& db, Exec exec) {
    if (exec == Exec::serial) return db.item_supports();
    const std::size_t m = db.n_items();
    const auto& txns = db.transactions();
    const auto n = static_cast<std::ptrdiff_t>(txns.size());
    std::vector<Count> out(m, 0);
#pragma omp parallel
    {
        std::vector<Count> local(m, 0);
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t i = 0; i < n; ++i)
            for (Item b : txns[static_cast<std::size_t>(i)].items) ++local[b];
#pragma omp critical
        for (std::size_t b = 0; b < m; ++b) out[b] += local[b];
    }
    return out;
}

VerticalDb build_vertical(const TransactionDB& db, Exec exec) {
    if (exec == Exec::serial) return db.vertical();
    const auto& txns = db.transactions();
    std::vector<std::size_t> order(txns.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return txns[a].tid < txns[b].tid; });

    VerticalDb v;
    v.tidlists.resize(db.n_items());
    v.all_tids.reserve(order.size());
    for (std::size_t i : order) v.all_tids.push_back(txns[i].tid);

    // Per-thread buckets over a static split of the tid order, concatenated in
    // thread order so each tidlist stays ascending.
    const auto n = static_cast<std::ptrdiff_t>(order.size());
    int nthreads = omp_get_max_threads();
    std::vector<std::vector<Tidlist>> buckets(static_cast<std::size_t>(nthreads));
#pragma omp parallel num_threads(nthreads)
    {
        auto tn = static_cast<std::size_t>(omp_get_thread_num());
        auto nt = static_cast<std::ptrdiff_t>(omp_get_num_threads());
        auto& mine = buckets[tn];
        mine.resize(db.n_items());
        std::ptrdiff_t lo = n * static_cast<std::ptrdiff_t>(tn) / nt;
        std::ptrdiff_t hi = n * static_cast<std::ptrdiff_t>(tn + 1) / nt;
        for (std::ptrdiff_t i = lo; i < hi; ++i) {
            const auto& t = txns[order[static_cast<std::size_t>(i)]];
            for (Item b : t.items) mine[b].push_back(t.tid);
        }
    }
    const auto m = static_cast<std::ptrdiff_t>(db.n_items());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t b = 0; b < m; ++b) {
        auto& dst = v.tidlists[static_cast<std::size_t>(b)];
        for (auto& bk : buckets)
            if (!bk.empty()) dst.insert(dst.end(), bk[static_cast<std::size_t>(b)].begin(), bk[static_cast<std::size_t>(b)].end());
    }
    return v;
}

}  // namespace pfimi::kernels
