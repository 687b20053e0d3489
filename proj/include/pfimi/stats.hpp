#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pfimi/core.hpp"

namespace pfimi {

// Operating point used for the pagerank characteristic.
inline constexpr double kDefaultDamping = 0.8;
inline constexpr double kDefaultMinEdgeWeight = 0.6;
inline constexpr double kDefaultPagerankTol = 0.01;

/// Sparse 2-D count table. fi_characteristic uses (length, support bin);
/// mfi_characteristic uses (minsup row, length).
struct Histogram2D {
    static constexpr std::size_t kSupportBins = 1000;

    std::string x_name = "length";
    std::string y_name = "support_bin";
    std::map<std::pair<std::size_t, std::size_t>, Count> cells;

    void add(std::size_t x, std::size_t y, Count c = 1) { cells[{x, y}] += c; }
    Count at(std::size_t x, std::size_t y) const;
    Count total() const;
    /// Σ over y for a fixed x.
    Count x_total(std::size_t x) const;
    bool empty() const noexcept { return cells.empty(); }
};

/// floor(s·1000), s = 1 goes to bin 999.
std::size_t support_bin(double relative_support);

Histogram2D fi_characteristic(const TransactionDB& db, Count minsup);
/// Row r counts the MFI lengths at minsups[r].
Histogram2D mfi_characteristic(const TransactionDB& db, const std::vector<Count>& minsups);

struct CiExtensionStats {
    std::map<std::size_t, Count> w_hist;                               // |W| -> classes
    std::map<std::size_t, std::map<std::size_t, Count>> closed_by_w;   // |W| -> |prefix ∪ W| -> classes
    Count closure_events = 0;  // from the miner's counters
};

/// Runs closure-optimized Eclat and records |W| and |prefix ∪ W| per class.
CiExtensionStats ci_extension_stats(const TransactionDB& db, Count minsup);

/// |m_i ∩ m_j| over unordered pairs i < j.
std::map<std::size_t, Count> mfi_intersection_hist(const std::vector<Itemset>& mfis);

/// Directed graph on MFIs: edge i -> j with w_ij = |m_i ∩ m_j| / |m_i| when
/// w_ij >= min_edge_weight. Stored by target: in[j] = {(i, w_ij)}.
struct MfiGraph {
    std::vector<Itemset> nodes;
    std::vector<std::vector<std::pair<std::size_t, double>>> in;

    std::size_t edge_count() const;
};

MfiGraph build_mfi_graph(const std::vector<Itemset>& mfis, double min_edge_weight = kDefaultMinEdgeWeight);

struct PagerankResult {
    std::vector<double> values;
    std::size_t iterations = 0;
    bool converged = false;

    /// Fraction of nodes with value <= x.
    double distribution(double x) const;
};

/// Iterates PR_i = (1−d) + d·Σ_{j -> i} PR_j·w_ji from PR = 1 until the
/// largest per-node change is below tol. The weights are not normalized, so
/// dense graphs may diverge; then converged is false after max_iter sweeps.
PagerankResult pagerank(const MfiGraph& g, double d = kDefaultDamping, double tol = kDefaultPagerankTol,
                        std::size_t max_iter = 10000);

/// Uniform without-replacement subset of size min(k, |mfis|).
std::vector<Itemset> sample_mfis_for_graph(const std::vector<Itemset>& mfis, std::size_t k, std::uint64_t seed);

/// "x,y,count" rows.
void write_histogram_csv(std::ostream& out, const Histogram2D& h);
/// Dense matrix, one line per x and one column per y in [0, y_max]. With
/// log10 the cells hold log10(count) and empty cells are NaN.
void write_gnuplot_matrix(std::ostream& out, const Histogram2D& h, bool log10 = true);

}  // namespace pfimi
