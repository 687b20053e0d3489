#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pfimi/core.hpp"

namespace pfimi {

/// Parameters of the IBM-style generator.
struct GenParams {
    std::size_t n_items = 1000;       // N
    std::size_t n_patterns = 2000;    // |L|
    double avg_pattern_len = 4.0;     // E(|I|)
    double avg_txn_len = 10.0;        // E(|T|)
    std::size_t n_txns = 10000;       // |D|
    double corruption_mean = 0.5;
    double weight_mean = 1.0;
    std::uint64_t seed = 1;

    /// Throws ParameterError on a zero count or a non-positive mean.
    void validate() const;
};

/// A potentially frequent itemset with its selection weight and corruption level.
struct Pattern {
    Itemset items;
    double weight = 0.0;
    double corruption = 0.0;
};

std::vector<Pattern> generate_patterns(const GenParams& p);
TransactionDB generate_db(const GenParams& p);

/// Transactions drawn from `n_clusters` disjoint item blocks; within a block
/// the IBM procedure runs over a block-local pattern pool. Used to build DBs
/// whose PBECs share transactions unevenly (replication and balance studies).
struct ClusteredParams {
    std::size_t n_clusters = 4;
    std::size_t items_per_cluster = 12;
    std::size_t patterns_per_cluster = 6;
    double avg_pattern_len = 5.0;
    double avg_txn_len = 7.0;
    std::size_t n_txns = 1000;
    /// Cluster popularity skew: weight of cluster k is skew^k.
    double skew = 0.6;
    std::uint64_t seed = 1;
};

TransactionDB generate_clustered_db(const ClusteredParams& p);

/// FIMI text: one transaction per line, space-separated ids. Ids are remapped
/// to dense 0-based ids in ascending label order; labels are kept in the DB.
/// Lines starting with '#' are comments. Tids are 0-based indices of the
/// data lines. Throws ParseError with a line number.
TransactionDB parse_fimi(std::istream& in);
TransactionDB read_fimi(const std::string& path);
/// Writes labels in ascending order, one line per transaction.
void write_fimi(const TransactionDB& db, std::ostream& out);
void write_fimi(const TransactionDB& db, const std::string& path);

/// Contiguous blocks whose sizes differ by at most one; tids are preserved.
std::vector<TransactionDB> partition_db(const TransactionDB& db, std::size_t P);

}  // namespace pfimi
