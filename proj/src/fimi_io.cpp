#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "pfimi/datagen.hpp"
#include "pfimi/errors.hpp"

namespace pfimi {

TransactionDB parse_fimi(std::istream& in) {
    std::vector<std::vector<std::uint64_t>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line.front() == '#') continue;  // sample dumps carry a header comment
        std::vector<std::uint64_t> row;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            std::uint64_t v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size())
                throw ParseError(lineno, "malformed item token '" + tok + "'");
            row.push_back(v);
        }
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        rows.push_back(std::move(row));
    }
    if (in.bad()) throw IoError("read failure");

    std::map<std::uint64_t, Item> dense;
    for (const auto& r : rows)
        for (auto v : r) dense.emplace(v, 0);
    std::vector<std::uint64_t> labels;
    labels.reserve(dense.size());
    for (auto& [label, id] : dense) {
        id = static_cast<Item>(labels.size());
        labels.push_back(label);
    }

    std::vector<Transaction> txns;
    txns.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<Item> items;
        items.reserve(rows[i].size());
        for (auto v : rows[i]) items.push_back(dense[v]);
        txns.push_back({static_cast<Tid>(i), Itemset::from_sorted(std::move(items))});
    }
    TransactionDB db(std::move(txns), labels.size());
    db.set_labels(std::move(labels));
    return db;
}

TransactionDB read_fimi(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return parse_fimi(in);
}

void write_fimi(const TransactionDB& db, std::ostream& out) {
    std::vector<std::uint64_t> row;
    for (const auto& t : db.transactions()) {
        row.clear();
        for (Item b : t.items) row.push_back(db.label(b));
        std::sort(row.begin(), row.end());
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ' ';
            out << row[i];
        }
        out << '\n';
    }
}

void write_fimi(const TransactionDB& db, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    write_fimi(db, out);
    if (!out) throw IoError("write failure on '" + path + "'");
}

std::vector<TransactionDB> partition_db(const TransactionDB& db, std::size_t P) {
    if (P == 0) throw ParameterError("P must be >= 1");
    std::vector<TransactionDB> parts;
    parts.reserve(P);
    std::size_t n = db.size();
    std::size_t base = n / P;
    std::size_t extra = n % P;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < P; ++i) {
        std::size_t len = base + (i < extra ? 1 : 0);
        std::vector<Transaction> txns(db.transactions().begin() + static_cast<std::ptrdiff_t>(pos),
                                      db.transactions().begin() + static_cast<std::ptrdiff_t>(pos + len));
        pos += len;
        TransactionDB part(std::move(txns), db.n_items());
        part.set_labels(db.labels());
        parts.push_back(std::move(part));
    }
    return parts;
}

}  // namespace pfimi
