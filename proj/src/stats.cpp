#include "pfimi/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "pfimi/errors.hpp"
#include "pfimi/miners.hpp"
#include "pfimi/sampling.hpp"

namespace pfimi {

Count Histogram2D::at(std::size_t x, std::size_t y) const {
    auto it = cells.find({x, y});
    return it == cells.end() ? 0 : it->second;
}

Count Histogram2D::total() const {
    Count s = 0;
    for (const auto& [k, c] : cells) s += c;
    return s;
}

Count Histogram2D::x_total(std::size_t x) const {
    Count s = 0;
    for (auto it = cells.lower_bound({x, 0}); it != cells.end() && it->first.first == x; ++it) s += it->second;
    return s;
}

std::size_t support_bin(double s) {
    if (!(s >= 0.0 && s <= 1.0)) throw ParameterError("relative support must be in [0,1]");
    auto b = static_cast<std::size_t>(std::floor(s * static_cast<double>(Histogram2D::kSupportBins)));
    return std::min(b, Histogram2D::kSupportBins - 1);
}

Histogram2D fi_characteristic(const TransactionDB& db, Count minsup) {
    Histogram2D h;
    if (db.empty() || minsup > db.size()) return h;
    const double n = static_cast<double>(db.size());
    eclat(db, minsup, {}, [&](const Itemset& s, Count c) { h.add(s.size(), support_bin(static_cast<double>(c) / n)); });
    return h;
}

Histogram2D mfi_characteristic(const TransactionDB& db, const std::vector<Count>& minsups) {
    Histogram2D h;
    h.x_name = "minsup_row";
    h.y_name = "length";
    for (std::size_t r = 0; r < minsups.size(); ++r) {
        if (minsups[r] == 0) throw ParameterError("minsup must be >= 1");
        if (minsups[r] > db.size()) continue;
        for (const auto& m : mfi_mine(db, minsups[r])) h.add(r, m.size());
    }
    return h;
}

CiExtensionStats ci_extension_stats(const TransactionDB& db, Count minsup) {
    CiExtensionStats st;
    if (db.empty() || minsup > db.size()) return st;
    EclatOptions opts;
    opts.closure_opt = true;
    auto work = eclat(db, minsup, opts, [](const Itemset&, Count) {}, [&](std::size_t w, std::size_t closed) {
        ++st.w_hist[w];
        ++st.closed_by_w[w][closed];
    });
    st.closure_events = work.closure_events;
    return st;
}

std::map<std::size_t, Count> mfi_intersection_hist(const std::vector<Itemset>& mfis) {
    std::map<std::size_t, Count> h;
    for (std::size_t i = 0; i < mfis.size(); ++i)
        for (std::size_t j = i + 1; j < mfis.size(); ++j) ++h[mfis[i].intersect(mfis[j]).size()];
    return h;
}

std::size_t MfiGraph::edge_count() const {
    std::size_t n = 0;
    for (const auto& e : in) n += e.size();
    return n;
}

MfiGraph build_mfi_graph(const std::vector<Itemset>& mfis, double min_edge_weight) {
    MfiGraph g;
    g.nodes = mfis;
    g.in.resize(mfis.size());
    for (std::size_t i = 0; i < mfis.size(); ++i) {
        if (mfis[i].empty()) continue;
        for (std::size_t j = 0; j < mfis.size(); ++j) {
            if (i == j) continue;
            double w = static_cast<double>(mfis[i].intersect(mfis[j]).size()) / static_cast<double>(mfis[i].size());
            if (w >= min_edge_weight) g.in[j].emplace_back(i, w);
        }
    }
    return g;
}

double PagerankResult::distribution(double x) const {
    if (values.empty()) return 0.0;
    auto n = std::count_if(values.begin(), values.end(), [&](double v) { return v <= x; });
    return static_cast<double>(n) / static_cast<double>(values.size());
}

PagerankResult pagerank(const MfiGraph& g, double d, double tol, std::size_t max_iter) {
    if (!(d > 0.0 && d < 1.0)) throw ParameterError("damping factor must be in (0,1)");
    if (!(tol > 0.0)) throw ParameterError("tol must be > 0");
    const std::size_t n = g.nodes.size();
    PagerankResult r;
    r.values.assign(n, 1.0);
    if (n == 0) {
        r.converged = true;
        return r;
    }
    std::vector<double> next(n);
    while (r.iterations < max_iter) {
        double change = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (auto [j, w] : g.in[i]) s += r.values[j] * w;
            next[i] = (1.0 - d) + d * s;
            change = std::max(change, std::abs(next[i] - r.values[i]));
        }
        r.values.swap(next);
        ++r.iterations;
        if (!std::isfinite(change)) break;
        if (change < tol) {
            r.converged = true;
            break;
        }
    }
    return r;
}

std::vector<Itemset> sample_mfis_for_graph(const std::vector<Itemset>& mfis, std::size_t k, std::uint64_t seed) {
    if (k == 0) return {};
    if (k >= mfis.size()) return mfis;
    Reservoir<Itemset> res(k, seed, ReservoirAlgo::vitter);
    for (const auto& m : mfis) {
        if (res.wants_next()) {
            res.offer(m);
        } else {
            res.offer(Itemset{});  // dropped by the policy; keeps the count in step
        }
    }
    return res.take();
}

void write_histogram_csv(std::ostream& out, const Histogram2D& h) {
    out << h.x_name << ',' << h.y_name << ",count\n";
    for (const auto& [k, c] : h.cells) out << k.first << ',' << k.second << ',' << c << '\n';
}

void write_gnuplot_matrix(std::ostream& out, const Histogram2D& h, bool log10) {
    if (h.cells.empty()) return;
    std::size_t x_max = h.cells.rbegin()->first.first, y_max = 0;
    for (const auto& [k, c] : h.cells) y_max = std::max(y_max, k.second);
    for (std::size_t x = 0; x <= x_max; ++x) {
        for (std::size_t y = 0; y <= y_max; ++y) {
            Count c = h.at(x, y);
            if (y) out << ' ';
            if (!log10) {
                out << c;
            } else if (c == 0) {
                out << "nan";
            } else {
                out << std::log10(static_cast<double>(c));
            }
        }
        out << '\n';
    }
}

}  // namespace pfimi
