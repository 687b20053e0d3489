// pfimi: command-line front end.
//
// Exit codes: 0 ok, 1 bad parameters, 2 I/O or parse failure, 3 failed
// verification or worker failure. Errors go to stderr as "error[kind]: ...".

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include "pfimi/cluster.hpp"
#include "pfimi/datagen.hpp"
#include "pfimi/errors.hpp"
#include "pfimi/miners.hpp"
#include "pfimi/sampling.hpp"
#include "pfimi/scheduler.hpp"
#include "pfimi/stats.hpp"

using namespace pfimi;

namespace {

struct VerifyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string labels_of(const TransactionDB& db, const Itemset& s) {
    std::string out;
    for (Item b : s) {
        if (!out.empty()) out += ' ';
        out += std::to_string(db.label(b));
    }
    return out;
}

// Opens `path` for writing, or returns std::cout for "" / "-".
class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") return;
        file_.open(path);
        if (!file_) throw IoError("cannot write '" + path + "'");
    }
    std::ostream& get() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

void write_fis(std::ostream& out, const TransactionDB& db, const FiList& fis) {
    for (const auto& r : fis) out << labels_of(db, r.itemset) << ':' << r.support << '\n';
}

// Lines of labels, optionally followed by ":support"; '#' lines are comments.
struct LabelLine {
    std::vector<std::uint64_t> labels;
    Count support = 0;
};

std::vector<LabelLine> read_label_lines(const std::string& path, bool with_support) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::vector<LabelLine> out;
    std::string line;
    std::size_t lineno = 0;
    auto number = [&](const std::string& tok) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError(lineno, "malformed token '" + tok + "'");
        return v;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line.front() == '#') continue;
        LabelLine ll;
        std::string body = line;
        if (with_support) {
            auto colon = line.rfind(':');
            if (colon == std::string::npos) throw ParseError(lineno, "missing ':support'");
            body = line.substr(0, colon);
            std::string s = line.substr(colon + 1);
            while (!s.empty() && s.back() == ' ') s.pop_back();
            ll.support = number(s);
        }
        std::istringstream ls(body);
        std::string tok;
        while (ls >> tok) ll.labels.push_back(number(tok));
        out.push_back(std::move(ll));
    }
    return out;
}

Count resolve_minsup(Count abs, double rel, std::size_t n) {
    if (abs > 0 && rel > 0) throw ParameterError("give either --minsup or --rminsup, not both");
    if (abs > 0) return abs;
    if (rel > 0) {
        if (rel > 1) throw ParameterError("--rminsup must be in (0,1]");
        return absolute_minsup(rel, n);
    }
    throw ParameterError("--minsup or --rminsup is required");
}

Itemset to_dense(const std::vector<std::uint64_t>& labels, const std::map<std::uint64_t, Item>& dense) {
    std::vector<Item> v;
    for (auto l : labels) {
        auto it = dense.find(l);
        if (it != dense.end()) v.push_back(it->second);
    }
    return Itemset(std::move(v));
}

std::map<std::uint64_t, Item> dense_map(const TransactionDB& db) {
    std::map<std::uint64_t, Item> m;
    for (Item b = 0; b < db.labels().size(); ++b) m[db.label(b)] = b;
    return m;
}

// --- gen ---------------------------------------------------------------------

struct GenArgs {
    GenParams p;
    std::string out;
};

void cmd_gen(const GenArgs& a) {
    auto db = generate_db(a.p);
    Output o(a.out);
    write_fimi(db, o.get());
    std::cerr << "generated " << db.size() << " transactions, seed " << a.p.seed << '\n';
}

// --- mine --------------------------------------------------------------------

struct MineArgs {
    std::string file, algo = "eclat", out;
    Count minsup = 0;
    double rminsup = 0;
    EclatOptions eclat;
    bool work = false;
};

void cmd_mine(const MineArgs& a) {
    auto db = read_fimi(a.file);
    Count minsup = resolve_minsup(a.minsup, a.rminsup, db.size());
    Output o(a.out);
    WorkCounters w;
    std::size_t n = 0;
    if (a.algo == "mfi") {
        auto m = mfi_mine(db, minsup, frequent_items(db, minsup), &w);
        std::sort(m.begin(), m.end());
        FiList fis;
        for (auto& x : m) fis.push_back({x, support(db, x)});
        write_fis(o.get(), db, fis);
        n = fis.size();
    } else {
        auto fis = mine(db, minsup, parse_algo(a.algo), a.eclat, &w);
        write_fis(o.get(), db, fis);
        n = fis.size();
    }
    std::cerr << n << " itemsets at minsup " << minsup << '\n';
    if (a.work)
        std::cerr << "intersections=" << w.intersections << " tids_scanned=" << w.tids_scanned
                  << " support_computations=" << w.support_computations << " closure_events=" << w.closure_events
                  << '\n';
}

// --- rules -------------------------------------------------------------------

struct RulesArgs {
    std::string file, out;
    double minconf = 0.5;
};

void cmd_rules(const RulesArgs& a) {
    if (!(a.minconf >= 0)) throw ParameterError("--minconf must be >= 0");
    FiList fis;
    for (const auto& ll : read_label_lines(a.file, true)) {
        std::vector<Item> v;
        for (auto l : ll.labels) {
            if (l > std::numeric_limits<Item>::max()) throw ParameterError("item label too large for rules");
            v.push_back(static_cast<Item>(l));
        }
        fis.push_back({Itemset(std::move(v)), ll.support});
    }
    auto rules = generate_rules(fis, a.minconf);
    Output o(a.out);
    o.get() << "antecedent,consequent,confidence,support\n";
    for (const auto& r : rules)
        o.get() << r.antecedent.str() << ',' << r.consequent.str() << ',' << r.confidence << ',' << r.support << '\n';
    std::cerr << rules.size() << " rules\n";
}

// --- sample ------------------------------------------------------------------

struct SampleArgs {
    std::string file, method = "reservoir", out, out_db;
    Count minsup = 0;
    double rminsup = 0;
    SampleParams sp;
    std::size_t n_db = 0, n_fi = 0;
    std::string reservoir_algo = "vitter";
    std::uint64_t seed = 1;
};

void cmd_sample(const SampleArgs& a) {
    a.sp.validate();
    if (a.method != "coverage" && a.method != "coverage-exact" && a.method != "reservoir")
        throw ParameterError("unknown method '" + a.method + "' (coverage|coverage-exact|reservoir)");
    Count n_db = db_sample_size(a.sp.eps_db, a.sp.delta_db);
    Count n_fi = a.method == "reservoir" ? reservoir_sample_size(a.sp.eps_fi, a.sp.delta_fi, a.sp.rho)
                                         : coverage_sample_size(a.sp.eps_fi, a.sp.delta_fi, a.sp.rho);
    std::cout << "db_sample_size=" << n_db << '\n';
    std::cout << (a.method == "reservoir" ? "reservoir_sample_size=" : "coverage_sample_size=") << n_fi << '\n';
    if (a.file.empty()) return;

    auto db = read_fimi(a.file);
    Count minsup = resolve_minsup(a.minsup, a.rminsup, db.size());
    RunParams rp;
    rp.minsup = minsup;
    rp.seed = a.seed;
    rp.n_db_sample = a.n_db ? a.n_db : n_db;
    rp.n_fi_sample = a.n_fi ? a.n_fi : n_fi;
    rp.reservoir_algo = a.reservoir_algo == "simple" ? ReservoirAlgo::simple : ReservoirAlgo::vitter;
    SimCluster cluster(1);
    std::vector<TransactionDB> parts{db};
    auto base = frequent_items(db, minsup);
    Phase1Result r;
    if (a.method == "reservoir") {
        r = phase1_reservoir(cluster, parts, base, minsup, rp.n_db_sample, rp);
    } else {
        r = phase1_coverage_seq(cluster, parts, base, minsup, rp.n_db_sample, rp);
        if (a.method == "coverage-exact" && !r.mfis.empty()) {
            auto s = coverage_sample(r.mfis, rp.n_fi_sample, mix_seed(a.seed, 200), true);
            r.fi_sample = std::move(s.itemsets);
            r.source = s.source;
        }
    }
    Output o(a.out);
    o.get() << "# source=" << to_string(r.source) << " seed=" << a.seed << " total_seen="
            << (r.fi_counts.empty() ? r.fi_sample.size() : r.fi_counts.front()) << " sample_minsup=" << r.sample_minsup
            << '\n';
    for (const auto& s : r.fi_sample) o.get() << labels_of(db, s) << '\n';
    if (!a.out_db.empty()) {
        Output d(a.out_db);
        for (const auto& t : r.db_sample.transactions()) d.get() << labels_of(db, t.items) << '\n';
    }
    std::cerr << r.fi_sample.size() << " sampled itemsets from a " << r.db_sample.size()
              << "-transaction database sample\n";
}

// --- plan --------------------------------------------------------------------

struct PlanArgs {
    std::string db_sample, fi_sample, out, scheduler = "lpt";
    double alpha = 0.3;
    std::size_t P = 2;
};

void cmd_plan(const PlanArgs& a) {
    auto db = read_fimi(a.db_sample);
    auto dense = dense_map(db);
    std::vector<Itemset> fis;
    for (const auto& ll : read_label_lines(a.fi_sample, false)) fis.push_back(to_dense(ll.labels, dense));
    auto plan = plan_phase2(fis, db, a.alpha, a.P);
    std::vector<Itemset> prefixes;
    std::vector<Count> weights;
    for (const auto& q : plan.pbecs) {
        prefixes.push_back(q.prefix);
        weights.push_back(q.est_count);
    }
    if (parse_scheduler(a.scheduler) == SchedulerKind::qkp)
        plan.assignment = db_repl_min(share_matrix(prefixes, db), weights, a.P);
    double repl = replication_factor(plan.assignment, db, prefixes);

    // Report in label space.
    PbecPlan out = plan;
    auto relabel = [&](const Itemset& s) {
        std::vector<Item> v;
        for (Item b : s) v.push_back(static_cast<Item>(db.label(b)));
        return Itemset(std::move(v));
    };
    for (auto& q : out.pbecs) {
        q.prefix = relabel(q.prefix);
        for (auto& e : q.extensions) e = static_cast<Item>(db.label(e));
    }
    for (auto& s : out.split_prefixes) s = relabel(s);
    Output o(a.out);
    o.get() << plan_to_json(out) << '\n';
    std::cerr << "pbecs=" << plan.pbecs.size() << " predicted_balance=" << balance_ratio(plan.loads())
              << " sample_replication=" << repl << '\n';
}

// --- run ---------------------------------------------------------------------

struct RunArgs {
    std::string file, out, metrics, manifest, variant = "reservoir", scheduler = "lpt", reservoir_algo = "vitter";
    std::size_t P = 4;
    Count minsup = 0;
    double rminsup = 0;
    RunParams rp;
    bool no_dynamic = false;
    bool verify = false;
    std::vector<std::uint64_t> seeds{1};
};

void cmd_run(RunArgs a) {
    auto db = read_fimi(a.file);
    a.rp.minsup = resolve_minsup(a.minsup, a.rminsup, db.size());
    a.rp.variant = parse_variant(a.variant);
    a.rp.scheduler = parse_scheduler(a.scheduler);
    a.rp.dynamic_lb = !a.no_dynamic;
    if (a.reservoir_algo != "vitter" && a.reservoir_algo != "simple")
        throw ParameterError("unknown reservoir algorithm '" + a.reservoir_algo + "'");
    a.rp.reservoir_algo = a.reservoir_algo == "simple" ? ReservoirAlgo::simple : ReservoirAlgo::vitter;
    if (a.P == 0) throw ParameterError("-P must be >= 1");
    auto parts = partition_db(db, a.P);

    FiList want;
    if (a.verify) want = mine(db, a.rp.minsup, Algo::eclat);
    std::unique_ptr<Output> metrics;
    if (!a.metrics.empty()) metrics = std::make_unique<Output>(a.metrics);

    for (std::size_t k = 0; k < a.seeds.size(); ++k) {
        a.rp.seed = a.seeds[k];
        auto r = run_parallel_fimi(parts, a.rp);
        auto fis = r.merged();
        if (k == 0) {
            Output o(a.out);
            write_fis(o.get(), db, fis);
            if (!a.manifest.empty()) {
                Output m(a.manifest);
                write_manifest(m.get(), a.rp, a.P);
            }
        }
        if (metrics) {
            std::ostringstream os;
            write_metrics_csv(os, r);
            std::string text = os.str();
            if (k > 0) text = text.substr(text.find('\n') + 1);  // one header only
            metrics->get() << text;
        }
        std::cerr << "seed=" << a.rp.seed << " fis=" << fis.size() << " replication=" << r.replication_factor
                  << " balance=" << r.balance << " messages=" << r.messages << " bytes=" << r.bytes
                  << " rounds=" << r.rounds << " wall_ms=" << r.wall_ms << '\n';
        if (a.verify) {
            if (fis != want || !r.sent_equals_received) {
                std::ostringstream os;
                os << "seed " << a.rp.seed << ": parallel " << fis.size() << " itemsets, sequential " << want.size();
                if (!r.sent_equals_received) os << ", messages lost";
                throw VerifyError(os.str());
            }
        }
    }
    if (a.verify) std::cout << "VERIFY: OK\n";
}

// --- stats -------------------------------------------------------------------

struct StatsArgs {
    std::string file, which = "fi", out;
    std::vector<Count> minsups;
    double rminsup = 0;
    bool matrix = false;
    std::size_t sample_k = 2000;
    double d = kDefaultDamping, min_edge = kDefaultMinEdgeWeight, tol = kDefaultPagerankTol;
    std::uint64_t seed = 1;
};

void cmd_stats(const StatsArgs& a) {
    auto db = read_fimi(a.file);
    std::vector<Count> ms = a.minsups;
    if (a.rminsup > 0) ms.push_back(absolute_minsup(a.rminsup, db.size()));
    if (ms.empty()) throw ParameterError("--minsup or --rminsup is required");
    Output o(a.out);
    auto& out = o.get();
    if (a.which == "fi") {
        auto h = fi_characteristic(db, ms.front());
        a.matrix ? write_gnuplot_matrix(out, h) : write_histogram_csv(out, h);
    } else if (a.which == "mfi") {
        auto h = mfi_characteristic(db, ms);
        a.matrix ? write_gnuplot_matrix(out, h) : write_histogram_csv(out, h);
    } else if (a.which == "ci") {
        auto st = ci_extension_stats(db, ms.front());
        out << "w_size,closed_size,classes\n";
        for (const auto& [w, row] : st.closed_by_w)
            for (const auto& [len, n] : row) out << w << ',' << len << ',' << n << '\n';
        std::cerr << "closure_events=" << st.closure_events << '\n';
    } else if (a.which == "isect") {
        out << "intersection_size,pairs\n";
        for (const auto& [k, n] : mfi_intersection_hist(mfi_mine(db, ms.front()))) out << k << ',' << n << '\n';
    } else if (a.which == "pagerank") {
        auto sample = sample_mfis_for_graph(mfi_mine(db, ms.front()), a.sample_k, a.seed);
        auto g = build_mfi_graph(sample, a.min_edge);
        auto r = pagerank(g, a.d, a.tol);
        if (!r.converged) {
            bool finite = std::all_of(r.values.begin(), r.values.end(), [](double x) { return std::isfinite(x); });
            throw VerifyError("pagerank " + std::string(finite ? "did not converge" : "diverged") + " after " +
                              std::to_string(r.iterations) +
                              " iterations; edge weights are not normalized, so a dense graph can grow without "
                              "bound (raise --min-edge-weight)");
        }
        std::vector<double> v = r.values;
        std::sort(v.begin(), v.end());
        out << "pagerank,D\n";
        for (std::size_t k = 0; k < v.size(); ++k)
            if (k + 1 == v.size() || v[k + 1] != v[k]) out << v[k] << ',' << r.distribution(v[k]) << '\n';
        std::cerr << "nodes=" << g.nodes.size() << " edges=" << g.edge_count() << " iterations=" << r.iterations
                  << '\n';
    } else {
        throw ParameterError("unknown --which '" + a.which + "' (fi|mfi|ci|isect|pagerank)");
    }
}

int fail(const char* kind, const std::string& what, int code) {
    std::cerr << "error[" << kind << "]: " << what << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frequent-itemset mining toolkit with a simulated parallel cluster"};
    app.require_subcommand(1);
    // Options of a subcommand go under a section of the same name: "[run]\nminsup = 40".
    app.set_config("--config", "", "TOML/INI file; command-line values take precedence");
    app.allow_config_extras(CLI::config_extras_mode::error);

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Generate an IBM-style FIMI database");
    g->add_option("--items", gen.p.n_items, "N: number of items")->capture_default_str();
    g->add_option("--patterns", gen.p.n_patterns, "|L|: number of patterns")->capture_default_str();
    g->add_option("--pattern-len", gen.p.avg_pattern_len, "E(|I|)")->capture_default_str();
    g->add_option("--txn-len", gen.p.avg_txn_len, "E(|T|)")->capture_default_str();
    g->add_option("--txns", gen.p.n_txns, "|D|")->capture_default_str();
    g->add_option("--corruption", gen.p.corruption_mean, "mean corruption level")->capture_default_str();
    g->add_option("--weight-mean", gen.p.weight_mean, "mean pattern weight")->capture_default_str();
    g->add_option("--seed", gen.p.seed)->capture_default_str();
    g->add_option("-o,--out", gen.out, "output file (default stdout)");

    MineArgs mi;
    auto* m = app.add_subcommand("mine", "Mine frequent (or maximal) itemsets");
    m->add_option("file", mi.file)->required();
    m->add_option("--minsup", mi.minsup, "absolute minimum support");
    m->add_option("--rminsup", mi.rminsup, "relative minimum support");
    m->add_option("--algo", mi.algo, "apriori|eclat|fpgrowth|mfi")->capture_default_str();
    m->add_flag("--diffsets", mi.eclat.use_diffsets);
    m->add_flag("--dynamic-order", mi.eclat.dynamic_order);
    m->add_flag("--closure", mi.eclat.closure_opt);
    m->add_flag("--work", mi.work, "print work counters to stderr");
    m->add_option("-o,--out", mi.out);

    RulesArgs ru;
    auto* r = app.add_subcommand("rules", "Association rules from an FI listing (items:support lines)");
    r->add_option("file", ru.file)->required();
    r->add_option("--minconf", ru.minconf)->capture_default_str();
    r->add_option("-o,--out", ru.out);

    SampleArgs sa;
    auto* s = app.add_subcommand("sample", "Sample sizes, and a database plus FI sample when a file is given");
    s->add_option("file", sa.file);
    s->add_option("--minsup", sa.minsup);
    s->add_option("--rminsup", sa.rminsup);
    s->add_option("--method", sa.method, "coverage|coverage-exact|reservoir")->capture_default_str();
    s->add_option("--eps", sa.sp.eps_fi, "FI sample error")->capture_default_str();
    s->add_option("--delta", sa.sp.delta_fi, "FI sample failure probability")->capture_default_str();
    s->add_option("--rho", sa.sp.rho, "smallest relative PBEC size")->capture_default_str();
    s->add_option("--eps-db", sa.sp.eps_db)->capture_default_str();
    s->add_option("--delta-db", sa.sp.delta_db)->capture_default_str();
    s->add_option("--db-size", sa.n_db, "override the database sample size");
    s->add_option("--n", sa.n_fi, "override the FI sample size");
    s->add_option("--reservoir-algo", sa.reservoir_algo, "simple|vitter")->capture_default_str();
    s->add_option("--seed", sa.seed)->capture_default_str();
    s->add_option("-o,--out", sa.out, "FI sample file");
    s->add_option("--out-db", sa.out_db, "database sample file");

    PlanArgs pa;
    auto* p = app.add_subcommand("plan", "Phase-2 partitioning and scheduling from sample files");
    p->add_option("--db-sample", pa.db_sample)->required();
    p->add_option("--fi-sample", pa.fi_sample)->required();
    p->add_option("--alpha", pa.alpha)->capture_default_str();
    p->add_option("-P,--procs", pa.P)->capture_default_str();
    p->add_option("--scheduler", pa.scheduler, "lpt|qkp")->capture_default_str();
    p->add_option("-o,--out", pa.out, "plan JSON");

    RunArgs ra;
    auto* u = app.add_subcommand("run", "Run the four-phase method on the simulated cluster");
    u->add_option("file", ra.file)->required();
    u->add_option("--variant", ra.variant, "seq|par|reservoir")->capture_default_str();
    u->add_option("-P,--procs", ra.P)->capture_default_str();
    u->add_option("--minsup", ra.minsup);
    u->add_option("--rminsup", ra.rminsup);
    u->add_option("--alpha", ra.rp.alpha)->capture_default_str();
    u->add_option("--db-sample-size", ra.rp.n_db_sample)->capture_default_str();
    u->add_option("--fi-sample-size", ra.rp.n_fi_sample)->capture_default_str();
    u->add_option("--scheduler", ra.scheduler, "lpt|qkp")->capture_default_str();
    u->add_option("--reservoir-algo", ra.reservoir_algo, "simple|vitter")->capture_default_str();
    u->add_option("--round-budget", ra.rp.round_budget)->capture_default_str();
    u->add_flag("--no-dynamic-lb", ra.no_dynamic);
    u->add_flag("--threads", ra.rp.threads, "mine the workers' Phase-4 share on OpenMP threads");
    u->add_flag("--diffsets", ra.rp.eclat.use_diffsets);
    u->add_flag("--dynamic-order", ra.rp.eclat.dynamic_order);
    u->add_flag("--closure", ra.rp.eclat.closure_opt);
    u->add_option("--seed", ra.seeds, "one or more seeds")->capture_default_str();
    u->add_flag("--verify", ra.verify, "compare with the sequential miner");
    u->add_option("-o,--out", ra.out, "FI output of the first seed");
    u->add_option("--metrics", ra.metrics, "per-worker metrics CSV");
    u->add_option("--manifest", ra.manifest, "run parameters");

    StatsArgs st;
    auto* t = app.add_subcommand("stats", "Database characteristics as CSV");
    t->add_option("file", st.file)->required();
    t->add_option("--minsup", st.minsups, "one or more absolute minsups");
    t->add_option("--rminsup", st.rminsup);
    t->add_option("--which", st.which, "fi|mfi|ci|isect|pagerank")->capture_default_str();
    t->add_flag("--matrix", st.matrix, "gnuplot matrix (log10 counts) instead of CSV");
    t->add_option("--sample-k", st.sample_k, "MFIs sampled for the pagerank graph")->capture_default_str();
    t->add_option("--damping", st.d)->capture_default_str();
    t->add_option("--min-edge-weight", st.min_edge)->capture_default_str();
    t->add_option("--tol", st.tol)->capture_default_str();
    t->add_option("--seed", st.seed)->capture_default_str();
    t->add_option("-o,--out", st.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::FileError& e) {
        return fail("io", e.what(), 2);
    } catch (const CLI::ParseError& e) {
        return fail("param", e.what(), 1);
    }

    try {
        if (*g) cmd_gen(gen);
        if (*m) cmd_mine(mi);
        if (*r) cmd_rules(ru);
        if (*s) cmd_sample(sa);
        if (*p) cmd_plan(pa);
        if (*u) cmd_run(ra);
        if (*t) cmd_stats(st);
    } catch (const ParameterError& e) {
        return fail("param", e.what(), 1);
    } catch (const IoError& e) {
        return fail("io", e.what(), 2);
    } catch (const VerifyError& e) {
        return fail("verify", e.what(), 3);
    } catch (const WorkerError& e) {
        return fail("worker", e.what(), 3);
    } catch (const std::logic_error& e) {
        return fail("param", e.what(), 1);
    }
    return 0;
}
