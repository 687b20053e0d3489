#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "pfimi/cluster.hpp"
#include "pfimi/datagen.hpp"
#include "pfimi/errors.hpp"

using namespace pfimi;

namespace {

TransactionDB small_generated(std::uint64_t seed, std::size_t n_txns = 400) {
    GenParams p;
    p.n_items = 30;
    p.n_patterns = 25;
    p.avg_pattern_len = 4;
    p.avg_txn_len = 6;
    p.n_txns = n_txns;
    p.seed = seed;
    return generate_db(p);
}

std::set<std::pair<std::size_t, std::size_t>> normalized(const ExchangeSchedule& s) {
    std::set<std::pair<std::size_t, std::size_t>> out;
    for (const auto& r : s.rounds)
        for (auto [a, b] : r) out.insert({std::min(a, b), std::max(a, b)});
    return out;
}

}  // namespace

TEST_CASE("messages become visible after deliver") {
    SimCluster c(3);
    c.send({0, 2, MsgKind::token, {7}, {}, {}, 0});
    CHECK_FALSE(c.receive(2).has_value());
    CHECK_FALSE(c.quiescent());
    c.deliver();
    auto m = c.receive(2, MsgKind::token);
    REQUIRE(m.has_value());
    CHECK(m->ints == std::vector<std::uint64_t>{7});
    CHECK(m->bytes == 16 + 8);
    CHECK(c.quiescent());
    CHECK(c.messages_sent() == c.messages_received());
    CHECK_THROWS(c.expect(1, MsgKind::plan));
    CHECK_THROWS_AS(SimCluster(0), ParameterError);
}

TEST_CASE("round-robin exchange schedule") {
    for (std::size_t P = 2; P <= 16; ++P) {
        auto s = exchange_schedule(P);
        CHECK(s.rounds.size() == (P % 2 == 0 ? P - 1 : P));
        std::size_t total = 0;
        for (const auto& r : s.rounds) {
            std::set<std::size_t> busy;
            for (auto [a, b] : r) {
                CHECK(a < b);
                CHECK(b < P);
                CHECK(busy.insert(a).second);
                CHECK(busy.insert(b).second);
            }
            CHECK(r.size() == P / 2);
            total += r.size();
        }
        CHECK(total == P * (P - 1) / 2);
        CHECK(normalized(s).size() == P * (P - 1) / 2);
    }
    auto s = exchange_schedule(14);
    std::vector<std::pair<std::size_t, std::size_t>> r1{{0, 13}, {1, 12}, {2, 11}, {3, 10}, {4, 9}, {5, 8}, {6, 7}};
    CHECK(s.rounds[0] == r1);
    std::vector<std::pair<std::size_t, std::size_t>> r2{{0, 12}, {11, 13}, {1, 10}, {2, 9}, {3, 8}, {4, 7}, {5, 6}};
    CHECK(s.rounds[1] == r2);
    std::vector<std::pair<std::size_t, std::size_t>> last{{0, 1}, {2, 13}, {3, 12}, {4, 11}, {5, 10}, {6, 9}, {7, 8}};
    CHECK(s.rounds.back() == last);
    CHECK(exchange_schedule(1).rounds.empty());
}

TEST_CASE("parallel MFI on the worked example") {
    auto db = oracle::example15();
    auto exact = oracle::to_set(mfi_mine(db, 5));
    for (std::size_t P : {1, 2, 3, 6}) {
        for (bool dyn : {false, true}) {
            auto r = parallel_mfi(db, 5, P, dyn);
            auto m = oracle::to_set(r.merged);
            for (const auto& x : exact) CHECK(m.count(x) == 1);
            for (const auto& x : m) CHECK(oracle::count(db, x) >= 5);
            CHECK(r.merged.size() <= std::min<std::size_t>(P, 4) * exact.size());
        }
    }
    // P = 6: roots 1..6 on separate workers; worker of root 5 reports {5,6}.
    auto r = parallel_mfi(db, 5, 6, false);
    CHECK(oracle::to_set(r.per_worker[4]).count({5, 6}) == 1);
}

TEST_CASE("static root split") {
    auto s = static_root_split({10, 11, 12, 13, 14}, 2);
    CHECK(s[0] == std::vector<Item>{10, 11});
    CHECK(s[1] == std::vector<Item>{12, 13, 14});
    auto t = static_root_split({1, 2}, 4);
    CHECK(t[0].empty());
    CHECK(t[1] == std::vector<Item>{1});
    CHECK(t[3] == std::vector<Item>{2});
}

TEST_CASE("dynamic balancing moves roots and terminates") {
    auto db = small_generated(3, 600);
    auto base = frequent_items(db, 10);
    // A small round budget makes root costs span many rounds, so early finishers steal.
    SimCluster c(4);
    auto r = parallel_mfi(c, db, 10, base, true, 64);
    CHECK(r.dyn.steals > 0);
    CHECK(r.dyn.token_probes > 0);
    CHECK(c.quiescent());
    std::size_t done = 0;
    for (const auto& v : r.dyn.roots_done) done += v.size();
    CHECK(done == base.size());
    CHECK(oracle::to_set(r.merged).size() >= mfi_mine(db, 10).size());
}

TEST_CASE("proportional counts sum exactly") {
    CHECK(proportional_counts({1, 1, 1}, 10) == std::vector<Count>{4, 3, 3});
    CHECK(proportional_counts({0, 5}, 7) == std::vector<Count>{0, 7});
    CHECK(proportional_counts({0, 0}, 7) == std::vector<Count>{0, 0});
    auto big = proportional_counts({~std::uint64_t{0}, ~std::uint64_t{0}, 1}, 1001);
    CHECK(big[0] + big[1] + big[2] == 1001);
}

TEST_CASE("tidlist cache reuses shared prefixes") {
    auto db = oracle::example15();
    auto vdb = db.vertical();
    TidlistCache cache(vdb);
    WorkCounters w;
    CHECK(cache.advance(Itemset{3, 4}, w) == tidlist(db, Itemset{3, 4}));
    CHECK(cache.advance(Itemset{3, 4, 5}, w) == tidlist(db, Itemset{3, 4, 5}));
    CHECK(cache.reuse_count() == 2);
    CHECK(cache.advance(Itemset{3, 5}, w) == tidlist(db, Itemset{3, 5}));
    CHECK(cache.reuse_count() == 3);
    CHECK(cache.depth() == 2);
    CHECK(cache.advance(Itemset{}, w).size() == 15);
}

TEST_CASE("exec_eclat mines exactly the class members") {
    auto db = oracle::example15();
    std::vector<Pbec> q{{Itemset{3}, {4, 5, 6}, 0}, {Itemset{1}, {3, 4}, 0}};
    auto r = exec_eclat(q, db, 5);
    auto got = oracle::to_map(r.fis);
    auto all = oracle::brute_fis(db, 5);
    oracle::FiMap want;
    for (const auto& [u, c] : all)
        for (const auto& p : q)
            if (pbec_contains(p, Itemset(u))) want[u] = c;
    CHECK(got == want);
}

TEST_CASE("phase-3 exchange equals the set-builder definition") {
    auto db = small_generated(8);
    for (std::size_t P : {2, 3, 5}) {
        auto parts = partition_db(db, P);
        auto plan = plan_phase2({}, db, frequent_items(db, 20), 0.5, P);
        SimCluster c(P);
        auto got = phase3_exchange(c, plan, parts);
        auto want = phase3_reference(plan, parts);
        REQUIRE(got.size() == P);
        for (std::size_t j = 0; j < P; ++j) CHECK(got[j] == want[j]);
        CHECK(c.quiescent());
    }
}

TEST_CASE("run_parallel_fimi matches the sequential miner") {
    auto db = small_generated(21);
    const Count minsup = 20;
    auto want = mine(db, minsup, Algo::eclat);
    for (auto v : {Variant::seq, Variant::par, Variant::reservoir}) {
        for (std::size_t P : {1, 3, 4}) {
            RunParams rp;
            rp.variant = v;
            rp.minsup = minsup;
            rp.n_db_sample = 300;
            rp.n_fi_sample = 400;
            rp.seed = 5;
            auto r = run_parallel_fimi(partition_db(db, P), rp);
            CHECK(r.merged() == want);
            CHECK(r.sent_equals_received);
            CHECK(r.replication_factor <= static_cast<double>(P) + 1e-9);
            CHECK(r.workers.size() == P);
        }
    }
    RunParams rp;
    rp.minsup = minsup;
    rp.threads = true;
    rp.scheduler = SchedulerKind::qkp;
    rp.eclat.use_diffsets = true;
    rp.n_db_sample = 300;
    rp.n_fi_sample = 400;
    CHECK(run_parallel_fimi(partition_db(db, 4), rp).merged() == want);
}

TEST_CASE("run_parallel_fimi rejects bad parameters") {
    auto parts = partition_db(oracle::example15(), 2);
    RunParams rp;
    rp.minsup = 0;
    CHECK_THROWS_AS(run_parallel_fimi(parts, rp), ParameterError);
    rp.minsup = 5;
    rp.alpha = 0;
    CHECK_THROWS_AS(run_parallel_fimi(parts, rp), ParameterError);
    CHECK_THROWS_AS(run_parallel_fimi({}, RunParams{}), ParameterError);
    CHECK_THROWS_AS(parse_variant("bogus"), ParameterError);
    CHECK(parse_variant("par") == Variant::par);
    CHECK(parse_scheduler("qkp") == SchedulerKind::qkp);
}

TEST_CASE("an idle donor does not bounce its last root back and forth") {
    // This instance once made two idle workers swap one root indefinitely.
    GenParams g;
    g.n_items = 50;
    g.n_patterns = 60;
    g.avg_pattern_len = 4;
    g.avg_txn_len = 8;
    g.n_txns = 2000;
    g.seed = 5;
    auto db = generate_db(g);
    RunParams rp;
    rp.variant = Variant::reservoir;
    rp.minsup = 40;
    rp.n_db_sample = 600;
    rp.n_fi_sample = 1500;
    rp.seed = 5;
    auto r = run_parallel_fimi(partition_db(db, 2), rp);
    CHECK(r.merged() == mine(db, 40, Algo::eclat));
    CHECK(r.phase1.dyn.rounds < 100000);
}
