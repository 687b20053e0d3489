#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "oracles.hpp"
#include "pfimi/errors.hpp"
#include "pfimi/scheduler.hpp"

using namespace pfimi;

namespace {

std::vector<Itemset> phase2_fi_sample() {
    return {Itemset{1, 3}, Itemset{2, 3}, Itemset{2, 4}, Itemset{2, 4, 5}, Itemset{3, 4},
            Itemset{3, 5}, Itemset{3, 4, 6}, Itemset{3, 4, 5, 6}, Itemset{4, 5}, Itemset{5, 6}};
}

// Item k occurs in k rows, so supports ascend with the id.
TransactionDB ascending_db() {
    return TransactionDB::from_rows({{1, 2, 3, 4, 5, 6}, {2, 3, 4, 5, 6}, {3, 4, 5, 6}, {4, 5, 6}, {5, 6}, {6}});
}

Count brute_opt(const std::vector<Count>& sizes, std::size_t P) {
    std::vector<Count> load(P, 0);
    Count best = ~Count{0};
    std::function<void(std::size_t)> go = [&](std::size_t j) {
        if (j == sizes.size()) {
            best = std::min(best, *std::max_element(load.begin(), load.end()));
            return;
        }
        for (std::size_t p = 0; p < P; ++p) {
            load[p] += sizes[j];
            if (*std::max_element(load.begin(), load.end()) < best) go(j + 1);
            load[p] -= sizes[j];
            if (load[p] == 0) break;  // empty processors are interchangeable
        }
    };
    go(0);
    return best;
}

void check_is_partition(const Assignment& a, std::size_t n) {
    std::vector<int> seen(n, 0);
    for (const auto& proc : a)
        for (std::size_t k : proc) ++seen.at(k);
    for (int s : seen) CHECK(s == 1);
}

}  // namespace

TEST_CASE("partition of the root class follows ascending support") {
    auto kids = partition_pbec(Itemset{}, {1, 2, 3, 4, 5, 6}, ascending_db(), phase2_fi_sample());
    REQUIRE(kids.size() == 6);
    std::vector<Count> est;
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(kids[k].prefix == Itemset{static_cast<Item>(k + 1)});
        est.push_back(kids[k].est_count);
    }
    CHECK(est == std::vector<Count>{1, 3, 4, 1, 1, 0});
    CHECK(kids[1].extensions == std::vector<Item>{3, 4, 5, 6});
    CHECK(kids[5].extensions.empty());
}

TEST_CASE("reversed supports reverse the extension order") {
    auto db = TransactionDB::from_rows({{1, 2, 3}, {1, 2}, {1}});
    auto kids = partition_pbec(Itemset{}, {1, 2, 3}, db, {});
    CHECK(kids[0].prefix == Itemset{3});
    CHECK(kids[0].extensions == std::vector<Item>{2, 1});
    CHECK(kids[2].prefix == Itemset{1});
}

TEST_CASE("phase-2 plan on the worked sample") {
    auto plan = plan_phase2(phase2_fi_sample(), ascending_db(), {1, 2, 3, 4, 5, 6}, 1.2, 3);
    REQUIRE(plan.pbecs.size() == 6);
    CHECK(plan.split_prefixes.empty());
    Assignment want{{2}, {1, 5}, {0, 3, 4}};  // {3} | {2},{6} | {1},{4},{5}
    CHECK(plan.assignment == want);
    CHECK(plan.loads() == std::vector<Count>{4, 3, 3});
}

TEST_CASE("a small alpha splits the largest class first") {
    auto plan = plan_phase2(phase2_fi_sample(), ascending_db(), {1, 2, 3, 4, 5, 6}, 0.3, 3);
    // Bound 1: both {3} (4) and {2} (3) get split.
    REQUIRE(plan.split_prefixes.size() >= 2);
    CHECK(plan.split_prefixes[0] == Itemset{2});
    CHECK(std::count(plan.split_prefixes.begin(), plan.split_prefixes.end(), Itemset{3}) == 1);
    for (const auto& q : plan.pbecs)
        if (!q.extensions.empty()) CHECK(static_cast<double>(q.est_count) <= 0.3 * 10 / 3);

    // Final classes and node prefixes together cover every itemset over B exactly once.
    auto nodes = plan.node_prefixes();
    for (std::uint32_t mask = 1; mask < 64; ++mask) {
        std::vector<Item> v;
        for (Item b = 0; b < 6; ++b)
            if (mask >> b & 1) v.push_back(b + 1);
        Itemset x(v);
        int owners = std::count(nodes.begin(), nodes.end(), x);
        for (const auto& q : plan.pbecs) owners += pbec_contains(q, x);
        CHECK(owners == 1);
    }
    CHECK_THROWS_AS(plan_phase2({}, ascending_db(), 0.0, 2), ParameterError);
}

TEST_CASE("LPT against brute force") {
    std::mt19937_64 rng(4);
    for (int inst = 0; inst < 300; ++inst) {
        std::size_t n = 1 + rng() % 9, P = 1 + rng() % 4;
        std::vector<Count> sizes(n);
        for (auto& s : sizes) s = rng() % 20;
        auto a = lpt_schedule(sizes, P);
        check_is_partition(a, n);
        Count opt = brute_opt(sizes, P);
        Count lpt = makespan(sizes, a);
        CHECK(lpt >= opt);
        CHECK(lpt <= (4 * opt + 2) / 3);
    }
    // Ties go to the lowest index and the lowest processor.
    CHECK(lpt_schedule({2, 2, 2}, 2) == Assignment{{0, 2}, {1}});
}

TEST_CASE("share matrix and replication factor") {
    auto db = oracle::example15();
    std::vector<Itemset> pre{Itemset{1}, Itemset{2}, Itemset{3}};
    auto s = share_matrix(pre, db);
    CHECK(s[0][0] == 0);
    CHECK(s[0][1] == oracle::count(db, {1, 2}));
    CHECK(s[1][2] == s[2][1]);
    CHECK(replication_factor({{0, 1, 2}}, db, pre) == doctest::Approx(13.0 / 15));
    CHECK(replication_factor({{0}, {1}, {2}}, db, pre) ==
          doctest::Approx(static_cast<double>(7 + 7 + 10) / 15));
}

TEST_CASE("db_repl_min returns a partition") {
    std::mt19937_64 rng(9);
    for (int inst = 0; inst < 50; ++inst) {
        std::size_t n = 1 + rng() % 15, P = 1 + rng() % 5;
        std::vector<Count> w(n);
        for (auto& x : w) x = rng() % 10;
        std::vector<std::vector<Count>> s(n, std::vector<Count>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s[i][j] = s[j][i] = rng() % 30;
        auto a = db_repl_min(s, w, P);
        CHECK(a.size() == P);
        check_is_partition(a, n);
    }
    // Two tightly coupled pairs land together.
    std::vector<std::vector<Count>> s{{0, 9, 0, 0}, {9, 0, 0, 0}, {0, 0, 0, 9}, {0, 0, 9, 0}};
    auto a = db_repl_min(s, {1, 1, 1, 1}, 2);
    for (auto& proc : a) std::sort(proc.begin(), proc.end());
    std::sort(a.begin(), a.end());
    CHECK(a == Assignment{{0, 1}, {2, 3}});
}

TEST_CASE("balance ratio") {
    CHECK(balance_ratio({}) == 1.0);
    CHECK(balance_ratio({0, 0}) == 1.0);
    CHECK(balance_ratio({2, 2}) == 1.0);
    CHECK(balance_ratio({3, 1}) == doctest::Approx(1.5));
}

TEST_CASE("plan JSON round trip") {
    auto plan = plan_phase2(phase2_fi_sample(), ascending_db(), {1, 2, 3, 4, 5, 6}, 0.3, 3);
    auto back = plan_from_json(plan_to_json(plan));
    CHECK(back.pbecs == plan.pbecs);
    CHECK(back.split_prefixes == plan.split_prefixes);
    CHECK(back.assignment == plan.assignment);
    CHECK(back.P == plan.P);
    CHECK(back.alpha == plan.alpha);
    CHECK_THROWS_AS(plan_from_json("{"), ParameterError);
    CHECK_THROWS_AS(plan_from_json(R"({"P": 2, "alpha": 1, "sample_size": 0, "pbecs": [], "split_prefixes": [], "assignment": [[]]})"),
                    ParameterError);
}
