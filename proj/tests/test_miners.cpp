#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "pfimi/errors.hpp"
#include "pfimi/miners.hpp"

using namespace pfimi;

namespace {

std::vector<EclatOptions> all_eclat_options() {
    std::vector<EclatOptions> out;
    for (int m = 0; m < 8; ++m) out.push_back({(m & 1) != 0, (m & 2) != 0, (m & 4) != 0});
    return out;
}

oracle::FiMap run(const TransactionDB& db, Count minsup, Algo a, const EclatOptions& o = {}) {
    return oracle::to_map(mine(db, minsup, a, o));
}

}  // namespace

TEST_CASE("15-transaction example at minsup 5") {
    auto db = oracle::example15();
    auto want = oracle::brute_fis(db, 5);
    REQUIRE(want.size() == 25);
    CHECK(run(db, 5, Algo::apriori) == want);
    CHECK(run(db, 5, Algo::fpgrowth) == want);
    for (const auto& o : all_eclat_options()) CHECK(run(db, 5, Algo::eclat, o) == want);
    CHECK(want.at({3, 4, 5, 6}) == 5);
    CHECK(want.at({4}) == 13);
}

TEST_CASE("apriori on the four-transaction trace database") {
    auto fis = run(oracle::apriori_trace_db(), 2, Algo::apriori);
    std::map<std::size_t, std::size_t> by_len;
    for (const auto& [u, c] : fis) ++by_len[u.size()];
    CHECK(by_len[1] == 4);  // item 4 occurs once
    CHECK(by_len[2] == 5);
    // The data gives two triples; both have support 2.
    CHECK(by_len[3] == 2);
    CHECK(fis.at({1, 2, 5}) == 2);
    CHECK(fis.at({1, 3, 5}) == 2);
    CHECK(fis == oracle::brute_fis(oracle::apriori_trace_db(), 2));
}

TEST_CASE("eclat on the six-transaction trace database") {
    auto db = oracle::eclat_trace_db();
    for (const auto& o : all_eclat_options()) {
        auto fis = run(db, 2, Algo::eclat, o);
        CHECK(fis.at({1, 2, 3, 4}) == 2);
        CHECK(fis.at({2, 3}) == 2);
        CHECK(fis.count({2, 5}) == 0);
    }
    CHECK(tidlist(db, Itemset{1, 2, 3, 4}) == Tidlist{1, 6});
    CHECK(oracle::count(db, {2, 5}) == 1);
}

TEST_CASE("fp-growth on the FP-tree example") {
    auto fis = run(oracle::fptree_example(), 2, Algo::fpgrowth);
    CHECK(fis.at({5, 6}) == 2);
    CHECK(fis == oracle::brute_fis(oracle::fptree_example(), 2));

    auto single = TransactionDB::from_rows({{2, 4, 7, 9}});
    auto all = run(single, 1, Algo::fpgrowth);
    CHECK(all.size() == 15);
    for (const auto& [u, c] : all) CHECK(c == 1);
}

TEST_CASE("minsup above the database size gives nothing") {
    auto db = oracle::example15();
    for (auto a : {Algo::apriori, Algo::eclat, Algo::fpgrowth}) CHECK(mine(db, 16, a).empty());
    CHECK(mfi_mine(db, 16).empty());
    CHECK_THROWS_AS(mine(db, 0, Algo::eclat), ParameterError);
}

TEST_CASE("miners agree with the powerset on random databases") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto db = oracle::random_db(seed, 8, 20, 0.35 + 0.01 * static_cast<double>(seed % 20));
        for (Count minsup = 1; minsup <= 4; ++minsup) {
            auto want = oracle::brute_fis(db, minsup);
            CHECK(run(db, minsup, Algo::apriori) == want);
            CHECK(run(db, minsup, Algo::fpgrowth) == want);
            for (const auto& o : all_eclat_options()) CHECK(run(db, minsup, Algo::eclat, o) == want);
        }
    }
}

TEST_CASE("eclat options change only the work counters") {
    auto db = oracle::random_db(5, 10, 60, 0.5);
    WorkCounters plain, closed;
    auto a = mine(db, 6, Algo::eclat, {}, &plain);
    auto b = mine(db, 6, Algo::eclat, {false, false, true}, &closed);
    CHECK(a == b);
    CHECK(closed.support_computations <= plain.support_computations);
}

TEST_CASE("closure observer sees every class") {
    auto db = oracle::example15();
    std::size_t calls = 0, with_w = 0;
    EclatOptions o;
    o.closure_opt = true;
    auto work = eclat(db, 5, o, [](const Itemset&, Count) {}, [&](std::size_t w, std::size_t) {
        ++calls;
        with_w += w > 0;
    });
    CHECK(calls > 0);
    CHECK(with_w == work.closure_events);
}

TEST_CASE("MFIs of the 15-transaction example") {
    auto db = oracle::example15();
    auto m = oracle::to_set(mfi_mine(db, 5));
    std::set<std::vector<Item>> want{{1, 3, 4}, {2, 3, 4}, {2, 4, 5}, {3, 4, 5, 6}};
    CHECK(m == want);
    CHECK(m == oracle::maximal(oracle::brute_fis(db, 5)));

    auto from5 = oracle::to_set(mfi_mine(db, 5, {5}));
    CHECK(from5.count({5, 6}) == 1);
}

TEST_CASE("mfi_mine matches brute-force maximality") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto db = oracle::random_db(seed, 9, 25, 0.45);
        for (Count minsup = 1; minsup <= 5; ++minsup) {
            auto fis = oracle::brute_fis(db, minsup);
            auto m = mfi_mine(db, minsup);
            CHECK(oracle::to_set(m) == oracle::maximal(fis));
            for (const auto& x : m) CHECK(fis.count(x.items()) == 1);
        }
    }
}

TEST_CASE("association rules") {
    auto fis = mine(oracle::apriori_trace_db(), 2, Algo::apriori);

    std::size_t splits = 0;
    for (const auto& r : fis)
        if (r.itemset.size() >= 2) splits += (std::size_t{1} << r.itemset.size()) - 2;
    CHECK(generate_rules(fis, 0.0).size() == splits);
    CHECK(generate_rules(fis, 1.01).empty());

    auto strict = generate_rules(fis, 1.0);
    bool found = false;
    for (const auto& r : strict) {
        CHECK(r.confidence >= 1.0);
        if (r.antecedent == Itemset{1, 2} && r.consequent == Itemset{5}) found = true;
    }
    CHECK(found);

    // Brute force: every split with confidence 1.
    auto m = oracle::to_map(fis);
    std::size_t want = 0;
    for (const auto& [u, c] : m) {
        const std::size_t n = u.size();
        for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
            std::vector<Item> v;
            for (std::size_t k = 0; k < n; ++k)
                if (mask >> k & 1) v.push_back(u[k]);
            if (static_cast<double>(c) / static_cast<double>(m.at(v)) >= 1.0) ++want;
        }
    }
    CHECK(strict.size() == want);

    FiList broken{{Itemset{1, 2}, 2}};
    CHECK_THROWS_AS(generate_rules(broken, 0.5), std::logic_error);
}
