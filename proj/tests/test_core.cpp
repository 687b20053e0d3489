#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pfimi/core.hpp"
#include "pfimi/errors.hpp"

using namespace pfimi;

TEST_CASE("itemset normalizes and orders lexicographically") {
    Itemset a(std::vector<Item>{4, 1, 3, 1});
    CHECK(a.items() == std::vector<Item>{1, 3, 4});
    CHECK(Itemset{1, 3} < Itemset{1, 3, 4});
    CHECK(Itemset{1, 3, 4} < Itemset{1, 4});
    CHECK(Itemset{} < Itemset{0});
    CHECK(Itemset{1, 3}.is_subset_of(a));
    CHECK_FALSE(Itemset{2}.is_subset_of(a));
    CHECK(a.minus(Itemset{3}) == Itemset{1, 4});
    CHECK(a.intersect(Itemset{3, 4, 5}) == Itemset{3, 4});
    CHECK(a.with(2) == Itemset{1, 2, 3, 4});
    CHECK(a.str() == "1 3 4");
}

TEST_CASE("support and tidlists on the 15-transaction example") {
    auto db = oracle::example15();
    CHECK(support(db, Itemset{4}) == 13);
    CHECK(support(db, Itemset{}) == 15);
    CHECK(support(db, Itemset{1, 3, 4}) == oracle::count(db, {1, 3, 4}));
    CHECK(support(db, Itemset{1, 3, 4}) == 5);
    CHECK(support(db, Itemset{99}) == 0);
    CHECK(tidlist(db, Itemset{5}) == Tidlist{2, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15});
    CHECK(tidlist(db, Itemset{}).size() == 15);

    auto vdb = db.vertical();
    auto t = tidlist(vdb, Itemset{3, 4, 5, 6});
    CHECK(t.size() == oracle::count(db, {3, 4, 5, 6}));
    CHECK(t.size() >= 5);
    for (Item b = 0; b < db.n_items(); ++b) CHECK(vdb.tidlists[b].size() == db.item_supports()[b]);
}

TEST_CASE("duplicate tids are rejected") {
    std::vector<Transaction> t{{1, Itemset{1}}, {1, Itemset{2}}};
    CHECK_THROWS_AS(TransactionDB(t, 0), ParameterError);
}

TEST_CASE("diffsets agree with tidlist intersections") {
    SUBCASE("empty parent diffset") { CHECK(diffset_from_parent({}, {1, 2}).empty()); }

    SUBCASE("eclat trace db, P = empty, i = 1, j = 2") {
        auto db = oracle::eclat_trace_db();
        auto vdb = db.vertical();
        // Level 1 diffsets against the empty prefix: all tids minus t(b).
        auto d1 = difference(vdb.all_tids, vdb.tidlists[1]);
        auto d2 = difference(vdb.all_tids, vdb.tidlists[2]);
        auto d12 = diffset_from_parent(d2, d1);
        CHECK(vdb.tidlists[1].size() - d12.size() == intersect(vdb.tidlists[1], vdb.tidlists[2]).size());
    }

    SUBCASE("random 8-transaction databases, all pairs and triples") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            auto db = oracle::random_db(seed, 6, 8, 0.5);
            auto vdb = db.vertical();
            const auto n = static_cast<Item>(vdb.tidlists.size());
            for (Item p = 0; p < n; ++p)
                for (Item i = p + 1; i < n; ++i)
                    for (Item j = i + 1; j < n; ++j) {
                        auto tp = vdb.tidlists[p];
                        auto tpi = intersect(tp, vdb.tidlists[i]);
                        auto tpj = intersect(tp, vdb.tidlists[j]);
                        auto d_pi = difference(tp, tpi);
                        auto d_pj = difference(tp, tpj);
                        auto d = diffset_from_parent(d_pj, d_pi);
                        CHECK(tpi.size() - d.size() == oracle::count(db, {p, i, j}));
                    }
        }
    }
}

TEST_CASE("pbec membership requires a proper extension") {
    Pbec p{Itemset{1, 2}, {3, 5}, 0};
    CHECK(pbec_contains(p, Itemset{1, 2, 3, 5}));
    CHECK(pbec_contains(p, Itemset{1, 2, 3}));
    CHECK_FALSE(pbec_contains(p, Itemset{1, 2}));
    CHECK_FALSE(pbec_contains(p, Itemset{1, 2, 4}));
    CHECK_FALSE(pbec_contains(Pbec{Itemset{1}, {}, 0}, Itemset{1, 4}));
}

TEST_CASE("splitting a class by its extensions partitions it") {
    // [{} | B] minus nothing = prefixes {b} plus the members of [{b} | items after b].
    for (Item n = 1; n <= 8; ++n) {
        std::vector<Item> ext;
        for (Item b = 0; b < n; ++b) ext.push_back(b);
        Pbec parent{Itemset{}, ext, 0};
        std::vector<Pbec> kids;
        for (Item b = 0; b < n; ++b) kids.push_back({Itemset{b}, std::vector<Item>(ext.begin() + b + 1, ext.end()), 0});
        for (std::uint64_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<Item> v;
            for (Item b = 0; b < n; ++b)
                if (mask >> b & 1) v.push_back(b);
            Itemset x(v);
            int owners = 0;
            for (const auto& k : kids) owners += pbec_contains(k, x) || k.prefix == x;
            CHECK(pbec_contains(parent, x));
            CHECK(owners == 1);
        }
    }
}

TEST_CASE("support is monotone") {
    std::mt19937_64 rng(7);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto db = oracle::random_db(seed, 7, 20, 0.4);
        for (int k = 0; k < 50; ++k) {
            std::vector<Item> v;
            for (Item b = 0; b < 7; ++b)
                if (rng() & 1) v.push_back(b);
            Itemset u(v);
            for (Item b = 0; b < 7; ++b) CHECK(support(db, u) >= support(db, u.with(b)));
        }
    }
}

TEST_CASE("absolute minsup rounds up and rejects values outside (0,1]") {
    CHECK(absolute_minsup(0.5, 15) == 8);
    CHECK(absolute_minsup(1.0 / 3.0, 15) == 5);
    CHECK(absolute_minsup(0.01, 15) == 1);
    CHECK_THROWS_AS(absolute_minsup(0.0, 15), ParameterError);
    CHECK_THROWS_AS(absolute_minsup(1.5, 15), ParameterError);
    CHECK(absolute_minsup(0.3, 10) == 3);
}
