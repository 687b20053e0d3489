#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "oracles.hpp"
#include "pfimi/errors.hpp"
#include "pfimi/sampling.hpp"

using namespace pfimi;

TEST_CASE("database sample size") {
    CHECK(db_sample_size(0.005, 0.05) == 73778);
    CHECK(db_sample_size(0.01, 0.05) == 18445);
    CHECK(db_sample_size(0.5, 2.0 / std::exp(2.0)) == 4);
    CHECK_THROWS_AS(db_sample_size(0.0, 0.05), ParameterError);
    CHECK_THROWS_AS(db_sample_size(0.1, 0.0), ParameterError);
}

TEST_CASE("coverage sample size") {
    // 400000 · ln 40 = 1475551.78...
    CHECK(coverage_sample_size(0.1, 0.05, 0.001) == 1475552);
    CHECK(coverage_sample_size(2.0, 2.0 / std::exp(1.0), 1.0) == 1);
    auto a = coverage_sample_size(0.05, 0.05, 0.002);
    auto b = coverage_sample_size(0.05, 0.05, 0.001);
    CHECK((b == 2 * a || b + 1 == 2 * a || b == 2 * a - 1));
    CHECK(coverage_sample_size(0.05, 0.1, 0.001) < b);
    CHECK(coverage_sample_size(0.1, 0.05, 0.001) < b);
}

TEST_CASE("KL divergence and reservoir sample size") {
    CHECK(kl_divergence(0.5, 0.25) == doctest::Approx(0.5 * std::log(2.0) + 0.5 * std::log(2.0 / 3.0)));
    CHECK(kl_divergence(0.0, 0.25) == doctest::Approx(std::log(4.0 / 3.0)));
    CHECK(kl_divergence(0.3, 0.3) == 0.0);
    CHECK_THROWS_AS(reservoir_sample_size(0.0, 0.05, 0.001), ParameterError);
    CHECK_THROWS_AS(reservoir_sample_size(0.5, 0.05, 0.6), ParameterError);

    const double eps = 0.005, delta = 0.05, rho = 0.001;
    double x = rho + eps, y = rho;
    double kl = x * std::log(x / y) + (1 - x) * std::log((1 - x) / (1 - y));
    CHECK(reservoir_sample_size(eps, delta, rho) == static_cast<Count>(std::ceil(-std::log(delta / 2) / kl)));
    CHECK(reservoir_sample_size(eps, 0.1, rho) < reservoir_sample_size(eps, 0.05, rho));
}

TEST_CASE("coverage sampler on one MFI is uniform over its powerset") {
    Rng rng(1);
    CoverageSampler s({Itemset{1, 2}});
    std::map<Itemset, double> freq;
    const int n = 40000;
    for (int k = 0; k < n; ++k) freq[s.draw(rng, true)] += 1;
    REQUIRE(freq.size() == 4);
    for (const auto& [u, c] : freq) CHECK(c / n == doctest::Approx(0.25).epsilon(0.04));
}

TEST_CASE("exact and modified coverage laws on {1,2},{2,3}") {
    CoverageSampler s({Itemset{1, 2}, Itemset{2, 3}});
    CHECK(static_cast<std::uint64_t>(s.total_weight()) == 8);
    const int n = 80000;
    Rng rng(5);
    std::map<Itemset, double> ex, mod;
    for (int k = 0; k < n; ++k) {
        ex[s.draw(rng, true)] += 1;
        mod[s.draw(rng, false)] += 1;
    }
    CHECK(ex.size() == 6);
    for (const auto& [u, c] : ex) CHECK(c / n == doctest::Approx(1.0 / 6).epsilon(0.05));
    CHECK(mod[Itemset{2}] / n == doctest::Approx(2.0 / 8).epsilon(0.05));
    CHECK(mod[Itemset{}] / n == doctest::Approx(2.0 / 8).epsilon(0.05));
    CHECK(mod[Itemset{1}] / n == doctest::Approx(1.0 / 8).epsilon(0.05));
}

TEST_CASE("coverage sampler rejects bad families") {
    CHECK_THROWS_AS(CoverageSampler({}), ParameterError);
    std::vector<Item> big(63);
    for (Item b = 0; b < 63; ++b) big[b] = b;
    CHECK_THROWS_AS(CoverageSampler({Itemset(big)}), ParameterError);
    CHECK(powerset_mass({Itemset(big)}) == std::uint64_t{1} << 63);
    CHECK(powerset_mass({Itemset(big), Itemset(big)}) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("reservoir keeps a short stream and flags it") {
    FiList stream;
    for (Item b = 0; b < 5; ++b) stream.push_back({Itemset{b}, 1});
    auto s = reservoir(stream, 5, 1, ReservoirAlgo::vitter);
    CHECK(s.itemsets.size() == 5);
    CHECK_FALSE(s.short_stream);
    auto t = reservoir(stream, 8, 1, ReservoirAlgo::simple);
    CHECK(t.itemsets.size() == 5);
    CHECK(t.short_stream);
    CHECK(t.total_seen == 5);
}

TEST_CASE("reservoir inclusion frequencies, both algorithms") {
    // (N, n): the second case reaches Vitter's Algorithm Z (t > 22n).
    for (auto [N, n] : {std::pair<int, int>{100, 10}, std::pair<int, int>{300, 2}}) {
        for (auto algo : {ReservoirAlgo::simple, ReservoirAlgo::vitter}) {
            const int trials = 50000;
            std::vector<double> hits(N, 0);
            for (int tr = 0; tr < trials; ++tr) {
                Reservoir<int> r(n, mix_seed(77, tr), algo);
                for (int x = 0; x < N; ++x) {
                    if (r.wants_next()) {
                        r.offer(x);
                    } else {
                        r.offer(-1);
                    }
                }
                REQUIRE(r.items().size() == static_cast<std::size_t>(n));
                std::set<int> seen(r.items().begin(), r.items().end());
                CHECK(seen.size() == static_cast<std::size_t>(n));
                for (int x : r.items()) hits[x] += 1;
            }
            const double p = static_cast<double>(n) / N;
            const double tol = std::min(0.01, 5 * std::sqrt(p * (1 - p) / trials));
            int bad = 0;
            for (int x = 0; x < N; ++x) bad += std::abs(hits[x] / trials - p) > tol;
            CHECK(bad == 0);
        }
    }
}

TEST_CASE("multivariate hypergeometric draws") {
    CHECK(multivariate_hypergeom({7}, 4, 1) == std::vector<Count>{4});
    CHECK(multivariate_hypergeom({5, 5}, 10, 1) == std::vector<Count>{5, 5});
    CHECK_THROWS_AS(multivariate_hypergeom({1, 2}, 4, 1), ParameterError);
    Rng rng(3);
    double sum = 0;
    const int trials = 50000;
    for (int k = 0; k < trials; ++k) {
        auto x = multivariate_hypergeom({30, 70}, 10, rng);
        REQUIRE(x[0] + x[1] == 10);
        sum += static_cast<double>(x[0]);
    }
    CHECK(std::abs(sum / trials - 3.0) < 0.05);
}

TEST_CASE("multinomial draws") {
    double sum = 0;
    for (std::uint64_t s = 0; s < 20000; ++s) {
        auto x = multinomial({1, 3}, 8, s);
        REQUIRE(x[0] + x[1] == 8);
        sum += static_cast<double>(x[0]);
    }
    CHECK(std::abs(sum / 20000 - 2.0) < 0.05);
}

TEST_CASE("PBEC size bounds") {
    auto [l0, u0] = pbec_size_bounds(0.4, 0.0, 0.0, 0.0);
    CHECK(l0 == doctest::Approx(0.4));
    CHECK(u0 == doctest::Approx(0.4));
    auto [l1, u1] = pbec_size_bounds(0.5, 0.1, 0.0, 0.0);
    CHECK(l1 == doctest::Approx(0.45));
    CHECK(u1 == doctest::Approx(0.45));
    auto [l2, u2] = pbec_size_bounds_exact(0.3, 0.02, 0.01);
    CHECK(l2 == doctest::Approx(0.283));
    CHECK(u2 == doctest::Approx(0.313));
}
