#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "tiltfan/cluster.hpp"
#include "tiltfan/combinatorics.hpp"

using namespace tiltfan;
using namespace fixtures;

namespace {

const IntMatrix kKronecker = IntMatrix::from_rows({{0, 2}, {-2, 0}});

bool same_seed(const ExtendedSeed& a, const ExtendedSeed& b) { return a.B == b.B && a.C == b.C && a.G == b.G; }

}  // namespace

TEST_CASE("initial seed") {
    auto s = initial_seed(IntMatrix::from_rows({{0, 1}, {-1, 0}}));
    CHECK(s.C == IntMatrix::identity(2));
    CHECK(s.G == IntMatrix::identity(2));
    CHECK(s.history.empty());
    auto k = initial_seed(kKronecker);
    CHECK(k.B == kKronecker);
    try {
        initial_seed(IntMatrix::from_rows({{0, 1}, {1, 0}}));
        FAIL("expected NotSkewSymmetric");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotSkewSymmetric);
    }
}

TEST_CASE("Kronecker mutations") {
    auto s1 = mutate(initial_seed(kKronecker), 1);
    CHECK(s1.G == IntMatrix::from_columns({ivec({-1, 2}), ivec({0, 1})}));
    CHECK(s1.C == IntMatrix::from_columns({ivec({-1, 0}), ivec({2, 1})}));
    auto s2 = mutate(s1, 2);
    CHECK(s2.G == IntMatrix::from_columns({ivec({-1, 2}), ivec({-2, 3})}));
    CHECK(s2.C == IntMatrix::from_columns({ivec({3, 2}), ivec({-2, -1})}));
    CHECK(s2.history == std::vector<int>{1, 2});
    CHECK(same_seed(mutate(s1, 1), initial_seed(kKronecker)));
    CHECK_THROWS_AS(mutate(s1, 3), Error);
    CHECK_THROWS_AS(mutate(s1, 0), Error);
}

TEST_CASE("enumerate_gfan finite types") {
    auto a2 = enumerate_gfan(IntMatrix::from_rows({{0, 1}, {-1, 0}}));
    CHECK_FALSE(a2.exhausted);
    CHECK(a2.fan.chambers.size() == 5);
    CHECK(a2.fan.rays.size() == 5);
    CHECK(a2.fan.complete == Completeness::Certified);
    CHECK(rank2_classify(a2.fan).cls == 2);

    auto a3 = enumerate_gfan(IntMatrix::from_rows({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}));
    CHECK(a3.fan.chambers.size() == 14);
    CHECK(a3.fan.rays.size() == 9);
    std::vector<Int> h{1, 6, 6, 1};
    CHECK(h_vector(f_vector(a3.fan)) == h);
    REQUIRE(a3.seeds.size() == a3.fan.chambers.size());
    for (std::size_t c = 0; c < a3.seeds.size(); ++c) {
        auto cols = a3.seeds[c].G.columns();
        std::set<IntVector> gc(cols.begin(), cols.end());
        std::set<IntVector> rays;
        for (int r : a3.fan.chambers[c]) rays.insert(a3.fan.rays[static_cast<std::size_t>(r)]);
        CHECK(gc == rays);
    }
}

TEST_CASE("Kronecker exhausts the budget") {
    auto k = enumerate_gfan(kKronecker, 10000);
    CHECK(k.exhausted);
    CHECK(k.explored == 10000);
    CHECK(k.fan.complete == Completeness::Incomplete);
    auto small = enumerate_gfan(kKronecker, 100);
    CHECK(small.exhausted);
    CHECK(small.fan.chambers.size() >= 100);
}

TEST_CASE("random mutation sequences keep every invariant") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(rng() % 3);
        IntMatrix b(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                int x = entry(rng);
                b(i, j) = x;
                b(j, i) = -x;
            }
        ExtendedSeed s = initial_seed(b);
        std::size_t len = 1 + rng() % 8;
        for (std::size_t step = 0; step < len; ++step) {
            int k = 1 + static_cast<int>(rng() % n);
            ExtendedSeed t = mutate(s, k);
            CHECK(seed_violation(t) == "");
            CHECK(t.C.transpose() * t.G == IntMatrix::identity(n));
            CHECK(same_seed(mutate(t, k), s));
            CHECK(t.G.column(static_cast<std::size_t>(k - 1)) == general_g_column(s, k, b));
            s = t;
        }
    }
}

TEST_CASE("dedup collapses column permutations") {
    // five alternating A2 mutations come back to the initial cluster with columns swapped
    IntMatrix b = IntMatrix::from_rows({{0, 1}, {-1, 0}});
    ExtendedSeed s = initial_seed(b);
    for (int k : {1, 2, 1, 2, 1}) s = mutate(s, k);
    CHECK(s.G != IntMatrix::identity(2));
    auto cols = s.G.columns();
    CHECK(std::set<IntVector>(cols.begin(), cols.end()) == as_set({ivec({1, 0}), ivec({0, 1})}));
    CHECK(enumerate_gfan(b).fan.chambers.size() == 5);
}
