#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "tiltfan/cluster.hpp"
#include "tiltfan/combinatorics.hpp"

using namespace tiltfan;
using namespace fixtures;

namespace {

std::vector<Int> iv(std::initializer_list<long> xs) {
    std::vector<Int> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("f_vector") {
    CHECK(f_vector(segment()) == iv({1, 2}));
    CHECK(f_vector(brauer_fan(tree3()).fan) == iv({1, 12, 30, 20}));
    CHECK(f_vector(brauer_fan(odd_cycle_d()).fan) == iv({1, 18, 48, 32}));
    Fan partial = build_fan({ivec({1, 0}), ivec({0, 1})}, {{0, 1}}, 0);
    CHECK_THROWS_AS(f_vector(partial), Error);
}

TEST_CASE("h_vector and round trip") {
    CHECK(h_vector(iv({1, 2})) == iv({1, 1}));
    CHECK(h_vector(iv({1, 12, 30, 20})) == iv({1, 9, 9, 1}));
    CHECK(h_vector(iv({1, 18, 48, 32})) == iv({1, 15, 15, 1}));
    for (auto f : {iv({1, 2}), iv({1, 12, 30, 20}), iv({1, 18, 48, 32}), iv({1, 5, 5})})
        CHECK(f_from_h(h_vector(f)) == f);
}

TEST_CASE("gamma_vector") {
    CHECK(gamma_vector(iv({1, 1})) == iv({1}));
    CHECK(gamma_vector(iv({1, 3, 1})) == iv({1, 1}));
    CHECK(gamma_vector(iv({1, 9, 9, 1})) == iv({1, 6}));
    CHECK(gamma_vector(iv({1, 15, 15, 1})) == iv({1, 12}));
    try {
        gamma_vector(iv({1, 2, 1, 0}));
        FAIL("expected NotPalindromic");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPalindromic);
    }
}

TEST_CASE("dehn_sommerville and unimodality") {
    CHECK(dehn_sommerville(iv({1, 9, 9, 1})));
    CHECK(dehn_sommerville(iv({1, 6, 6, 1})));
    CHECK_FALSE(dehn_sommerville(iv({1, 2, 1, 0})));
    CHECK(unimodal_halves(iv({1, 11, 11, 1})));
    CHECK(unimodal_halves(iv({1, 26, 66, 26, 1})));
    CHECK_FALSE(unimodal_halves(iv({1, 5, 3, 5, 1})));
}

TEST_CASE("ehrhart_count") {
    CHECK(ehrhart_count(iv({1, 1}), 3) == 7);
    CHECK(ehrhart_count(iv({1, 9, 9, 1}), 1) == 13);
    CHECK(ehrhart_count(iv({1, 3, 1}), 2) == 16);
    CHECK(ehrhart_count(iv({1, 9, 9, 1}), 0) == 1);
}

TEST_CASE("ehrhart_bruteforce") {
    CHECK(ehrhart_bruteforce(segment(), 3) == 7);
    CHECK(ehrhart_bruteforce(pentagon(), 1) == 6);
    CHECK(ehrhart_count(iv({1, 3, 1}), 1) == 6);
    Fan t = brauer_fan(tree3()).fan;
    CHECK(ehrhart_bruteforce(t, 2) == 55);
    CHECK(ehrhart_count(h_vector(f_vector(t)), 2) == 55);
}

TEST_CASE("h-vector equals Hasse out-degree histogram on enumerated fans") {
    std::vector<Fan> fans{pentagon(), brauer_fan(tree3()).fan, brauer_fan(odd_cycle_c()).fan,
                          enumerate_gfan(IntMatrix::from_rows({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}})).fan};
    for (const Fan& f : fans) {
        auto h = h_vector(f_vector(f));
        auto ho = hasse_orient(f);
        std::vector<Int> hist(f.rank + 1, 0);
        for (int d : ho.out_degree) hist[static_cast<std::size_t>(d)] += 1;
        CHECK(hist == h);
        CHECK(h.front() == 1);
        CHECK(h.back() == 1);
        Int sum = 0;
        for (const auto& x : h) sum += x;
        CHECK(sum == static_cast<long>(f.chambers.size()));
        CHECK(unimodal_halves(h));
        for (long l = 1; l <= 4; ++l) CHECK(ehrhart_bruteforce(f, l) == ehrhart_count(h, l));
    }
}
