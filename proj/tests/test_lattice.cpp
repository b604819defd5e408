#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tiltfan/lattice.hpp"

using namespace tiltfan;

TEST_CASE("determinant examples") {
    CHECK(determinant(IntMatrix::from_rows({{1, 0}, {2, 1}})) == 1);
    CHECK(determinant(IntMatrix::from_rows({{0, 2}, {-2, 0}})) == 4);
    CHECK(determinant(IntMatrix::from_rows({{2, 0}, {0, 1}})) == 2);
    CHECK(determinant(IntMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})) == -1);
    CHECK_THROWS_AS(determinant(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}})), Error);
}

TEST_CASE("invert_unimodular") {
    CHECK(invert_unimodular(IntMatrix::identity(3)) == IntMatrix::identity(3));
    auto m = IntMatrix::from_rows({{-1, 0}, {2, 1}});
    CHECK(invert_unimodular(m) == m);
    try {
        invert_unimodular(IntMatrix::from_rows({{2, 0}, {0, 1}}));
        FAIL("expected DetNotUnit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DetNotUnit);
    }
}

TEST_CASE("unimodular products invert exactly") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, 2), coef(-2, 2);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix m = IntMatrix::identity(3);
        for (int k = 0; k < 6; ++k) {
            IntMatrix e = IntMatrix::identity(3);
            int i = pick(rng), j = pick(rng);
            if (i == j) continue;
            e(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = coef(rng);
            m = m * e;
        }
        CHECK(invert_unimodular(m) * m == IntMatrix::identity(3));
    }
}

TEST_CASE("primitive") {
    CHECK(primitive(ivec({2, -4})) == ivec({1, -2}));
    CHECK(primitive(ivec({0, -3})) == ivec({0, -1}));
    CHECK(primitive(primitive(ivec({6, 9, -12}))) == ivec({2, 3, -4}));
    try {
        primitive(ivec({0, 0}));
        FAIL("expected ZeroVector");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroVector);
    }
}

TEST_CASE("quotient_projection") {
    auto q = quotient_projection({ivec({1, 0, 0})}, 3);
    CHECK(q == IntMatrix::from_rows({{0, 1, 0}, {0, 0, 1}}));

    auto q2 = quotient_projection({ivec({1, -1, 0})}, 3);
    CHECK(q2 == IntMatrix::from_rows({{1, 1, 0}, {0, 0, 1}}));
    CHECK(is_zero(q2 * ivec({1, -1, 0})));
    auto d = smith_diagonal(q2);
    for (const auto& x : d) CHECK(x == 1);

    auto q3 = quotient_projection({ivec({1, 0}), ivec({0, 1})}, 2);
    CHECK(q3.rows() == 0);

    try {
        quotient_projection({ivec({1, 1, 0}), ivec({2, 2, 0})}, 3);
        FAIL("expected DependentGenerators");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DependentGenerators);
    }
    try {
        quotient_projection({ivec({2, 0, 0})}, 3);
        FAIL("expected NonSaturated");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonSaturated);
        CHECK(std::string(e.what()).find('2') != std::string::npos);
    }
}

TEST_CASE("quotient_projection kernel and surjectivity on random saturated sets") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-2, 2);
    int done = 0;
    while (done < 50) {
        IntMatrix m = IntMatrix::identity(4);
        for (int k = 0; k < 8; ++k) {
            IntMatrix e = IntMatrix::identity(4);
            std::size_t i = static_cast<std::size_t>(rng() % 4), j = static_cast<std::size_t>(rng() % 4);
            if (i == j) continue;
            e(i, j) = coef(rng);
            m = m * e;
        }
        // first two columns of a unimodular matrix span a saturated sublattice
        std::vector<IntVector> s{m.column(0), m.column(1)};
        auto q = quotient_projection(s, 4);
        REQUIRE(q.rows() == 2);
        for (const auto& v : s) CHECK(is_zero(q * v));
        for (const auto& x : smith_diagonal(q)) CHECK(x == 1);
        ++done;
    }
}

TEST_CASE("integer kernel and rank") {
    auto k = integer_kernel(IntMatrix::from_rows({{1, 1, 0}}));
    CHECK(k.size() == 2);
    for (const auto& v : k) CHECK(v[0] + v[1] == 0);
    CHECK(rank(IntMatrix::from_rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("rational formatting") {
    CHECK(rat_string(Rat(3, 6)) == "1/2");
    CHECK(rat_string(Rat(-4, 2)) == "-2");
}
