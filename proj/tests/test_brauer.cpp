#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "tiltfan/combinatorics.hpp"

using namespace tiltfan;
using namespace fixtures;

namespace {

std::set<IntVector> classes(const std::vector<SignedWalk>& ws) {
    std::set<IntVector> s;
    for (const auto& w : ws) s.insert(w.cls);
    return s;
}

const SignedWalk& walk_with_class(const std::vector<SignedWalk>& ws, const IntVector& c) {
    for (const auto& w : ws)
        if (w.cls == c) return w;
    FAIL("class not found");
    return ws.front();
}

std::set<IntVector> odd_cycle_classes() {
    std::set<IntVector> s;
    for (const auto& v : vecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}, {1, 1, -1},
                               {2, 0, -1}, {0, 2, -1}})) {
        s.insert(v);
        s.insert(negate(v));
    }
    return s;
}

}  // namespace

TEST_CASE("make_brauer validation") {
    CHECK_THROWS_AS(make_brauer({"a", "b"}, {{"a", "b"}}, {{"a", "a"}}), Error);
    CHECK_THROWS_AS(make_brauer({"a", "b"}, {{"a"}}, {{"a", "b"}}), Error);
    CHECK_THROWS_AS(make_brauer({"a", "b"}, {{"a"}, {"b"}}, {{"a", "c"}}), Error);
    CHECK_THROWS_AS(make_brauer({"a", "a"}, {{"a"}}, {{"a", "a"}}), Error);
    BrauerGraph g = tree3();
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 3);
}

TEST_CASE("classify_graph") {
    CHECK(classify_graph(tree3()) == GraphType::Tree);
    CHECK(classify_graph(odd_cycle_c()) == GraphType::OddCycle);
    CHECK(classify_graph(graph(2, {{"1a", "1b", "2a"}, {"2b"}})) == GraphType::OddCycle);
    CHECK(classify_graph(graph(2, {{"1a", "2a"}, {"1b", "2b"}})) == GraphType::Other);
    CHECK(classify_graph(triangle_with_pendants(0)) == GraphType::OddCycle);
    try {
        classify_graph(graph(2, {{"1a"}, {"1b"}, {"2a"}, {"2b"}}));
        FAIL("expected Disconnected");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Disconnected);
    }
}

TEST_CASE("self-admissible walks") {
    auto t = self_admissible_walks(tree3());
    CHECK(t.size() == 12);
    std::set<IntVector> expect;
    for (const auto& v : vecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {0, 1, -1}, {1, -1, 1}})) {
        expect.insert(v);
        expect.insert(negate(v));
    }
    CHECK(classes(t) == expect);

    auto d = self_admissible_walks(odd_cycle_d());
    CHECK(d.size() == 18);
    CHECK(classes(d) == odd_cycle_classes());

    auto one = self_admissible_walks(path(1));
    CHECK(classes(one) == as_set({ivec({1}), ivec({-1})}));

    try {
        self_admissible_walks(graph(2, {{"1a", "2a"}, {"1b", "2b"}}));
        FAIL("expected UnsupportedGraph");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedGraph);
    }
}

TEST_CASE("walks are simple paths in trees and edges repeat at most twice") {
    for (const auto& w : self_admissible_walks(path(4))) {
        std::set<int> edges;
        for (int h : w.half_edges) edges.insert(path(4).edge[static_cast<std::size_t>(h)]);
        CHECK(edges.size() == w.half_edges.size());
    }
    BrauerGraph g = odd_cycle_d();
    for (const auto& w : self_admissible_walks(g)) {
        std::map<int, int> uses;
        for (int h : w.half_edges) ++uses[g.edge[static_cast<std::size_t>(h)]];
        for (auto [e, c] : uses) {
            CHECK(c <= 2);
            if (e == 2) CHECK(c == 1);  // the loop is the cycle edge
        }
    }
}

TEST_CASE("pair_admissible") {
    BrauerGraph t = star(3);
    auto ws = self_admissible_walks(t);
    CHECK(pair_admissible(t, walk_with_class(ws, ivec({1, 0, 0})), walk_with_class(ws, ivec({0, 1, 0}))));

    BrauerGraph p = tree3();
    auto pw = self_admissible_walks(p);
    CHECK_FALSE(pair_admissible(p, walk_with_class(pw, ivec({1, 0, 0})), walk_with_class(pw, ivec({-1, 1, 0}))));
    // disjoint edges of a path
    CHECK(pair_admissible(p, walk_with_class(pw, ivec({1, 0, 0})), walk_with_class(pw, ivec({0, 0, 1}))));
    auto bf = brauer_fan(p);
    for (const auto& c : bf.cliques)
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                CHECK(pair_admissible(p, bf.walks[static_cast<std::size_t>(c[i])], bf.walks[static_cast<std::size_t>(c[j])]));
}

TEST_CASE("chambers_by_cliques") {
    Fan t = chambers_by_cliques(tree3());
    CHECK(f_vector(t) == std::vector<Int>{1, 12, 30, 20});
    CHECK(t.complete == Completeness::Certified);
    CHECK(t.base_matrix() == IntMatrix::identity(3));

    Fan d = chambers_by_cliques(odd_cycle_d());
    CHECK(f_vector(d) == std::vector<Int>{1, 18, 48, 32});
    Fan c = chambers_by_cliques(odd_cycle_c());
    CHECK(c.rays == d.rays);
    CHECK(chamber_sets(c) != chamber_sets(d));
}

TEST_CASE("odd-cycle chambers match the hand-drawn compatibility graph") {
    // rays 1..18 and the 48 compatibility edges of the loop-at-centre graph with order (3a,1c,2c,3b)
    auto r = vecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}, {0, 2, -1}, {1, -1, 0},
                   {-1, 0, 1}, {1, 1, -1}, {-1, 1, 0}, {2, 0, -1}, {0, -1, 1}, {-2, 0, 1}, {0, 1, -1},
                   {1, 0, -1}, {0, -2, 1}, {-1, -1, 1}});
    int e[][2] = {{1, 2},   {1, 3},   {2, 3},   {4, 5},   {4, 6},   {5, 6},   {7, 1},   {7, 2},   {1, 8},
                  {3, 8},   {9, 2},   {9, 3},   {10, 7},  {10, 1},  {11, 7},  {11, 2},  {12, 1},  {12, 8},
                  {13, 3},  {13, 8},  {14, 9},  {14, 2},  {13, 9},  {10, 15}, {7, 15},  {12, 10}, {7, 4},
                  {11, 4},  {12, 16}, {16, 8},  {17, 13}, {17, 8},  {18, 14}, {18, 9},  {11, 14}, {17, 9},
                  {12, 15}, {15, 4},  {16, 6},  {8, 6},   {17, 5},  {8, 5},   {14, 5},  {18, 5},  {14, 4},
                  {18, 17}, {16, 15}, {15, 6}};
    bool adj[19][19] = {};
    for (auto& x : e) adj[x[0]][x[1]] = adj[x[1]][x[0]] = true;
    std::set<std::set<IntVector>> triangles;
    for (int a = 1; a <= 18; ++a)
        for (int b = a + 1; b <= 18; ++b)
            for (int c = b + 1; c <= 18; ++c)
                if (adj[a][b] && adj[b][c] && adj[a][c]) triangles.insert({r[a - 1], r[b - 1], r[c - 1]});
    CHECK(triangles.size() == 32);
    CHECK(chamber_sets(chambers_by_cliques(odd_cycle_d())) == triangles);
}

TEST_CASE("root_map") {
    RootMap single = root_map(path(1));
    CHECK(single.apply(ivec({1})) == ivec({1, -1}));

    for (const BrauerGraph& g : {tree3(), odd_cycle_d(), odd_cycle_c()}) {
        RootMap rm = root_map(g);
        std::set<IntVector> image;
        auto ws = self_admissible_walks(g);
        for (const auto& w : ws) image.insert(rm.apply(w.cls));
        CHECK(image.size() == ws.size());
        CHECK(image == as_set(graph_root_system(g)));
    }
    CHECK(graph_root_system(tree3()).size() == 12);
    CHECK(graph_root_system(odd_cycle_d()).size() == 18);
    CHECK(root_map(odd_cycle_d()).excluded_edges == std::vector<int>{2});
}

TEST_CASE("walk formatting") {
    BrauerGraph g = tree3();
    auto ws = self_admissible_walks(g);
    CHECK(walk_string(g, walk_with_class(ws, ivec({1, -1, 1}))) == "(1a+,2a-,3a+)");
}
