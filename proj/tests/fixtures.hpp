#pragma once

#include <set>
#include <string>
#include <vector>

#include "tiltfan/brauer.hpp"
#include "tiltfan/fan.hpp"
#include "tiltfan/polytope.hpp"

namespace fixtures {

using namespace tiltfan;

inline std::set<IntVector> as_set(const std::vector<IntVector>& v) { return {v.begin(), v.end()}; }

inline std::vector<IntVector> vecs(std::initializer_list<std::initializer_list<long>> xs) {
    std::vector<IntVector> out;
    for (auto x : xs) out.push_back(ivec(x));
    return out;
}

inline Fan pentagon() {
    return rank2_fan_from_rays(vecs({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}}), vecs({{1, 0}, {0, 1}}));
}

inline Fan square() { return rank2_fan_from_rays(vecs({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}), vecs({{1, 0}, {0, 1}})); }

inline Fan segment() {
    FanOptions opt;
    opt.assert_complete = true;
    return build_fan({ivec({1}), ivec({-1})}, {{0}, {1}}, 0, opt);
}

// Half-edges "<edge><letter>"; sigma lists each vertex's half-edges in counterclockwise order.
inline BrauerGraph graph(int edges, const std::vector<std::vector<std::string>>& sigma) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> bars;
    for (int e = 1; e <= edges; ++e) {
        names.push_back(std::to_string(e) + "a");
        names.push_back(std::to_string(e) + "b");
        bars.emplace_back(names[names.size() - 2], names.back());
    }
    return make_brauer(names, sigma, bars);
}

// Path with n edges: vertex i carries ib and (i+1)a.
inline BrauerGraph path(int n) {
    std::vector<std::vector<std::string>> sigma{{"1a"}};
    for (int i = 1; i < n; ++i) sigma.push_back({std::to_string(i) + "b", std::to_string(i + 1) + "a"});
    sigma.push_back({std::to_string(n) + "b"});
    return graph(n, sigma);
}

inline BrauerGraph tree3() { return path(3); }

// Star with centre holding 1a..na.
inline BrauerGraph star(int n) {
    std::vector<std::vector<std::string>> sigma;
    std::vector<std::string> centre;
    for (int i = 1; i <= n; ++i) {
        centre.push_back(std::to_string(i) + "a");
        sigma.push_back({std::to_string(i) + "b"});
    }
    sigma.push_back(centre);
    return graph(n, sigma);
}

// Odd-cycle graphs with a loop at the centre: edges 1 and 2 are pendants, 3 is the loop.
inline BrauerGraph odd_cycle_c() {
    return make_brauer({"1c", "1l", "2c", "2r", "3a", "3b"}, {{"1l"}, {"2r"}, {"2c", "3a", "1c", "3b"}},
                       {{"1l", "1c"}, {"2c", "2r"}, {"3a", "3b"}});
}
inline BrauerGraph odd_cycle_d() {
    return make_brauer({"1c", "1l", "2c", "2r", "3a", "3b"}, {{"1l"}, {"2r"}, {"3a", "1c", "2c", "3b"}},
                       {{"1l", "1c"}, {"2c", "2r"}, {"3a", "3b"}});
}

// Triangle 1,2,3 with pendant edges hanging off its vertices.
inline BrauerGraph triangle_with_pendants(int pendants) {
    std::vector<std::vector<std::string>> sigma{{"1b", "2a"}, {"2b", "3a"}, {"3b", "1a"}};
    for (int p = 0; p < pendants; ++p) {
        std::string e = std::to_string(4 + p);
        sigma[static_cast<std::size_t>(p % 3)].push_back(e + "a");
        sigma.push_back({e + "b"});
    }
    return graph(3 + pendants, sigma);
}

// Loop at one end of a path: edge 1 is the loop, 2..n hang off as a path.
inline BrauerGraph loop_path(int n) {
    std::vector<std::vector<std::string>> sigma{{"1a", "1b", "2a"}};
    for (int i = 2; i < n; ++i) sigma.push_back({std::to_string(i) + "b", std::to_string(i + 1) + "a"});
    sigma.push_back({std::to_string(n) + "b"});
    return graph(n, sigma);
}

// Chamber sets as sets of ray vectors, for comparisons across fans.
inline std::set<std::set<IntVector>> chamber_sets(const Fan& f) {
    std::set<std::set<IntVector>> out;
    for (const auto& c : f.chambers) {
        std::set<IntVector> s;
        for (int i : c) s.insert(f.rays[static_cast<std::size_t>(i)]);
        out.insert(s);
    }
    return out;
}

}  // namespace fixtures
