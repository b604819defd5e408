#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tiltfan/fan.hpp"

namespace tiltfan {

// Ribbon graph: sigma gives the counterclockwise successor of a half-edge
// around its vertex; bar pairs the two halves of an edge.
struct BrauerGraph {
    std::vector<std::string> names;
    std::vector<int> sigma;
    std::vector<int> bar;
    std::vector<int> vertex;  // s(h)
    std::vector<int> edge;    // edge index; coordinates follow the order of the bar list
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> orbits;  // per vertex, cyclic order from its least half-edge
    std::vector<int> orbit_pos;

    std::size_t num_vertices() const { return orbits.size(); }
    std::size_t num_edges() const { return edges.size(); }
};

BrauerGraph make_brauer(const std::vector<std::string>& half_edges,
                        const std::vector<std::vector<std::string>>& sigma_cycles,
                        const std::vector<std::pair<std::string, std::string>>& bar_pairs);

enum class GraphType { Tree, OddCycle, Other };
const char* graph_type_name(GraphType t);
GraphType classify_graph(const BrauerGraph& g);

struct SignedWalk {
    std::vector<int> half_edges;  // h_1..h_m, canonical direction
    std::vector<int> signs;       // +1 / -1, alternating
    IntVector cls;                // sum of eps(h_i) e_[h_i]
};

std::string walk_string(const BrauerGraph& g, const SignedWalk& w);

// Every signed walk up to the length cap, canonical representatives only.
std::vector<SignedWalk> signed_walks(const BrauerGraph& g);
std::vector<SignedWalk> self_admissible_walks(const BrauerGraph& g);
bool pair_admissible(const BrauerGraph& g, const SignedWalk& a, const SignedWalk& b);

struct BrauerFan {
    std::vector<SignedWalk> walks;  // admissible walks
    std::vector<std::vector<int>> cliques;  // walk indices of each chamber
    Fan fan;
};
BrauerFan brauer_fan(const BrauerGraph& g);
Fan chambers_by_cliques(const BrauerGraph& g);

struct RootMap {
    std::vector<int> orientation;        // +1 source, -1 sink, per vertex
    std::vector<int> excluded_edges;     // edges outside the spanning tree
    std::vector<IntVector> edge_image;   // image of each basis edge in Z^V
    IntVector apply(const IntVector& cls) const;
};
RootMap root_map(const BrauerGraph& g);

// Roots u - v (tree) or +-u +-v, +-2u (odd cycle) in the vertex basis.
std::vector<IntVector> graph_root_system(const BrauerGraph& g);

}  // namespace tiltfan
