#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiltfan/fan.hpp"

namespace tiltfan {

struct Facet {
    RatVector normal;  // normal . x <= offset on the polytope
    Rat offset;        // scaled to 1 whenever the origin is strictly inside
    std::vector<int> vertices;  // indices into Polytope::vertices
};

struct Polytope {
    std::size_t dim = 0;
    std::vector<RatVector> vertices;  // rank 2: counterclockwise; otherwise lex sorted
    std::vector<Facet> facets;

    bool integral() const;
    std::vector<IntVector> integer_vertices() const;  // throws if not integral
    bool origin_interior() const;
};

std::vector<RatVector> to_rational(const std::vector<IntVector>& pts);
// Exact hull of full-dimensional point sets: gift wrapping in rank 2,
// facet enumeration over n-subsets in higher rank.
Polytope convex_hull(const std::vector<RatVector>& pts);
// Rank 2 only, facet enumeration path (cross-check for gift wrapping).
Polytope convex_hull_by_facets(const std::vector<RatVector>& pts);

enum class WallKind { Zero, SingleRay, RaySum, NonconvexPositive, NotPositive };
const char* wall_kind_name(WallKind k);

struct WallReport {
    int wall = -1;
    WallKind kind = WallKind::Zero;
    int i = -1, j = -1;          // ray indices for SingleRay / RaySum (i == j allowed)
    std::vector<Int> coeffs;     // v + v' in the shared rays, aligned with Wall::shared
};

struct ConvexityReport {
    bool convex = true;
    std::vector<WallReport> walls;
};

ConvexityReport convexity_report(const Fan& fan);
Polytope g_polytope(const Fan& fan);

struct DualPolytope {
    Polytope polytope;
    std::vector<RatVector> chamber_vertex;  // aligned with fan.chambers
    bool reflexive = false;
};
DualPolytope dual_polytope(const Fan& fan);

bool smooth_fano(const Polytope& p);

// Seven canonical convex rank-2 ray sets, classes 1..7.
std::vector<IntVector> canonical_rank2_rays(int cls);
// Complete rank-2 fan whose chambers are angularly consecutive rays.
Fan rank2_fan_from_rays(const std::vector<IntVector>& rays, const std::vector<IntVector>& base);
Fan canonical_rank2_fan(int cls);

struct Rank2Class {
    bool convex = false;
    int cls = 0;  // 1..7, 0 when not convex or unmatched
};
Rank2Class rank2_classify(const Fan& fan);

// Root polytopes: A_n in simple-root coordinates; C_n in the basis
// v1-v2, ..., v_{n-1}-v_n, 2v_n of the root lattice.
std::vector<IntVector> root_system_points(char type, int n);
Polytope root_polytope(char type, int n);

// Unimodular M with M(P) = Q on vertex sets, rank <= 3.
std::optional<IntMatrix> lattice_iso(const Polytope& p, const Polytope& q);
bool maps_vertices(const IntMatrix& m, const Polytope& p, const Polytope& q);

// Invariant comparison for ranks where lattice_iso is unavailable:
// fan f-vectors, hull vertex counts and Ehrhart counts up to 3.
bool invariants_match(const Fan& a, const Fan& b);

Rat euclidean_volume(const Fan& fan);  // sum of chamber simplex volumes

}  // namespace tiltfan
