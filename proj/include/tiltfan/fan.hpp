#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tiltfan/lattice.hpp"

namespace tiltfan {

using Cone = std::vector<int>;  // sorted ray indices

enum class Completeness { Certified, Unknown, Incomplete };
const char* completeness_name(Completeness c);

struct Wall {
    int a = -1, b = -1;  // chamber indices, a < b
    Cone shared;         // the n-1 common rays
};

struct FanOptions {
    bool assert_complete = false;  // DanglingWall if some facet has one chamber
    bool paranoid = false;         // pairwise intersection check (rank <= 3)
    bool known_partial = false;    // truncated enumeration: mark Incomplete
};

// Simplicial unimodular fan. Rays are kept in lexicographic order and chambers
// sorted, so two fans with the same data compare equal field by field.
struct Fan {
    std::size_t rank = 0;
    std::vector<IntVector> rays;
    std::vector<Cone> chambers;
    int base = 0;  // index into chambers
    std::vector<Wall> walls;
    std::vector<Cone> dangling;  // facets lying in only one chamber
    Completeness complete = Completeness::Unknown;

    IntMatrix ray_matrix(const Cone& c) const;  // rays as columns
    // Base rays ordered by descending lex order; for an identity base this is e1..en.
    IntMatrix base_matrix() const;
    // Coordinates of every ray with respect to the base basis.
    std::vector<IntVector> base_coordinates() const;
    int ray_index(const IntVector& r) const;  // -1 if absent
    int chamber_index(const Cone& c) const;   // -1 if absent
};

Fan build_fan(std::vector<IntVector> rays, std::vector<Cone> chambers, int base,
              const FanOptions& opt = {});

// Same, with the base given as a set of ray vectors.
Fan build_fan_by_rays(const std::vector<IntVector>& rays, const std::vector<std::vector<IntVector>>& chambers,
                      const std::vector<IntVector>& base, const FanOptions& opt = {});

std::set<Cone> faces(const Fan& fan, std::size_t i);

struct HasseOrientation {
    std::vector<std::pair<int, int>> arrows;  // (from, to) chamber indices, one per wall
    std::vector<int> out_degree;
    std::vector<int> in_degree;
};
HasseOrientation hasse_orient(const Fan& fan);
bool is_acyclic(const Fan& fan, const HasseOrientation& h);

// Normal of the hyperplane spanned by the given (n-1) rays, primitive, sign arbitrary.
IntVector wall_normal(const Fan& fan, const Cone& shared);

// I holds 0-based positions in the base basis (see Fan::base_matrix).
Fan restrict_to_coordinates(const Fan& fan, const std::vector<int>& coords);
std::vector<int> sign_filter(const Fan& fan, const std::vector<int>& eps);
Fan reduce_at_cone(const Fan& fan, const Cone& sigma);

// Pairwise check that chambers meet in common faces (exact, rank <= 3).
// Returns the first offending pair, if any.
std::optional<std::pair<int, int>> paranoid_check(const Fan& fan);

}  // namespace tiltfan
