#include "tiltfan/kase.hpp"

#include "tiltfan/polytope.hpp"

namespace tiltfan {

Fan kase_family_fan(int l, int m) {
    if (l < 1 || m < 1) throw Error(ErrorKind::InvalidInput, "kase family needs l, m >= 1");
    std::vector<IntVector> rays;
    for (int i = 0; i < l; ++i) rays.push_back(ivec({1, -i}));
    rays.push_back(ivec({0, -1}));
    for (int j = 0; j < m; ++j) rays.push_back(ivec({-j, 1}));
    rays.push_back(ivec({-1, 0}));
    return rank2_fan_from_rays(rays, {ivec({1, 0}), ivec({0, 1})});
}

}  // namespace tiltfan
