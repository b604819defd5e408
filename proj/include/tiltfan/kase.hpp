#pragma once

#include "tiltfan/fan.hpp"

namespace tiltfan {

// Rank-2 family with rays e1 - i e2 (i < l), -e2, e2 - j e1 (j < m), -e1,
// consecutive rays spanning the chambers. Base chamber {e1, e2}.
Fan kase_family_fan(int l, int m);

}  // namespace tiltfan
