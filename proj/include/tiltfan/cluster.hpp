#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "tiltfan/fan.hpp"

namespace tiltfan {

struct ExtendedSeed {
    IntMatrix B;  // exchange matrix
    IntMatrix C;  // columns are c-vectors
    IntMatrix G;  // columns are g-vectors
    std::vector<int> history;  // 1-based mutation directions
};

void check_skew_symmetric(const IntMatrix& b);
ExtendedSeed initial_seed(const IntMatrix& b);
ExtendedSeed mutate(const ExtendedSeed& s, int k);  // k is 1-based

// g'_k from the general recursion, using the initial exchange matrix b0.
IntVector general_g_column(const ExtendedSeed& s, int k, const IntMatrix& b0);

// Sign-coherence and duality checks on one seed; empty string when all hold.
std::string seed_violation(const ExtendedSeed& s);

constexpr std::size_t kDefaultBudget = 100000;

struct GfanResult {
    Fan fan;  // complete when !exhausted, otherwise the explored part
    bool exhausted = false;
    std::size_t explored = 0;  // chambers found
    std::size_t frontier = 0;  // seeds still queued when the budget ran out
    std::vector<ExtendedSeed> seeds;  // aligned with fan.chambers
};

GfanResult enumerate_gfan(const IntMatrix& b, std::size_t budget = kDefaultBudget);

}  // namespace tiltfan
