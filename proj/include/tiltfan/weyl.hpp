#pragma once

#include <string>
#include <vector>

#include "tiltfan/fan.hpp"

namespace tiltfan {

struct Polytope;

struct CartanData {
    IntMatrix C;
    std::vector<Int> D;  // C * diag(D) symmetric
};

// Validates the Cartan axioms and the symmetrizer.
CartanData make_cartan(const IntMatrix& c, const std::vector<Int>& d);
// Derives a minimal symmetrizer; throws InvalidInput if none exists.
CartanData make_cartan(const IntMatrix& c);
// Presets: A, B, C, D (n >= 4), E (6..8), F (4), G (2).
CartanData cartan_preset(const std::string& type, int n);

// Squared norm of sum a_i alpha_i under the invariant form (alpha_i, alpha_j) = c_ij / D_i,
// scaled to integers.
Int root_norm(const CartanData& cd, const IntVector& a);

struct WeylElement {
    IntMatrix matrix;       // images of simple roots as columns
    std::vector<int> word;  // 1-based generators, shortest
};

struct WeylResult {
    std::vector<WeylElement> elements;  // words are left empty when exhausted
    bool exhausted = false;
};

IntMatrix reflection(const CartanData& cd, int i);  // 1-based
// Positive definiteness of C * diag(D).
bool is_finite_type(const CartanData& cd);
WeylResult weyl_enumerate_budget(const CartanData& cd, std::size_t budget);
// Throws BudgetExhausted.
std::vector<WeylElement> weyl_enumerate(const CartanData& cd, std::size_t budget = 100000);

Fan coxeter_fan(const CartanData& cd);

struct RootSystem {
    std::vector<IntVector> roots;  // lex sorted
    std::vector<IntVector> short_roots;
};
RootSystem root_system(const CartanData& cd);

std::vector<Int> descent_histogram(const CartanData& cd);
Polytope short_root_polytope(const CartanData& cd);

}  // namespace tiltfan
