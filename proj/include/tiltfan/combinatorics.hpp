#pragma once

#include <vector>

#include "tiltfan/fan.hpp"

namespace tiltfan {

using FVector = std::vector<Int>;  // f_{-1}, f_0, ..., f_{n-1}
using HVector = std::vector<Int>;  // h_0, ..., h_n

FVector f_vector(const Fan& fan);
HVector h_vector(const FVector& f);
FVector f_from_h(const HVector& h);
std::vector<Int> gamma_vector(const HVector& h);
bool dehn_sommerville(const HVector& h);
bool unimodal_halves(const HVector& h);
Int ehrhart_count(const HVector& h, long ell);
Int ehrhart_bruteforce(const Fan& fan, long ell);

}  // namespace tiltfan
