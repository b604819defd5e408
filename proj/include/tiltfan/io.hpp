#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "tiltfan/brauer.hpp"
#include "tiltfan/combinatorics.hpp"
#include "tiltfan/fan.hpp"
#include "tiltfan/polytope.hpp"
#include "tiltfan/weyl.hpp"

namespace tiltfan {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;

// Integers that fit in a long are written as numbers, larger ones as strings.
json int_to_json(const Int& x);
Int int_from_json(const json& j, const std::string& where);
json rat_to_json(const Rat& q);  // "p/q", or "p" when integral

json fan_to_json(const Fan& fan);
Fan fan_from_json(const json& j, const FanOptions& opt = {});

IntMatrix bmatrix_from_json(const json& j);
json bmatrix_to_json(const IntMatrix& b);

BrauerGraph brauer_from_json(const json& j);
json brauer_to_json(const BrauerGraph& g);

CartanData cartan_from_json(const json& j);

json polytope_to_json(const Polytope& p);

struct Analysis {
    FVector f;
    HVector h;
    std::vector<Int> gamma;  // empty when h is not palindromic
    bool dehn_sommerville = false;
    std::map<long, Int> ehrhart;
};
Analysis analyze(const Fan& fan, long ell_max);
json analysis_to_json(const Analysis& a);

// Parses text; ParseError carries the byte offset or the offending key.
json parse_json(const std::string& text, const std::string& source);
json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Rank-2 rendering: rays, chamber triangles and the polytope boundary.
std::string fan_svg(const Fan& fan);

}  // namespace tiltfan
