#pragma once

#include <string>

#include <json.hpp>

#include "adorb/fukaya.hpp"
#include "adorb/hodge.hpp"
#include "adorb/mirror_family.hpp"
#include "adorb/slf.hpp"

namespace adorb {

// All writers use ordered_json with a fixed key order so identical inputs
// produce byte-identical documents. Rationals are "p/q" strings; Weyl-order
// scale integers (|W|, |W_Theta|, orbit index, k) are decimal strings.

using Json = nlohmann::ordered_json;

Json to_json(const ParabolicData& pd);
Json to_json(const SlfReport& report);

Json to_json(const HodgeDiamond& d);
HodgeDiamond diamond_from_json(const nlohmann::json& j);
Json to_json(const DiamondChecks& c);

Json to_json(const DirectedCategory& cat);
DirectedCategory category_from_json(const nlohmann::json& j);

Json to_json(const ComplexRational& c);
Json to_json(const MirrorFiberReport& report);
Json to_json(const ConsistencyReport& report);

/// dump(2) plus trailing newline; the single canonical serialization.
std::string dump_canonical(const Json& j);

}  // namespace adorb
