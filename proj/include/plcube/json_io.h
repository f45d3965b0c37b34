#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "plcube/braid.h"
#include "plcube/distortion.h"
#include "plcube/invariants.h"
#include "plcube/orders.h"
#include "plcube/plmap.h"

namespace plcube {

using json = nlohmann::json;

// Rationals travel as strings ("3", "-1/3").
json to_json(const Rational& r);
json to_json(const RatPoint& p);
json to_json(const RatMatrix& m);

// {"dim": n, "kind": "generic", "cells": [{"simplex", "linear", "translation"}]}
// Suspensions are written as {"dim": n, "kind": "suspension", "base": {...}}.
json to_json(const PLMap& f);
std::string serialize(const PLMap& f);

// Schema check only; throws ParseError naming the offending JSON path.
PLMap map_from_json(const json& j);
// Parses text and validates the result. Throws ParseError (with byte offset
// for syntax errors) or InvalidMapError.
PLMap parse_map(std::string_view text);

Rational rational_from_json(const json& j, const std::string& path);
RatPoint point_from_json(const json& j, const std::string& path);

json to_json(const ValidationReport& r);
json to_json(const PolyhedralSet& s);
json to_json(const WitnessReport& w);
json to_json(const BraidWord& w);
json to_json(const Trajectory& t);
json to_json(const CircleMapPP& c);
json to_json(const PhiReport& r);
json to_json(const GrowthReport& r);
json to_json(const BoundsReport& r);
json to_json(const WordBall& b);

}  // namespace plcube
