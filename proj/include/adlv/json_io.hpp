#pragma once

#include "adlv/adlv.hpp"

#include <json.hpp>

namespace adlv {

using Json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "adlv/1";

Json vec_to_json(const IVec& v);
IVec vec_from_json(const Json& j);

// {"first": "t[..]*s1", "steps": [{"gen": 0, "kind": "C"}, ...], "vertex_marked": false}
Json gallery_to_json(const RootSystem& R, const Gallery& g);
Gallery gallery_from_json(const RootSystem& R, const Json& j);

Json dimstats_to_json(const DimStats& d);

Json answer_to_json(const RootSystem& R, const AffineElement& x, const AdlvAnswer& a);
// enough of an answer to re-score its witness
AdlvAnswer answer_from_json(const RootSystem& R, const Json& j);

}  // namespace adlv
