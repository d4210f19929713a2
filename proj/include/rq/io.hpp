#pragma once

#include "rq/colorful.hpp"
#include "rq/rigid.hpp"
#include "rq/trace.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <variant>

namespace rq {

using Json = nlohmann::json;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// {"kind": "rigid", "darts", "twin", "next", "root", "orientation": per dart +1/-1/0,
//  "trace": only for one-fold bases}
Json to_json(const RigidQuad& r);
// {"kind": "sphere"|"disk", "darts", "twin", "next", "root", "labels": label of each dart's origin}
Json to_json(const ColorfulQuad& q);

PlanarMap map_from_json(const Json& j);
// Also accepts {"trace": "..."} alone.
RigidQuad rigid_from_json(const Json& j);
ColorfulQuad colorful_from_json(const Json& j);

using AnyObject = std::variant<RigidQuad, ColorfulQuad>;
AnyObject object_from_json(const Json& j);

// Reads a file, or standard input for "-".
Json read_json(const std::string& path);

}  // namespace rq
