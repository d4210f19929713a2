#include "rq/io.hpp"

#include "rq/exploration.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace rq {

namespace {

std::vector<int> int_array(const Json& j, const char* key, std::size_t size)
{
    if (!j.contains(key) || !j[key].is_array()) throw IoError(std::string("schema: missing array \"") + key + "\"");
    std::vector<int> v;
    for (const auto& x : j[key]) {
        if (!x.is_number_integer()) throw IoError(std::string("schema: non-integer entry in \"") + key + "\"");
        v.push_back(x.get<int>());
    }
    if (v.size() != size) throw IoError(std::string("schema: \"") + key + "\" must have one entry per dart");
    return v;
}

Json map_json(const PlanarMap& m)
{
    return Json{{"darts", m.darts()}, {"twin", m.twin}, {"next", m.next}, {"root", m.root}};
}

}  // namespace

Json to_json(const RigidQuad& r)
{
    Json j = map_json(r.map());
    j["kind"] = "rigid";
    j["orientation"] = r.orientations();
    if (base_signature(r).size() == 1) j["trace"] = to_string(explore_rigid(r));
    return j;
}

Json to_json(const ColorfulQuad& q)
{
    Json j = map_json(q.map());
    j["kind"] = q.kind() == ColorfulKind::Sphere ? "sphere" : "disk";
    std::vector<int> labels(q.darts());
    for (int d = 0; d < q.darts(); ++d) labels[d] = q.dart_label(d);
    j["labels"] = labels;
    return j;
}

PlanarMap map_from_json(const Json& j)
{
    if (!j.is_object()) throw IoError("schema: expected an object");
    if (!j.contains("darts") || !j["darts"].is_number_integer()) throw IoError("schema: missing \"darts\"");
    int n = j["darts"].get<int>();
    if (n < 0) throw IoError("schema: negative dart count");
    PlanarMap m;
    m.twin = int_array(j, "twin", n);
    m.next = int_array(j, "next", n);
    if (!j.contains("root") || !j["root"].is_number_integer()) throw IoError("schema: missing \"root\"");
    m.root = j["root"].get<int>();
    for (int x : m.twin)
        if (x < 0 || x >= n) throw IoError("schema: twin entry out of range");
    for (int x : m.next)
        if (x < 0 || x >= n) throw IoError("schema: next entry out of range");
    if (m.root < 0 || m.root >= n) throw IoError("schema: root out of range");
    return m;
}

RigidQuad rigid_from_json(const Json& j)
{
    if (j.is_object() && j.contains("trace") && !j.contains("twin")) {
        if (!j["trace"].is_string()) throw IoError("schema: \"trace\" must be a string");
        return assemble_rigid(parse_trace(j["trace"].get<std::string>()));
    }
    if (j.contains("kind") && j["kind"] != "rigid") throw IoError("schema: expected kind \"rigid\"");
    PlanarMap m = map_from_json(j);
    std::vector<int> orientation;
    if (j.contains("orientation")) orientation = int_array(j, "orientation", m.darts());
    return validate_rigid(m, orientation);
}

ColorfulQuad colorful_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) throw IoError("schema: missing \"kind\"");
    std::string kind = j["kind"].get<std::string>();
    if (kind != "sphere" && kind != "disk") throw IoError("schema: expected kind \"sphere\" or \"disk\"");
    PlanarMap m = map_from_json(j);
    std::vector<int> labels = int_array(j, "labels", m.darts());
    return ColorfulQuad::from_dart_labels(m, labels, kind == "sphere" ? ColorfulKind::Sphere : ColorfulKind::Disk);
}

AnyObject object_from_json(const Json& j)
{
    if (j.is_object() && j.contains("kind") && j["kind"] != "rigid") return colorful_from_json(j);
    return rigid_from_json(j);
}

Json read_json(const std::string& path)
{
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw IoError("cannot open " + path);
        buf << in.rdbuf();
    }
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw IoError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace rq
