#include "doctest.h"

#include "rq/bijection.hpp"
#include "rq/exploration.hpp"
#include "rq/io.hpp"
#include "rq/oracle.hpp"

using namespace rq;

TEST_CASE("json round trips")
{
    for_each_trace(1, 4, [&](const Trace& t) {
        if (t.steps.front().kind != StepKind::L) return;
        RigidQuad r = unexpand(assemble_rigid(t));
        Json jr = to_json(r);
        CHECK(same_rigid(rigid_from_json(Json::parse(jr.dump())), r));
        Json stripped = jr;
        stripped.erase("orientation");
        CHECK(same_rigid(rigid_from_json(stripped), r));
        ColorfulQuad q = psi(r);
        CHECK(same_colorful(colorful_from_json(Json::parse(to_json(q).dump())), q));
        ColorfulQuad u = psi_b(r);
        CHECK(same_colorful(std::get<ColorfulQuad>(object_from_json(to_json(u))), u));
    });
    Json t = {{"trace", "p=1; G(0,0)"}};
    CHECK(same_rigid(rigid_from_json(t), unit_square()));
}

TEST_CASE("json schema errors")
{
    CHECK_THROWS_AS(map_from_json(Json::parse("[1,2]")), IoError);
    CHECK_THROWS_AS(map_from_json(Json::parse(R"({"darts": 2, "twin": [1], "next": [0, 1], "root": 0})")), IoError);
    CHECK_THROWS_AS(map_from_json(Json::parse(R"({"darts": 2, "twin": [1, 5], "next": [0, 1], "root": 0})")), IoError);
    CHECK_THROWS_AS(colorful_from_json(Json::parse(R"({"kind": "torus"})")), IoError);
    Json bad = to_json(three_vertex_sphere());
    bad["labels"] = {0, 1, 0, 1};
    CHECK_THROWS_AS(colorful_from_json(bad), ColorfulError);
}
