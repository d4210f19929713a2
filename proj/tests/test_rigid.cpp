#include "doctest.h"

#include "rq/exploration.hpp"
#include "rq/oracle.hpp"
#include "rq/rigid.hpp"
#include "rq/series.hpp"

#include <set>

using namespace rq;

TEST_CASE("unit square")
{
    RigidQuad sq = unit_square();
    CHECK(sq.cells() == 1);
    CHECK(sq.vertices() == 4);
    CHECK(sq.count(Corner::Convex) == 4);
    CHECK(sq.size() == 3);
    CHECK(sq.rays().empty());
    CHECK(base_signature(sq) == std::vector<int>{1});
    CHECK(sq.rows() == 1);
    CHECK(sq.columns() == 1);
    CHECK(sq.map().darts() == 8);
}

TEST_CASE("walk of a signature")
{
    CHECK(walk_of_signature({2, 3, 2}) == std::vector<int>{0, 1, 0, 1, 2, 3, 2, 3, 2, 1, 2, 1, 2, 1});
    CHECK(walk_of_signature({1}) == std::vector<int>{0, 1});
    CHECK(walk_of_signature({1, 1}) == std::vector<int>{0, 1, 2, 1});
}

TEST_CASE("a middle edge without a concave corner is a bad ray")
{
    CellComplex cc;
    int a = cc.add_cell(), b = cc.add_cell();
    cc.glue(4 * a + East + 1, 4 * b + West + 1);
    cc.root_cell = b;
    CHECK_THROWS_AS(RigidQuad{cc}, RigidError);
    try {
        RigidQuad r(cc);
    } catch (const RigidError& e) {
        CHECK(e.kind == RigidError::Kind::BadRay);
    }
}

TEST_CASE("single trace steps")
{
    CHECK(explore_rigid(unit_square()) == parse_trace("p=1; G(0,0)"));
    RigidQuad sq = assemble_rigid(parse_trace("p=1; G(0,0)"));
    CHECK(same_rigid(sq, unit_square()));
    CHECK_THROWS_AS(assemble_rigid(parse_trace("p=2; G(0,0)")), TraceError);
    CHECK_THROWS_AS(assemble_rigid(parse_trace("p=1; R()")), TraceError);
}

TEST_CASE("trace counts match the catalytic recursion")
{
    CountTable ct = catalytic_counts(4, 8);
    for (int p = 1; p <= 4; ++p)
        for (int steps = 1; steps <= 6; ++steps) {
            CAPTURE(p);
            CAPTURE(steps);
            CHECK(Integer(static_cast<long>(count_traces(p, steps))) == ct.at(p, steps + 1));
        }
}

TEST_CASE("assemble and explore are inverse")
{
    for (int p = 1; p <= 3; ++p) {
        std::set<std::vector<int>> codes;
        auto traces = brute_rigid(p, p == 1 ? 6 : 5);
        for (const auto& t : traces) {
            CAPTURE(to_string(t));
            RigidQuad r = assemble_rigid(t);
            REQUIRE(explore_rigid(r) == t);
            CHECK(base_signature(r) == std::vector<int>{p});
            RigidQuad again = validate_rigid(r.map(), r.orientations());
            CHECK(same_rigid(again, r));
            CHECK(r.count(Corner::Convex) - r.count(Corner::Concave) == 4);
            CHECK(r.size() == static_cast<int>(t.steps.size()) + 2);
            CHECK(r.rows() + r.columns() == 2 * r.size() - 4);
            CHECK(same_rigid(mirror(mirror(r)), r));
            codes.insert(canonical_code(r));
        }
        CHECK(codes.size() == traces.size());
    }
}

TEST_CASE("first-step detection")
{
    CHECK(detect_step_rigid(unit_square()) == make_G(0, 0));
    for (int p = 1; p <= 3; ++p)
        for (const auto& t : brute_rigid(p, 5)) {
            CAPTURE(to_string(t));
            CHECK(detect_step_rigid(assemble_rigid(t)) == t.steps.front());
            CHECK(detect_step_colorful(assemble_colorful(t)) == t.steps.front());
        }
}
