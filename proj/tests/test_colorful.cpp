#include "doctest.h"

#include "rq/colorful.hpp"
#include "rq/exploration.hpp"
#include "rq/oracle.hpp"

#include <set>

using namespace rq;

TEST_CASE("three-vertex sphere")
{
    ColorfulQuad q = three_vertex_sphere();
    CHECK(q.vertices() == 3);
    CHECK(q.faces() == 1);
    CHECK(q.in_class());
    ColorfulQuad r = relabel(q);
    CHECK(r.in_class());
    CHECK(same_colorful(relabel(r), q));
    std::multiset<int> labels(r.labels().begin(), r.labels().end());
    CHECK(labels == std::multiset<int>{0, 1, 2});
}

TEST_CASE("single quadrangle disk and a bad face")
{
    // one quadrangle, darts 0..3 inside (face on the left), 4..7 outside
    PlanarMap m;
    m.twin = {4, 5, 6, 7, 0, 1, 2, 3};
    std::vector<int> fn = {1, 2, 3, 0, 7, 4, 5, 6};
    m.next = next_from_faces(m.twin, fn);
    m.root = 4;  // 4 is the twin of 0; 0 runs from vertex a to b, so 4 runs b -> a
    std::vector<int> dl = {0, 1, 2, 1, 1, 2, 1, 0};
    ColorfulQuad q = ColorfulQuad::from_dart_labels(m, dl, ColorfulKind::Disk);
    CHECK(q.faces() == 2);
    CHECK(q.boundary_labels().size() == 4);
    std::vector<int> bad = {0, 1, 0, 1, 1, 0, 1, 0};
    CHECK_THROWS_AS(ColorfulQuad::from_dart_labels(m, bad, ColorfulKind::Sphere), ColorfulError);
    try {
        ColorfulQuad::from_dart_labels(m, bad, ColorfulKind::Sphere);
    } catch (const ColorfulError& e) {
        CHECK(e.kind == ColorfulError::Kind::BadFace);
    }
}

TEST_CASE("peel and assemble_colorful are inverse")
{
    for (int p = 1; p <= 3; ++p) {
        std::set<std::vector<int>> codes;
        auto traces = brute_rigid(p, p == 1 ? 6 : 5);
        for (const auto& t : traces) {
            CAPTURE(to_string(t));
            ColorfulQuad q = assemble_colorful(t);
            std::vector<int> boundary;
            for (int j = 0; j < 2 * p; ++j) boundary.push_back(j % 2 == 0 ? 0 : 1);
            CHECK(q.boundary_labels() == boundary);
            CHECK(q.vertices() == static_cast<int>(t.steps.size()) + 1);
            REQUIRE(peel(q) == t);
            codes.insert(canonical_code(q));
        }
        CHECK(codes.size() == traces.size());
    }
}
