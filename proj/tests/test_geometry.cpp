#include "doctest.h"

#include "rq/bijection.hpp"
#include "rq/exploration.hpp"
#include "rq/geometry.hpp"
#include "rq/oracle.hpp"

#include <cmath>

using namespace rq;

namespace {

std::vector<RigidQuad> all_rigid(int n)
{
    std::vector<RigidQuad> out;
    for_each_trace(1, n - 1, [&](const Trace& t) {
        if (t.steps.front().kind == StepKind::L) out.push_back(unexpand(assemble_rigid(t)));
    });
    return out;
}

}  // namespace

TEST_CASE("square immersion")
{
    RigidQuad r = unit_square();
    auto w = unit_widths(r);
    CHECK(w.row.size() == 1);
    CHECK(w.column.size() == 1);
    CHECK(w.half_perimeter() == 2.0);
    auto imm = immerse(r, w);
    REQUIRE(imm.cell.size() == 1);
    CHECK(imm.cell[0] == std::array<double, 4>{-1, 0, 0, 1});
    CHECK(imm.vertex[r.root_vertex()] == std::array<double, 2>{0, 0});
    CHECK(boundary_length(r, imm) == 4.0);
    std::string svg = render_svg(imm);
    std::size_t paths = 0;
    for (std::size_t at = svg.find("<path"); at != std::string::npos; at = svg.find("<path", at + 1)) ++paths;
    CHECK(paths == 1);
    CHECK(svg == render_svg(immerse(r, w)));
}

TEST_CASE("bad widths are rejected")
{
    RigidQuad r = unit_square();
    CHECK_THROWS_AS(given_widths<double>(r, {0.0}, {1.0}), GeometryError);
    CHECK_THROWS_AS(given_widths<double>(r, {1.0, 1.0}, {1.0}), GeometryError);
    Rng rng = stream_rng(3, 0);
    CHECK_THROWS_AS(simplex_widths(r, 0.0, rng), GeometryError);
}

TEST_CASE("immersion is path independent and the perimeter identity holds")
{
    Rng rng = stream_rng(5, 0);
    for (int n = 3; n <= 6; ++n)
        for (const RigidQuad& r : all_rigid(n)) {
            auto w = simplex_widths(r, 1.0, rng);
            CHECK(std::abs(w.half_perimeter() - 1.0) < 1e-12);
            CHECK(static_cast<int>(w.row.size() + w.column.size()) == 2 * n - 4);
            auto a = immerse(r, w, Traversal::Breadth), b = immerse(r, w, Traversal::Depth);
            for (std::size_t v = 0; v < a.vertex.size(); ++v) {
                CHECK(std::abs(a.vertex[v][0] - b.vertex[v][0]) < 1e-9);
                CHECK(std::abs(a.vertex[v][1] - b.vertex[v][1]) < 1e-9);
            }
            CHECK(a.vertex[r.root_vertex()] == std::array<double, 2>{0, 0});
            std::vector<Rational> rows, cols;
            for (std::size_t i = 0; i < w.row.size(); ++i) rows.push_back(frac(static_cast<long>(i) + 1, 3));
            for (std::size_t i = 0; i < w.column.size(); ++i) cols.push_back(frac(static_cast<long>(i) + 2, 7));
            auto exact = given_widths(r, rows, cols);
            auto e = immerse(r, exact);
            CHECK(boundary_length(r, e) == 2 * exact.half_perimeter());
            CHECK(e.vertex == immerse(r, exact, Traversal::Depth).vertex);
        }
}

TEST_CASE("simplex widths have equal means")
{
    RigidQuad r = all_rigid(5).back();
    Rng rng = stream_rng(11, 0);
    const int draws = 10000;
    std::vector<double> mean(6, 0.0);
    for (int i = 0; i < draws; ++i) {
        auto w = simplex_widths(r, 2.0, rng);
        std::vector<double> all = w.row;
        all.insert(all.end(), w.column.begin(), w.column.end());
        for (int k = 0; k < 6; ++k) mean[k] += all[k] / draws;
    }
    // each width is 2 * Beta(1, 5); sd 0.283, so 4 sigma of the mean is 0.0113
    for (double m : mean) CHECK(std::abs(m - 2.0 / 6) < 0.0113);
}

TEST_CASE("volume coefficients")
{
    VolumeCheck v3 = volume_check(3), v4 = volume_check(4), v5 = volume_check(5);
    CHECK(v3.degree == 1);
    CHECK(v3.coefficient == 1);
    CHECK(v4.degree == 3);
    CHECK(v4.coefficient == 5);
    CHECK(v5.coefficient == 33);
    CHECK(v3.dimensions_ok);
    CHECK(v4.dimensions_ok);
    CHECK(v5.dimensions_ok);
    CHECK(volume_check(6).dimensions_ok);
}
