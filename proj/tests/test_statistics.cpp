#include "doctest.h"

#include "rq/bijection.hpp"
#include "rq/exploration.hpp"
#include "rq/oracle.hpp"
#include "rq/statistics.hpp"

#include <algorithm>

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

TEST_CASE("dictionary holds exhaustively")
{
    for (int n = 3; n <= 6; ++n)
        for (const RigidQuad& r : all_rigid(n))
            for (const auto& row : dictionary_report(r)) CHECK_MESSAGE(row.holds, row.name << ": " << row.rigid << " vs " << row.colorful);
}

TEST_CASE("statistics of the square")
{
    RigidQuad r = unit_square();
    auto t = turning_numbers(r);
    REQUIRE(t.size() == 3);
    CHECK(t[0].value == 0);
    CHECK(t[1].value == 1);
    CHECK(t[2].value == 2);
    CHECK(is_fighting_fish(r));

    SideClassification sc = classify_sides(r);
    REQUIRE(sc.sides.size() == 4);
    int left = 0, right = 0;
    for (const auto& s : sc.sides) {
        CHECK(s.darts.size() == 1);
        left += s.tangency == Tangency::Left;
        right += s.tangency == Tangency::Right;
        if (s.tangency != Tangency::None) CHECK(s.near == r.root_vertex());
    }
    CHECK(left == 1);
    CHECK(right == 1);

    ColorfulQuad q = psi(r);
    auto lines = level_lines(q);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].length + lines[1].length == q.edges());
    for (const auto& x : local_extrema(q)) {
        if (q.label(x.vertex) == 2) CHECK(x.kind == Extremum::Max);
        if (q.label(x.vertex) == 1) CHECK(x.kind == Extremum::Neither);
        if (q.label(x.vertex) == 0) CHECK(x.kind == Extremum::Min);
    }
    CHECK_NOTHROW(check_dictionary(r));
}

TEST_CASE("level lines partition the edges")
{
    for (int n = 3; n <= 6; ++n)
        for (const RigidQuad& r : all_rigid(n)) {
            ColorfulQuad q = psi(r);
            std::vector<int> seen(q.edges() * 2, 0);
            for (const auto& l : level_lines(q)) {
                CHECK(l.length == static_cast<int>(l.edges.size()));
                for (int d : l.edges) {
                    CHECK(std::min(q.dart_label(d), q.dart_label(q.twin(d))) == l.low);
                    ++seen[std::min(d, q.twin(d))];
                }
            }
            for (int d = 0; d < q.darts(); ++d)
                if (d < q.twin(d)) CHECK(seen[d] == 1);
        }
}

TEST_CASE("mirror and relabel swap chiralities and directions")
{
    auto count = [](const std::vector<DictionaryRow>& rows, int i) { return rows[i].rigid; };
    for (int n = 3; n <= 6; ++n)
        for (const RigidQuad& r : all_rigid(n)) {
            auto a = dictionary_report(r), b = dictionary_report(mirror(r));
            CHECK(count(a, 6) == count(b, 7));
            CHECK(count(a, 4) == count(b, 5));
            ColorfulQuad q = psi(r), s = relabel(q);
            int inc = 0, dec = 0;
            for (const auto& l : level_lines(q)) (l.direction == LineDirection::Increasing ? inc : dec)++;
            for (const auto& l : level_lines(s)) (l.direction == LineDirection::Increasing ? dec : inc)--;
            CHECK(inc == 0);
            CHECK(dec == 0);
            int mins = 0, maxs = 0;
            for (const auto& x : local_extrema(q)) mins += x.kind == Extremum::Min, maxs += x.kind == Extremum::Max;
            for (const auto& x : local_extrema(s)) mins -= x.kind == Extremum::Max, maxs -= x.kind == Extremum::Min;
            CHECK(mins == 0);
            CHECK(maxs == 0);
        }
}

TEST_CASE("tangential corners and sides")
{
    for (int n = 3; n <= 6; ++n)
        for (const RigidQuad& r : all_rigid(n)) {
            SideClassification sc = classify_sides(r);
            int edges = 0;
            for (const auto& s : sc.sides) edges += static_cast<int>(s.darts.size());
            CHECK(edges == static_cast<int>(r.boundary().size()));
            for (const auto& c : sc.corners) {
                if (c.tangency == Tangency::None) continue;
                int matching = 0;
                for (const auto& s : sc.sides)
                    if (s.tangency == c.tangency && (s.far == c.vertex || s.near == c.vertex)) ++matching;
                CHECK(matching == 1);
            }
            for (const auto& s : sc.sides) {
                if (s.tangency == Tangency::None) {
                    CHECK_THROWS_AS(side_extension(r, s), StatisticsError);
                    continue;
                }
                Extension x = side_extension(r, s);
                CHECK(x.length >= static_cast<int>(s.darts.size()));
                if (r.corner(s.far) == Corner::Convex) CHECK(x.length == static_cast<int>(s.darts.size()));
            }
        }
}

TEST_CASE("rigid fighting fish counts")
{
    // perimeter 4k, equivalently k+3 convex corners; 3*2^(k-1)/((k+1)(k+2)) * C(2k,k)
    const long expected[] = {1, 3, 12};
    for (int k = 1; k <= 3; ++k) {
        long by_perimeter = 0, by_size = 0;
        for (int n = 3; n <= k + 4; ++n)
            for (const RigidQuad& r : all_rigid(n)) {
                if (!is_fighting_fish(r)) continue;
                by_perimeter += static_cast<int>(r.boundary().size()) == 4 * k;
                by_size += n == k + 2;
            }
        CHECK(by_perimeter == expected[k - 1]);
        CHECK(by_size == expected[k - 1]);
    }
}
