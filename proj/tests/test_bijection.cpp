#include "doctest.h"

#include "rq/bijection.hpp"
#include "rq/exploration.hpp"
#include "rq/oracle.hpp"
#include "rq/series.hpp"

#include <map>
#include <set>

using namespace rq;

namespace {

// Rigid quadrangulations with n(r) = n, via L-first base-1 traces with n-1 steps.
std::vector<RigidQuad> all_rigid(int n)
{
    std::vector<RigidQuad> out;
    for_each_trace(1, n - 1, [&](const Trace& t) {
        if (t.steps.front().kind == StepKind::L) out.push_back(unexpand(assemble_rigid(t)));
    });
    return out;
}

}  // namespace

TEST_CASE("expand of the square")
{
    RigidQuad e = expand(unit_square());
    CHECK(to_string(explore_rigid(e)) == "p=1; L() G(0,0)");
    CHECK(same_rigid(unexpand(e), unit_square()));
    CHECK_THROWS_AS(unexpand(unit_square()), RigidError);
}

TEST_CASE("rigid quadrangulations by size")
{
    CHECK(all_rigid(3).size() == 1);
    CHECK(all_rigid(4).size() == 5);
    CHECK(all_rigid(5).size() == 33);
}

TEST_CASE("psi of the square is the three-vertex sphere")
{
    CHECK(same_colorful(psi(unit_square()), three_vertex_sphere()));
    CHECK(same_rigid(psi_inverse(three_vertex_sphere()), unit_square()));
}

TEST_CASE("expand, zip and psi round trips")
{
    for (int n = 3; n <= 6; ++n) {
        std::set<std::vector<int>> rigid_codes, colorful_codes;
        for (const RigidQuad& r : all_rigid(n)) {
            CHECK(r.size() == n);
            RigidQuad e = expand(r);
            CHECK(explore_rigid(e).steps.front().kind == StepKind::L);
            CHECK(same_rigid(unexpand(e), r));
            ColorfulQuad d = psi_p(e);
            CHECK(same_colorful(unzip(zip(d)), d));
            ColorfulQuad q = psi(r);
            CHECK(q.in_class());
            CHECK(q.vertices() == n);
            CHECK(same_colorful(zip(unzip(q)), q));
            CHECK(same_rigid(psi_inverse(q), r));
            rigid_codes.insert(canonical_code(r));
            colorful_codes.insert(canonical_code(q));
        }
        CHECK(rigid_codes.size() == all_rigid(n).size());
        CHECK(colorful_codes.size() == rigid_codes.size());
    }
}

TEST_CASE("psi commutes with mirror and relabel")
{
    for (int n = 3; n <= 6; ++n)
        for (const RigidQuad& r : all_rigid(n)) CHECK(same_colorful(psi(mirror(r)), relabel(psi(r))));
}

TEST_CASE("ascent path follows the base signature")
{
    for (int n = 3; n <= 6; ++n)
        for (const RigidQuad& r : all_rigid(n)) {
            ColorfulQuad q = psi(r);
            AscentResult a = ascent_path(q);
            CHECK(a.signature == base_signature(r));
            for (std::size_t i = 0, k = 0, pos = 0; i < a.crossed.size(); ++i) {
                int lo = std::min(q.dart_label(a.crossed[i]), q.dart_label(q.twin(a.crossed[i])));
                CHECK(lo == static_cast<int>(k) + 1);
                if (++pos == static_cast<std::size_t>(a.signature[k])) ++k, pos = 0;
            }
        }
}

TEST_CASE("psi_b boundary and the one-fold case")
{
    for (int n = 3; n <= 6; ++n)
        for (const RigidQuad& r : all_rigid(n)) {
            ColorfulQuad u = psi_b(r);
            auto sig = base_signature(r);
            CHECK(u.boundary_labels() == walk_of_signature(sig));
            CHECK(signature_of_walk(u.boundary_labels()) == sig);
            CHECK(same_colorful(glue_ascent(u), psi(r)));
            CHECK(same_rigid(psi_b_inverse(u), r));
            if (sig.size() == 1) CHECK(same_colorful(u, psi_p(r)));
        }
}

TEST_CASE("B and C counts match their series")
{
    const int order = 6, xmax = 6, ymax = 6;
    Series3 b = series_B(order, xmax, ymax), c = series_C(order, xmax, ymax);
    std::map<std::tuple<int, int, int>, int> nb, nc;
    for (int n = 3; n <= 7; ++n)
        for (const RigidQuad& r : all_rigid(n)) {
            BCClass k = classify_BC(r);
            if (k.type == BCClass::Type::General) continue;
            auto key = std::make_tuple(n - 2, k.q, k.p);
            ++nb[key];
            if (k.type == BCClass::Type::C) ++nc[key];
        }
    for (int t = 1; t <= 5; ++t)
        for (int x = 1; x <= xmax; ++x)
            for (int y = 1; y <= ymax; ++y) {
                auto key = std::make_tuple(t, x, y);
                CHECK_MESSAGE(b.coeff(t, x, y) == nb[key], "B t=" << t << " q=" << x << " p=" << y);
                CHECK_MESSAGE(c.coeff(t, x, y) == nc[key], "C t=" << t << " q=" << x << " p=" << y);
            }
}

TEST_CASE("an instance with base signature (2,3,2)")
{
    RigidQuad r = unexpand(assemble_rigid(parse_trace("p=1; L(ud) G(0,1) G(0,0) R() R() L(d) G(0,1) G(0,0)")));
    CHECK(r.size() == 9);
    CHECK(base_signature(r) == std::vector<int>{2, 3, 2});
    CHECK(ascent_path(psi(r)).signature == std::vector<int>{2, 3, 2});
    CHECK(psi_b(r).boundary_labels() == std::vector<int>{0, 1, 0, 1, 2, 3, 2, 3, 2, 1, 2, 1, 2, 1});
    CHECK(same_rigid(psi_b_inverse(psi_b(r)), r));
    CHECK(same_rigid(psi_inverse(psi(r)), r));
    CHECK(same_colorful(psi(mirror(r)), relabel(psi(r))));
}

TEST_CASE("mirror-fixed elements of size 4")
{
    // the L-tromino rooted at its five convex corners; only the corner on its axis is fixed
    int fixed = 0;
    for (const RigidQuad& r : all_rigid(4)) fixed += same_rigid(mirror(r), r);
    CHECK(fixed == 1);
    for (const ColorfulQuad& q : {psi(all_rigid(4)[0]), psi(all_rigid(4)[4])}) CHECK(same_colorful(relabel(relabel(q)), q));
}

TEST_CASE("signature_of_walk rejects other sequences")
{
    CHECK(signature_of_walk({0, 1}) == std::vector<int>{1});
    CHECK(signature_of_walk(walk_of_signature({2, 1, 3})) == std::vector<int>{2, 1, 3});
    CHECK_THROWS_AS(signature_of_walk({0, 1, 0}), ColorfulError);
    CHECK_THROWS_AS(signature_of_walk({1, 0}), ColorfulError);
    CHECK(signature_of_walk({0, 1, 2, 1}) == std::vector<int>{1, 1});
    CHECK_THROWS_AS(signature_of_walk({0, 1, 2, 3}), ColorfulError);
    CHECK_THROWS_AS(signature_of_walk({0, 2, 0, 2}), ColorfulError);
}
