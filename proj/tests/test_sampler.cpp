#include "doctest.h"

#include "rq/bijection.hpp"
#include "rq/exploration.hpp"
#include "rq/oracle.hpp"
#include "rq/sampler.hpp"
#include "rq/series.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace rq;

TEST_CASE("rooted quadrangulations by faces")
{
    CHECK(brute_quadrangulations(1).size() == 2);
    CHECK(brute_quadrangulations(2).size() == 9);
    CHECK(brute_quadrangulations(3).size() == 54);
}

TEST_CASE("brute colorful counts and properties")
{
    const std::size_t expected[] = {1, 5, 33};
    for (int n = 3; n <= 5; ++n) {
        auto all = brute_colorful(n);
        CHECK(all.size() == expected[n - 3]);
        std::set<std::vector<int>> codes, relabeled;
        for (const auto& q : all) {
            codes.insert(canonical_code(q));
            relabeled.insert(canonical_code(relabel(q)));
            std::set<int> labels(q.labels().begin(), q.labels().end());
            CHECK(*labels.rbegin() - *labels.begin() + 1 == static_cast<int>(labels.size()));
        }
        CHECK(codes.size() == all.size());
        CHECK(codes == relabeled);
        std::set<std::vector<int>> images;
        for_each_trace(1, n - 1, [&](const Trace& t) {
            if (t.steps.front().kind == StepKind::L) images.insert(canonical_code(psi(unexpand(assemble_rigid(t)))));
        });
        CHECK(images == codes);
    }
}

TEST_CASE("step distributions sum to the counts")
{
    RigidSampler s(12);
    for (int p = 1; p <= 4; ++p)
        for (int j = 2; j <= 8; ++j) {
            StepDistribution d = s.distribution(p, j);
            CHECK(d.total == s.count(p, j));
            for (const auto& c : d.counts) CHECK(c > 0);
        }
}

TEST_CASE("sampler basics")
{
    RigidSampler s(10);
    Rng rng = stream_rng(1, 0);
    for (int i = 0; i < 20; ++i) {
        CHECK(same_rigid(s.sample(1, 2, rng), unit_square()));
        CHECK(same_rigid(s.sample_rooted(3, rng), unit_square()));
    }
    CHECK_THROWS_AS(s.sample_trace(3, 3, rng), SamplerError);
    CHECK(same_rigid(sample_rigid_rooted(7, 42), sample_rigid_rooted(7, 42)));
    for (int i = 0; i < 50; ++i) {
        Trace t = s.sample_trace(2, 7, rng);
        CHECK_NOTHROW(check_trace(t));
        CHECK(t.weight() == 7);
        RigidQuad r = s.sample_rooted(8, rng);
        CHECK(r.size() == 8);
    }
}

TEST_CASE("rooted sampler frequencies at n = 4")
{
    RigidSampler s(6);
    Rng rng = stream_rng(7, 0);
    std::map<std::vector<int>, int> freq;
    const int draws = 5000;
    for (int i = 0; i < draws; ++i) ++freq[canonical_code(s.sample_rooted(4, rng))];
    CHECK(freq.size() == 5);
    // 4 sigma of a binomial(5000, 1/5)
    for (const auto& [code, k] : freq) CHECK(std::abs(k - draws / 5) < 4 * 28.3);
}
