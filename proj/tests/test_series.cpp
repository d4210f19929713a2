#include "doctest.h"

#include "rq/numerics.hpp"
#include "rq/series.hpp"

#include <cmath>

using namespace rq;

namespace {

std::vector<long> head(const Series& s, int from, int to)
{
    std::vector<long> v;
    for (int k = from; k <= to; ++k) {
        REQUIRE(s[k].get_den() == 1);
        v.push_back(s[k].get_num().get_si());
    }
    return v;
}

}  // namespace

TEST_CASE("R starts t - 2t^2 - 4t^3")
{
    Series r = solve_R(10);
    CHECK(r[0] == 0);
    CHECK(r[1] == 1);
    CHECK(r[2] == -2);
    CHECK(r[3] == -4);
}

TEST_CASE("R satisfies its defining identity exactly through order 30")
{
    int n = 30;
    Series r = solve_R(n);
    Series lhs(n);
    Series pw = r;
    for (int k = 0; k < n; ++k) {
        Integer c = binomial(2 * k, k);
        lhs += pw * frac(c * c, k + 1);
        pw = pw * r;
    }
    CHECK(lhs == Series::monomial(n, 1));
}

TEST_CASE("Z coefficients")
{
    Series z = series_Z(12);
    for (int k = 0; k < 3; ++k) CHECK(z[k] == 0);
    CHECK(head(z, 3, 5) == std::vector<long>{1, 5, 33});
    for (int k = 0; k <= 12; ++k) {
        CHECK(z[k].get_den() == 1);
        CHECK(z[k] >= 0);
    }
}

TEST_CASE("P coefficients")
{
    auto p = series_P(8, 3);
    CHECK(head(p[1], 2, 4) == std::vector<long>{1, 2, 10});
    CHECK(head(p[2], 3, 5) == std::vector<long>{2, 8, 50});
    CHECK(p[1][1] == 0);
    CHECK(p[2][2] == 0);
}

TEST_CASE("B, C and E displays")
{
    Series3 b = series_B(6, 3, 3);
    CHECK(b.at(1, 1, 1) == 1);
    CHECK(head(b.xy_coeff(1, 2), 2, 4) == std::vector<long>{1, 2, 10});
    CHECK(head(b.xy_coeff(2, 1), 2, 4) == std::vector<long>{1, 2, 10});
    CHECK(head(b.xy_coeff(2, 2), 2, 4) == std::vector<long>{1, 1, 5});

    Series3 c = series_C(6, 3, 3);
    CHECK(c.at(1, 1, 1) == 1);
    CHECK(head(c.xy_coeff(1, 2), 2, 4) == std::vector<long>{1, 2, 10});
    CHECK(head(c.xy_coeff(2, 2), 2, 4) == std::vector<long>{0, 1, 5});

    Series3 e = series_E(7, 2, 2);
    CHECK(head(e.xy_coeff(1, 1), 3, 5) == std::vector<long>{1, 5, 33});
    CHECK(head(e.xy_coeff(1, 2), 4, 5) == std::vector<long>{2, 15});
    CHECK(head(e.xy_coeff(2, 1), 4, 5) == std::vector<long>{2, 15});
    for (int k = 0; k <= 7; ++k)
        for (int i = 0; i <= 2; ++i) {
            CHECK(e.at(k, i, 0) == 0);
            CHECK(e.at(k, 0, i) == 0);
        }
}

TEST_CASE("catalytic counts agree with [y^p]P")
{
    int jmax = 10;
    CountTable ct = catalytic_counts(4, jmax);
    auto p = series_P(jmax, 4);
    CHECK(ct.at(1, 2) == 1);
    for (int q = 0; q <= 4; ++q)
        for (int j = 0; j <= jmax; ++j) {
            CHECK(Rational(ct.at(q, j)) == p[q][j]);
            if (j <= q && !(q == 0 && j == 1)) CHECK(ct.at(q, j) == 0);
        }
}

TEST_CASE("half-cylinder closed form equals log extraction")
{
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q) CHECK(series_H(p, q, 12) == series_H_log(p, q, 12));
    CHECK(series_H(1, 1, 8) == Series::monomial(8, 1));
}

TEST_CASE("rooted half-cylinder series is the derivative")
{
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q) {
            Series d = series_H(p, q, 11).derivative();
            Series rooted = series_H_rooted(p, q, 10);
            for (int k = 0; k <= 9; ++k) CHECK(d[k] == rooted[k]);
        }
}

TEST_CASE("numeric R at the critical point")
{
    CHECK(std::fabs(eval_R_numeric(critical_t()) - 1.0 / 16) < 1e-10);
    double t = 0.01;
    double r = eval_R_numeric(t);
    Series rs = solve_R(40);
    double approx = 0;
    for (int k = 40; k >= 0; --k) approx = approx * t + rs[k].get_d();
    CHECK(std::fabs(r - approx) < 1e-12);
    CHECK_THROWS(eval_R_numeric(critical_t() * 1.01));
}
