#include "rq/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace rq {

Series Series::monomial(int order, int k, const Rational& a)
{
    Series s(order);
    if (k <= order) s[k] = a;
    return s;
}

Series& Series::operator+=(const Series& o)
{
    for (int k = 0; k <= std::min(order(), o.order()); ++k) c_[k] += o.c_[k];
    return *this;
}

Series& Series::operator-=(const Series& o)
{
    for (int k = 0; k <= std::min(order(), o.order()); ++k) c_[k] -= o.c_[k];
    return *this;
}

Series& Series::operator*=(const Rational& a)
{
    for (auto& x : c_) x *= a;
    return *this;
}

Series operator*(const Series& a, const Series& b)
{
    int n = std::min(a.order(), b.order());
    Series r(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

bool operator==(const Series& a, const Series& b)
{
    return a.c_ == b.c_;
}

Series Series::derivative() const
{
    Series r(order());
    for (int k = 1; k <= order(); ++k) r[k - 1] = c_[k] * k;
    return r;
}

Series divide(const Series& a, const Series& b)
{
    if (b[0] == 0) throw std::domain_error("divide: series is not a unit");
    int n = std::min(a.order(), b.order());
    Series q(n);
    for (int k = 0; k <= n; ++k) {
        Rational s = a[k];
        for (int i = 1; i <= k; ++i) s -= b[i] * q[k - i];
        q[k] = s / b[0];
    }
    return q;
}

Series Series::compose(const Series& g) const
{
    if (g[0] != 0) throw std::domain_error("compose: inner series has a constant term");
    int n = std::min(order(), g.order());
    Series r(n);
    for (int k = n; k >= 0; --k) {
        r = r * g;
        r[0] += c_[k];
    }
    return r;
}

Series3::Series3(int order, int xmax, int ymax)
    : nt_(order + 1), nx_(xmax + 1), ny_(ymax + 1),
      c_(static_cast<std::size_t>(nt_) * nx_ * ny_)
{
}

Rational Series3::coeff(int t, int x, int y) const
{
    if (t < 0 || x < 0 || y < 0 || t >= nt_ || x >= nx_ || y >= ny_) return 0;
    return at(t, x, y);
}

Series Series3::xy_coeff(int i, int j) const
{
    Series s(order());
    for (int t = 0; t <= order(); ++t) s[t] = coeff(t, i, j);
    return s;
}

Series3& Series3::operator+=(const Series3& o)
{
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Series3& Series3::operator-=(const Series3& o)
{
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Series3& Series3::operator*=(const Rational& a)
{
    for (auto& x : c_) x *= a;
    return *this;
}

Series3 operator*(const Series3& a, const Series3& b)
{
    Series3 r(a.order(), a.xmax(), a.ymax());
    for (int t1 = 0; t1 < a.nt_; ++t1)
        for (int x1 = 0; x1 < a.nx_; ++x1)
            for (int y1 = 0; y1 < a.ny_; ++y1) {
                const Rational& u = a.at(t1, x1, y1);
                if (u == 0) continue;
                for (int t2 = 0; t1 + t2 < a.nt_; ++t2)
                    for (int x2 = 0; x1 + x2 < a.nx_; ++x2)
                        for (int y2 = 0; y1 + y2 < a.ny_; ++y2) {
                            const Rational& v = b.at(t2, x2, y2);
                            if (v != 0) r.at(t1 + t2, x1 + x2, y1 + y2) += u * v;
                        }
            }
    return r;
}

bool Series3::zero_constant() const
{
    return c_.empty() || c_[0] == 0;
}

// Every use below feeds series whose terms all carry x and y, so the power
// sums stop after min(xmax, ymax) factors; the general bound uses all degrees.
static int power_bound(const Series3& s)
{
    return s.order() + s.xmax() + s.ymax();
}

Series3 Series3::exp() const
{
    if (!zero_constant()) throw std::domain_error("exp: nonzero constant term");
    Series3 r(order(), xmax(), ymax());
    r.at(0, 0, 0) = 1;
    Series3 term = r;
    for (int k = 1; k <= power_bound(*this); ++k) {
        term = term * *this;
        term *= frac(1, k);
        bool nonzero = std::any_of(term.c_.begin(), term.c_.end(), [](const Rational& q) { return q != 0; });
        if (!nonzero) break;
        r += term;
    }
    return r;
}

Series3 Series3::log1p() const
{
    if (!zero_constant()) throw std::domain_error("log1p: nonzero constant term");
    Series3 r(order(), xmax(), ymax());
    Series3 power(order(), xmax(), ymax());
    power.at(0, 0, 0) = 1;
    for (int k = 1; k <= power_bound(*this); ++k) {
        power = power * *this;
        bool nonzero = std::any_of(power.c_.begin(), power.c_.end(), [](const Rational& q) { return q != 0; });
        if (!nonzero) break;
        r += power * frac(k % 2 ? 1 : -1, k);
    }
    return r;
}

Series3 Series3::inverse_one_plus() const
{
    if (!zero_constant()) throw std::domain_error("inverse_one_plus: nonzero constant term");
    Series3 r(order(), xmax(), ymax());
    Series3 power(order(), xmax(), ymax());
    power.at(0, 0, 0) = 1;
    r.at(0, 0, 0) = 1;
    for (int k = 1; k <= power_bound(*this); ++k) {
        power = power * *this;
        bool nonzero = std::any_of(power.c_.begin(), power.c_.end(), [](const Rational& q) { return q != 0; });
        if (!nonzero) break;
        if (k % 2) r -= power;
        else r += power;
    }
    return r;
}

Rational frac(const Integer& a, const Integer& b)
{
    Rational q(a, b);
    q.canonicalize();
    return q;
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Sum_{n>=0} C(2n,n)^2/(n+1) w^{n+1} and its derivative, evaluated on a series.
static void phi_and_derivative(const Series& w, Series& phi, Series& dphi)
{
    int n = w.order();
    phi = Series(n);
    dphi = Series(n);
    for (int k = n; k >= 0; --k) {
        Integer c = binomial(2 * k, k);
        Rational a(c * c);
        dphi = dphi * w;
        dphi[0] += a;
        phi = phi * w;
        phi[0] += a / Rational(k + 1);
    }
    phi = phi * w;
}

Series solve_R(int order)
{
    if (order < 1) throw std::invalid_argument("solve_R: order must be >= 1");
    Series t = Series::monomial(order, 1);
    Series r = t;
    int prec = 1;
    while (prec < order) {
        prec = std::min(order, 2 * prec + 1);
        Series phi, dphi;
        phi_and_derivative(r, phi, dphi);
        r -= divide(phi - t, dphi);
    }
    return r;
}

Series series_Z(int order)
{
    Series r = solve_R(order);
    Series z = Series::monomial(order, 1) - Series::monomial(order, 2, 2) - r;
    z *= frac(1, 4);
    return z;
}

static std::vector<Series> powers(const Series& r, int count)
{
    std::vector<Series> pw;
    pw.push_back(Series::monomial(r.order(), 0));
    for (int k = 1; k <= count; ++k) pw.push_back(pw.back() * r);
    return pw;
}

std::vector<Series> series_P(int order, int pmax)
{
    Series r = solve_R(order);
    auto pw = powers(r, order);
    std::vector<Series> out;
    out.push_back(Series::monomial(order, 1));
    for (int p = 1; p <= pmax; ++p) {
        Series s(order);
        for (int n = p; n + 1 <= order; ++n) {
            Rational a = frac(binomial(2 * n, n) * binomial(2 * n - p, n), n + 1);
            s += pw[n + 1] * a;
        }
        out.push_back(s);
    }
    return out;
}

// The exponent of B: sum over n and 0 <= i,j <= n of
// C(2n-i,n) C(2n-j,n)/(n+1) x^{i+1} y^{j+1} R^{n+1}.
static Series3 b_exponent(int order, int xmax, int ymax)
{
    Series r = solve_R(order);
    auto pw = powers(r, order);
    Series3 s(order, xmax, ymax);
    for (int n = 0; n + 1 <= order; ++n)
        for (int i = 0; i <= n && i + 1 <= xmax; ++i)
            for (int j = 0; j <= n && j + 1 <= ymax; ++j) {
                Rational a = frac(binomial(2 * n - i, n) * binomial(2 * n - j, n), n + 1);
                for (int k = 0; k <= order; ++k)
                    if (pw[n + 1][k] != 0) s.at(k, i + 1, j + 1) += a * pw[n + 1][k];
            }
    return s;
}

Series3 series_B(int order, int xmax, int ymax)
{
    Series3 b = b_exponent(order, xmax, ymax).exp();
    b.at(0, 0, 0) -= 1;
    return b;
}

Series3 series_C(int order, int xmax, int ymax)
{
    Series3 b = series_B(order, xmax, ymax);
    Series3 c(order, xmax, ymax);
    c.at(0, 0, 0) = 1;
    c -= b.inverse_one_plus();
    return c;
}

Series3 series_E(int order, int xmax, int ymax)
{
    Series3 c = series_C(order, xmax + 1, ymax + 1);
    auto p = series_P(order, std::max(xmax, ymax));
    Series3 e(order, xmax, ymax);
    for (int k = 0; k <= order; ++k)
        for (int x = 0; x <= xmax; ++x)
            for (int y = 0; y <= ymax; ++y) e.at(k, x, y) = c.at(k, x + 1, y + 1);
    for (int k = 0; k <= order; ++k) {
        for (int x = 1; x <= xmax; ++x) e.at(k, x, 0) -= p[x][k];
        for (int y = 1; y <= ymax; ++y) e.at(k, 0, y) -= p[y][k];
    }
    if (order >= 1) e.at(1, 0, 0) -= 1;
    return e;
}

Series series_H(int p, int q, int order)
{
    Series r = solve_R(order);
    auto pw = powers(r, order);
    Series h(order);
    for (int n = std::max(p, q) - 1; n + 1 <= order; ++n) {
        Rational a = frac(binomial(2 * n - p + 1, n) * binomial(2 * n - q + 1, n), n + 1);
        h += pw[n + 1] * a;
    }
    return h;
}

Series series_H_log(int p, int q, int order)
{
    return series_B(order, p, q).log1p().xy_coeff(p, q);
}

Series series_H_rooted(int p, int q, int order)
{
    Series r = solve_R(order + 1);
    Series dr = r.derivative();
    auto pw = powers(r, order);
    Series h(order);
    for (int n = std::max(p, q) - 1; n <= order; ++n) {
        Rational a(binomial(2 * n - p + 1, n) * binomial(2 * n - q + 1, n));
        h += pw[n] * dr * a;
    }
    return h;
}

CountTable catalytic_counts(int pmax, int jmax)
{
    if (pmax > jmax) throw std::invalid_argument("catalytic_counts: BoundsTooSmall (pmax > jmax)");
    int P = std::max(jmax, 1);
    std::vector<std::vector<Integer>> c(P + 1, std::vector<Integer>(jmax + 1, 0));
    if (jmax >= 1) c[0][1] = 1;
    for (int j = 2; j <= jmax; ++j) {
        for (int p = 1; p < j && p <= P; ++p) {
            Integer total = 0;
            for (int l = 0; l <= p - 1; ++l)
                for (int j1 = l + 1; j1 <= j - 1; ++j1) total += c[l][j1] * c[p - l - 1][j - j1];
            Integer twice = 0;
            for (int l = 0; p + l < j; ++l)
                for (int k = 0; k < j; ++k)
                    for (int j1 = p + l + 1; j1 <= j - k - 1; ++j1) {
                        const Integer& a = c[p + l][j1];
                        const Integer& b = c[k][j - j1];
                        if (a != 0 && b != 0) twice += binomial(l + k, l) * a * b;
                    }
            c[p][j] = total + 2 * twice;
        }
    }
    c.resize(pmax + 1);
    return {pmax, jmax, c};
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

}  // namespace rq
