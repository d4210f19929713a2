#include "rq/numerics.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace rq {

namespace {

constexpr long kPhiTerms = 1000000;
constexpr long double kPi = 3.141592653589793238462643383279502884L;

// log C(n,k) in long double.
long double log_binomial(long n, long k)
{
    return std::lgamma(static_cast<long double>(n) + 1) - std::lgamma(static_cast<long double>(k) + 1) -
           std::lgamma(static_cast<long double>(n - k) + 1);
}

long double adaptive_simpson(const std::function<long double(long double)>& f, long double a, long double b,
                             long double fa, long double fm, long double fb, long double whole, long double eps,
                             int depth)
{
    long double m = (a + b) / 2, lm = (a + m) / 2, rm = (m + b) / 2;
    long double flm = f(lm), frm = f(rm);
    long double left = (m - a) / 6 * (fa + 4 * flm + fm);
    long double right = (b - m) / 6 * (fm + 4 * frm + fb);
    if (depth <= 0 || std::fabs(left + right - whole) <= 15 * eps)
        return left + right + (left + right - whole) / 15;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, eps / 2, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, eps / 2, depth - 1);
}

}  // namespace

double critical_t()
{
    return static_cast<double>(1 / (4 * kPi));
}

long double phi_numeric(long double w)
{
    if (w < 0 || w > 1.0L / 16) throw std::domain_error("phi_numeric: w outside [0, 1/16]");
    // a_n = C(2n,n)^2/(n+1) w^{n+1}; ratio a_{n+1}/a_n = (2(2n+1)/(n+1))^2 (n+1)/(n+2) w
    long double term = w, sum = 0, comp = 0;
    for (long n = 0; n <= kPhiTerms; ++n) {
        long double y = term - comp;
        long double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        long double g = 2.0L * (2 * n + 1) / (n + 1);
        term *= g * g * (n + 1) / (n + 2) * w;
    }
    // a_n ~ x^{n+1}/(16 pi n(n+1)) with x = 16w; the tail of the leading term is exact below.
    long double x = 16 * w;
    long double N = kPhiTerms;
    long double tail;
    if (x >= 1) {
        tail = 1 / (N + 1);
    } else {
        long double full = (1 - x) * std::log1p(-x) + x;
        long double partial = 0, xp = x;
        for (long n = 1; n <= kPhiTerms; ++n) {
            xp *= x;
            partial += xp / (static_cast<long double>(n) * (n + 1));
            if (xp < 1e-30L) break;
        }
        tail = std::max(full - partial, 0.0L);
    }
    return sum + tail / (16 * kPi);
}

double eval_R_numeric(double t)
{
    double ts = critical_t();
    if (t < 0) throw std::domain_error("eval_R_numeric: OutOfDomain (t < 0)");
    if (t > ts * (1 + 1e-15)) throw std::domain_error("eval_R_numeric: OutOfDomain (t > 1/(4 pi))");
    long double lo = 0, hi = 1.0L / 16;
    if (phi_numeric(hi) <= t) return static_cast<double>(hi);
    for (int it = 0; it < 64; ++it) {
        long double mid = (lo + hi) / 2;
        if (phi_numeric(mid) < t) lo = mid;
        else hi = mid;
    }
    return static_cast<double>((lo + hi) / 2);
}

TailedSum eval_H_at(int p, int q, long double r, long nmax)
{
    if (r <= 0 || r > 1.0L / 16) throw std::domain_error("eval_H_at: R outside (0, 1/16]");
    long n0 = std::max(p, q) - 1;
    long double x = 16 * r;
    long double sum = 0;
    for (long n = n0; n <= nmax; ++n) {
        long double lt = log_binomial(2 * n - p + 1, n) + log_binomial(2 * n - q + 1, n) -
                         std::log(static_cast<long double>(n) + 1) + (n + 1) * std::log(r);
        sum += std::exp(lt);
        if (x < 1 && n > 4 * n0 + 100 && lt < std::log(1e-40L) + std::log(sum)) break;
    }
    // term ~ 2^{-p-q-2}/(pi n^2) exp(-(p^2+q^2)/(4n)) x^{n+1}; the tail integral is bounded by the x = 1 case.
    long double r2 = static_cast<long double>(p) * p + static_cast<long double>(q) * q;
    long double pref = std::pow(2.0L, -(p + q + 2)) / kPi;
    long double tail = 0;
    if (x >= 1) tail = pref * (4 / r2) * (1 - std::exp(-r2 / (4 * static_cast<long double>(nmax))));
    TailedSum out;
    out.partial = static_cast<double>(sum);
    out.tail_bound = static_cast<double>(tail);
    out.value = static_cast<double>(sum + tail);
    return out;
}

TailedSum eval_H_critical(int p, int q, long nmax)
{
    return eval_H_at(p, q, 1.0L / 16, nmax);
}

double critical_ratio(int p, int q, long nmax)
{
    double h = eval_H_critical(p, q, nmax).value;
    return h * static_cast<double>(kPi) * (p * p + q * q) * std::pow(2.0, p + q);
}

double laplace_expectation(int p, int q, double mu, long nmax)
{
    double r2 = static_cast<double>(p) * p + static_cast<double>(q) * q;
    double mupq = mu * std::log(r2) / r2;
    double rt = eval_R_numeric(critical_t() * std::exp(-mupq));
    double num = eval_H_at(p, q, rt, nmax).partial;
    double den = eval_H_critical(p, q, nmax).value;
    return num / den;
}

double laplace_quadrature(double mu)
{
    // substitute t = s/(1-s) on (0,1)
    std::function<long double(long double)> f = [mu](long double s) -> long double {
        if (s <= 0 || s >= 1) return 0;
        long double t = s / (1 - s);
        return std::exp(-t - mu / t) / ((1 - s) * (1 - s));
    };
    long double a = 0, b = 1, m = 0.5L;
    long double fa = f(a), fm = f(m), fb = f(b);
    long double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return static_cast<double>(adaptive_simpson(f, a, b, fa, fm, fb, whole, 1e-13L, 50));
}

}  // namespace rq
