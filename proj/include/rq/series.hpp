#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace rq {

using Integer = mpz_class;
using Rational = mpq_class;

// Univariate power series truncated after t^order.
class Series {
public:
    Series() = default;
    explicit Series(int order) : c_(static_cast<std::size_t>(order) + 1) {}

    int order() const { return static_cast<int>(c_.size()) - 1; }
    Rational& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
    const Rational& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    Rational coeff(int k) const { return k >= 0 && k <= order() ? c_[k] : Rational(0); }

    static Series monomial(int order, int k, const Rational& a = 1);

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Rational& a);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Rational& s) { return a *= s; }
    friend Series operator*(const Series& a, const Series& b);
    friend bool operator==(const Series& a, const Series& b);

    Series derivative() const;
    // a/b with b[0] != 0.
    friend Series divide(const Series& a, const Series& b);
    // this(g(t)) with g[0] == 0.
    Series compose(const Series& g) const;

private:
    std::vector<Rational> c_;
};

// Series in t, x, y truncated rectangularly at (order, xmax, ymax).
class Series3 {
public:
    Series3() = default;
    Series3(int order, int xmax, int ymax);

    int order() const { return nt_ - 1; }
    int xmax() const { return nx_ - 1; }
    int ymax() const { return ny_ - 1; }

    Rational& at(int t, int x, int y) { return c_[index(t, x, y)]; }
    const Rational& at(int t, int x, int y) const { return c_[index(t, x, y)]; }
    Rational coeff(int t, int x, int y) const;
    // [x^i y^j] as a series in t.
    Series xy_coeff(int i, int j) const;

    Series3& operator+=(const Series3& o);
    Series3& operator-=(const Series3& o);
    Series3& operator*=(const Rational& a);
    friend Series3 operator+(Series3 a, const Series3& b) { return a += b; }
    friend Series3 operator-(Series3 a, const Series3& b) { return a -= b; }
    friend Series3 operator*(Series3 a, const Rational& s) { return a *= s; }
    friend Series3 operator*(const Series3& a, const Series3& b);

    bool zero_constant() const;
    // Both require a vanishing constant term.
    Series3 exp() const;
    Series3 log1p() const;
    Series3 inverse_one_plus() const;  // 1/(1+this)

private:
    std::size_t index(int t, int x, int y) const {
        return (static_cast<std::size_t>(t) * nx_ + x) * ny_ + y;
    }
    int nt_ = 0, nx_ = 0, ny_ = 0;
    std::vector<Rational> c_;
};

Integer binomial(long n, long k);
// a/b in lowest terms.
Rational frac(const Integer& a, const Integer& b);

Series solve_R(int order);
Series series_Z(int order);
// P[p] = [y^p]P(t,y) for p = 0..pmax, with P[0] = t.
std::vector<Series> series_P(int order, int pmax);
// Coefficients are indexed at(t, q, p) for x^q y^p.
Series3 series_B(int order, int xmax, int ymax);
Series3 series_C(int order, int xmax, int ymax);
Series3 series_E(int order, int xmax, int ymax);
Series series_H(int p, int q, int order);
Series series_H_log(int p, int q, int order);
Series series_H_rooted(int p, int q, int order);

struct CountTable {
    int pmax = 0;
    int jmax = 0;
    std::vector<std::vector<Integer>> c;  // c[p][j]
    const Integer& at(int p, int j) const { return c[p][j]; }
};

CountTable catalytic_counts(int pmax, int jmax);

std::string to_string(const Rational& q);

}  // namespace rq
