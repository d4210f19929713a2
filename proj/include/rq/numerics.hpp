#pragma once

namespace rq {

// 1/(4 pi), the radius of convergence of R(t).
double critical_t();

// Sum_{n>=0} C(2n,n)^2/(n+1) w^{n+1} for 0 <= w <= 1/16, with an asymptotic tail.
long double phi_numeric(long double w);

// Solves phi(R) = t by bisection; throws std::domain_error (OutOfDomain) for t > 1/(4 pi).
double eval_R_numeric(double t);

struct TailedSum {
    double value = 0;       // partial sum plus tail estimate
    double partial = 0;     // sum up to nmax
    double tail_bound = 0;  // estimate of the omitted tail
};

// H^(p,q) evaluated at R = r (r <= 1/16), summed to nmax with a tail estimate.
TailedSum eval_H_at(int p, int q, long double r, long nmax);
TailedSum eval_H_critical(int p, int q, long nmax);

// Ratio H^(p,q)(t*) pi (p^2+q^2) 2^{p+q}.
double critical_ratio(int p, int q, long nmax);

// E[exp(-mu_{p,q} n)] under the critical Boltzmann law, with mu_{p,q} = mu log(r^2)/r^2.
double laplace_expectation(int p, int q, double mu, long nmax);

// Integral_0^inf exp(-t - mu/t) dt by adaptive Simpson quadrature.
double laplace_quadrature(double mu);

}  // namespace rq
