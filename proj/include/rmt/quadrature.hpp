#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace rmt {

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    double integrate(const std::function<double(double)>& f) const {
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            s += weights[i] * f(nodes[i]);
        return s;
    }
};

// Gauss-Legendre on [-1,1], and mapped onto [a,b].
GaussRule gauss_legendre(int n);
GaussRule gauss_legendre(int n, double a, double b);

// Gauss-Hermite: integrates f against exp(-x^2) on the real line.
GaussRule gauss_hermite(int n);

// Gauss-Laguerre: integrates f against x^alpha exp(-x) on (0,inf).
GaussRule gauss_laguerre(int n, double alpha);

// Glue for integrals of f(y)*exp(-y^2/2) over the line: Gauss-Hermite after
// y = sqrt(2) t.
double integrate_gaussian_weight(const GaussRule& hermite,
                                 const std::function<double(double)>& f);

// Chebyshev-clustered grid on [a,b] (endpoints included); resolves
// inverse-square-root endpoint behavior.
std::vector<double> chebyshev_grid(double a, double b, int n);

std::vector<double> linspace(double a, double b, int n);

// Adaptive Simpson on [a,b].
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth = 40);

// Exact integrals of the piecewise-linear interpolant of (xs,ys):
//   pl_cauchy:  integral ys(t)/(z-t) dt   (z off the grid segment or Im z != 0)
//   pl_log:     integral ys(t)*log|x-t| dt  (log singularity integrated exactly)
std::complex<double> pl_cauchy_transform(const std::vector<double>& xs,
                                         const std::vector<double>& ys,
                                         std::complex<double> z);
double pl_log_transform(const std::vector<double>& xs,
                        const std::vector<double>& ys, double x);

}  // namespace rmt
