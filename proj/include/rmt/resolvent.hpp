#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "rmt/grid.hpp"

namespace rmt {

using Complex = std::complex<double>;
using ComplexFn = std::function<Complex(Complex)>;

// Square root of a + ib with nonnegative real part, built from the explicit
// (p,q) decomposition.
Complex sqrt_pq(Complex z);

// Cauchy transform of a tabulated density, exact on its piecewise-linear
// interpolant. z must sit off the support (or carry a nonzero imaginary
// part).
Complex stieltjes_of_density(const GridFunction& density, Complex z);

// (1/pi) Im G(x - i eps) extrapolated to eps -> 0 over a decreasing schedule
// (Neville polynomial extrapolation in eps).
double density_from_resolvent(const ComplexFn& resolvent, double x,
                              const std::vector<double>& eps_schedule = {
                                  1e-2, 1e-3, 1e-4});

// Branch-selected resolvents: G ~ 1/z at infinity, Im G(x - i eps) > 0 on the
// support.
Complex gaussian_resolvent(Complex z);
Complex wishart_resolvent(Complex z, double c);

// Functional inverse of a resolvent by damped Newton iteration, seeded at
// 1/z + first moment; R(z) = B(z) - 1/z.
Complex blue(const ComplexFn& resolvent, Complex z, double first_moment = 0.0);
Complex r_transform(const ComplexFn& resolvent, Complex z,
                    double first_moment = 0.0);

// Resolvent of p*GOE + (1-p)*Wishart(c) by closed-form cubic roots; returns
// the root with positive imaginary part at z = x - i eps, or the real root
// continuous with 1/z off the support.
Complex free_add_goe_wishart(double p, double c, Complex z);
double free_add_density(double p, double c, double x);

// Average IPR of states near x from the resolvent at x - i eps.
double avg_ipr_from_resolvent(double x, double eps, const ComplexFn& resolvent);

// Residual of the damped-Fresnel integral identity at dimension n in {1,2}.
double fresnel_identity_check(int n, double x, double eps);

}  // namespace rmt
