#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "rmt/exact_density.hpp"
#include "rmt/quadrature.hpp"

namespace rmt {

// Even-dimensional skew-symmetric matrix; antisymmetry asserted on wrap.
struct SkewMatrix {
    Eigen::MatrixXd a;

    explicit SkewMatrix(Eigen::MatrixXd m);
    int dim() const { return static_cast<int>(a.rows()); }
};

// Pfaffian: direct pairing sum for dim <= 8, skew elimination with partial
// pivoting above (the pairing sum is (2n-1)!! terms).
double pfaffian(const SkewMatrix& A);

double vandermonde(const std::vector<double>& xs);
// det(pi_{i-1}(x_j)) divided by the product of leading coefficients; equals
// the product form for any polynomial family.
double vandermonde_poly_form(const std::vector<double>& xs,
                             const PolyFamily& family);

// Andreief: the N-fold integral of det(f_j(x_k)) det(g_j(x_k)) equals
// N! det of the single-integral Gram matrix.
double andreief(const std::vector<std::function<double(double)>>& fs,
                const std::vector<std::function<double(double)>>& gs,
                const GaussRule& measure, int n);
// Brute-force N-fold tensor quadrature of the same integrand, n <= 3.
double andreief_bruteforce(const std::vector<std::function<double(double)>>& fs,
                           const std::vector<std::function<double(double)>>& gs,
                           const GaussRule& measure, int n);

// log of the GUE partition function evaluated through the Andreief Hankel
// determinant of Gaussian moments (double-double arithmetic).
double gue_partition_andreief_log(int n);

// de Bruijn identities against brute-force integration, Gaussian weight
// exp(-x^2/2), polynomial phi/psi. Returns |lhs - rhs|.
double de_bruijn_check_1(int n);
double de_bruijn_check_2(int n);

// Generating function phi_N(z) for the number of positive GUE eigenvalues and
// the probabilities P_N(N_+ = k) extracted from it. Hankel determinants and
// the interpolation solve run in double-double arithmetic.
double sign_count_gf(int n, double z);
double sign_count_prob(int n, int k);
std::vector<double> sign_count_distribution(int n);

// Hankel tau-function family with closed-form derivatives a_k = d^k a0/dx^k;
// here a0 is a sum of exponential modes sum_m w_m exp(m x).
struct TodaFamily {
    std::vector<double> mode_weights;  // weight of exp((m+1) x), m = 0,1,...

    double a(int k, double x) const;
};

// Residual of tau_n'' tau_n - (tau_n')^2 = tau_{n+1} tau_{n-1} with 5-point
// finite-difference derivatives, normalized by the larger side.
double toda_check(const TodaFamily& family, int n, double x);
double toda_tau(const TodaFamily& family, int n, double x);

// Integrates det(K_n(x_i,x_j))_{1..n} over the last variable and compares
// with det over the first n-1 points (Dyson-Gaudin, one step).
double dyson_gaudin_check(int n);

// Two-point GUE marginal from the 2x2 kernel determinant.
double two_point_marginal(int n, double x1, double x2);

}  // namespace rmt
