#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rmt/grid.hpp"
#include "rmt/rng.hpp"

namespace rmt {

// Confining single-particle potential v(x); the gas energy is
// (1/N) sum v(x_i) - (1/2N^2) sum_{i!=j} log|x_i - x_j|.
struct PotentialSpec {
    std::string name;
    std::function<double(double)> v;
    std::function<double(double)> vprime;
    bool positive_axis = false;

    static PotentialSpec gaussian();
    static PotentialSpec wishart(double c);

    // finite-difference consistency of vprime against v
    double derivative_residual(int points = 64) const;
};

struct GasState {
    std::vector<double> positions;
    int beta = 2;
    double step_width = 0.1;
    long accepted = 0;
    long proposed = 0;

    double acceptance_rate() const {
        return proposed > 0 ? static_cast<double>(accepted) / proposed : 0.0;
    }
};

double gas_energy(const PotentialSpec& potential, const GasState& state);

struct MetropolisOptions {
    double burn_in_fraction = 0.2;
    double target_acceptance = 0.35;
    int record_stride = 0;  // 0: one snapshot per N proposals after burn-in
};

struct MetropolisResult {
    GasState state;
    std::vector<double> recorded;  // positions sampled along the chain
};

// Single-particle Gaussian proposals, Gibbs weight exp(-beta N^2 dV);
// proposal width auto-tuned during burn-in.
MetropolisResult metropolis_run(const PotentialSpec& potential, int n,
                                double beta, long steps, RngSeed seed,
                                MetropolisOptions opts = {});

// Energy and entropy functionals of a normalized density.
double functional_F0(const GridFunction& density);
double functional_F1(const GridFunction& density);

// Equilibrium density on [a,b] solving Pr int n(t)/(x-t) dt = g(x).
// Implemented through the Chebyshev expansion of g: the principal value of
// each sqrt-weighted mode is an exact Chebyshev polynomial, so the solver is
// spectrally accurate and never touches the singular node.
GridFunction tricomi_solve(const std::function<double(double)>& gfun, double a,
                           double b, double norm, int modes = 64,
                           int grid_points = 801);

// Independent residual of the singular integral equation for a solution
// tabulated on a Chebyshev grid: max_x |Pr int f(t)/(x-t) dt - g(x)|.
double tricomi_residual(const GridFunction& f,
                        const std::function<double(double)>& gfun, double a,
                        double b);

// Closed form n*(x; a,b) for the Gaussian potential.
double gaussian_equilibrium_density(double a, double b, double x);

// Closed-form intensive free energy f(a,b) of the Gaussian gas and its
// quadrature form; optimize_edges minimizes f over (a,b).
double free_energy_ab(double a, double b);
double free_energy_ab_quadrature(double a, double b);
std::pair<double, double> optimize_edges();

// Soft-edge support (a,b) for a general potential with g = v'; two moment
// conditions solved by Newton iteration.
std::pair<double, double> solve_soft_edge_support(
    const std::function<double(double)>& gfun, double a0, double b0,
    double norm = 1.0);

// log Z_{N,beta} = (N/2) log 2pi + sum_j [lgamma(1+j beta/2) - lgamma(1+beta/2)]
double partition_gaussian_log(int n, int beta);
// |log Z_{N,2} - log((2pi)^{N/2} G(N+2))| via the Barnes recursion
double partition_barnes_residual(int n);
// leading asymptotics of log C_{N,beta} and its exact value
double partition_cn_log_exact(int n, int beta);
double partition_cn_log_asymptotic(int n, int beta);

}  // namespace rmt
