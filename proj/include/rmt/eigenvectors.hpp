#pragma once

#include <vector>

#include "rmt/rng.hpp"

namespace rmt {

// Closed-form density of a squared eigenvector component y = |c_1|^2 for the
// Gaussian ensembles (beta in {1,2}); the Gamma ratio is evaluated in
// log-space.
double p_component(double y, int n, int beta);
double p_component_cdf(double y, int n, int beta);

// Large-N limit of the scaled component eta = N y.
double porter_thomas(double eta, int beta);
double porter_thomas_cdf(double eta, int beta);

// Inverse participation ratio of a unit-norm vector (real or |.| of complex).
double ipr(const std::vector<double>& components_abs);

// log of the volume of the orthogonal group O(n) embedded in R^{n^2}.
double stiefel_volume_log(int n);
double stiefel_volume(int n);

// Squared first components |c_1|^2 of eigenvectors from `count` draws.
std::vector<double> sample_component_squares(int beta, int n, int count,
                                             RngSeed seed, int component = 0);

// Ensemble IPRs, one value per eigenvector, from `count` draws.
std::vector<double> sample_iprs(int beta, int n, int count, RngSeed seed);

}  // namespace rmt
