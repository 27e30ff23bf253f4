#pragma once

#include <Eigen/Dense>
#include <variant>
#include <vector>

#include "rmt/grid.hpp"
#include "rmt/rng.hpp"

namespace rmt {

// One matrix drawn from a Gaussian ensemble. beta=1 stores an N x N real
// symmetric matrix, beta=2 an N x N complex hermitian one, beta=4 the
// 2N x 2N self-dual complex block matrix.
struct GaussianDraw {
    int beta = 1;
    int dim = 0;  // N
    std::variant<Eigen::MatrixXd, Eigen::MatrixXcd> matrix;
};

struct WishartDraw {
    int n = 0;
    int m = 0;
    int beta = 1;
    std::variant<Eigen::MatrixXd, Eigen::MatrixXcd> matrix;  // W = H H^dagger
};

GaussianDraw sample_goe(int n, RngSeed seed, std::uint64_t draw_index = 0);
GaussianDraw sample_gue(int n, RngSeed seed, std::uint64_t draw_index = 0);
GaussianDraw sample_gse(int n, RngSeed seed, std::uint64_t draw_index = 0);
GaussianDraw sample_gaussian(int beta, int n, RngSeed seed,
                             std::uint64_t draw_index = 0);
WishartDraw sample_wishart(int n, int m, int beta, RngSeed seed,
                           std::uint64_t draw_index = 0);

// Ascending eigenvalues; GSE spectra deduplicated to N values by averaging
// each adjacent degenerate pair. Input must be self-adjoint to 1e-10.
Spectrum eigenvalues(const GaussianDraw& draw);
Spectrum eigenvalues(const WishartDraw& draw);

// Eigenvector columns, orthonormal, phases fixed so the first component of
// largest modulus is real-positive.
Eigen::MatrixXcd eigenvectors(const GaussianDraw& draw);

// Aggregate eigenvalues of `count` draws; parallel across draws, output
// identical for any thread count.
std::vector<double> sample_eigenvalue_cloud(int beta, int n, int count,
                                            RngSeed seed, int threads = 0);
std::vector<double> sample_wishart_cloud(int n, int m, int beta, int count,
                                         RngSeed seed, int threads = 0);

// Spacings of 2x2 GOE draws (closed-form eigenvalues).
std::vector<double> goe2_spacings(int count, RngSeed seed);

// i.i.d.-gap baseline.
struct ParentDistribution {
    enum Kind { Uniform, Gaussian, Exponential } kind = Uniform;
    double a = 0.0, b = 1.0;  // range / (mu, sigma) / (rate, unused)

    double pdf(double x) const;
    double cdf(double x) const;
    double sample(RandomStream& rng) const;
};

// For each trial draw n i.i.d. variables and return all adjacent gaps s
// rescaled locally to s * n * pdf(left endpoint).
std::vector<double> iid_gap_samples(int n, int count,
                                    const ParentDistribution& parent,
                                    RngSeed seed);

// Finite-n conditional gap law p_n(s) by numeric double integral.
double iid_gap_density(int n, double s, const ParentDistribution& parent);

}  // namespace rmt
