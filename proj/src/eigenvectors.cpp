#include "rmt/eigenvectors.hpp"

#include <cmath>
#include <numbers>

#include "rmt/common.hpp"
#include "rmt/sampling.hpp"

namespace rmt {

double p_component(double y, int n, int beta) {
    require(y >= 0.0 && y <= 1.0, "y must be in [0,1]");
    require(n >= 2, "n must be >= 2");
    if (beta == 2) {
        return (n - 1.0) * std::pow(1.0 - y, n - 2.0);
    }
    if (beta == 1) {
        require(y > 0.0, "density singular at y = 0");
        double logc = std::lgamma(0.5 * n) - std::lgamma(0.5 * (n - 1)) -
                      0.5 * std::log(std::numbers::pi);
        return std::exp(logc + 0.5 * (n - 3.0) * std::log1p(-y) -
                        0.5 * std::log(y));
    }
    fail("not provided by the paper");
}

double p_component_cdf(double y, int n, int beta) {
    require(y >= 0.0 && y <= 1.0, "y must be in [0,1]");
    require(n >= 2, "n must be >= 2");
    if (beta == 2) return 1.0 - std::pow(1.0 - y, n - 1.0);
    if (beta == 1) {
        // regularized incomplete beta I_y(1/2, (n-1)/2) via the continued
        // fraction for the incomplete beta function
        double a = 0.5, b = 0.5 * (n - 1);
        if (y <= 0.0) return 0.0;
        if (y >= 1.0) return 1.0;
        auto betacf = [](double aa, double bb, double x) {
            const int maxit = 200;
            const double eps = 1e-15, fpmin = 1e-300;
            double qab = aa + bb, qap = aa + 1.0, qam = aa - 1.0;
            double c = 1.0, d = 1.0 - qab * x / qap;
            if (std::abs(d) < fpmin) d = fpmin;
            d = 1.0 / d;
            double h = d;
            for (int m = 1; m <= maxit; ++m) {
                int m2 = 2 * m;
                double num = m * (bb - m) * x / ((qam + m2) * (aa + m2));
                d = 1.0 + num * d;
                if (std::abs(d) < fpmin) d = fpmin;
                c = 1.0 + num / c;
                if (std::abs(c) < fpmin) c = fpmin;
                d = 1.0 / d;
                h *= d * c;
                num = -(aa + m) * (qab + m) * x / ((aa + m2) * (qap + m2));
                d = 1.0 + num * d;
                if (std::abs(d) < fpmin) d = fpmin;
                c = 1.0 + num / c;
                if (std::abs(c) < fpmin) c = fpmin;
                d = 1.0 / d;
                double del = d * c;
                h *= del;
                if (std::abs(del - 1.0) < eps) break;
            }
            return h;
        };
        double lbeta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
        double front = std::exp(a * std::log(y) + b * std::log1p(-y) - lbeta);
        if (y < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, y) / a;
        return 1.0 - front * betacf(b, a, 1.0 - y) / b;
    }
    fail("not provided by the paper");
}

double porter_thomas(double eta, int beta) {
    if (beta == 2) {
        require(eta >= 0.0, "eta must be >= 0");
        return std::exp(-eta);
    }
    if (beta == 1) {
        require(eta > 0.0, "density singular at eta = 0");
        return std::exp(-0.5 * eta) /
               std::sqrt(2.0 * std::numbers::pi * eta);
    }
    fail("not provided by the paper");
}

double porter_thomas_cdf(double eta, int beta) {
    require(eta >= 0.0, "eta must be >= 0");
    if (beta == 2) return 1.0 - std::exp(-eta);
    if (beta == 1) return std::erf(std::sqrt(0.5 * eta));
    fail("not provided by the paper");
}

double ipr(const std::vector<double>& components_abs) {
    require(!components_abs.empty(), "empty vector");
    double norm2 = 0.0, sum4 = 0.0;
    for (double c : components_abs) {
        norm2 += c * c;
        sum4 += c * c * c * c;
    }
    require(std::abs(norm2 - 1.0) <= 1e-8, "vector must have unit norm");
    return sum4;
}

double stiefel_volume_log(int n) {
    require(n >= 1, "n must be >= 1");
    // Vol = 2^N pi^{N^2/2} / Gamma_N(N/2),
    // Gamma_m(a) = pi^{m(m-1)/4} prod Gamma(a - (i-1)/2)
    double log_gamma_n = 0.25 * n * (n - 1.0) * std::log(std::numbers::pi);
    for (int i = 1; i <= n; ++i)
        log_gamma_n += std::lgamma(0.5 * n - 0.5 * (i - 1));
    return n * std::numbers::ln2 +
           0.5 * n * n * std::log(std::numbers::pi) - log_gamma_n;
}

double stiefel_volume(int n) { return std::exp(stiefel_volume_log(n)); }

std::vector<double> sample_component_squares(int beta, int n, int count,
                                             RngSeed seed, int component) {
    require(beta == 1 || beta == 2, "beta must be 1 or 2");
    require(component >= 0 && component < n, "component out of range");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count) * static_cast<std::size_t>(n));
    int draws = (count + n - 1) / n;
    for (int t = 0; t < draws; ++t) {
        GaussianDraw d = sample_gaussian(beta, n, seed,
                                         static_cast<std::uint64_t>(t));
        Eigen::MatrixXcd v = eigenvectors(d);
        for (int j = 0; j < v.cols() && static_cast<int>(out.size()) < count;
             ++j)
            out.push_back(std::norm(v(component, j)));
    }
    return out;
}

std::vector<double> sample_iprs(int beta, int n, int count, RngSeed seed) {
    require(beta == 1 || beta == 2, "beta must be 1 or 2");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count) * static_cast<std::size_t>(n));
    for (int t = 0; t < count; ++t) {
        GaussianDraw d = sample_gaussian(beta, n, seed,
                                         static_cast<std::uint64_t>(t));
        Eigen::MatrixXcd v = eigenvectors(d);
        for (int j = 0; j < v.cols(); ++j) {
            double s = 0.0;
            for (int i = 0; i < v.rows(); ++i) s += std::norm(v(i, j)) * std::norm(v(i, j));
            out.push_back(s);
        }
    }
    return out;
}

}  // namespace rmt
