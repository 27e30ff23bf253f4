#include "rmt/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "rmt/common.hpp"

namespace rmt {

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, weights come from
// the squared first components of the eigenvectors.
static GaussRule golub_welsch(const std::vector<double>& offdiag,
                              double total_mass,
                              const std::vector<double>& diag = {}) {
    const int n = static_cast<int>(offdiag.size()) + 1;
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k + 1 < n; ++k) {
        J(k, k + 1) = offdiag[static_cast<std::size_t>(k)];
        J(k + 1, k) = offdiag[static_cast<std::size_t>(k)];
    }
    for (std::size_t k = 0; k < diag.size(); ++k)
        J(static_cast<int>(k), static_cast<int>(k)) = diag[k];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rule.nodes[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
        double v0 = es.eigenvectors()(0, i);
        rule.weights[static_cast<std::size_t>(i)] = total_mass * v0 * v0;
    }
    return rule;
}

GaussRule gauss_legendre(int n) {
    require(n >= 1, "rule order must be >= 1");
    std::vector<double> b(static_cast<std::size_t>(n - 1));
    for (int k = 1; k < n; ++k)
        b[static_cast<std::size_t>(k - 1)] =
            k / std::sqrt(4.0 * k * k - 1.0);
    return golub_welsch(b, 2.0);
}

GaussRule gauss_legendre(int n, double a, double b) {
    GaussRule rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        rule.nodes[i] = mid + half * rule.nodes[i];
        rule.weights[i] *= half;
    }
    return rule;
}

GaussRule gauss_hermite(int n) {
    require(n >= 1, "rule order must be >= 1");
    std::vector<double> b(static_cast<std::size_t>(n - 1));
    for (int k = 1; k < n; ++k)
        b[static_cast<std::size_t>(k - 1)] = std::sqrt(0.5 * k);
    return golub_welsch(b, std::sqrt(std::numbers::pi));
}

GaussRule gauss_laguerre(int n, double alpha) {
    require(n >= 1, "rule order must be >= 1");
    require(alpha > -1.0, "laguerre alpha must be > -1");
    std::vector<double> a(static_cast<std::size_t>(n));
    std::vector<double> b(static_cast<std::size_t>(n - 1));
    for (int k = 0; k < n; ++k) {
        a[static_cast<std::size_t>(k)] = 2.0 * k + 1.0 + alpha;
        if (k + 1 < n)
            b[static_cast<std::size_t>(k)] = std::sqrt((k + 1.0) * (k + 1.0 + alpha));
    }
    return golub_welsch(b, std::exp(std::lgamma(1.0 + alpha)), a);
}

double integrate_gaussian_weight(const GaussRule& hermite,
                                 const std::function<double(double)>& f) {
    const double s = std::sqrt(2.0);
    double sum = 0.0;
    for (std::size_t i = 0; i < hermite.nodes.size(); ++i)
        sum += hermite.weights[i] * f(s * hermite.nodes[i]);
    return s * sum;
}

std::vector<double> chebyshev_grid(double a, double b, int n) {
    require(n >= 2, "grid needs at least two points");
    std::vector<double> xs(static_cast<std::size_t>(n));
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i)
        xs[static_cast<std::size_t>(i)] =
            mid - half * std::cos(std::numbers::pi * i / (n - 1));
    xs.front() = a;
    xs.back() = b;
    return xs;
}

std::vector<double> linspace(double a, double b, int n) {
    require(n >= 2, "grid needs at least two points");
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        xs[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1.0);
    return xs;
}

static double simpson_rec(const std::function<double(double)>& f, double a,
                          double b, double fa, double fm, double fb,
                          double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth) {
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

std::complex<double> pl_cauchy_transform(const std::vector<double>& xs,
                                         const std::vector<double>& ys,
                                         std::complex<double> z) {
    require(xs.size() == ys.size() && xs.size() >= 2, "bad grid");
    std::complex<double> sum = 0.0;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double x0 = xs[i - 1], x1 = xs[i];
        const double s = (ys[i] - ys[i - 1]) / (x1 - x0);
        const double alpha = ys[i - 1] - s * x0;
        // integral (alpha + s t)/(z - t) dt over [x0,x1]
        sum += (alpha + s * z) * std::log((z - x0) / (z - x1)) - s * (x1 - x0);
    }
    return sum;
}

static double xlogx(double u) {
    return u == 0.0 ? 0.0 : u * std::log(std::abs(u));
}

double pl_log_transform(const std::vector<double>& xs,
                        const std::vector<double>& ys, double x) {
    require(xs.size() == ys.size() && xs.size() >= 2, "bad grid");
    double sum = 0.0;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double x0 = xs[i - 1], x1 = xs[i];
        const double s = (ys[i] - ys[i - 1]) / (x1 - x0);
        const double c = ys[i - 1] + s * (x - x0);  // value of interpolant at x
        const double u0 = x0 - x, u1 = x1 - x;
        // integral (c + s u) log|u| du, continuous across u = 0
        double term = c * (xlogx(u1) - u1 - (xlogx(u0) - u0)) +
                      s * (0.5 * u1 * xlogx(u1) - 0.25 * u1 * u1 -
                           (0.5 * u0 * xlogx(u0) - 0.25 * u0 * u0));
        sum += term;
    }
    return sum;
}

}  // namespace rmt
