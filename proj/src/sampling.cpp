#include "rmt/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "rmt/common.hpp"
#include "rmt/quadrature.hpp"

namespace rmt {

namespace {

Eigen::MatrixXd real_gaussian_matrix(int rows, int cols, RandomStream& rng) {
    Eigen::MatrixXd m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.gaussian();
    return m;
}

Eigen::MatrixXcd complex_gaussian_matrix(int rows, int cols,
                                         RandomStream& rng) {
    Eigen::MatrixXcd m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = std::complex<double>(rng.gaussian(), rng.gaussian());
    return m;
}

}  // namespace

GaussianDraw sample_goe(int n, RngSeed seed, std::uint64_t draw_index) {
    require(n >= 1, "n must be >= 1");
    RandomStream rng(seed, draw_index);
    Eigen::MatrixXd h = real_gaussian_matrix(n, n, rng);
    Eigen::MatrixXd s = 0.5 * (h + h.transpose());
    return {1, n, std::move(s)};
}

GaussianDraw sample_gue(int n, RngSeed seed, std::uint64_t draw_index) {
    require(n >= 1, "n must be >= 1");
    RandomStream rng(seed, draw_index);
    Eigen::MatrixXcd h = complex_gaussian_matrix(n, n, rng);
    Eigen::MatrixXcd s = 0.5 * (h + h.adjoint());
    return {2, n, std::move(s)};
}

GaussianDraw sample_gse(int n, RngSeed seed, std::uint64_t draw_index) {
    require(n >= 1, "n must be >= 1");
    RandomStream rng(seed, draw_index);
    Eigen::MatrixXcd x = complex_gaussian_matrix(n, n, rng);
    Eigen::MatrixXcd y = complex_gaussian_matrix(n, n, rng);
    Eigen::MatrixXcd a(2 * n, 2 * n);
    a.topLeftCorner(n, n) = x;
    a.topRightCorner(n, n) = y;
    a.bottomLeftCorner(n, n) = -y.conjugate();
    a.bottomRightCorner(n, n) = x.conjugate();
    Eigen::MatrixXcd s = 0.5 * (a + a.adjoint());
    return {4, n, std::move(s)};
}

GaussianDraw sample_gaussian(int beta, int n, RngSeed seed,
                             std::uint64_t draw_index) {
    switch (beta) {
        case 1: return sample_goe(n, seed, draw_index);
        case 2: return sample_gue(n, seed, draw_index);
        case 4: return sample_gse(n, seed, draw_index);
        default: fail("beta must be 1, 2 or 4");
    }
}

WishartDraw sample_wishart(int n, int m, int beta, RngSeed seed,
                           std::uint64_t draw_index) {
    require(n >= 1 && m >= 1, "n and m must be >= 1");
    RandomStream rng(seed, draw_index);
    if (beta == 1) {
        Eigen::MatrixXd h = real_gaussian_matrix(n, m, rng);
        Eigen::MatrixXd w = h * h.transpose();
        return {n, m, 1, std::move(w)};
    }
    if (beta == 2) {
        Eigen::MatrixXcd h = complex_gaussian_matrix(n, m, rng);
        Eigen::MatrixXcd w = h * h.adjoint();
        return {n, m, 2, std::move(w)};
    }
    if (beta == 4) {
        Eigen::MatrixXcd x = complex_gaussian_matrix(n, m, rng);
        Eigen::MatrixXcd y = complex_gaussian_matrix(n, m, rng);
        Eigen::MatrixXcd h(2 * n, 2 * m);
        h.topLeftCorner(n, m) = x;
        h.topRightCorner(n, m) = y;
        h.bottomLeftCorner(n, m) = -y.conjugate();
        h.bottomRightCorner(n, m) = x.conjugate();
        Eigen::MatrixXcd w = h * h.adjoint();
        return {n, m, 4, std::move(w)};
    }
    fail("beta must be 1, 2 or 4");
}

namespace {

void check_self_adjoint(const Eigen::MatrixXd& m) {
    double residual = (m - m.transpose()).norm();
    require(residual <= 1e-10 * std::max(1.0, m.norm()),
            "matrix is not symmetric");
}

void check_self_adjoint(const Eigen::MatrixXcd& m) {
    double residual = (m - m.adjoint()).norm();
    require(residual <= 1e-10 * std::max(1.0, m.norm()),
            "matrix is not hermitian");
}

std::vector<double> hermitian_eigenvalues(
    const std::variant<Eigen::MatrixXd, Eigen::MatrixXcd>& matrix) {
    Eigen::VectorXd ev;
    if (std::holds_alternative<Eigen::MatrixXd>(matrix)) {
        const auto& m = std::get<Eigen::MatrixXd>(matrix);
        check_self_adjoint(m);
        ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(
                 m, Eigen::EigenvaluesOnly)
                 .eigenvalues();
    } else {
        const auto& m = std::get<Eigen::MatrixXcd>(matrix);
        check_self_adjoint(m);
        ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(
                 m, Eigen::EigenvaluesOnly)
                 .eigenvalues();
    }
    return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> dedup_pairs(const std::vector<double>& v) {
    std::vector<double> out;
    out.reserve(v.size() / 2);
    for (std::size_t i = 0; i + 1 < v.size(); i += 2)
        out.push_back(0.5 * (v[i] + v[i + 1]));
    return out;
}

}  // namespace

Spectrum eigenvalues(const GaussianDraw& draw) {
    std::vector<double> ev = hermitian_eigenvalues(draw.matrix);
    Spectrum s;
    s.beta = draw.beta;
    s.dim = draw.dim;
    if (draw.beta == 4) {
        s.values = dedup_pairs(ev);
        s.degenerate = true;
    } else {
        s.values = std::move(ev);
    }
    s.validate();
    return s;
}

Spectrum eigenvalues(const WishartDraw& draw) {
    std::vector<double> ev = hermitian_eigenvalues(draw.matrix);
    Spectrum s;
    s.beta = draw.beta;
    s.dim = draw.n;
    if (draw.beta == 4) {
        s.values = dedup_pairs(ev);
        s.degenerate = true;
    } else {
        s.values = std::move(ev);
    }
    s.validate();
    return s;
}

Eigen::MatrixXcd eigenvectors(const GaussianDraw& draw) {
    Eigen::MatrixXcd vectors;
    if (std::holds_alternative<Eigen::MatrixXd>(draw.matrix)) {
        const auto& m = std::get<Eigen::MatrixXd>(draw.matrix);
        check_self_adjoint(m);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
        vectors = es.eigenvectors().cast<std::complex<double>>();
    } else {
        const auto& m = std::get<Eigen::MatrixXcd>(draw.matrix);
        check_self_adjoint(m);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
        vectors = es.eigenvectors();
    }
    // fix the phase: largest-modulus component real-positive
    for (int j = 0; j < vectors.cols(); ++j) {
        int imax = 0;
        vectors.col(j).cwiseAbs().maxCoeff(&imax);
        std::complex<double> c = vectors(imax, j);
        if (std::abs(c) > 0.0) vectors.col(j) *= std::conj(c) / std::abs(c);
    }
    return vectors;
}

namespace {

template <typename DrawFn>
std::vector<double> parallel_cloud(int count, int values_per_draw, int threads,
                                   DrawFn&& fn) {
    require(count >= 1, "count must be >= 1");
    if (threads <= 0)
        threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::clamp(threads, 1, count);
    std::vector<double> out(static_cast<std::size_t>(count) *
                            static_cast<std::size_t>(values_per_draw));
    auto worker = [&](int first, int last) {
        for (int t = first; t < last; ++t) {
            std::vector<double> v = fn(static_cast<std::uint64_t>(t));
            std::copy(v.begin(), v.end(),
                      out.begin() + static_cast<std::ptrdiff_t>(t) *
                                        values_per_draw);
        }
    };
    if (threads == 1) {
        worker(0, count);
    } else {
        std::vector<std::thread> pool;
        int chunk = (count + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            int first = t * chunk;
            int last = std::min(count, first + chunk);
            if (first >= last) break;
            pool.emplace_back(worker, first, last);
        }
        for (auto& th : pool) th.join();
    }
    return out;
}

}  // namespace

std::vector<double> sample_eigenvalue_cloud(int beta, int n, int count,
                                            RngSeed seed, int threads) {
    return parallel_cloud(count, n, threads, [&](std::uint64_t t) {
        return eigenvalues(sample_gaussian(beta, n, seed, t)).values;
    });
}

std::vector<double> sample_wishart_cloud(int n, int m, int beta, int count,
                                         RngSeed seed, int threads) {
    return parallel_cloud(count, n, threads, [&](std::uint64_t t) {
        return eigenvalues(sample_wishart(n, m, beta, seed, t)).values;
    });
}

std::vector<double> goe2_spacings(int count, RngSeed seed) {
    require(count >= 1, "count must be >= 1");
    RandomStream rng(seed);
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) {
        double a = rng.gaussian();
        double c = rng.gaussian();
        double b = rng.gaussian() / std::numbers::sqrt2;
        out[static_cast<std::size_t>(t)] =
            std::sqrt((a - c) * (a - c) + 4.0 * b * b);
    }
    return out;
}

double ParentDistribution::pdf(double x) const {
    switch (kind) {
        case Uniform:
            return (x >= a && x <= b) ? 1.0 / (b - a) : 0.0;
        case Gaussian: {
            double z = (x - a) / b;
            return std::exp(-0.5 * z * z) /
                   (b * std::sqrt(2.0 * std::numbers::pi));
        }
        case Exponential:
            return x >= 0.0 ? a * std::exp(-a * x) : 0.0;
    }
    fail("unsupported parent spec");
}

double ParentDistribution::cdf(double x) const {
    switch (kind) {
        case Uniform:
            if (x <= a) return 0.0;
            if (x >= b) return 1.0;
            return (x - a) / (b - a);
        case Gaussian:
            return 0.5 * (1.0 + std::erf((x - a) / (b * std::numbers::sqrt2)));
        case Exponential:
            return x <= 0.0 ? 0.0 : 1.0 - std::exp(-a * x);
    }
    fail("unsupported parent spec");
}

double ParentDistribution::sample(RandomStream& rng) const {
    switch (kind) {
        case Uniform:
            return rng.uniform(a, b);
        case Gaussian:
            return a + b * rng.gaussian();
        case Exponential:
            return rng.exponential(a);
    }
    fail("unsupported parent spec");
}

std::vector<double> iid_gap_samples(int n, int count,
                                    const ParentDistribution& parent,
                                    RngSeed seed) {
    require(n >= 2, "need n >= 2");
    require(count >= 1, "count must be >= 1");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count) *
                static_cast<std::size_t>(n - 1));
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int t = 0; t < count; ++t) {
        RandomStream rng(seed, static_cast<std::uint64_t>(t));
        for (double& v : x) v = parent.sample(rng);
        std::sort(x.begin(), x.end());
        for (int i = 0; i + 1 < n; ++i) {
            double s = x[static_cast<std::size_t>(i + 1)] -
                       x[static_cast<std::size_t>(i)];
            out.push_back(s * n * parent.pdf(x[static_cast<std::size_t>(i)]));
        }
    }
    return out;
}

double iid_gap_density(int n, double s, const ParentDistribution& parent) {
    require(n >= 2, "need n >= 2");
    require(s >= 0.0, "gap must be >= 0");
    // p_n(s) = n int dx p(x+s) [1 + F(x) - F(x+s)]^{n-2} p(x)
    double lo = 0.0, hi = 0.0;
    switch (parent.kind) {
        case ParentDistribution::Uniform:
            lo = parent.a;
            hi = parent.b;
            break;
        case ParentDistribution::Gaussian:
            lo = parent.a - 10.0 * parent.b;
            hi = parent.a + 10.0 * parent.b;
            break;
        case ParentDistribution::Exponential:
            lo = 0.0;
            hi = 50.0 / parent.a;
            break;
    }
    auto f = [&](double x) {
        double core = 1.0 + parent.cdf(x) - parent.cdf(x + s);
        return n * parent.pdf(x + s) *
               std::pow(core, static_cast<double>(n - 2)) * parent.pdf(x);
    };
    return adaptive_simpson(f, lo, hi, 1e-10);
}

}  // namespace rmt
