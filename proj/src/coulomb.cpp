#include "rmt/coulomb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rmt/common.hpp"
#include "rmt/quadrature.hpp"

namespace rmt {

namespace {
const double kPi = std::numbers::pi;
}

PotentialSpec PotentialSpec::gaussian() {
    PotentialSpec p;
    p.name = "gaussian";
    p.v = [](double x) { return 0.5 * x * x; };
    p.vprime = [](double x) { return x; };
    p.positive_axis = false;
    return p;
}

PotentialSpec PotentialSpec::wishart(double c) {
    require(c > 0.0 && c <= 1.0, "c must be in (0,1]");
    PotentialSpec p;
    p.name = "wishart";
    const double gamma = 1.0 / c - 1.0;
    p.v = [gamma](double x) { return 0.5 * x - 0.5 * gamma * std::log(x); };
    p.vprime = [gamma](double x) { return 0.5 - 0.5 * gamma / x; };
    p.positive_axis = true;
    return p;
}

double PotentialSpec::derivative_residual(int points) const {
    const double lo = positive_axis ? 0.2 : -5.0;
    const double hi = positive_axis ? 6.0 : 5.0;
    const double h = 1e-5;
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        double x = lo + (hi - lo) * (i + 0.5) / points;
        double fd = (v(x + h) - v(x - h)) / (2.0 * h);
        double denom = std::max(1.0, std::abs(vprime(x)));
        worst = std::max(worst, std::abs(fd - vprime(x)) / denom);
    }
    return worst;
}

double gas_energy(const PotentialSpec& potential, const GasState& state) {
    const std::size_t n = state.positions.size();
    require(n >= 1, "empty gas");
    std::vector<double> sorted = state.positions;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < n; ++i)
        require(sorted[i] - sorted[i - 1] > 1e-12, "log singularity");
    double single = 0.0;
    for (double x : state.positions) single += potential.v(x);
    double pair = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            pair += std::log(std::abs(state.positions[i] - state.positions[j]));
    const double dn = static_cast<double>(n);
    return single / dn - pair / (dn * dn);
}

MetropolisResult metropolis_run(const PotentialSpec& potential, int n,
                                double beta, long steps, RngSeed seed,
                                MetropolisOptions opts) {
    require(n >= 2, "need at least two particles");
    require(steps >= 1, "steps must be >= 1");
    RandomStream rng(seed);
    GasState state;
    state.beta = static_cast<int>(beta);
    state.step_width = potential.positive_axis ? 0.3 : 0.2;
    state.positions.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double t = (i + 0.5) / n;
        state.positions[static_cast<std::size_t>(i)] =
            potential.positive_axis ? 0.05 + 4.0 * t : -1.2 + 2.4 * t;
    }

    const long burn_in = static_cast<long>(opts.burn_in_fraction * steps);
    const int stride = opts.record_stride > 0 ? opts.record_stride : n;
    const int tune_batch = std::max(100, n);
    long batch_accepted = 0, batch_proposed = 0;

    MetropolisResult result;
    auto delta_energy = [&](int i, double xold, double xnew) {
        double d = beta * n * (potential.v(xnew) - potential.v(xold));
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            double xj = state.positions[static_cast<std::size_t>(j)];
            d -= beta * (std::log(std::abs(xnew - xj)) -
                         std::log(std::abs(xold - xj)));
        }
        return d;
    };

    for (long step = 0; step < steps; ++step) {
        const int i = static_cast<int>(rng.bits() % static_cast<std::uint64_t>(n));
        const double xold = state.positions[static_cast<std::size_t>(i)];
        const double xnew = xold + state.step_width * rng.gaussian();
        bool accept = false;
        if (!(potential.positive_axis && xnew <= 0.0)) {
            double d = delta_energy(i, xold, xnew);
            if (std::isnan(d)) fail("divergent gas energy at step " +
                                    std::to_string(step));
            accept = d <= 0.0 || rng.uniform() < std::exp(-d);
        }
        if (accept) state.positions[static_cast<std::size_t>(i)] = xnew;

        if (step < burn_in) {
            batch_proposed += 1;
            batch_accepted += accept ? 1 : 0;
            if (batch_proposed == tune_batch) {
                double rate = static_cast<double>(batch_accepted) / tune_batch;
                state.step_width *= rate > opts.target_acceptance ? 1.15 : 1.0 / 1.15;
                batch_accepted = batch_proposed = 0;
            }
        } else {
            state.proposed += 1;
            state.accepted += accept ? 1 : 0;
            if ((step - burn_in) % stride == 0)
                result.recorded.insert(result.recorded.end(),
                                       state.positions.begin(),
                                       state.positions.end());
        }
    }
    result.state = std::move(state);
    return result;
}

double functional_F0(const GridFunction& density) {
    require(density.is_density(), "non-normalized density");
    const auto& xs = density.xs();
    const auto& ys = density.ys();
    const std::size_t m = xs.size();
    std::vector<double> integrand(m);
    for (std::size_t i = 0; i < m; ++i) {
        double u = pl_log_transform(xs, ys, xs[i]);
        integrand[i] = ys[i] * (0.5 * xs[i] * xs[i] - 0.5 * u);
    }
    return trapezoid_integral(GridFunction(xs, std::move(integrand)));
}

double functional_F1(const GridFunction& density) {
    require(density.is_density(), "non-normalized density");
    const auto& xs = density.xs();
    const auto& ys = density.ys();
    std::vector<double> integrand(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        integrand[i] = ys[i] > 0.0 ? ys[i] * std::log(ys[i]) : 0.0;
    return trapezoid_integral(GridFunction(xs, std::move(integrand)));
}

// ---------------------------------------------------------------------------
// Tricomi machinery
// ---------------------------------------------------------------------------

namespace {

// Chebyshev-U coefficients of g on [a,b]:
// g(m + h cos t) = sum_k c_k U_k(cos t), c_k by the interior sine rule.
std::vector<double> chebyshev_u_coefficients(
    const std::function<double(double)>& gfun, double a, double b, int modes,
    int quad_points) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::vector<double> gv(static_cast<std::size_t>(quad_points));
    for (int j = 1; j <= quad_points; ++j)
        gv[static_cast<std::size_t>(j - 1)] =
            gfun(mid + half * std::cos(kPi * j / (quad_points + 1)));
    std::vector<double> c(static_cast<std::size_t>(modes));
    for (int k = 0; k < modes; ++k) {
        double s = 0.0;
        for (int j = 1; j <= quad_points; ++j) {
            double theta = kPi * j / (quad_points + 1);
            s += gv[static_cast<std::size_t>(j - 1)] *
                 std::sin((k + 1) * theta) * std::sin(theta);
        }
        c[static_cast<std::size_t>(k)] = 2.0 * s / (quad_points + 1);
    }
    return c;
}

double chebyshev_t_sum(const std::vector<double>& c, double xhat) {
    // sum_k c_k T_{k+1}(xhat) by the forward recurrence
    double sum = 0.0;
    double tm = 1.0, t = xhat;
    for (std::size_t k = 0; k < c.size(); ++k) {
        sum += c[k] * t;
        double next = 2.0 * xhat * t - tm;
        tm = t;
        t = next;
    }
    return sum;
}

}  // namespace

GridFunction tricomi_solve(const std::function<double(double)>& gfun, double a,
                           double b, double norm, int modes, int grid_points) {
    require(a < b, "need a < b");
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::vector<double> c =
        chebyshev_u_coefficients(gfun, a, b, modes, std::max(4 * modes, 256));

    std::vector<double> xs(static_cast<std::size_t>(grid_points));
    std::vector<double> ys(static_cast<std::size_t>(grid_points));
    for (int i = 0; i < grid_points; ++i) {
        // interior first-kind points, ascending
        double theta = kPi * (2.0 * (grid_points - i) - 1.0) / (2.0 * grid_points);
        double xhat = std::cos(theta);
        double x = mid + half * xhat;
        double bracket = norm - half * chebyshev_t_sum(c, xhat);
        xs[static_cast<std::size_t>(i)] = x;
        ys[static_cast<std::size_t>(i)] =
            bracket / (kPi * half * std::sin(theta));
    }
    double scale = 0.0;
    for (double y : ys) scale = std::max(scale, std::abs(y));
    for (double y : ys)
        require(y >= -1e-6 * std::max(1.0, scale), "unphysical solution");
    return GridFunction(std::move(xs), std::move(ys));
}

double tricomi_residual(const GridFunction& f,
                        const std::function<double(double)>& gfun, double a,
                        double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const int m = 8000;
    // precompute f(t) h sin(theta) on a theta grid; this product stays smooth
    std::vector<double> theta(static_cast<std::size_t>(m + 1));
    std::vector<double> t(static_cast<std::size_t>(m + 1));
    std::vector<double> fs(static_cast<std::size_t>(m + 1));
    for (int j = 0; j <= m; ++j) {
        theta[static_cast<std::size_t>(j)] = kPi * j / m;
        t[static_cast<std::size_t>(j)] =
            mid + half * std::cos(theta[static_cast<std::size_t>(j)]);
        fs[static_cast<std::size_t>(j)] =
            f(t[static_cast<std::size_t>(j)]) * half *
            std::sin(theta[static_cast<std::size_t>(j)]);
    }
    double worst = 0.0;
    for (int q = 1; q <= 16; ++q) {
        double x = mid + half * std::cos(kPi * (2.0 * q - 1.0) / 34.0);
        double fx = f(x);
        // Pr int f(t)/(x-t) dt = int [f(t) - f(x)]/(x-t) dt
        //                        + f(x) log((x-a)/(b-x))
        double sum = 0.0;
        for (int j = 0; j <= m; ++j) {
            double dx = x - t[static_cast<std::size_t>(j)];
            if (std::abs(dx) < 1e-9 * half) continue;
            double val = (fs[static_cast<std::size_t>(j)] -
                          fx * half * std::sin(theta[static_cast<std::size_t>(j)])) /
                         dx;
            sum += (j == 0 || j == m) ? 0.5 * val : val;
        }
        sum *= kPi / m;
        sum += fx * std::log((x - a) / (b - x));
        worst = std::max(worst, std::abs(sum - gfun(x)));
    }
    return worst;
}

double gaussian_equilibrium_density(double a, double b, double x) {
    require(a < b, "need a < b");
    require(x > a && x < b, "x outside (a,b)");
    double bracket = 1.0 - x * x + 0.5 * (a + b) * x + 0.125 * (b - a) * (b - a);
    return bracket / (kPi * std::sqrt((x - a) * (b - x)));
}

double free_energy_ab(double a, double b) {
    require(a < b, "need a < b");
    double a2 = a * a, b2 = b * b;
    return (-9.0 * a2 * a2 + 4.0 * a2 * a * b + 2.0 * a2 * (5.0 * b2 + 48.0) +
            4.0 * a * b * (b2 + 16.0) - 256.0 * std::log(b - a) -
            9.0 * b2 * b2 + 96.0 * b2 + 512.0 * std::numbers::ln2) /
           512.0;
}

double free_energy_ab_quadrature(double a, double b) {
    require(a < b, "need a < b");
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    // f = 1/4 int n* x^2 + a^2/4 - 1/2 int n* log(x - a), with
    // n*(x) dx = bracket(theta)/pi dtheta on the theta parametrization
    auto bracket = [&](double theta) {
        double x = mid + half * std::cos(theta);
        return 1.0 - x * x + 0.5 * (a + b) * x + 0.125 * (b - a) * (b - a);
    };
    auto integrand = [&](double theta) {
        double x = mid + half * std::cos(theta);
        double w = 0.25 * x * x - 0.5 * std::log(x - a);
        return bracket(theta) / kPi * w;
    };
    double integral = adaptive_simpson(integrand, 0.0, kPi - 1e-8, 1e-10, 48);
    return integral + 0.25 * a * a;
}

std::pair<double, double> optimize_edges() {
    double best_a = 0.0, best_b = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (double a = -3.0; a <= -0.4; a += 0.2)
        for (double b = 0.4; b <= 3.0; b += 0.2) {
            double f = free_energy_ab(a, b);
            if (f < best) {
                best = f;
                best_a = a;
                best_b = b;
            }
        }
    double step = 0.1;
    long budget = 100000;
    while (step > 1e-7) {
        bool moved = false;
        const double da[4] = {step, -step, 0.0, 0.0};
        const double db[4] = {0.0, 0.0, step, -step};
        for (int k = 0; k < 4; ++k) {
            double na = best_a + da[k], nb = best_b + db[k];
            if (na >= nb) continue;
            double f = free_energy_ab(na, nb);
            if (f < best) {
                best = f;
                best_a = na;
                best_b = nb;
                moved = true;
            }
            if (--budget <= 0)
                fail("edge optimizer exceeded its budget at step " +
                     std::to_string(step));
        }
        if (!moved) step *= 0.5;
    }
    return {best_a, best_b};
}

std::pair<double, double> solve_soft_edge_support(
    const std::function<double(double)>& gfun, double a0, double b0,
    double norm) {
    require(a0 < b0, "need a < b");
    const int m = 2000;
    auto conditions = [&](double a, double b, double& h1, double& h2) {
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        h1 = 0.0;
        h2 = 0.0;
        for (int j = 0; j <= m; ++j) {
            double theta = kPi * j / m;
            double t = mid + half * std::cos(theta);
            double g = gfun(t);
            double w = (j == 0 || j == m) ? 0.5 : 1.0;
            h1 += w * g;
            h2 += w * t * g;
        }
        h1 *= kPi / m;
        h2 *= kPi / m;
        h2 -= kPi * norm;
    };
    double a = a0, b = b0;
    for (int iter = 0; iter < 80; ++iter) {
        double h1 = 0.0, h2 = 0.0;
        conditions(a, b, h1, h2);
        if (std::abs(h1) < 1e-12 && std::abs(h2) < 1e-12) break;
        const double eps = 1e-7 * std::max(1.0, b - a);
        double h1a, h2a, h1b, h2b;
        conditions(a + eps, b, h1a, h2a);
        conditions(a, b + eps, h1b, h2b);
        double j11 = (h1a - h1) / eps, j12 = (h1b - h1) / eps;
        double j21 = (h2a - h2) / eps, j22 = (h2b - h2) / eps;
        double det = j11 * j22 - j12 * j21;
        require(std::abs(det) > 1e-14, "singular Jacobian in support solve");
        double da = (-h1 * j22 + h2 * j12) / det;
        double db = (-h2 * j11 + h1 * j21) / det;
        // damp steps that would cross a <= 0 for positive-axis potentials
        double na = a + da, nb = b + db;
        double damp = 1.0;
        while ((a0 > 0.0 && na <= 1e-8) || na >= nb) {
            damp *= 0.5;
            na = a + damp * da;
            nb = b + damp * db;
            require(damp > 1e-8, "support solve failed to stay admissible");
        }
        a = na;
        b = nb;
    }
    return {a, b};
}

double partition_gaussian_log(int n, int beta) {
    require(n >= 1, "n must be >= 1");
    require(beta == 1 || beta == 2 || beta == 4, "beta must be 1, 2 or 4");
    double s = 0.5 * n * std::log(2.0 * kPi);
    for (int j = 1; j <= n; ++j)
        s += std::lgamma(1.0 + 0.5 * j * beta) - std::lgamma(1.0 + 0.5 * beta);
    return s;
}

double partition_barnes_residual(int n) {
    double direct = partition_gaussian_log(n, 2);
    // G(z+1) = Gamma(z) G(z), G(1) = 1, so log G(N+2) = sum_{z=1}^{N+1} lgamma(z)
    double log_g = 0.0;
    for (int z = 1; z <= n + 1; ++z) log_g += std::lgamma(static_cast<double>(z));
    double barnes = 0.5 * n * std::log(2.0 * kPi) + log_g;
    return std::abs(direct - barnes) / std::abs(direct);
}

double partition_cn_log_exact(int n, int beta) {
    double exponent = n + 0.5 * beta * n * (n - 1.0);
    return exponent * 0.5 * std::log(static_cast<double>(beta) * n);
}

double partition_cn_log_asymptotic(int n, int beta) {
    double b = beta, dn = n;
    return 0.25 * b * dn * dn * std::log(dn) +
           0.25 * b * std::log(b) * dn * dn +
           0.5 * (1.0 - 0.5 * b) * dn * std::log(dn) +
           0.5 * (1.0 - 0.5 * b) * std::log(b) * dn;
}

}  // namespace rmt
