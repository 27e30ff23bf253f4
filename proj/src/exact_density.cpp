#include "rmt/exact_density.hpp"

#include <cmath>
#include <numbers>

#include "rmt/common.hpp"
#include "rmt/quadrature.hpp"

namespace rmt {

namespace {
const double kPi = std::numbers::pi;
const double kPiQuarterRoot = std::pow(kPi, 0.25);
}  // namespace

double hermite_orthonormal(int n, double x) {
    require(n >= 0, "order must be >= 0");
    double pm = std::pow(2.0 * kPi, -0.25);
    if (n == 0) return pm;
    double p = x * pm;  // pi_1 = x pi_0 / sqrt(1)
    for (int j = 1; j < n; ++j) {
        double next = (x * p - std::sqrt(static_cast<double>(j)) * pm) /
                      std::sqrt(j + 1.0);
        pm = p;
        p = next;
    }
    return p;
}

// ---------------------------------------------------------------------------
// PolyFamily
// ---------------------------------------------------------------------------

PolyFamily::PolyFamily(PolyKind kind, double alpha) : kind_(kind), alpha_(alpha) {
    if (kind_ == PolyKind::LaguerreAssociated)
        require(alpha_ > -1.0, "laguerre alpha must be > -1");
}

double PolyFamily::eval(int n, double x) const {
    require(n >= 0, "order must be >= 0");
    switch (kind_) {
        case PolyKind::HermitePhysicists:
            return hermite(n, x);
        case PolyKind::HermiteOrthonormal:
            return hermite_orthonormal(n, x);
        case PolyKind::LaguerreAssociated: {
            double lm = 1.0;
            if (n == 0) return lm;
            double l = 1.0 + alpha_ - x;
            for (int k = 1; k < n; ++k) {
                double next =
                    ((2.0 * k + 1.0 + alpha_ - x) * l - (k + alpha_) * lm) /
                    (k + 1.0);
                lm = l;
                l = next;
            }
            return l;
        }
    }
    fail("unknown polynomial kind");
}

double PolyFamily::weight(double x) const {
    switch (kind_) {
        case PolyKind::HermitePhysicists:
            return std::exp(-x * x);
        case PolyKind::HermiteOrthonormal:
            return std::exp(-0.5 * x * x);
        case PolyKind::LaguerreAssociated:
            return x <= 0.0 ? 0.0 : std::pow(x, alpha_) * std::exp(-x);
    }
    fail("unknown polynomial kind");
}

double PolyFamily::leading_coefficient(int n) const {
    switch (kind_) {
        case PolyKind::HermitePhysicists:
            return std::pow(2.0, n);
        case PolyKind::HermiteOrthonormal:
            // 2^{n/2} from the argument scaling cancels the 2^{n/2} in the
            // normalization, leaving 1/sqrt(sqrt(2 pi) n!)
            return std::exp(-0.25 * std::log(2.0 * kPi) -
                            0.5 * std::lgamma(n + 1.0));
        case PolyKind::LaguerreAssociated:
            return (n % 2 == 0 ? 1.0 : -1.0) / std::exp(std::lgamma(n + 1.0));
    }
    fail("unknown polynomial kind");
}

double PolyFamily::norm(int n) const {
    switch (kind_) {
        case PolyKind::HermitePhysicists:
            return std::exp(0.5 * (0.5 * std::log(kPi) +
                                   n * std::numbers::ln2 + std::lgamma(n + 1.0)));
        case PolyKind::HermiteOrthonormal:
            return 1.0;
        case PolyKind::LaguerreAssociated:
            return std::exp(0.5 * (std::lgamma(n + 1.0 + alpha_) -
                                   std::lgamma(n + 1.0)));
    }
    fail("unknown polynomial kind");
}

double PolyFamily::orthonormality_residual(int max_index) const {
    double worst = 0.0;
    if (kind_ == PolyKind::LaguerreAssociated) {
        GaussRule rule = gauss_laguerre(4 * (max_index + 1), alpha_);
        for (int i = 0; i <= max_index; ++i)
            for (int j = i; j <= max_index; ++j) {
                double s = 0.0;
                for (std::size_t q = 0; q < rule.nodes.size(); ++q)
                    s += rule.weights[q] * eval(i, rule.nodes[q]) *
                         eval(j, rule.nodes[q]);
                s /= norm(i) * norm(j);
                worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
            }
        return worst;
    }
    GaussRule rule = gauss_hermite(4 * (max_index + 1));
    for (int i = 0; i <= max_index; ++i)
        for (int j = i; j <= max_index; ++j) {
            double s = 0.0;
            if (kind_ == PolyKind::HermitePhysicists) {
                for (std::size_t q = 0; q < rule.nodes.size(); ++q)
                    s += rule.weights[q] * eval(i, rule.nodes[q]) *
                         eval(j, rule.nodes[q]);
            } else {
                s = integrate_gaussian_weight(rule, [&](double x) {
                    return eval(i, x) * eval(j, x);
                });
            }
            s /= norm(i) * norm(j);
            worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
        }
    return worst;
}

// ---------------------------------------------------------------------------
// SkewFamily
// ---------------------------------------------------------------------------

SkewFamily::SkewFamily(SkewKind kind) : kind_(kind) {}

void SkewFamily::ensure(int k) const {
    while (static_cast<int>(polys_.size()) <= k) {
        int j = static_cast<int>(polys_.size());
        Poly p;
        if (kind_ == SkewKind::GoeR) {
            if (j % 2 == 0) {
                int m = j / 2;
                p = poly_scale(hermite_poly(2 * m),
                               std::numbers::sqrt2 /
                                   (kPiQuarterRoot * std::pow(2.0, m) *
                                    double_factorial(2 * m)));
            } else {
                int m = (j - 1) / 2;
                p = poly_scale(hermite_poly(2 * m + 1), -1.0);
                if (m >= 1) p = poly_add(p, hermite_poly(2 * m - 1), 4.0 * m);
                p = poly_scale(p, std::numbers::sqrt2 /
                                      (kPiQuarterRoot * std::pow(2.0, m + 2) *
                                       double_factorial(2 * m - 1)));
            }
        } else {
            // Q-family: Hermite arguments carry a sqrt(2); q_{2k} builds on
            // the previous even bracket, q_{2k} = H_{2k}(x sqrt2) + 4k q_{2k-2}.
            auto scaled_arg = [](const Poly& h) {
                Poly r = h;
                double f = 1.0;
                for (std::size_t i = 0; i < r.c.size(); ++i) {
                    r.c[i] *= f;
                    f *= std::numbers::sqrt2;
                }
                return r;
            };
            if (j % 2 == 0) {
                int m = j / 2;
                Poly q = scaled_arg(hermite_poly(0));
                for (int t = 1; t <= m; ++t)
                    q = poly_add(scaled_arg(hermite_poly(2 * t)), q, 4.0 * t);
                p = poly_scale(q, std::numbers::sqrt2 /
                                      (kPiQuarterRoot * std::pow(2.0, m) *
                                       double_factorial(2 * m)));
            } else {
                int m = (j - 1) / 2;
                p = poly_scale(scaled_arg(hermite_poly(2 * m + 1)),
                               std::numbers::sqrt2 /
                                   (kPiQuarterRoot * std::pow(2.0, m + 1) *
                                    double_factorial(2 * m + 1)));
            }
        }
        polys_.push_back(std::move(p));
    }
}

const Poly& SkewFamily::poly(int k) const {
    require(k >= 0, "index must be >= 0");
    ensure(k);
    return polys_[static_cast<std::size_t>(k)];
}

double SkewFamily::eval(int k, double x) const { return poly(k).eval(x); }

double SkewFamily::eval_derivative(int k, double x) const {
    return poly(k).derivative().eval(x);
}

double SkewFamily::weight(double x) const {
    return kind_ == SkewKind::GoeR ? std::exp(-0.5 * x * x)
                                   : std::exp(-2.0 * x * x);
}

double SkewFamily::phi(int k, double x) const {
    require(kind_ == SkewKind::GoeR, "phi is defined for the GOE family");
    const Poly& p = poly(k);
    double lower = 0.0, full = 0.0;
    for (std::size_t m = 0; m < p.c.size(); ++m) {
        lower += p.c[m] * gaussian_lower_moment(static_cast<int>(m), x);
        full += p.c[m] * gaussian_full_moment(static_cast<int>(m));
    }
    return 2.0 * lower - full;
}

double SkewFamily::phi_quadrature(int k, double x) const {
    require(kind_ == SkewKind::GoeR, "phi is defined for the GOE family");
    const Poly& p = poly(k);
    auto f = [&](double y) { return p.eval(y) * std::exp(-0.5 * y * y); };
    const double L = 14.0;
    double left = adaptive_simpson(f, -L, std::min(x, L), 1e-12);
    double right = x >= L ? 0.0 : adaptive_simpson(f, std::max(x, -L), L, 1e-12);
    if (x <= -L) left = 0.0;
    return left - right;
}

double SkewFamily::skew_product(int i, int j) const {
    static thread_local GaussRule rule = gauss_hermite(240);
    if (kind_ == SkewKind::GoeR) {
        // <f,g>_1 = 1/2 int g(x) w(x) Phi_f(x) dx
        return 0.5 * integrate_gaussian_weight(rule, [&](double x) {
                   return eval(j, x) * phi(i, x);
               });
    }
    // <f,g>_4 = 1/2 int (f g' - f' g) exp(-2x^2) dx
    const Poly& f = poly(i);
    const Poly& g = poly(j);
    Poly fd = f.derivative();
    Poly gd = g.derivative();
    double s = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        double x = rule.nodes[q] / std::numbers::sqrt2;
        s += rule.weights[q] *
             (f.eval(x) * gd.eval(x) - fd.eval(x) * g.eval(x));
    }
    return 0.5 * s / std::numbers::sqrt2;
}

double SkewFamily::skew_orthogonality_residual(int max_index) const {
    double worst = 0.0;
    for (int i = 0; i <= max_index; ++i)
        for (int j = 0; j <= max_index; ++j) {
            if (i == j) continue;
            double v = skew_product(i, j);
            if (i % 2 == j % 2) {
                worst = std::max(worst, std::abs(v));
            } else {
                int even = i % 2 == 0 ? i : j;
                int odd = i % 2 == 0 ? j : i;
                double expect = (odd == even + 1) ? 1.0 : 0.0;
                worst = std::max(worst, std::abs(std::abs(v) - expect));
            }
        }
    return worst;
}

// ---------------------------------------------------------------------------
// Densities
// ---------------------------------------------------------------------------

double gue_density_finite(int n, double x) {
    require(n >= 1, "n must be >= 1");
    double sum = 0.0;
    double pm = std::pow(2.0 * kPi, -0.25);
    double p = x * pm;
    sum += pm * pm;
    for (int j = 1; j < n; ++j) {
        sum += p * p;
        double next = (x * p - std::sqrt(static_cast<double>(j)) * pm) /
                      std::sqrt(j + 1.0);
        pm = p;
        p = next;
    }
    return std::exp(-0.5 * x * x) * sum / n;
}

double kernel(int n, double x, double xp) {
    require(n >= 1, "n must be >= 1");
    double sum = 0.0;
    for (int j = 0; j < n; ++j)
        sum += hermite_orthonormal(j, x) * hermite_orthonormal(j, xp);
    return std::exp(-0.25 * (x * x + xp * xp)) * sum;
}

double reproducing_residual(int n, int quad_nodes) {
    GaussRule rule = gauss_hermite(quad_nodes);
    std::vector<double> grid = linspace(-4.0, 4.0, 9);
    double worst = 0.0;
    for (double x : grid)
        for (double xp : grid) {
            double conv = integrate_gaussian_weight(rule, [&](double y) {
                // weight halves of the two kernels recombine into the full
                // Gaussian weight in y
                double px = 0.0;
                double py = 0.0;
                for (int j = 0; j < n; ++j) {
                    px += hermite_orthonormal(j, x) * hermite_orthonormal(j, y);
                    py += hermite_orthonormal(j, y) * hermite_orthonormal(j, xp);
                }
                return px * py;
            });
            conv *= std::exp(-0.25 * (x * x + xp * xp));
            worst = std::max(worst, std::abs(conv - kernel(n, x, xp)));
        }
    return worst;
}

double goe_density_finite(int n, double x) {
    require(n >= 2 && n % 2 == 0, "N even assumed");
    static thread_local SkewFamily fam(SkewKind::GoeR);
    double w = std::exp(-0.5 * x * x);
    double sum = 0.0;
    for (int k = 0; k < n / 2; ++k)
        sum += fam.eval(2 * k, x) * fam.phi(2 * k + 1, x) -
               fam.eval(2 * k + 1, x) * fam.phi(2 * k, x);
    return w * sum / (2.0 * n);
}

double gse_density_q_scale(int n, double x) {
    require(n >= 1, "n must be >= 1");
    static thread_local SkewFamily fam(SkewKind::GseQ);
    double w = std::exp(-2.0 * x * x);
    double sum = 0.0;
    for (int k = 0; k < n; ++k)
        sum += fam.eval(2 * k, x) * fam.eval_derivative(2 * k + 1, x) -
               fam.eval(2 * k + 1, x) * fam.eval_derivative(2 * k, x);
    return w * sum / (2.0 * n);
}

double gse_density_finite(int n, double x) {
    return 0.5 * gse_density_q_scale(n, 0.5 * x);
}

double semicircle(double x) {
    double t = 2.0 - x * x;
    return t <= 0.0 ? 0.0 : std::sqrt(t) / kPi;
}

double semicircle_cdf(double x) {
    if (x <= -std::numbers::sqrt2) return 0.0;
    if (x >= std::numbers::sqrt2) return 1.0;
    return 0.5 + (x * std::sqrt(2.0 - x * x) +
                  2.0 * std::asin(x / std::numbers::sqrt2)) /
                     (2.0 * kPi);
}

void marchenko_pastur_edges(double c, double& lo, double& hi) {
    require(c > 0.0 && c <= 1.0, "c must be in (0,1]");
    double r = 1.0 / std::sqrt(c);
    lo = (1.0 - r) * (1.0 - r);
    hi = (1.0 + r) * (1.0 + r);
}

double marchenko_pastur(double y, double c) {
    double lo = 0.0, hi = 0.0;
    marchenko_pastur_edges(c, lo, hi);
    if (y <= lo || y >= hi) return 0.0;
    return std::sqrt((y - lo) * (hi - y)) / (2.0 * kPi * y);
}

double catalan_moment(int n) {
    require(n >= 0, "n must be >= 0");
    double cat = 1.0;
    for (int k = 1; k <= n; ++k) cat *= 2.0 * (2.0 * k - 1.0) / (k + 1.0);
    return cat / std::pow(2.0, n);
}

double wigner_surmise(double s) {
    require(s >= 0.0, "spacing must be >= 0");
    return 0.5 * s * std::exp(-0.25 * s * s);
}

double wigner_surmise_cdf(double s) {
    require(s >= 0.0, "spacing must be >= 0");
    return 1.0 - std::exp(-0.25 * s * s);
}

double wigner_surmise_rescaled(double s) {
    require(s >= 0.0, "spacing must be >= 0");
    return 0.5 * kPi * s * std::exp(-0.25 * kPi * s * s);
}

double wigner_surmise_rescaled_cdf(double s) {
    require(s >= 0.0, "spacing must be >= 0");
    return 1.0 - std::exp(-0.25 * kPi * s * s);
}

double rescaled_density_cd(int n, double z) {
    require(n >= 2, "n must be >= 2");
    const double arg = z * std::sqrt(static_cast<double>(n));
    Scaled h1 = hermite_scaled(n - 1, arg);
    Scaled h0 = hermite_scaled(n, arg);
    Scaled h2 = hermite_scaled(n - 2, arg);
    Scaled bracket =
        scaled_add(scaled_scale(scaled_mul(h1, h1), static_cast<double>(n)),
                   scaled_scale(scaled_mul(h0, h2), -(n - 1.0)));
    if (bracket.mantissa == 0.0) return 0.0;
    double logpref = std::numbers::ln2 - n * z * z -
                     0.5 * std::log(kPi * n) - n * std::numbers::ln2 -
                     std::lgamma(static_cast<double>(n));
    return bracket.sign() * std::exp(logpref + bracket.log_abs());
}

Scaled hermite_bulk_asymptotic(int n, int m, double X) {
    require(std::abs(X) < 1.0, "bulk formula only");
    require(m == 0 || m == -1 || m == -2, "m must be in {0,-1,-2}");
    double g = std::cos(n * X * std::sqrt(1.0 - X * X) +
                        (n + 0.5) * std::asin(X) - n * kPi / 2.0 -
                        m * std::acos(X));
    double logpref = 0.25 * std::log(2.0 / kPi) +
                     (0.5 * m + 0.5 * n) * std::numbers::ln2 +
                     (0.5 * m - 0.25) * std::log(static_cast<double>(n)) +
                     0.5 * std::lgamma(n + 1.0) + n * X * X -
                     0.25 * std::log(1.0 - X * X);
    long e = static_cast<long>(std::floor(logpref / std::numbers::ln2));
    Scaled s = Scaled::from(g * std::exp(logpref - e * std::numbers::ln2));
    s.exp2 += e;
    return s;
}

double hermite_bulk_relative_error(int n, int m, double X) {
    Scaled approx = hermite_bulk_asymptotic(n, m, X);
    Scaled exact = hermite_scaled(n + m, X * std::sqrt(2.0 * n));
    require(exact.mantissa != 0.0, "exact value vanished at this X");
    double ratio = approx.sign() * exact.sign() *
                   std::exp(approx.log_abs() - exact.log_abs());
    return std::abs(ratio - 1.0);
}

}  // namespace rmt
