#include "rmt/resolvent.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "rmt/common.hpp"
#include "rmt/quadrature.hpp"

namespace rmt {

namespace {
const double kPi = std::numbers::pi;
}

Complex sqrt_pq(Complex z) {
    const double a = z.real(), b = z.imag();
    if (b == 0.0) {
        if (a >= 0.0) return {std::sqrt(a), 0.0};
        return {0.0, std::sqrt(-a)};
    }
    const double r = std::hypot(a, b);
    const double p = std::sqrt(0.5 * (r + a));
    const double q = std::copysign(std::sqrt(0.5 * (r - a)), b);
    return {p, q};
}

Complex stieltjes_of_density(const GridFunction& density, Complex z) {
    if (z.imag() == 0.0) {
        const auto& xs = density.xs();
        double res = xs[1] - xs[0];
        for (std::size_t i = 1; i < xs.size(); ++i)
            res = std::min(res, xs[i] - xs[i - 1]);
        require(z.real() < density.x_min() - res ||
                    z.real() > density.x_max() + res,
                "z on the support needs a nonzero imaginary part");
    }
    return pl_cauchy_transform(density.xs(), density.ys(), z);
}

double density_from_resolvent(const ComplexFn& resolvent, double x,
                              const std::vector<double>& eps_schedule) {
    const std::size_t m = eps_schedule.size();
    require(m >= 2, "schedule needs at least two epsilons");
    for (std::size_t i = 1; i < m; ++i)
        require(eps_schedule[i] < eps_schedule[i - 1] && eps_schedule[i] > 0.0,
                "schedule must decrease and stay positive");
    std::vector<double> f(m);
    for (std::size_t i = 0; i < m; ++i)
        f[i] = resolvent(Complex(x, -eps_schedule[i])).imag() / kPi;

    auto neville_at_zero = [&](std::size_t first) {
        std::vector<double> p(f.begin() + static_cast<std::ptrdiff_t>(first),
                              f.end());
        std::vector<double> e(eps_schedule.begin() +
                                  static_cast<std::ptrdiff_t>(first),
                              eps_schedule.end());
        for (std::size_t level = 1; level < p.size(); ++level)
            for (std::size_t i = p.size() - 1; i >= level; --i)
                p[i] = p[i] + e[i] * (p[i] - p[i - 1]) / (e[i - level] - e[i]);
        return p.back();
    };
    double full = neville_at_zero(0);
    double reduced = neville_at_zero(1);
    double scale = std::max({1.0, std::abs(full), std::abs(f.back())});
    if (std::abs(full - reduced) > 2e-2 * scale) {
        std::ostringstream os;
        os << "resolvent limit did not converge at x = " << x << ":";
        for (std::size_t i = 0; i < m; ++i)
            os << " f(" << eps_schedule[i] << ") = " << f[i];
        fail(os.str());
    }
    return full;
}

namespace {

// candidate pair selection shared by the explicit resolvents: Herglotz sign
// for complex z, smaller modulus on the real axis (the spurious root blows up
// like 1/(z G))
Complex select_root(Complex r1, Complex r2, Complex z) {
    if (z.imag() != 0.0) {
        const double want = -z.imag();  // sign of Im G
        const bool ok1 = r1.imag() * want > 0.0;
        const bool ok2 = r2.imag() * want > 0.0;
        if (ok1 != ok2) return ok1 ? r1 : r2;
    }
    return std::abs(r1) <= std::abs(r2) ? r1 : r2;
}

}  // namespace

Complex gaussian_resolvent(Complex z) {
    if (z.imag() == 0.0)
        require(std::abs(z.real()) >= std::numbers::sqrt2,
                "real z inside the support needs a nonzero imaginary part");
    Complex s = sqrt_pq(z * z - 2.0);
    // avoid cancellation: form the larger root first, recover the other from
    // the product G1 G2 = 2
    Complex big = (std::real(std::conj(z) * s) >= 0.0) ? z + s : z - s;
    Complex small = 2.0 / big;
    return select_root(big, small, z);
}

Complex wishart_resolvent(Complex z, double c) {
    require(c > 0.0 && c <= 1.0, "c must be in (0,1]");
    const double gamma = 1.0 / c - 1.0;
    if (z.imag() == 0.0) {
        double lo = 0.0, hi = 0.0;
        lo = (1.0 - 1.0 / std::sqrt(c)) * (1.0 - 1.0 / std::sqrt(c));
        hi = (1.0 + 1.0 / std::sqrt(c)) * (1.0 + 1.0 / std::sqrt(c));
        require(z.real() <= lo || z.real() >= hi,
                "real z inside the support needs a nonzero imaginary part");
        require(z.real() != 0.0, "z = 0 is a pole of the equation");
    }
    // z G^2 - (z - gamma) G + 1 = 0
    Complex b = z - gamma;
    Complex s = sqrt_pq(b * b - 4.0 * z);
    Complex num = (std::real(std::conj(b) * s) >= 0.0) ? b + s : b - s;
    Complex r1 = num / (2.0 * z);
    Complex r2 = 1.0 / (z * r1);
    return select_root(r1, r2, z);
}

Complex blue(const ComplexFn& resolvent, Complex z, double first_moment) {
    require(std::abs(z) > 0.0, "blue function undefined at z = 0");
    Complex b = 1.0 / z + first_moment;
    std::ostringstream trace;
    double residual = std::abs(resolvent(b) - z);
    for (int iter = 0; iter < 60; ++iter) {
        if (residual < 1e-13 * std::max(1.0, std::abs(z))) return b;
        const double h = 1e-6 * std::max(1.0, std::abs(b));
        Complex der = (resolvent(b + h) - resolvent(b - h)) / (2.0 * h);
        require(std::abs(der) > 0.0, "flat resolvent in inversion");
        Complex step = (resolvent(b) - z) / der;
        double damp = 1.0;
        for (int k = 0; k < 30; ++k) {
            Complex cand = b - damp * step;
            double r = std::abs(resolvent(cand) - z);
            if (r < residual) {
                b = cand;
                residual = r;
                break;
            }
            damp *= 0.5;
        }
        trace << " iter " << iter << ": |F| = " << residual;
    }
    fail("blue-function inversion diverged:" + trace.str());
}

Complex r_transform(const ComplexFn& resolvent, Complex z,
                    double first_moment) {
    return blue(resolvent, z, first_moment) - 1.0 / z;
}

namespace {

std::array<Complex, 3> cubic_roots(Complex a3, Complex a2, Complex a1,
                                   Complex a0) {
    // monic reduction and Cardano with explicit branch bookkeeping
    Complex A = a2 / a3, B = a1 / a3, C = a0 / a3;
    Complex P = B - A * A / 3.0;
    Complex Q = 2.0 * A * A * A / 27.0 - A * B / 3.0 + C;
    Complex D = Q * Q / 4.0 + P * P * P / 27.0;
    Complex sd = std::sqrt(D);
    Complex u3 = -Q / 2.0 + sd;
    if (std::abs(u3) < 1e-300) u3 = -Q / 2.0 - sd;
    Complex u = std::pow(u3, 1.0 / 3.0);
    Complex v = (std::abs(u) > 0.0) ? -P / (3.0 * u) : Complex(0.0);
    const Complex w(-0.5, 0.5 * std::sqrt(3.0));
    const Complex wb = std::conj(w);
    std::array<Complex, 3> roots{u + v, w * u + wb * v, wb * u + w * v};
    for (auto& r : roots) r -= A / 3.0;
    return roots;
}

}  // namespace

Complex free_add_goe_wishart(double p, double c, Complex z) {
    require(p >= 0.0 && p <= 1.0, "p must be in [0,1]");
    require(c > 0.0 && c < 1.0, "c must be in (0,1)");
    if (p == 1.0) return gaussian_resolvent(z);
    if (p == 0.0) return wishart_resolvent(z, c);
    require(z.imag() != 0.0, "free addition needs Im z != 0");
    const double gamma = 1.0 / c - 1.0;
    // R_S(w) = p^2 w / 2 + (1-p)(gamma+1)/(1 - (1-p) w), and B_S(G) = z turns
    // into the cubic below
    const double q = 1.0 - p;
    Complex a3 = p * p * q;
    Complex a2 = -(p * p + 2.0 * z * q);
    Complex a1 = 2.0 * (z - q * gamma);
    Complex a0 = -2.0;
    auto roots = cubic_roots(a3, a2, a1, a0);

    const double want = -z.imag();  // Herglotz sign for Im G
    const double threshold = 10.0 * std::abs(z.imag()) + 1e-12;
    int found = -1;
    int strong = 0;
    for (int k = 0; k < 3; ++k) {
        if (roots[static_cast<std::size_t>(k)].imag() * want > threshold)
            ++strong;
    }
    require(strong <= 1, "two cubic roots share the physical half plane");
    double best = -1e300;
    for (int k = 0; k < 3; ++k) {
        double s = roots[static_cast<std::size_t>(k)].imag() * want;
        if (s > best) {
            best = s;
            found = k;
        }
    }
    return roots[static_cast<std::size_t>(found)];
}

double free_add_density(double p, double c, double x) {
    if (p == 1.0) {
        return std::abs(x) >= std::numbers::sqrt2
                   ? 0.0
                   : std::sqrt(2.0 - x * x) / kPi;
    }
    auto g = [&](Complex z) { return free_add_goe_wishart(p, c, z); };
    double rho = density_from_resolvent(g, x);
    return rho > 0.0 ? rho : 0.0;
}

double avg_ipr_from_resolvent(double x, double eps,
                              const ComplexFn& resolvent) {
    require(eps > 0.0, "eps must be positive");
    double rho = density_from_resolvent(resolvent, x);
    require(rho > 1e-10, "density vanishes");
    Complex g = resolvent(Complex(x, -eps));
    return eps * std::norm(g) / (kPi * rho);
}

double fresnel_identity_check(int n, double x, double eps) {
    require(n == 1 || n == 2, "check covers n in {1,2}");
    require(eps > 0.0, "eps must be positive");
    const double lambda[2] = {0.3, -0.6};
    const Complex i(0.0, 1.0);
    const Complex xe(x, -eps);

    // lhs: the damped oscillatory integral, one factor per dimension
    Complex lhs(1.0, 0.0);
    for (int j = 0; j < n; ++j) {
        Complex a = 0.5 * i * (xe - lambda[j]);  // integrand exp(-a y^2)
        const double L = std::sqrt(80.0 / eps);
        const int m = 200000;  // composite Simpson, even count
        const double h = L / m;
        Complex sum = 1.0 + std::exp(-a * L * L);
        for (int k = 1; k < m; ++k) {
            double y = k * h;
            sum += std::exp(-a * y * y) * ((k % 2 == 1) ? 4.0 : 2.0);
        }
        lhs *= 2.0 * (sum * h / 3.0);  // even integrand, doubled half line
    }

    Complex log_sum(0.0, 0.0);
    for (int j = 0; j < n; ++j)
        log_sum += std::log(Complex(lambda[j], eps) - x);
    Complex rhs = std::pow(2.0 * kPi, 0.5 * n) *
                  std::exp(-0.5 * log_sum + i * (n * kPi / 4.0));
    return std::abs(lhs - rhs) / std::abs(rhs);
}

}  // namespace rmt
