#include "rmt/determinants.hpp"

#include <cmath>
#include <numbers>

#include "rmt/common.hpp"
#include "rmt/dd.hpp"
#include "rmt/special.hpp"

namespace rmt {

SkewMatrix::SkewMatrix(Eigen::MatrixXd m) : a(std::move(m)) {
    require(a.rows() == a.cols(), "matrix must be square");
    require(a.rows() % 2 == 0, "odd dimension");
    for (int i = 0; i < a.rows(); ++i) {
        require(a(i, i) == 0.0, "diagonal must be zero");
        for (int j = i + 1; j < a.cols(); ++j)
            require(a(i, j) == -a(j, i), "matrix must be antisymmetric");
    }
}

static double pfaffian_pairing_sum(const Eigen::MatrixXd& a,
                                   const std::vector<int>& idx) {
    if (idx.empty()) return 1.0;
    const int first = idx[0];
    double sum = 0.0;
    for (std::size_t p = 1; p < idx.size(); ++p) {
        const int partner = idx[p];
        std::vector<int> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t q = 1; q < idx.size(); ++q)
            if (q != p) rest.push_back(idx[q]);
        const double sign = (p % 2 == 1) ? 1.0 : -1.0;
        sum += sign * a(first, partner) * pfaffian_pairing_sum(a, rest);
    }
    return sum;
}

static double pfaffian_elimination(Eigen::MatrixXd a) {
    const int n = static_cast<int>(a.rows());
    double pf = 1.0;
    for (int k = 0; k + 1 < n; k += 2) {
        int kp = k + 1;
        for (int i = k + 2; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(kp, k))) kp = i;
        if (kp != k + 1) {
            a.row(kp).swap(a.row(k + 1));
            a.col(kp).swap(a.col(k + 1));
            pf = -pf;
        }
        const double piv = a(k, k + 1);
        if (piv == 0.0) return 0.0;
        pf *= piv;
        for (int j = k + 2; j < n; ++j) {
            const double mu = a(k, j) / piv;
            if (mu == 0.0) continue;
            a.col(j) -= mu * a.col(k + 1);
            a.row(j) -= mu * a.row(k + 1);
        }
    }
    return pf;
}

double pfaffian(const SkewMatrix& A) {
    if (A.dim() == 0) return 1.0;
    if (A.dim() <= 8) {
        std::vector<int> idx(static_cast<std::size_t>(A.dim()));
        for (int i = 0; i < A.dim(); ++i) idx[static_cast<std::size_t>(i)] = i;
        return pfaffian_pairing_sum(A.a, idx);
    }
    return pfaffian_elimination(A.a);
}

double vandermonde(const std::vector<double>& xs) {
    require(!xs.empty(), "need at least one point");
    double prod = 1.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) prod *= xs[j] - xs[i];
    return prod;
}

double vandermonde_poly_form(const std::vector<double>& xs,
                             const PolyFamily& family) {
    const int n = static_cast<int>(xs.size());
    require(n >= 1, "need at least one point");
    Eigen::MatrixXd m(n, n);
    double leading = 1.0;
    for (int i = 0; i < n; ++i) {
        leading *= family.leading_coefficient(i);
        for (int j = 0; j < n; ++j)
            m(i, j) = family.eval(i, xs[static_cast<std::size_t>(j)]);
    }
    return m.determinant() / leading;
}

double andreief(const std::vector<std::function<double(double)>>& fs,
                const std::vector<std::function<double(double)>>& gs,
                const GaussRule& measure, int n) {
    require(static_cast<int>(fs.size()) >= n &&
                static_cast<int>(gs.size()) >= n,
            "need n functions");
    Eigen::MatrixXd gram(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            double s = 0.0;
            for (std::size_t q = 0; q < measure.nodes.size(); ++q)
                s += measure.weights[q] *
                     fs[static_cast<std::size_t>(j)](measure.nodes[q]) *
                     gs[static_cast<std::size_t>(k)](measure.nodes[q]);
            gram(j, k) = s;
        }
    double nfact = std::tgamma(n + 1.0);
    return nfact * gram.determinant();
}

double andreief_bruteforce(const std::vector<std::function<double(double)>>& fs,
                           const std::vector<std::function<double(double)>>& gs,
                           const GaussRule& measure, int n) {
    require(n >= 1 && n <= 3, "brute force covers n <= 3");
    const std::size_t m = measure.nodes.size();
    auto det_at = [&](const std::vector<std::function<double(double)>>& hs,
                      const std::vector<double>& x) {
        Eigen::MatrixXd d(n, n);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                d(j, k) = hs[static_cast<std::size_t>(j)](
                    x[static_cast<std::size_t>(k)]);
        return d.determinant();
    };
    double sum = 0.0;
    std::vector<std::size_t> q(static_cast<std::size_t>(n), 0);
    std::vector<double> x(static_cast<std::size_t>(n));
    while (true) {
        double w = 1.0;
        for (int k = 0; k < n; ++k) {
            w *= measure.weights[q[static_cast<std::size_t>(k)]];
            x[static_cast<std::size_t>(k)] =
                measure.nodes[q[static_cast<std::size_t>(k)]];
        }
        sum += w * det_at(fs, x) * det_at(gs, x);
        int k = n - 1;
        while (k >= 0 && ++q[static_cast<std::size_t>(k)] == m) {
            q[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Double-double Hankel machinery
// ---------------------------------------------------------------------------

namespace {

dd dd_gamma_half(int j) {  // Gamma(j/2), j >= 1
    dd v = (j % 2 == 0) ? dd(1.0) : dd_sqrt(dd_pi());
    for (int t = (j % 2 == 0) ? 2 : 1; t + 2 <= j; t += 2)
        v *= dd(0.5 * t);
    return v;
}

dd dd_pow2_half(int k) {  // 2^(k/2), k possibly negative
    dd v(1.0);
    int whole = k / 2;
    bool half = (k % 2) != 0;
    if (k < 0 && half) whole -= 1;  // floor
    dd two(2.0);
    for (int t = 0; t < std::abs(whole); ++t) v = (whole > 0) ? v * two : v / two;
    if (half) v *= dd_sqrt(two);
    return v;
}

// c_k = 2^{(k-3)/2} Gamma((k-1)/2): the half-line Gaussian moment
// int_0^inf x^{k-2} exp(-x^2/2) dx, k >= 2.
dd dd_moment_c(int k) { return dd_pow2_half(k - 3) * dd_gamma_half(k - 1); }

dd dd_det(std::vector<std::vector<dd>> m) {
    const std::size_t n = m.size();
    dd det(1.0);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (abs(m[r][col]) > abs(m[piv][col])) piv = r;
        if (m[piv][col].hi == 0.0 && m[piv][col].lo == 0.0) return dd(0.0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            dd f = m[r][col] / m[col][col];
            for (std::size_t c2 = col; c2 < n; ++c2)
                m[r][c2] -= f * m[col][c2];
        }
    }
    return det;
}

dd sign_count_gf_dd(int n, dd z) {
    std::vector<std::vector<dd>> num(static_cast<std::size_t>(n),
                                     std::vector<dd>(static_cast<std::size_t>(n)));
    auto den = num;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            dd c = dd_moment_c(i + j);
            dd sgn((i + j) % 2 == 0 ? 1.0 : -1.0);
            num[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                (sgn + z) * c;
            den[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                (sgn + dd(1.0)) * c;
        }
    return dd_det(num) / dd_det(den);
}

}  // namespace

double sign_count_gf(int n, double z) {
    require(n >= 1 && n <= 12, "n must be in [1,12]");
    return static_cast<double>(sign_count_gf_dd(n, dd(z)));
}

std::vector<double> sign_count_distribution(int n) {
    require(n >= 1 && n <= 12, "n must be in [1,12]");
    // phi_N is a polynomial of degree n in z; interpolate at the integer
    // nodes 0..n and convert the Newton form to monomial coefficients.
    std::vector<dd> nodes, vals;
    for (int t = 0; t <= n; ++t) {
        nodes.emplace_back(static_cast<double>(t));
        vals.push_back(sign_count_gf_dd(n, dd(static_cast<double>(t))));
    }
    std::vector<dd> divided = vals;
    for (int level = 1; level <= n; ++level)
        for (int i = n; i >= level; --i)
            divided[static_cast<std::size_t>(i)] =
                (divided[static_cast<std::size_t>(i)] -
                 divided[static_cast<std::size_t>(i - 1)]) /
                (nodes[static_cast<std::size_t>(i)] -
                 nodes[static_cast<std::size_t>(i - level)]);
    // Horner expansion of sum_j divided[j] prod_{t<j} (z - z_t) into
    // monomial coefficients
    std::vector<dd> coeff{divided[static_cast<std::size_t>(n)]};
    for (int j = n - 1; j >= 0; --j) {
        coeff.insert(coeff.begin(), dd(0.0));  // multiply by z
        for (std::size_t t = 0; t + 1 < coeff.size(); ++t)
            coeff[t] -= nodes[static_cast<std::size_t>(j)] * coeff[t + 1];
        coeff[0] += divided[static_cast<std::size_t>(j)];
    }
    std::vector<double> out(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k)
        out[static_cast<std::size_t>(k)] =
            static_cast<double>(coeff[static_cast<std::size_t>(k)]);
    return out;
}

double sign_count_prob(int n, int k) {
    require(k >= 0 && k <= n, "k must be in [0,n]");
    return sign_count_distribution(n)[static_cast<std::size_t>(k)];
}

double gue_partition_andreief_log(int n) {
    require(n >= 1 && n <= 12, "n must be in [1,12]");
    std::vector<std::vector<dd>> m(static_cast<std::size_t>(n),
                                   std::vector<dd>(static_cast<std::size_t>(n)));
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            int p = j + k - 2;  // full-line moment of x^p under exp(-x^2/2)
            dd v(0.0);
            if (p % 2 == 0) v = dd(2.0) * dd_moment_c(p + 2);
            m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)] = v;
        }
    dd det = dd_det(std::move(m));
    require(det > dd(0.0), "moment determinant must be positive");
    double logdet = std::log(static_cast<double>(det));
    return std::lgamma(n + 1.0) + logdet;
}

// ---------------------------------------------------------------------------
// de Bruijn checks (Gaussian weight exp(-x^2/2), polynomial entries)
// ---------------------------------------------------------------------------

namespace {

// test polynomials phi_i: 1, x, x^2 - 1, x^3 (kept small-degree so the
// closed-form lower moments stay well conditioned)
Poly test_poly(int i) {
    switch (i) {
        case 0: return Poly{{1.0}};
        case 1: return Poly{{0.0, 1.0}};
        case 2: return Poly{{-1.0, 0.0, 1.0}};
        case 3: return Poly{{0.0, 0.5, 0.0, 1.0}};
        default: return Poly{{0.3, 1.0, 0.0, 0.0, 1.0}};
    }
}

double lower_weighted(const Poly& p, double x) {
    double s = 0.0;
    for (std::size_t m = 0; m < p.c.size(); ++m)
        s += p.c[m] * gaussian_lower_moment(static_cast<int>(m), x);
    return s;
}

double full_weighted(const Poly& p) {
    double s = 0.0;
    for (std::size_t m = 0; m < p.c.size(); ++m)
        s += p.c[m] * gaussian_full_moment(static_cast<int>(m));
    return s;
}

double sign_transform(const Poly& p, double x) {
    return 2.0 * lower_weighted(p, x) - full_weighted(p);
}

}  // namespace

double de_bruijn_check_1(int n) {
    require(n >= 2 && n <= 3, "check covers n in {2,3}");
    std::vector<Poly> phi;
    for (int i = 0; i < n; ++i) phi.push_back(test_poly(i));
    auto w = [](double x) { return std::exp(-0.5 * x * x); };

    double lhs = 0.0;
    if (n == 2) {
        // int_{x1 <= x2} det = int dx2 w(x2) [phi1(x2) L(phi2)(x2) -
        //                                     phi2(x2) L(phi1)(x2)] ordered
        auto f = [&](double x2) {
            return w(x2) * (phi[1].eval(x2) * lower_weighted(phi[0], x2) -
                            phi[0].eval(x2) * lower_weighted(phi[1], x2));
        };
        lhs = adaptive_simpson(f, -10.0, 10.0, 1e-12);
    } else {
        // expand the 3x3 determinant over permutations; innermost integral in
        // closed form, two outer levels by nested quadrature
        int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                          {2, 1, 0}, {1, 0, 2}, {0, 2, 1}};
        double sgn[6] = {1, 1, 1, -1, -1, -1};
        auto outer = [&](double x3) {
            double acc = 0.0;
            for (int p = 0; p < 6; ++p) {
                auto mid = [&](double x2) {
                    return w(x2) * phi[static_cast<std::size_t>(perm[p][1])].eval(x2) *
                           lower_weighted(phi[static_cast<std::size_t>(perm[p][0])], x2);
                };
                acc += sgn[p] * phi[static_cast<std::size_t>(perm[p][2])].eval(x3) *
                       adaptive_simpson(mid, -10.0, x3, 1e-11);
            }
            return w(x3) * acc;
        };
        lhs = adaptive_simpson(outer, -10.0, 10.0, 1e-10);
    }

    // Pfaffian side: A_ij = iint phi_i(y) phi_j(x) w w sign(x-y), bordered by
    // the plain integrals for odd n.
    GaussRule rule = gauss_hermite(120);
    const int dim = (n % 2 == 0) ? n : n + 1;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            A(i, j) = integrate_gaussian_weight(rule, [&](double x) {
                return phi[static_cast<std::size_t>(j)].eval(x) *
                       sign_transform(phi[static_cast<std::size_t>(i)], x);
            });
        }
    if (n % 2 == 1) {
        for (int i = 0; i < n; ++i) {
            double s = full_weighted(phi[static_cast<std::size_t>(i)]);
            A(i, n) = s;
            A(n, i) = -s;
        }
    }
    double rhs = pfaffian(SkewMatrix(A));
    return std::abs(lhs - rhs);
}

double de_bruijn_check_2(int n) {
    require(n >= 1 && n <= 2, "check covers n in {1,2}");
    std::vector<Poly> phi, psi;
    for (int i = 0; i < 2 * n; ++i) {
        phi.push_back(test_poly(i));
        psi.push_back(test_poly(i).derivative());
        psi.back() = poly_add(psi.back(), test_poly((i + 1) % 4), 0.25);
    }
    GaussRule rule = gauss_hermite(120);

    // lhs: integral over n variables of the 2n x 2n interleaved determinant
    auto det_at = [&](const std::vector<double>& x) {
        Eigen::MatrixXd d(2 * n, 2 * n);
        for (int i = 0; i < 2 * n; ++i)
            for (int k = 0; k < n; ++k) {
                d(i, 2 * k) = phi[static_cast<std::size_t>(i)].eval(
                    x[static_cast<std::size_t>(k)]);
                d(i, 2 * k + 1) = psi[static_cast<std::size_t>(i)].eval(
                    x[static_cast<std::size_t>(k)]);
            }
        return d.determinant();
    };
    double lhs = 0.0;
    if (n == 1) {
        lhs = integrate_gaussian_weight(rule, [&](double x) {
            return det_at({x});
        });
    } else {
        const double s2 = std::numbers::sqrt2;
        for (std::size_t qa = 0; qa < rule.nodes.size(); ++qa)
            for (std::size_t qb = 0; qb < rule.nodes.size(); ++qb)
                lhs += 2.0 * rule.weights[qa] * rule.weights[qb] *
                       det_at({s2 * rule.nodes[qa], s2 * rule.nodes[qb]});
    }

    // rhs: n! Pf of the single-integral pair matrix
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = i + 1; j < 2 * n; ++j) {
            double v = integrate_gaussian_weight(rule, [&](double x) {
                return phi[static_cast<std::size_t>(i)].eval(x) *
                           psi[static_cast<std::size_t>(j)].eval(x) -
                       phi[static_cast<std::size_t>(j)].eval(x) *
                           psi[static_cast<std::size_t>(i)].eval(x);
            });
            S(i, j) = v;
            S(j, i) = -v;
        }
    double rhs = std::tgamma(n + 1.0) * pfaffian(SkewMatrix(S));
    return std::abs(lhs - rhs);
}

// ---------------------------------------------------------------------------
// Toda and Dyson-Gaudin
// ---------------------------------------------------------------------------

double TodaFamily::a(int k, double x) const {
    double s = 0.0;
    for (std::size_t m = 0; m < mode_weights.size(); ++m) {
        double mode = static_cast<double>(m + 1);
        s += mode_weights[m] * std::pow(mode, k) * std::exp(mode * x);
    }
    return s;
}

double toda_tau(const TodaFamily& family, int n, double x) {
    if (n < 0) return 0.0;
    if (n == 0) return 1.0;
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = family.a(i + j, x);
    return m.determinant();
}

double toda_check(const TodaFamily& family, int n, double x) {
    require(n >= 0 && n <= 4, "n must be in [0,4]");
    const double h = 1e-2;
    double f[5];
    for (int t = -2; t <= 2; ++t)
        f[t + 2] = toda_tau(family, n, x + t * h);
    double d1 = (-f[4] + 8.0 * f[3] - 8.0 * f[1] + f[0]) / (12.0 * h);
    double d2 = (-f[4] + 16.0 * f[3] - 30.0 * f[2] + 16.0 * f[1] - f[0]) /
                (12.0 * h * h);
    double lhs = d2 * f[2] - d1 * d1;
    double rhs = toda_tau(family, n + 1, x) * toda_tau(family, n - 1, x);
    double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    return std::abs(lhs - rhs) / scale;
}

double dyson_gaudin_check(int n) {
    require(n >= 2 && n <= 4, "n must be in [2,4]");
    // fixed interior points for the first n-1 arguments
    const double pts[3] = {-0.7, 0.4, 1.1};
    GaussRule rule = gauss_hermite(200);
    auto det_kernel = [&](const std::vector<double>& x) {
        const int d = static_cast<int>(x.size());
        Eigen::MatrixXd m(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                m(i, j) = kernel(n, x[static_cast<std::size_t>(i)],
                                 x[static_cast<std::size_t>(j)]);
        return m.determinant();
    };
    std::vector<double> fixed(pts, pts + n - 1);
    double lhs = integrate_gaussian_weight(rule, [&](double y) {
        std::vector<double> x = fixed;
        x.push_back(y);
        // the e^{-y^2/2} Gaussian that the quadrature supplies is exactly the
        // weight the kernel row/column carries; divide it back out
        return det_kernel(x) * std::exp(0.5 * y * y);
    });
    double rhs = det_kernel(fixed);
    return std::abs(lhs - rhs);
}

double two_point_marginal(int n, double x1, double x2) {
    require(n >= 2, "n must be >= 2");
    double k11 = kernel(n, x1, x1);
    double k22 = kernel(n, x2, x2);
    double k12 = kernel(n, x1, x2);
    return (k11 * k22 - k12 * k12) / (n * (n - 1.0));
}

}  // namespace rmt
