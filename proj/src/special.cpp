#include "rmt/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "rmt/common.hpp"

namespace rmt {

Scaled Scaled::from(double v) {
    if (v == 0.0) return {};
    int e = 0;
    double m = std::frexp(v, &e);  // |m| in [0.5,1)
    return {m * 2.0, e - 1};
}

double Scaled::to_double() const { return std::ldexp(mantissa, static_cast<int>(exp2)); }

double Scaled::log_abs() const {
    if (mantissa == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(std::abs(mantissa)) +
           static_cast<double>(exp2) * std::numbers::ln2;
}

int Scaled::sign() const { return mantissa > 0.0 ? 1 : (mantissa < 0.0 ? -1 : 0); }

static Scaled renorm(double m, long e) {
    if (m == 0.0) return {};
    int de = 0;
    double mm = std::frexp(m, &de);
    return {mm * 2.0, e + de - 1};
}

Scaled scaled_mul(Scaled a, Scaled b) {
    return renorm(a.mantissa * b.mantissa, a.exp2 + b.exp2);
}

Scaled scaled_add(Scaled a, Scaled b) {
    if (a.mantissa == 0.0) return b;
    if (b.mantissa == 0.0) return a;
    if (a.exp2 < b.exp2) std::swap(a, b);
    long shift = a.exp2 - b.exp2;
    if (shift > 1100) return a;
    return renorm(a.mantissa + std::ldexp(b.mantissa, -static_cast<int>(shift)),
                  a.exp2);
}

Scaled scaled_scale(Scaled a, double c) {
    return renorm(a.mantissa * c, a.exp2);
}

double hermite(int n, double x) {
    require(n >= 0, "hermite order must be >= 0");
    if (n == 0) return 1.0;
    double hm = 1.0, h = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        double next = 2.0 * x * h - 2.0 * k * hm;
        hm = h;
        h = next;
    }
    return h;
}

Scaled hermite_scaled(int n, double x) {
    require(n >= 0, "hermite order must be >= 0");
    Scaled hm = Scaled::from(1.0);
    if (n == 0) return hm;
    Scaled h = Scaled::from(2.0 * x);
    for (int k = 1; k < n; ++k) {
        Scaled next = scaled_add(scaled_scale(h, 2.0 * x),
                                 scaled_scale(hm, -2.0 * k));
        hm = h;
        h = next;
    }
    return h;
}

double double_factorial(int n) {
    double r = 1.0;
    for (int k = n; k > 1; k -= 2) r *= k;
    return r;
}

double gaussian_lower_moment(int m, double x) {
    require(m >= 0, "moment order must be >= 0");
    // L0 = sqrt(pi/2) (1 + erf(x/sqrt2)), L1 = -exp(-x^2/2),
    // Lm = -x^{m-1} exp(-x^2/2) + (m-1) L_{m-2}
    const double g = std::exp(-0.5 * x * x);
    double l0 = std::sqrt(std::numbers::pi / 2.0) *
                (1.0 + std::erf(x / std::numbers::sqrt2));
    if (m == 0) return l0;
    double l1 = -g;
    if (m == 1) return l1;
    double lmm = l0, lm = l1;  // L_{k-1}, L_k for k = 1
    double xp = 1.0;           // x^{k}
    for (int k = 2; k <= m; ++k) {
        xp *= x;  // x^{k-1}
        double next = -xp * g + (k - 1) * lmm;
        lmm = lm;
        lm = next;
    }
    return lm;
}

double gaussian_full_moment(int m) {
    if (m % 2 == 1) return 0.0;
    return double_factorial(m - 1) * std::sqrt(2.0 * std::numbers::pi);
}

double Poly::eval(double x) const {
    double v = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

Poly Poly::derivative() const {
    Poly d;
    if (c.size() <= 1) {
        d.c = {0.0};
        return d;
    }
    d.c.resize(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k)
        d.c[k - 1] = static_cast<double>(k) * c[k];
    return d;
}

Poly poly_add(const Poly& a, const Poly& b, double fb) {
    Poly r = a;
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), 0.0);
    for (std::size_t k = 0; k < b.c.size(); ++k) r.c[k] += fb * b.c[k];
    return r;
}

Poly poly_scale(const Poly& a, double f) {
    Poly r = a;
    for (double& v : r.c) v *= f;
    return r;
}

Poly hermite_poly(int n) {
    require(n >= 0, "hermite order must be >= 0");
    Poly hm{{1.0}};
    if (n == 0) return hm;
    Poly h{{0.0, 2.0}};
    for (int k = 1; k < n; ++k) {
        // H_{k+1} = 2x H_k - 2k H_{k-1}
        Poly next;
        next.c.assign(h.c.size() + 1, 0.0);
        for (std::size_t i = 0; i < h.c.size(); ++i) next.c[i + 1] = 2.0 * h.c[i];
        next = poly_add(next, hm, -2.0 * k);
        hm = h;
        h = next;
    }
    return h;
}

}  // namespace rmt
