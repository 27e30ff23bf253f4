#pragma once

#include <vector>

namespace rmt {

// value = mantissa * 2^exp2 with mantissa in [1,2) (or 0); keeps Hermite
// recurrences alive far past the double overflow point.
struct Scaled {
    double mantissa = 0.0;
    long exp2 = 0;

    static Scaled from(double v);
    double to_double() const;
    double log_abs() const;  // natural log of |value|
    int sign() const;
};

Scaled scaled_mul(Scaled a, Scaled b);
Scaled scaled_add(Scaled a, Scaled b);
Scaled scaled_scale(Scaled a, double c);

// Physicists' Hermite H_n(x) by the three-term recurrence.
double hermite(int n, double x);
// Same value in overflow-safe form.
Scaled hermite_scaled(int n, double x);

double double_factorial(int n);  // (-1)!! = 0!! = 1

// Lower Gaussian moment integral of y^m exp(-y^2/2) from -infinity to x.
double gaussian_lower_moment(int m, double x);
// Full-line integral of y^m exp(-y^2/2).
double gaussian_full_moment(int m);

// Coefficient form p(y) = sum c_k y^k.
struct Poly {
    std::vector<double> c;

    double eval(double x) const;
    Poly derivative() const;
    double leading() const { return c.empty() ? 0.0 : c.back(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
};

Poly poly_add(const Poly& a, const Poly& b, double fb = 1.0);
Poly poly_scale(const Poly& a, double f);
Poly hermite_poly(int n);  // coefficients of H_n

}  // namespace rmt
