#pragma once

#include <functional>
#include <vector>

#include "rmt/special.hpp"

namespace rmt {

// ---------------------------------------------------------------------------
// Orthogonal polynomial families evaluated by stable recurrences.
// ---------------------------------------------------------------------------

enum class PolyKind {
    HermitePhysicists,   // H_n, weight exp(-x^2)
    HermiteOrthonormal,  // pi_n(x) = H_n(x/sqrt2)/sqrt(sqrt(2 pi) 2^n n!),
                         // orthonormal under exp(-x^2/2)
    LaguerreAssociated,  // L^(alpha)_n, weight x^alpha exp(-x)
};

class PolyFamily {
public:
    explicit PolyFamily(PolyKind kind, double alpha = 0.0);

    double eval(int n, double x) const;
    double weight(double x) const;
    double leading_coefficient(int n) const;
    PolyKind kind() const { return kind_; }

    // sup over i,j <= max_index of |int w pi_i pi_j - delta_ij| after
    // orthonormalization, by quadrature.
    double orthonormality_residual(int max_index) const;

private:
    PolyKind kind_;
    double alpha_;
    double norm(int n) const;  // sqrt(int w p_n^2)
};

// Orthonormal-Hermite value pi_n(x) with the normalization carried inside the
// recurrence (no explicit factorials; survives n in the hundreds).
double hermite_orthonormal(int n, double x);

// ---------------------------------------------------------------------------
// Skew-orthogonal families of the beta=1 and beta=4 Gaussian ensembles.
// ---------------------------------------------------------------------------

enum class SkewKind { GoeR, GseQ };

class SkewFamily {
public:
    explicit SkewFamily(SkewKind kind);

    double eval(int k, double x) const;
    double eval_derivative(int k, double x) const;
    double weight(double x) const;  // exp(-x^2/2) for R, exp(-2x^2) for Q
    const Poly& poly(int k) const;

    // GOE companion functions Phi_k(x) = int R_k(y) w(y) sign(x-y) dy,
    // closed form via erf/Gaussian moment tables.
    double phi(int k, double x) const;
    // same by adaptive quadrature split at y = x (cross-check path)
    double phi_quadrature(int k, double x) const;

    // max over k,l <= max_index of the skew-orthogonality residuals: products
    // of equal parity must vanish, |<even_k, odd_l>| must be delta_kl.
    double skew_orthogonality_residual(int max_index) const;
    double skew_product(int i, int j) const;

private:
    SkewKind kind_;
    mutable std::vector<Poly> polys_;
    void ensure(int k) const;
};

// ---------------------------------------------------------------------------
// Closed-form spectral densities and spacing laws.
// ---------------------------------------------------------------------------

// Finite-N GUE density (matches the (H+H^dagger)/2 sampler directly).
double gue_density_finite(int n, double x);

// Kernel K_N(x,x') with Gaussian weight halves; reproducing_residual probes
// int K(x,y)K(y,x')dy = K(x,x') on a test grid with a Gauss-Hermite panel.
double kernel(int n, double x, double xp);
double reproducing_residual(int n, int quad_nodes = 400);

// Finite-N GOE density; N must be even.
double goe_density_finite(int n, double x);

// Finite-N GSE density for the deduplicated N-value spectrum of the block
// sampler. The Q-family lives on the exp(-2x^2) scale; the sampler scale
// differs by a factor 2 in x, pinned by a regression test.
double gse_density_finite(int n, double x);
double gse_density_q_scale(int n, double x);

double semicircle(double x);
double semicircle_cdf(double x);
double marchenko_pastur(double y, double c);
void marchenko_pastur_edges(double c, double& lo, double& hi);

// n-th even moment of the semicircle, C_n / 2^n.
double catalan_moment(int n);

double wigner_surmise(double s);
double wigner_surmise_cdf(double s);
double wigner_surmise_rescaled(double s);
double wigner_surmise_rescaled_cdf(double s);

// sqrt(2N) rho(z sqrt(2N)) through the Christoffel-Darboux two-term form
// (independent of gue_density_finite; overflow-safe up to N of several
// hundred).
double rescaled_density_cd(int n, double z);

// Leading-order bulk approximation of H_{N+m}(X sqrt(2N)), |X|<1, m in
// {0,-1,-2}; returned as log|value| and sign.
Scaled hermite_bulk_asymptotic(int n, int m, double X);
double hermite_bulk_relative_error(int n, int m, double X);

}  // namespace rmt
