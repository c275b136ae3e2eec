#ifndef SECTOR_RKHS_SPECFUN_HPP
#define SECTOR_RKHS_SPECFUN_HPP

#include <complex>

namespace sector_rkhs::specfun {

using cplx = std::complex<double>;

/// Gamma function for x > 0 (Lanczos approximation, ~15 significant digits).
/// Throws std::domain_error for x <= 0, std::overflow_error past ~171.6.
double gamma_fn(double x);

/// log Gamma for x > 0; safe for arguments where gamma_fn would overflow.
double log_gamma(double x);

/// Beta function B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b), a,b > 0.
double beta_fn(double a, double b);

/// Regularized upper incomplete gamma Q(s,x) = Gamma(s,x)/Gamma(s),
/// s > 0, x >= 0. Power series for x < s+1, Lentz continued fraction
/// otherwise (the standard numerically stable split).
double reg_upper_gamma(double s, double x);

/// Generalized complementary error function
///   E_alpha(lambda) = (2/Gamma(alpha/2)) * int_lambda^inf rho^(alpha-1) e^(-rho^2) drho,
/// evaluated as Q(alpha/2, lambda^2). E_alpha(0)=1, decreasing to 0.
double erfc_alpha(double alpha, double lambda);

/// Central-difference residual of y'' + (2l - (alpha-1)/l) y' = 0 at
/// lambda with step h, for y = erfc_alpha(alpha, .). O(h^2) for the exact
/// solution; used to certify the implementation against the defining ODE.
double erfc_alpha_ode_residual(double alpha, double lambda, double h);

/// Modified Bessel function of the second kind, real order nu >= 0, x > 0.
/// Exponentially convergent trapezoidal rule on
///   K_nu(x) = int_0^inf exp(-x cosh u) cosh(nu u) du.
double bessel_k(double nu, double x);

struct BesselKRepResult {
    double value = 0.0;
    double err_est = 0.0;
    bool converged = false;
};

/// Independent route for K_nu via the cosine representation
///   K_nu(x) = 2^nu Gamma(nu+1/2) / (sqrt(pi) x^nu) *
///             int_0^inf cos(x t) / (1+t^2)^(nu+1/2) dt,  nu >= -1/2, x > 0.
/// The oscillatory integral is summed over half-periods with iterated
/// Aitken acceleration. Serves as the oracle for bessel_k.
BesselKRepResult bessel_k_rep_checked(double nu, double x);
double bessel_k_rep(double nu, double x);

/// Principal-branch complex power z^p, arg z in (-pi, pi).
/// Throws std::domain_error at z = 0 and on the cut (-inf, 0].
cplx cpow_principal(cplx z, double p);

}  // namespace sector_rkhs::specfun

#endif  // SECTOR_RKHS_SPECFUN_HPP
