#ifndef SECTOR_RKHS_TRANSFORM_HPP
#define SECTOR_RKHS_TRANSFORM_HPP

#include <vector>

#include "sector_rkhs/boundary_signal.hpp"
#include "sector_rkhs/diagnostics.hpp"
#include "sector_rkhs/heat_kernel.hpp"

namespace sector_rkhs::transform {

struct QuadratureControl {
    double rel_tol = 1e-8;
    int max_level = 12;  // tanh-sinh refinement cap
};

/// (T_t^alpha g)(x) = int_0^t K_alpha(x, t-tau) g(tau) dtau for real x > 0,
/// evaluated through the substituted form
///   (2/Gamma(a/2)) int_{a x^(1/a)/(2 sqrt t)}^inf rho^(a-1) e^(-rho^2)
///        g(t - a^2 x^(2/a)/(4 rho^2)) drho,
/// which removes the endpoint concentration at tau = t.
cplx forward_t(const AlphaParam& a, double t, const BoundarySignal& g, double x,
               const QuadratureControl& qc = {});

/// Complex evaluation (0 < alpha <= 2, z strictly inside the sector): the
/// tau-integral with a double-exponential rule clustered at tau = t.
cplx forward_t(const AlphaParam& a, double t, const BoundarySignal& g, cplx z,
               const QuadratureControl& qc = {});

/// L_t^alpha g(z) = T_t^alpha(tau^alpha g)(z) / t^alpha.
cplx forward_l(const AlphaParam& a, double t, const BoundarySignal& g, double x,
               const QuadratureControl& qc = {});
cplx forward_l(const AlphaParam& a, double t, const BoundarySignal& g, cplx z,
               const QuadratureControl& qc = {});

/// Envelope-stripped transform G(z) = e^{+alpha^2 z^(2/alpha)/(4t)} L_t^alpha g(z),
/// the numerically stable object for large |z| (the growing and decaying
/// exponentials are combined analytically before any evaluation). When g
/// carries an analytic continuation the integral is taken along a rotated
/// ray on which the Laplace factor is non-oscillatory; otherwise a
/// double-exponential rule on (0,t) is used.
cplx forward_l_scaled(const AlphaParam& a, double t, const BoundarySignal& g,
                      cplx z, const QuadratureControl& qc = {});

/// Checks lim_{x->0+} (D_x^alpha)^m u(x,t) = d_t^m g(t) for u = T_t^alpha g
/// over the given times, extrapolating an x-refinement sequence.
io::DiagnosticsReport iterated_trace_check(const AlphaParam& a,
                                           const std::vector<double>& t_values,
                                           const BoundarySignal& g, int m,
                                           double tol = 1e-3);

/// V(x,s) = 2 alpha^(a/2) / (2^(a/2) Gamma(a/2)) s^(a/4) x^(1/2)
///          K_{a/2}(alpha sqrt(s) x^(1/alpha)),
/// the Laplace transform of K_alpha(x, .).
double laplace_v(const AlphaParam& a, double x, double s);

/// Compares the truncated numerical Laplace transform of K_alpha(x, .)
/// against V(x,s); truncation horizon chosen from the kernel tail bound.
io::DiagnosticsReport laplace_check(const AlphaParam& a, double x, double s,
                                    double tol = 1e-6);

}  // namespace sector_rkhs::transform

#endif  // SECTOR_RKHS_TRANSFORM_HPP
