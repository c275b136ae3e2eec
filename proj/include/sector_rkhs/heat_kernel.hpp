#ifndef SECTOR_RKHS_HEAT_KERNEL_HPP
#define SECTOR_RKHS_HEAT_KERNEL_HPP

#include <complex>
#include <functional>

namespace sector_rkhs {

using cplx = std::complex<double>;

/// The exponent alpha > 0 with the derived exponents used throughout,
/// cached at construction. Operations on the sector additionally require
/// 0 < alpha <= 2 (the map z -> z^(2/alpha) then lands in the right
/// half-plane).
class AlphaParam {
public:
    explicit AlphaParam(double alpha);

    double alpha() const { return alpha_; }
    double two_over_alpha() const { return two_over_alpha_; }
    /// 2(alpha-1)/alpha, the power in the diffusion coefficient x^(2(a-1)/a).
    double diffusion_exponent() const { return diffusion_exponent_; }
    /// (alpha-1)(alpha+2)/(2 alpha), the monomial power in the image-space
    /// factorization.
    double factor_power() const { return factor_power_; }
    /// alpha/2 + 1, the time-decay power of the kernel.
    double time_power() const { return time_power_; }

    bool sector_admissible() const { return alpha_ <= 2.0; }
    void require_sector(const char* what) const;
    /// Half-opening angle pi*alpha/4 of the sector.
    double half_angle() const;

private:
    double alpha_;
    double two_over_alpha_;
    double diffusion_exponent_;
    double factor_power_;
    double time_power_;
};

/// A validated point of the open sector |arg z| < pi*alpha/4 (z != 0).
/// The positive real axis is treated as interior; see sector_contains.
class SectorPoint {
public:
    SectorPoint(const AlphaParam& a, cplx z);
    cplx z() const { return z_; }

private:
    cplx z_;
};

/// True if z lies in the open sector (positive axis included, boundary rays
/// excluded); strict=false admits the closed sector.
bool sector_contains(const AlphaParam& a, cplx z, bool strict = true);

/// Heat-type kernel on the half line,
///   K_alpha(z,t) = alpha^alpha / (2^alpha Gamma(alpha/2)) * z * t^(-alpha/2-1)
///                  * exp(-alpha^2 z^(2/alpha) / (4t)),
/// principal-branch powers. Real positive z is accepted for every alpha > 0;
/// complex z requires 0 < alpha <= 2 and z in the closed sector.
cplx kernel_k(const AlphaParam& a, cplx z, double t);
double kernel_k(const AlphaParam& a, double x, double t);

/// W_alpha(x,t) = erfc_alpha(alpha, alpha x^(1/alpha) / (2 sqrt(t))): the
/// response to constant boundary data 1. Values in (0,1), ->1 as x->0+.
double profile_w(const AlphaParam& a, double x, double t);

/// Degenerate second-order operator x^(2(alpha-1)/alpha) d^2/dx^2 applied by
/// a central stencil of step h (requires 0 < h < x/2 so the stencil stays
/// right of the degeneracy). O(h^2) for smooth u.
double apply_d(const AlphaParam& a, const std::function<double(double)>& u,
               double x, double h);

/// m-fold application by nested stencils; the step is halved per nesting
/// level to keep evaluation points distinct (error model O(m h^2)).
double apply_d_iter(const AlphaParam& a, const std::function<double(double)>& u,
                    double x, double h, int m);

/// |K_alpha(z,t)| / ( |z| (Re z^(2/alpha))^(-alpha/2-1) ): finite for z
/// strictly inside the sector, bounded uniformly in t, -> 0 at t -> 0, inf.
double kernel_bound_margin(const AlphaParam& a, const SectorPoint& z, double t);

}  // namespace sector_rkhs

#endif  // SECTOR_RKHS_HEAT_KERNEL_HPP
