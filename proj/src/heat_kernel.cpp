#include "sector_rkhs/heat_kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "sector_rkhs/specfun.hpp"

namespace sector_rkhs {

AlphaParam::AlphaParam(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::domain_error("AlphaParam: requires alpha > 0");
    two_over_alpha_ = 2.0 / alpha;
    diffusion_exponent_ = 2.0 * (alpha - 1.0) / alpha;
    factor_power_ = (alpha - 1.0) * (alpha + 2.0) / (2.0 * alpha);
    time_power_ = 0.5 * alpha + 1.0;
}

void AlphaParam::require_sector(const char* what) const {
    if (!sector_admissible())
        throw std::domain_error(std::string(what) + ": requires 0 < alpha <= 2");
}

double AlphaParam::half_angle() const { return 0.25 * M_PI * alpha_; }

bool sector_contains(const AlphaParam& a, cplx z, bool strict) {
    if (z == cplx(0.0, 0.0)) return false;
    const double bound = a.half_angle();
    const double arg = std::abs(std::arg(z));
    return strict ? arg < bound : arg <= bound + 1e-15;
}

SectorPoint::SectorPoint(const AlphaParam& a, cplx z) : z_(z) {
    a.require_sector("SectorPoint");
    if (!sector_contains(a, z, /*strict=*/true))
        throw std::domain_error("SectorPoint: z outside the open sector");
}

namespace {

// alpha^alpha / (2^alpha Gamma(alpha/2)), in log form
double kernel_coef(const AlphaParam& a) {
    const double al = a.alpha();
    return std::exp(al * std::log(0.5 * al) - specfun::log_gamma(0.5 * al));
}

}  // namespace

cplx kernel_k(const AlphaParam& a, cplx z, double t) {
    if (!(t > 0.0)) throw std::domain_error("kernel_k: requires t > 0");
    if (z.imag() == 0.0 && z.real() > 0.0) return kernel_k(a, z.real(), t);
    a.require_sector("kernel_k(complex)");
    if (!sector_contains(a, z, /*strict=*/false))
        throw std::domain_error("kernel_k: z outside the closed sector");
    const cplx zeta = specfun::cpow_principal(z, a.two_over_alpha());
    // assembled in log form: t^(-p) alone overflows long before the
    // exponential decay has pushed the value itself out of range
    const cplx logv = std::log(kernel_coef(a)) + std::log(z) -
                      a.time_power() * std::log(t) -
                      a.alpha() * a.alpha() * zeta / (4.0 * t);
    if (logv.real() < -745.0) return cplx(0.0, 0.0);
    return std::exp(logv);
}

double kernel_k(const AlphaParam& a, double x, double t) {
    if (!(t > 0.0)) throw std::domain_error("kernel_k: requires t > 0");
    if (!(x > 0.0)) throw std::domain_error("kernel_k: requires x > 0");
    const double zeta = std::pow(x, a.two_over_alpha());
    const double le = -a.alpha() * a.alpha() * zeta / (4.0 * t) -
                      a.time_power() * std::log(t);
    return kernel_coef(a) * x * std::exp(le);
}

double profile_w(const AlphaParam& a, double x, double t) {
    if (!(x > 0.0) || !(t > 0.0))
        throw std::domain_error("profile_w: requires x, t > 0");
    const double lam = 0.5 * a.alpha() * std::pow(x, 1.0 / a.alpha()) / std::sqrt(t);
    return specfun::erfc_alpha(a.alpha(), lam);
}

double apply_d(const AlphaParam& a, const std::function<double(double)>& u,
               double x, double h) {
    if (!(x > 0.0)) throw std::domain_error("apply_d: requires x > 0");
    if (!(h > 0.0) || h >= 0.5 * x)
        throw std::domain_error("apply_d: step must satisfy 0 < h < x/2");
    const double d2 = (u(x + h) - 2.0 * u(x) + u(x - h)) / (h * h);
    return std::pow(x, a.diffusion_exponent()) * d2;
}

double apply_d_iter(const AlphaParam& a, const std::function<double(double)>& u,
                    double x, double h, int m) {
    if (m < 0) throw std::domain_error("apply_d_iter: requires m >= 0");
    if (m == 0) return u(x);
    if (m == 1) return apply_d(a, u, x, h);
    auto inner = [&](double y) { return apply_d_iter(a, u, y, 0.5 * h, m - 1); };
    return apply_d(a, inner, x, h);
}

double kernel_bound_margin(const AlphaParam& a, const SectorPoint& zp, double t) {
    if (!(t > 0.0)) throw std::domain_error("kernel_bound_margin: requires t > 0");
    const cplx z = zp.z();
    const cplx zeta = specfun::cpow_principal(z, a.two_over_alpha());
    const double re = zeta.real();
    if (!(re > 0.0))
        throw std::domain_error("kernel_bound_margin: Re z^(2/alpha) <= 0 (sector boundary)");
    // |K| = coef |z| t^(-p) exp(-a^2 Re zeta / (4t)); normalize in log space
    const double p = a.time_power();
    const double lm = -p * std::log(t) - a.alpha() * a.alpha() * re / (4.0 * t) +
                      p * std::log(re);
    return kernel_coef(a) * std::exp(lm);
}

}  // namespace sector_rkhs
