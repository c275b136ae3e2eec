#include "sector_rkhs/bergman.hpp"

#include <cmath>
#include <stdexcept>

#include "sector_rkhs/parallel.hpp"
#include "sector_rkhs/quadrature.hpp"
#include "sector_rkhs/specfun.hpp"
#include "sector_rkhs/transform.hpp"

namespace sector_rkhs::bergman {

WeightedKernelSpec WeightedKernelSpec::halfplane(double nu) {
    if (!(nu > -1.0)) throw std::domain_error("WeightedKernelSpec: requires nu > -1");
    return {Domain::half_plane, nu, 2.0};
}

WeightedKernelSpec WeightedKernelSpec::sector(const AlphaParam& a, double nu) {
    if (!(nu > -1.0)) throw std::domain_error("WeightedKernelSpec: requires nu > -1");
    a.require_sector("WeightedKernelSpec::sector");
    return {Domain::sector, nu, a.alpha()};
}

cplx bergman_kernel(const WeightedKernelSpec& spec, cplx z, cplx w) {
    const double nu = spec.nu;
    if (spec.domain == WeightedKernelSpec::Domain::half_plane) {
        if (!(z.real() > 0.0) || !(w.real() > 0.0))
            throw std::domain_error("bergman_kernel: point outside the half-plane");
        const cplx s = z + std::conj(w);
        return (nu + 1.0) / (std::pow(M_PI, 1.0 + 0.5 * nu) * std::pow(s, nu + 2.0));
    }
    const AlphaParam a(spec.alpha);
    if (!sector_contains(a, z) || !sector_contains(a, w))
        throw std::domain_error("bergman_kernel: point outside the sector");
    const cplx zw = z * std::conj(w);
    const double q = (2.0 - spec.alpha) / spec.alpha * (1.0 + 0.5 * nu);
    const cplx s = specfun::cpow_principal(z, a.two_over_alpha()) +
                   std::conj(specfun::cpow_principal(w, a.two_over_alpha()));
    if (s == cplx(0.0, 0.0))
        throw std::domain_error("bergman_kernel: singular configuration");
    const double c = std::exp((2.0 + nu) * M_LN2 + std::log(nu + 1.0) -
                              (2.0 + nu) * std::log(spec.alpha) -
                              (1.0 + 0.5 * nu) * std::log(M_PI));
    return c * specfun::cpow_principal(zw, q) / std::pow(s, nu + 2.0);
}

Biholomorphism Biholomorphism::identity() {
    Biholomorphism b;
    b.map = [](cplx z) { return z; };
    b.deriv = [](cplx) { return cplx(1.0, 0.0); };
    b.deriv_pow = [](cplx, double) { return cplx(1.0, 0.0); };
    return b;
}

Biholomorphism Biholomorphism::sector_to_halfplane(const AlphaParam& a) {
    a.require_sector("Biholomorphism::sector_to_halfplane");
    const double p = a.two_over_alpha();
    Biholomorphism b;
    b.map = [p](cplx z) { return specfun::cpow_principal(z, p); };
    b.deriv = [p](cplx z) { return p * specfun::cpow_principal(z, p - 1.0); };
    b.deriv_pow = [p](cplx z, double e) {
        return std::pow(p, e) * specfun::cpow_principal(z, (p - 1.0) * e);
    };
    return b;
}

cplx conformal_transplant(const KernelFn& base, const Biholomorphism& phi,
                          double nu, cplx z, cplx w) {
    if (!phi.map || !phi.deriv)
        throw std::invalid_argument("conformal_transplant: map/derivative missing");
    const double e = 1.0 + 0.5 * nu;
    cplx az, aw;
    if (nu == 0.0) {
        az = phi.deriv(z);
        aw = phi.deriv(w);
    } else {
        if (!phi.deriv_pow)
            throw std::invalid_argument(
                "conformal_transplant: nu != 0 requires a declared branch for (phi')^(1+nu/2)");
        az = phi.deriv_pow(z, e);
        aw = phi.deriv_pow(w, e);
    }
    return az * base(phi.map(z), phi.map(w)) * std::conj(aw);
}

cplx rkhs_kernel(const AlphaParam& a, double t, cplx z, cplx w) {
    a.require_sector("rkhs_kernel");
    if (!(t > 0.0)) throw std::domain_error("rkhs_kernel: requires t > 0");
    if (!sector_contains(a, z) || !sector_contains(a, w))
        throw std::domain_error("rkhs_kernel: point outside the sector");
    const double al = a.alpha();
    const cplx s = specfun::cpow_principal(z, a.two_over_alpha()) +
                   std::conj(specfun::cpow_principal(w, a.two_over_alpha()));
    const double c = 4.0 / (al * specfun::beta_fn(0.5 * al, 0.5 * al));
    return c * z * std::conj(w) * std::exp(-al * al * s / (4.0 * t)) /
           std::pow(s, al + 1.0);
}

cplx rkhs_kernel_integral(const AlphaParam& a, double t, cplx z, cplx w,
                          double rel_tol) {
    a.require_sector("rkhs_kernel_integral");
    if (!(t > 0.0)) throw std::domain_error("rkhs_kernel_integral: requires t > 0");
    const double al = a.alpha();
    auto f = [&](double tau, double, double db) -> cplx {
        return kernel_k(a, z, db) * std::conj(kernel_k(a, w, db)) *
               std::pow(tau / t, al);
    };
    auto r = quad::tanh_sinh_offsets(f, 0.0, t, rel_tol, 12);
    return r.value;
}

double measure_density_alg(const AlphaParam& a, cplx z) {
    a.require_sector("measure_density");
    if (!sector_contains(a, z))
        throw std::domain_error("measure_density: z not strictly inside the sector");
    const double al = a.alpha();
    const double re = specfun::cpow_principal(z, a.two_over_alpha()).real();
    const double c = std::exp((al - 1.0) * M_LN2 - std::log(M_PI) +
                              std::log(specfun::beta_fn(0.5 * al, 0.5 * al)));
    return c * std::pow(std::abs(z), 4.0 * (1.0 - al) / al) *
           std::pow(re, al - 1.0);
}

double measure_log_density(const AlphaParam& a, double t, cplx z) {
    if (!(t > 0.0)) throw std::domain_error("measure_density: requires t > 0");
    const double re = specfun::cpow_principal(z, a.two_over_alpha()).real();
    return std::log(measure_density_alg(a, z)) +
           0.5 * a.alpha() * a.alpha() * re / t;
}

double measure_density(const AlphaParam& a, double t, cplx z) {
    return std::exp(measure_log_density(a, t, z));
}

// --- GSpaceElement -----------------------------------------------------

cplx GSpaceElement::eval(cplx z) const {
    const cplx zeta = specfun::cpow_principal(z, a_.two_over_alpha());
    return scaled_(z) * std::exp(-a_.alpha() * a_.alpha() * zeta / (4.0 * t_));
}

cplx GSpaceElement::factor(cplx z) const {
    if (!factor_) throw std::invalid_argument("GSpaceElement: no factor form present");
    return factor_(z);
}

GSpaceElement GSpaceElement::from_bergman_factor(const AlphaParam& a, double t,
                                                 std::function<cplx(cplx)> f) {
    a.require_sector("GSpaceElement");
    if (!(t > 0.0)) throw std::domain_error("GSpaceElement: requires t > 0");
    GSpaceElement e(a, t);
    const double q = a.factor_power();
    e.factor_ = f;
    e.scaled_ = [a, q, f](cplx z) {
        return specfun::cpow_principal(z, q) * f(z);
    };
    return e;
}

GSpaceElement GSpaceElement::from_signal(const AlphaParam& a, double t,
                                         BoundarySignal g) {
    a.require_sector("GSpaceElement");
    if (!(t > 0.0) || t > g.t_end() * (1.0 + 1e-12))
        throw std::domain_error("GSpaceElement: t outside signal domain");
    GSpaceElement e(a, t);
    e.scaled_ = [a, t, g](cplx z) { return transform::forward_l_scaled(a, t, g, z); };
    return e;
}

GSpaceElement GSpaceElement::kernel_section(const AlphaParam& a, double t, cplx w) {
    a.require_sector("GSpaceElement");
    if (!(t > 0.0)) throw std::domain_error("GSpaceElement: requires t > 0");
    if (!sector_contains(a, w))
        throw std::domain_error("GSpaceElement: w outside the sector");
    const double al = a.alpha();
    const cplx omega_bar = std::conj(specfun::cpow_principal(w, a.two_over_alpha()));
    const double c = 4.0 / (al * specfun::beta_fn(0.5 * al, 0.5 * al));
    const cplx wfac = std::conj(w) * std::exp(-al * al * omega_bar / (4.0 * t));
    GSpaceElement e(a, t);
    e.scaled_ = [a, al, c, wfac, omega_bar](cplx z) {
        const cplx s = specfun::cpow_principal(z, a.two_over_alpha()) + omega_bar;
        return c * z * wfac / std::pow(s, al + 1.0);
    };
    const double q = a.factor_power();
    e.factor_ = [a, al, c, wfac, omega_bar, q](cplx z) {
        const cplx s = specfun::cpow_principal(z, a.two_over_alpha()) + omega_bar;
        return c * z * wfac * specfun::cpow_principal(z, -q) / std::pow(s, al + 1.0);
    };
    return e;
}

GSpaceElement GSpaceElement::from_raw(const AlphaParam& a, double t,
                                      std::function<cplx(cplx)> F) {
    a.require_sector("GSpaceElement");
    if (!(t > 0.0)) throw std::domain_error("GSpaceElement: requires t > 0");
    GSpaceElement e(a, t);
    e.scaled_ = [a, t, F](cplx z) {
        const cplx zeta = specfun::cpow_principal(z, a.two_over_alpha());
        return F(z) * std::exp(a.alpha() * a.alpha() * zeta / (4.0 * t));
    };
    return e;
}

// --- inner products -----------------------------------------------------

SectorMesh inner_product_mesh(const AlphaParam& a, double r_max, int order,
                              double trunc_mass) {
    inversion::MeshParams p;
    // mass below r_min scales like r_min^(2/alpha); the excluded boundary
    // strip like delta^alpha
    p.r_min = std::pow(trunc_mass, 0.5 * a.alpha());
    p.r_max = r_max;
    p.delta = std::pow(trunc_mass, 1.0 / a.alpha());
    p.order = order;
    p.radial_ratio = 2.0;
    p.angular_grade = 2.5;
    return inversion::build_sector_mesh(a, p);
}

std::vector<cplx> cache_scaled(const GSpaceElement& F, const SectorMesh& mesh) {
    std::vector<cplx> vals(mesh.size());
    util::parallel_for(mesh.size(), [&](std::size_t i) {
        vals[i] = F.eval_scaled(mesh.z[i]);
    });
    return vals;
}

cplx gspace_inner_cached(const AlphaParam& a, const std::vector<cplx>& f_scaled,
                         const GSpaceElement& G, const SectorMesh& mesh) {
    if (f_scaled.size() != mesh.size())
        throw std::invalid_argument("gspace_inner_cached: cache/mesh size mismatch");
    std::vector<cplx> terms(mesh.size());
    util::parallel_for(mesh.size(), [&](std::size_t i) {
        const cplx z = mesh.z[i];
        terms[i] = mesh.weight[i] * f_scaled[i] * std::conj(G.eval_scaled(z)) *
                   measure_density_alg(a, z);
    });
    return quad::pairwise_sum(terms);
}

cplx gspace_inner(const AlphaParam& a, double t, const GSpaceElement& F,
                  const GSpaceElement& G, const SectorMesh& mesh) {
    a.require_sector("gspace_inner");
    if (!(t > 0.0)) throw std::domain_error("gspace_inner: requires t > 0");
    if (mesh.alpha != a.alpha())
        throw std::invalid_argument("gspace_inner: mesh built for a different alpha");
    const std::size_t n = mesh.size();
    std::vector<cplx> terms(n);
    util::parallel_for(n, [&](std::size_t i) {
        const cplx z = mesh.z[i];
        // exp(-(a^2/4t)(zeta + conj zeta)) * exp(+(a^2/2t) Re zeta) == 1
        terms[i] = mesh.weight[i] * F.eval_scaled(z) * std::conj(G.eval_scaled(z)) *
                   measure_density_alg(a, z);
    });
    return quad::pairwise_sum(terms);
}

InnerResult gspace_inner_checked(const AlphaParam& a, double t,
                                 const GSpaceElement& F, const GSpaceElement& G,
                                 const SectorMesh& mesh, double rel_tol) {
    InnerResult out;
    out.value = gspace_inner(a, t, F, G, mesh);
    // comparison mesh: enlarged truncation and finer quadrature, so the
    // report covers both the tails and the resolution
    inversion::MeshParams p = mesh.params;
    p.r_min *= 0.5;
    p.r_max *= 1.5;
    p.delta *= 0.5;
    p.order = std::min(p.order + 2, 48);
    p.radial_ratio = std::sqrt(p.radial_ratio);
    const SectorMesh wide = inversion::build_sector_mesh(a, p);
    out.refined_value = gspace_inner(a, t, F, G, wide);
    const double scale = std::max(std::abs(out.refined_value), 1e-300);
    out.rel_change = std::abs(out.value - out.refined_value) / scale;
    out.converged = out.rel_change <= rel_tol;
    return out;
}

double gspace_norm_factorized(const AlphaParam& a, double t,
                              const std::function<cplx(cplx)>& f,
                              const SectorMesh& mesh) {
    a.require_sector("gspace_norm_factorized");
    if (!(t > 0.0)) throw std::domain_error("gspace_norm_factorized: requires t > 0");
    const double al = a.alpha();
    // ||f||^2 in the weighted Bergman space, with its inner-product prefactor
    const std::size_t n = mesh.size();
    std::vector<double> terms(n);
    util::parallel_for(n, [&](std::size_t i) {
        const cplx z = mesh.z[i];
        const double re = mesh.zeta[i].real();
        const double wgt = std::pow(re, al - 1.0) *
                           std::pow(std::abs(z), (al - 2.0) * (al - 1.0) / al);
        terms[i] = mesh.weight[i] * std::norm(f(z)) * wgt;
    });
    const double pre_a2 = std::pow(al * std::sqrt(M_PI), al - 1.0);
    const double norm_a2_sq = pre_a2 * quad::pairwise_sum(terms);
    const double B = specfun::beta_fn(0.5 * al, 0.5 * al);
    const double c = std::sqrt(B) /
                     (std::pow(0.5 * al, 0.5 * (al - 1.0)) *
                      std::pow(M_PI, 0.25 * (al + 1.0)));
    return c * std::sqrt(norm_a2_sq);
}

io::DiagnosticsReport decay_profile(const AlphaParam& a,
                                    const std::function<cplx(double)>& f, int j,
                                    double x_lo, double x_hi, int per_decade,
                                    int tail_points) {
    a.require_sector("decay_profile");
    if (j < 0 || j > 2) throw std::domain_error("decay_profile: j must be 0, 1 or 2");
    io::DiagnosticsReport rep;
    rep.command = "decay-profile";
    rep.params["alpha"] = a.alpha();
    rep.params["j"] = j;

    const int decades = static_cast<int>(std::round(std::log10(x_hi / x_lo)));
    const int npts = decades * per_decade + 1;
    io::Table tab;
    tab.name = "decay_profile";
    tab.columns = {"x", "abs_q"};
    std::vector<double> qv;
    for (int i = 0; i < npts; ++i) {
        const double x = x_lo * std::pow(10.0, static_cast<double>(i) / per_decade);
        cplx d;
        if (j == 0) {
            d = f(x);
        } else if (j == 1) {
            const double h = 1e-3 * x;
            d = (f(x + h) - f(x - h)) / (2.0 * h);
        } else {
            const double h = 1e-3 * x;
            d = (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
        }
        const double q = std::abs(std::pow(x, j + 0.5 * (a.alpha() + 1.0)) * d);
        qv.push_back(q);
        tab.rows.push_back({x, q});
    }
    rep.tables.push_back(tab);

    bool left_ok = true, right_ok = true;
    for (int i = 0; i + 1 < tail_points; ++i) {
        // toward x -> 0+: values should shrink as x decreases
        left_ok = left_ok && qv[i] < qv[i + 1];
        // toward x -> inf: values should shrink as x grows
        const int n = static_cast<int>(qv.size());
        right_ok = right_ok && qv[n - 1 - i] < qv[n - 2 - i];
    }
    rep.add(io::CheckRecord::boolean("decay.tail_to_zero.x->0", left_ok));
    rep.add(io::CheckRecord::boolean("decay.tail_to_zero.x->inf", right_ok));
    return rep;
}

io::DiagnosticsReport smoothing_rate(const AlphaParam& a, const BoundarySignal& g,
                                     int j, double xi,
                                     const std::vector<double>& t_sequence,
                                     double decrease_factor) {
    a.require_sector("smoothing_rate");
    if (!(xi > 0.0)) throw std::domain_error("smoothing_rate: requires xi > 0");
    if (j < 0 || j > 2) throw std::domain_error("smoothing_rate: j must be 0, 1 or 2");
    io::DiagnosticsReport rep;
    rep.command = "smoothing-rate";
    rep.params["alpha"] = a.alpha();
    rep.params["j"] = j;
    rep.params["xi"] = xi;

    const double q = a.factor_power();
    io::Table tab;
    tab.name = "smoothing_rate";
    tab.columns = {"t", "quantity"};
    std::vector<double> vals;
    for (double t : t_sequence) {
        auto inner = [&](double x) -> cplx {
            // L g(x) x^{-q} e^{+(a^2/4t) x^(2/a)}: the exponential is folded
            // into the scaled transform, never formed on its own
            return transform::forward_l_scaled(a, t, g, cplx(x, 0.0)) *
                   std::pow(x, -q);
        };
        cplx d;
        if (j == 0) {
            d = inner(xi);
        } else if (j == 1) {
            const double h = 1e-3 * xi;
            d = (inner(xi + h) - inner(xi - h)) / (2.0 * h);
        } else {
            const double h = 1e-3 * xi;
            d = (inner(xi + h) - 2.0 * inner(xi) + inner(xi - h)) / (h * h);
        }
        const double v = std::pow(t, a.alpha()) * std::norm(d);
        vals.push_back(v);
        tab.rows.push_back({t, v});
    }
    rep.tables.push_back(tab);

    bool decreasing = true;
    for (std::size_t i = 0; i + 1 < vals.size(); ++i)
        decreasing = decreasing && vals[i + 1] <= vals[i] * (1.0 + 1e-9);
    rep.add(io::CheckRecord::boolean("smoothing.monotone_decrease", decreasing));
    if (!vals.empty() && vals.front() > 0.0) {
        rep.add(io::CheckRecord::upper_bound("smoothing.final_over_first_x_factor",
                                             vals.back() * decrease_factor,
                                             vals.front(),
                                             "last value at least factor below first"));
    }
    return rep;
}

}  // namespace sector_rkhs::bergman
