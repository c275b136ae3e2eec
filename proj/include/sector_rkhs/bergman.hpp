#ifndef SECTOR_RKHS_BERGMAN_HPP
#define SECTOR_RKHS_BERGMAN_HPP

#include <functional>
#include <vector>

#include "sector_rkhs/boundary_signal.hpp"
#include "sector_rkhs/diagnostics.hpp"
#include "sector_rkhs/heat_kernel.hpp"
#include "sector_rkhs/mesh.hpp"

namespace sector_rkhs::bergman {

using inversion::SectorMesh;
using transform::BoundarySignal;

/// Domain + weight order of a weighted Bergman kernel.
struct WeightedKernelSpec {
    enum class Domain { half_plane, sector };
    Domain domain = Domain::half_plane;
    double nu = 0.0;      // weight order, > -1
    double alpha = 2.0;   // sector opening (sector domain only), 0 < alpha <= 2

    static WeightedKernelSpec halfplane(double nu = 0.0);
    static WeightedKernelSpec sector(const AlphaParam& a, double nu);
};

/// Closed-form weighted Bergman kernels:
///   half-plane: (nu+1) / (pi^(1+nu/2) (z + conj w)^(nu+2))
///   sector:     2^(2+nu)(nu+1) (z conj w)^((2-alpha)/alpha (1+nu/2))
///               / (alpha^(2+nu) pi^(1+nu/2) (z^(2/a) + conj(w)^(2/a))^(nu+2))
cplx bergman_kernel(const WeightedKernelSpec& spec, cplx z, cplx w);

/// A biholomorphism with derivative; `deriv_pow(z, e)` must supply the
/// declared branch of (Phi'(z))^e when transplanting with nu != 0.
struct Biholomorphism {
    std::function<cplx(cplx)> map;
    std::function<cplx(cplx)> deriv;
    std::function<cplx(cplx, double)> deriv_pow;

    static Biholomorphism identity();
    /// z -> z^(2/alpha) from the sector onto the half-plane, principal
    /// branches throughout (log Phi' is single-valued on the sector).
    static Biholomorphism sector_to_halfplane(const AlphaParam& a);
};

using KernelFn = std::function<cplx(cplx, cplx)>;

/// Change-of-domain law for weighted Bergman kernels:
///   K_1(z,w) = Phi'(z)^(1+nu/2) K_2(Phi z, Phi w) conj(Phi'(w)^(1+nu/2)).
/// Throws std::invalid_argument if nu != 0 and no branch is declared.
cplx conformal_transplant(const KernelFn& base, const Biholomorphism& phi,
                          double nu, cplx z, cplx w);

/// Reproducing kernel of the image space,
///   (4 z conj w / (alpha B(a/2,a/2))) e^{-(a^2/4t)(zeta_z + conj zeta_w)}
///     / (zeta_z + conj zeta_w)^(alpha+1),  zeta = z^(2/alpha).
cplx rkhs_kernel(const AlphaParam& a, double t, cplx z, cplx w);

/// Independent oracle: direct quadrature of
///   int_0^t K(z, t-tau) conj(K(w, t-tau)) (tau/t)^alpha dtau.
cplx rkhs_kernel_integral(const AlphaParam& a, double t, cplx z, cplx w,
                          double rel_tol = 1e-10);

/// Weighted-measure density on the sector (z strictly inside):
///   pi^-1 2^(alpha-1) B(a/2,a/2) |z|^(4(1-alpha)/alpha)
///     e^{(a^2/2t) Re zeta} (Re zeta)^(alpha-1).
double measure_density(const AlphaParam& a, double t, cplx z);
/// log of the density (the exponential factor overflows well inside the
/// usable range, so downstream code composes in log space).
double measure_log_density(const AlphaParam& a, double t, cplx z);
/// algebraic part only (density without the exponential factor).
double measure_density_alg(const AlphaParam& a, cplx z);

/// Element of the image space, kept as the envelope-stripped evaluator
///   F(z) = S(z) * exp(-(alpha^2/4t) z^(2/alpha));
/// S is bounded on the sector for all members arising here, which makes
/// measure-weighted sums stable at any truncation radius (the growing
/// density exponential cancels against the envelope analytically).
class GSpaceElement {
public:
    cplx eval(cplx z) const;
    cplx eval_scaled(cplx z) const { return scaled_(z); }
    bool has_factor() const { return static_cast<bool>(factor_); }
    /// Bergman factor f with F = z^((a-1)(a+2)/2a) e^{-(a^2/4t) zeta} f(z).
    cplx factor(cplx z) const;
    double t_fixed() const { return t_; }

    /// F = z^q e^{-(a^2/4t) zeta} f(z) from its Bergman factor f.
    static GSpaceElement from_bergman_factor(const AlphaParam& a, double t,
                                             std::function<cplx(cplx)> f);
    /// F = L_t^alpha g (the transform image of boundary data g).
    static GSpaceElement from_signal(const AlphaParam& a, double t,
                                     BoundarySignal g);
    /// F = K(., w; t), the kernel section at w.
    static GSpaceElement kernel_section(const AlphaParam& a, double t, cplx w);
    /// Arbitrary evaluable F; the scaled form multiplies by the growing
    /// exponential, so this is only safe on moderate truncations.
    static GSpaceElement from_raw(const AlphaParam& a, double t,
                                  std::function<cplx(cplx)> F);

private:
    GSpaceElement(const AlphaParam& a, double t) : a_(a), t_(t) {}
    AlphaParam a_;
    double t_;
    std::function<cplx(cplx)> scaled_;
    std::function<cplx(cplx)> factor_;
};

/// Default truncation for inner-product quadrature. The inner radius is set
/// by the measure's near-origin behavior r^((2-alpha)/alpha) dr and the
/// angular margin by the boundary-strip scaling delta^alpha, so the
/// discarded mass is about `trunc_mass` at each cut uniformly in alpha.
SectorMesh inner_product_mesh(const AlphaParam& a, double r_max = 48.0,
                              int order = 10, double trunc_mass = 3e-6);

/// Mesh quadrature of int F conj(G) dmu over the mesh region. The envelope
/// exponentials cancel against the measure exactly, so the summand is
/// scaledF * conj(scaledG) * algebraic density.
cplx gspace_inner(const AlphaParam& a, double t, const GSpaceElement& F,
                  const GSpaceElement& G, const SectorMesh& mesh);

/// Scaled values of F at every mesh node (the expensive half of an inner
/// product with F = L g; reusable across many partners G).
std::vector<cplx> cache_scaled(const GSpaceElement& F, const SectorMesh& mesh);
cplx gspace_inner_cached(const AlphaParam& a, const std::vector<cplx>& f_scaled,
                         const GSpaceElement& G, const SectorMesh& mesh);

struct InnerResult {
    cplx value{};
    cplx refined_value{};
    double rel_change = 0.0;
    bool converged = false;
};
/// Same, with a refined-mesh comparison for a tail/resolution report.
InnerResult gspace_inner_checked(const AlphaParam& a, double t,
                                 const GSpaceElement& F, const GSpaceElement& G,
                                 const SectorMesh& mesh, double rel_tol = 1e-3);

/// Norm through the factorized route: the weighted-Bergman norm of the
/// factor f times the closed-form constant; must agree with
/// sqrt(gspace_inner(F,F)).
double gspace_norm_factorized(const AlphaParam& a, double t,
                              const std::function<cplx(cplx)>& f,
                              const SectorMesh& mesh);

/// Tabulates x^(j+(alpha+1)/2) d^j f(x) on a geometric grid and tests that
/// the last `tail_points` values decrease toward 0 at both ends.
io::DiagnosticsReport decay_profile(const AlphaParam& a,
                                    const std::function<cplx(double)>& f, int j,
                                    double x_lo = 1e-3, double x_hi = 1e3,
                                    int per_decade = 6, int tail_points = 4);

/// Tabulates t^alpha |d^j_xi (L_t^a g(xi) xi^{-q} e^{(a^2/4t) xi^(2/a)})|^2
/// along a decreasing t sequence; the exponential factors are combined
/// analytically before evaluation.
io::DiagnosticsReport smoothing_rate(const AlphaParam& a, const BoundarySignal& g,
                                     int j, double xi,
                                     const std::vector<double>& t_sequence,
                                     double decrease_factor = 10.0);

}  // namespace sector_rkhs::bergman

#endif  // SECTOR_RKHS_BERGMAN_HPP
