#ifndef SECTOR_RKHS_BOUNDARY_SIGNAL_HPP
#define SECTOR_RKHS_BOUNDARY_SIGNAL_HPP

#include <complex>
#include <functional>
#include <memory>
#include <vector>

namespace sector_rkhs::transform {

using cplx = std::complex<double>;

/// Boundary datum g on (0, t_end): an evaluable function or a sampled table
/// with monotone-cubic interpolation. Complex-valued; the weighted norm is
/// ||g||^2 = (1/t^alpha) int_0^t |g|^2 tau^alpha dtau.
class BoundarySignal {
public:
    enum class Smoothness { l2_only, continuous, c1, c2, smooth };

    /// Function-backed signal. `analytic` (optional) evaluates the analytic
    /// continuation at complex time arguments; supplied for entire data
    /// like polynomials, it enables rotated-contour quadrature downstream.
    /// `derivatives[k]` (optional) evaluates the (k+1)-th time derivative.
    static BoundarySignal from_function(
        double t_end, std::function<cplx(double)> g, Smoothness s,
        std::function<cplx(cplx)> analytic = nullptr,
        std::vector<std::function<cplx(double)>> derivatives = {});

    /// Sampled signal; taus must be strictly increasing within [0, t_end].
    /// Interpolated with a Fritsch-Carlson monotone cubic on each of the
    /// real and imaginary channels (C^1).
    static BoundarySignal from_samples(double t_end, std::vector<double> taus,
                                       std::vector<cplx> values, Smoothness s);

    static BoundarySignal constant(double t_end, cplx c);
    /// g(tau) = c * tau^k (entire, analytic evaluator attached).
    static BoundarySignal monomial(double t_end, int k, cplx c = 1.0);

    cplx operator()(double tau) const;
    /// m-th time derivative (m >= 1). Requires smoothness >= C^m; sampled
    /// signals differentiate the interpolant (m <= 1), function signals use
    /// the attached derivative or refuse.
    cplx derivative(double tau, int m) const;

    bool has_analytic() const { return static_cast<bool>(analytic_); }
    cplx analytic_at(cplx tau) const;

    double t_end() const { return t_end_; }
    Smoothness smoothness() const { return smoothness_; }
    bool is_sampled() const { return sampled_; }

    /// (1/t^alpha) int_0^t |g|^2 tau^alpha dtau.
    double weighted_norm_sq(double alpha) const;

private:
    BoundarySignal() = default;
    double t_end_ = 0.0;
    Smoothness smoothness_ = Smoothness::l2_only;
    bool sampled_ = false;
    std::function<cplx(double)> eval_;
    std::function<cplx(double)> interp_deriv_;
    std::function<cplx(cplx)> analytic_;
    std::vector<std::function<cplx(double)>> derivatives_;
};

}  // namespace sector_rkhs::transform

#endif  // SECTOR_RKHS_BOUNDARY_SIGNAL_HPP
