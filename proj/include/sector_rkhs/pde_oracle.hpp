#ifndef SECTOR_RKHS_PDE_ORACLE_HPP
#define SECTOR_RKHS_PDE_ORACLE_HPP

#include <functional>
#include <vector>

#include "sector_rkhs/boundary_signal.hpp"
#include "sector_rkhs/diagnostics.hpp"
#include "sector_rkhs/heat_kernel.hpp"

namespace sector_rkhs::pde {

using transform::BoundarySignal;

/// Spatial nodes x_0 = eps < ... < x_M = x_max (geometrically graded toward
/// the degenerate end) with a uniform time step.
struct FDGrid {
    std::vector<double> x;
    double dt = 0.0;
    int steps = 0;

    static FDGrid graded(double eps, double x_max, int m_nodes, double T, int nt);
    double T() const { return dt * steps; }
};

/// Dense Crank-Nicolson field u[n][i] at times n*dt and grid nodes x_i.
struct SolutionField {
    std::vector<double> x;
    double dt = 0.0;
    std::vector<std::vector<double>> u;

    double value(int n, int i) const { return u[n][i]; }
    /// bilinear interpolation in (x, t)
    double at(double xq, double tq) const;
};

/// Crank-Nicolson (theta = 1/2) for du/dt = x^(2(a-1)/a) d2u/dx2 with
/// u(eps,t) = g(t), u(x_max,t) = 0, u(.,0) = 0. The first two steps are
/// replaced by four implicit-Euler half steps to damp the incompatible-corner
/// mode when g(0) != 0. The tridiagonal solve is a scalar Thomas sweep.
SolutionField solve_fd(const AlphaParam& a, double T, const BoundarySignal& g,
                       const FDGrid& grid,
                       std::vector<std::string>* warnings = nullptr);

struct Region {
    double x_lo, x_hi;
};

/// Compares a finite-difference field against an analytic-route evaluator at
/// the final time over the region: reports L-infinity (relative to the sup of
/// the analytic values) and weighted-L2 errors.
io::DiagnosticsReport compare_fields(const SolutionField& fd,
                                     const std::function<double(double)>& analytic_at_T,
                                     const Region& region, double rel_tol);

/// Smallest dyadic x with W_alpha(x, T) below the tail tolerance.
double choose_x_max(const AlphaParam& a, double T, double tail_tol = 1e-8);

}  // namespace sector_rkhs::pde

#endif  // SECTOR_RKHS_PDE_ORACLE_HPP
