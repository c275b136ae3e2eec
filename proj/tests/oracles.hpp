// Test-only oracles, deliberately independent of the library's quadrature
// and special-function code paths: plain adaptive Simpson plus a few
// closed-form reductions. Used to derive the frozen expected values.

#ifndef SECTOR_RKHS_TEST_ORACLES_HPP
#define SECTOR_RKHS_TEST_ORACLES_HPP

#include <cmath>
#include <functional>

namespace oracle {

inline double simpson_rec(const std::function<double(double)>& f, double a,
                          double b, double fa, double fm, double fb, double whole,
                          double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

/// Adaptive Simpson on [a,b].
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

/// Semi-infinite integral of a decaying integrand by doubling panels.
inline double integrate_to_inf(const std::function<double(double)>& f, double a,
                               double tol = 1e-13) {
    double total = 0.0, lo = a, width = 1.0;
    int quiet = 0;
    for (int k = 0; k < 80; ++k) {
        const double part = integrate(f, lo, lo + width, tol);
        total += part;
        if (std::abs(part) < 1e-16 + 1e-14 * std::abs(total)) ++quiet;
        else quiet = 0;
        if (quiet >= 2) break;
        lo += width;
        width *= 2.0;
    }
    return total;
}

}  // namespace oracle

#endif  // SECTOR_RKHS_TEST_ORACLES_HPP
