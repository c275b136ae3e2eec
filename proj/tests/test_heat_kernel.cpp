#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sector_rkhs/heat_kernel.hpp"
#include "sector_rkhs/specfun.hpp"

using namespace sector_rkhs;

TEST_CASE("AlphaParam caches consistent derived exponents") {
    for (double al : {0.5, 1.0, 1.5, 2.0, 3.7}) {
        AlphaParam a(al);
        CHECK(a.two_over_alpha() == doctest::Approx(2.0 / al).epsilon(1e-15));
        CHECK(a.diffusion_exponent() == doctest::Approx(2.0 * (al - 1.0) / al).epsilon(1e-15));
        CHECK(a.factor_power() ==
              doctest::Approx((al - 1.0) * (al + 2.0) / (2.0 * al)).epsilon(1e-15));
        CHECK(a.time_power() == doctest::Approx(0.5 * al + 1.0).epsilon(1e-15));
        CHECK(a.sector_admissible() == (al <= 2.0));
    }
    CHECK_THROWS_AS(AlphaParam(0.0), std::domain_error);
    CHECK_THROWS_AS(AlphaParam(-1.0), std::domain_error);
}

TEST_CASE("SectorPoint validation") {
    AlphaParam a(1.0);
    CHECK_NOTHROW(SectorPoint(a, cplx(1.0, 0.0)));  // positive axis is interior
    CHECK_NOTHROW(SectorPoint(a, std::polar(1.0, 0.99 * a.half_angle())));
    CHECK_THROWS_AS(SectorPoint(a, std::polar(1.0, a.half_angle())), std::domain_error);
    CHECK_THROWS_AS(SectorPoint(a, cplx(0.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(SectorPoint(AlphaParam(3.0), cplx(1.0, 0.0)), std::domain_error);
}

TEST_CASE("kernel value and limits") {
    AlphaParam a2(2.0);
    CHECK(kernel_k(a2, 1.0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    // positivity
    for (double x : {0.3, 1.0, 2.0})
        for (double t : {0.5, 1.0, 4.0}) CHECK(kernel_k(AlphaParam(0.8), x, t) > 0.0);
    // t -> inf decay at rate t^{-3/2} for alpha = 1
    AlphaParam a1(1.0);
    const double k2 = kernel_k(a1, 1.0, 1e2);
    const double k4 = kernel_k(a1, 1.0, 1e4);
    const double k6 = kernel_k(a1, 1.0, 1e6);
    CHECK(k4 / k2 == doctest::Approx(std::pow(1e-2, 1.5)).epsilon(1e-2));
    CHECK(k6 / k4 == doctest::Approx(std::pow(1e-2, 1.5)).epsilon(1e-3));
    // complex equals real on the axis
    CHECK(std::abs(kernel_k(a1, cplx(0.7, 0.0), 2.0) - kernel_k(a1, 0.7, 2.0)) < 1e-15);
    CHECK_THROWS_AS(kernel_k(a1, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(kernel_k(a1, cplx(1.0, 2.0), 1.0), std::domain_error);  // outside
    CHECK_THROWS_AS(kernel_k(AlphaParam(2.5), cplx(1.0, 0.1), 1.0), std::domain_error);
}

TEST_CASE("profile anchors and monotonicity") {
    AlphaParam a1(1.0);
    CHECK(profile_w(a1, 1.0, 1.0) == doctest::Approx(0.47950012218695346).epsilon(1e-12));
    AlphaParam a2(2.0);
    for (double x : {0.2, 1.0})
        for (double t : {0.5, 2.0})
            CHECK(profile_w(a2, x, t) == doctest::Approx(std::exp(-x / t)).epsilon(1e-12));
    AlphaParam a(1.4);
    CHECK(profile_w(a, 1e-9, 1.0) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(profile_w(a, 30.0, 1.0) < 1e-8);
    CHECK(profile_w(a, 2.0, 1.0) < profile_w(a, 1.0, 1.0));
    CHECK(profile_w(a, 1.0, 2.0) > profile_w(a, 1.0, 1.0));
}

TEST_CASE("degenerate operator stencil") {
    AlphaParam a(1.5);
    auto lin = [](double x) { return 2.0 * x + 1.0; };
    CHECK(apply_d(a, lin, 1.0, 0.1) == doctest::Approx(0.0).epsilon(1e-10));
    AlphaParam a1(1.0);
    auto sq = [](double x) { return x * x; };
    CHECK(apply_d(a1, sq, 1.3, 0.05) == doctest::Approx(2.0).epsilon(1e-9));
    // d_t K = D K (both stencils O(h^2))
    AlphaParam a7(0.7);
    const double x = 1.1, t = 0.9;
    auto resid = [&](double h) {
        const double dt = (kernel_k(a7, x, t + h) - kernel_k(a7, x, t - h)) / (2 * h);
        auto ker = [&](double xx) { return kernel_k(a7, xx, t); };
        return std::abs(dt - apply_d(a7, ker, x, h));
    };
    CHECK(std::log2(resid(0.02) / resid(0.01)) == doctest::Approx(2.0).epsilon(0.05));
    CHECK_THROWS_AS(apply_d(a, lin, 1.0, 0.6), std::domain_error);  // h >= x/2
    // iterated application reproduces d_t^2 K on the kernel
    auto ker = [&](double xx) { return kernel_k(a7, xx, t); };
    const double d2t = (kernel_k(a7, x, t + 0.01) - 2 * kernel_k(a7, x, t) +
                        kernel_k(a7, x, t - 0.01)) /
                       1e-4;
    CHECK(apply_d_iter(a7, ker, x, 0.01, 2) == doctest::Approx(d2t).epsilon(1e-3));
}

TEST_CASE("kernel bound margin") {
    AlphaParam a(1.5);
    SectorPoint z(a, std::polar(1.2, 0.4 * a.half_angle()));
    const double m1 = kernel_bound_margin(a, z, 0.5);
    CHECK(std::isfinite(m1));
    CHECK(m1 > 0.0);
    // vanishes at both time extremes
    CHECK(kernel_bound_margin(a, z, 1e-6) < 1e-10);
    CHECK(kernel_bound_margin(a, z, 1e6) < 1e-3 * m1);
    // boundary ray rejected (Re z^{2/alpha} = 0 not representable as a
    // SectorPoint at all)
    CHECK_THROWS_AS(SectorPoint(a, std::polar(1.0, a.half_angle())), std::domain_error);
}
