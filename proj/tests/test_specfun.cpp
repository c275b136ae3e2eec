#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "sector_rkhs/specfun.hpp"

using namespace sector_rkhs::specfun;

TEST_CASE("gamma anchors") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
    // oracle: int_0^inf x^{1.5} e^{-x} dx, frozen to 1.3293403881791370
    const double by_quadrature = oracle::integrate_to_inf(
        [](double u) { return std::pow(u, 1.5) * std::exp(-u); }, 0.0);
    CHECK(by_quadrature == doctest::Approx(1.3293403881791370).epsilon(1e-11));
    CHECK(gamma_fn(2.5) == doctest::Approx(1.3293403881791370).epsilon(1e-12));
    // recurrence consistency
    CHECK(gamma_fn(4.3) == doctest::Approx(3.3 * gamma_fn(3.3)).epsilon(1e-13));
    CHECK(std::exp(log_gamma(20.0)) == doctest::Approx(gamma_fn(20.0)).epsilon(1e-12));
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-1.5), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(200.0), std::overflow_error);
}

TEST_CASE("beta anchors") {
    CHECK(beta_fn(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(beta_fn(0.5, 0.5) == doctest::Approx(M_PI).epsilon(1e-13));
    // oracle: int_0^1 u^{1/2} (1-u)^{1/2} du = pi/8
    const double by_quadrature = oracle::integrate(
        [](double u) { return std::sqrt(u) * std::sqrt(1.0 - u); }, 0.0, 1.0, 1e-14);
    CHECK(by_quadrature == doctest::Approx(M_PI / 8.0).epsilon(1e-9));
    CHECK(beta_fn(1.5, 1.5) == doctest::Approx(M_PI / 8.0).epsilon(1e-12));
    CHECK_THROWS_AS(beta_fn(0.0, 1.0), std::domain_error);
}

TEST_CASE("regularized upper incomplete gamma") {
    CHECK(reg_upper_gamma(0.7, 0.0) == 1.0);
    CHECK(reg_upper_gamma(1.0, 1.7) == doctest::Approx(std::exp(-1.7)).epsilon(1e-13));
    // oracle: int_1^inf t^{-1/2} e^{-t} dt / Gamma(1/2), frozen 0.15729920705028513
    const double by_quadrature =
        oracle::integrate_to_inf(
            [](double u) { return std::exp(-u) / std::sqrt(u); }, 1.0) /
        std::sqrt(M_PI);
    CHECK(by_quadrature == doctest::Approx(0.15729920705028513).epsilon(1e-11));
    CHECK(reg_upper_gamma(0.5, 1.0) ==
          doctest::Approx(0.15729920705028513).epsilon(1e-12));
    // monotone nonincreasing in x, values in [0,1]
    double prev = 1.0;
    for (int i = 1; i <= 50; ++i) {
        const double q = reg_upper_gamma(2.3, 0.3 * i);
        CHECK(q <= prev);
        CHECK(q >= 0.0);
        prev = q;
    }
    // series/continued-fraction switch point continuity (x = s + 1)
    const double s = 1.7;
    CHECK(reg_upper_gamma(s, s + 1.0 - 1e-9) ==
          doctest::Approx(reg_upper_gamma(s, s + 1.0 + 1e-9)).epsilon(1e-8));
    CHECK_THROWS_AS(reg_upper_gamma(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(reg_upper_gamma(1.0, -1.0), std::domain_error);
}

TEST_CASE("generalized complementary error function") {
    CHECK(erfc_alpha(0.8, 0.0) == 1.0);
    CHECK(erfc_alpha(3.1, 0.0) == 1.0);
    // alpha = 2 closed form e^{-lambda^2}
    for (double lam : {0.2, 1.0, 2.5})
        CHECK(erfc_alpha(2.0, lam) ==
              doctest::Approx(std::exp(-lam * lam)).epsilon(1e-13));
    // alpha = 1 is the classical erfc; frozen value at lambda = 1
    CHECK(erfc_alpha(1.0, 1.0) == doctest::Approx(0.15729920705028513).epsilon(1e-12));
    // defining-integral oracle at a non-classical alpha
    const double alpha = 0.7, lam = 1.3;
    const double by_quadrature =
        2.0 / gamma_fn(0.5 * alpha) *
        oracle::integrate_to_inf(
            [&](double rho) { return std::pow(rho, alpha - 1.0) * std::exp(-rho * rho); },
            lam);
    CHECK(erfc_alpha(alpha, lam) == doctest::Approx(by_quadrature).epsilon(1e-11));
    CHECK(erfc_alpha(alpha, lam) == doctest::Approx(0.040239504166257259).epsilon(1e-11));
    CHECK_THROWS_AS(erfc_alpha(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(erfc_alpha(1.0, -0.1), std::domain_error);
}

TEST_CASE("erfc_alpha ODE residual vanishes at O(h^2)") {
    for (auto [alpha, lam] : {std::pair{2.0, 1.0}, {1.0, 0.5}, {0.7, 2.0}}) {
        const double r1 = std::abs(erfc_alpha_ode_residual(alpha, lam, 1e-2));
        const double r2 = std::abs(erfc_alpha_ode_residual(alpha, lam, 1e-3));
        const double r3 = std::abs(erfc_alpha_ode_residual(alpha, lam, 1e-4));
        CHECK(r2 < r1);
        CHECK(r3 < r2);
        CHECK(std::log10(r1 / r2) == doctest::Approx(2.0).epsilon(0.05));
    }
    CHECK_THROWS_AS(erfc_alpha_ode_residual(1.0, 0.1, 0.2), std::domain_error);
}

TEST_CASE("modified Bessel K: two independent routes") {
    // frozen anchors (half-order closed form and tabulated values)
    CHECK(bessel_k(0.5, 1.0) ==
          doctest::Approx(std::sqrt(0.5 * M_PI) * std::exp(-1.0)).epsilon(1e-12));
    CHECK(bessel_k(1.0, 1.0) == doctest::Approx(0.60190723019723457).epsilon(1e-11));
    CHECK(bessel_k_rep(0.5, 1.0) == doctest::Approx(0.46106850444789456).epsilon(1e-10));
    CHECK(bessel_k_rep(1.0, 1.0) == doctest::Approx(0.60190723019723457).epsilon(1e-9));
    CHECK(bessel_k_rep(0.0, 2.0) == doctest::Approx(0.11389387274953344).epsilon(1e-9));
    for (double nu : {0.0, 0.35, 1.5})
        for (double x : {0.1, 1.0, 10.0})
            CHECK(bessel_k(nu, x) == doctest::Approx(bessel_k_rep(nu, x)).epsilon(1e-8));
    // decreasing in x
    CHECK(bessel_k(0.8, 2.0) < bessel_k(0.8, 1.0));
    CHECK_THROWS_AS(bessel_k(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k(-0.2, 1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k_rep(-0.6, 1.0), std::domain_error);
}

TEST_CASE("principal-branch complex power") {
    using sector_rkhs::specfun::cplx;
    CHECK(std::abs(cpow_principal(cplx(1, 0), 5.3) - cplx(1, 0)) < 1e-15);
    CHECK(std::abs(cpow_principal(cplx(0, 1), 2.0) - cplx(-1, 0)) < 1e-15);
    // sector boundary point maps inside the half-plane (alpha = 1)
    const cplx z = std::polar(1.0, M_PI / 8.0);
    const cplx sq = cpow_principal(z, 2.0);
    CHECK(sq.real() > 0.0);
    CHECK(std::abs(sq - std::polar(1.0, M_PI / 4.0)) < 1e-15);
    CHECK_THROWS_AS(cpow_principal(cplx(0, 0), 1.0), std::domain_error);
    CHECK_THROWS_AS(cpow_principal(cplx(-2, 0), 0.5), std::domain_error);
}
