#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sector_rkhs/pde_oracle.hpp"
#include "sector_rkhs/transform.hpp"

using namespace sector_rkhs;
namespace pd = pde;
using transform::BoundarySignal;

TEST_CASE("graded grid invariants") {
    auto g = pd::FDGrid::graded(1e-3, 16.0, 100, 1.0, 50);
    CHECK(g.x.front() == 1e-3);
    CHECK(g.x.back() == 16.0);
    for (std::size_t i = 1; i < g.x.size(); ++i) {
        CHECK(g.x[i] > g.x[i - 1]);
        // geometric grading: ratio constant
        if (i >= 2)
            CHECK(g.x[i] / g.x[i - 1] ==
                  doctest::Approx(g.x[i - 1] / g.x[i - 2]).epsilon(1e-9));
    }
    CHECK(g.T() == doctest::Approx(1.0));
    CHECK_THROWS_AS(pd::FDGrid::graded(0.0, 1.0, 100, 1.0, 50), std::invalid_argument);
    CHECK_THROWS_AS(pd::FDGrid::graded(1e-3, 16.0, 4, 1.0, 50), std::invalid_argument);
}

TEST_CASE("solver: zero data and bounds") {
    AlphaParam a(1.5);
    auto grid = pd::FDGrid::graded(1e-3, 8.0, 64, 0.5, 32);
    auto fd = pd::solve_fd(a, 0.5, BoundarySignal::constant(0.5, 0.0), grid);
    for (const auto& row : fd.u)
        for (double v : row) CHECK(v == 0.0);

    auto fd1 = pd::solve_fd(a, 0.5, BoundarySignal::constant(0.5, 1.0), grid);
    for (const auto& row : fd1.u)
        for (double v : row) {
            CHECK(v >= -1e-6);
            CHECK(v <= 1.0 + 1e-6);
        }
}

TEST_CASE("solver matches the classical heat solution at alpha = 1") {
    AlphaParam a(1.0);
    const double T = 1.0;
    auto grid = pd::FDGrid::graded(5e-4, 16.0, 200, T, 200);
    auto fd = pd::solve_fd(a, T, BoundarySignal::constant(T, 1.0), grid);
    double maxd = 0.0;
    for (std::size_t i = 0; i < grid.x.size(); ++i) {
        const double x = grid.x[i];
        if (x < 0.05 || x > 8.0) continue;
        maxd = std::max(maxd, std::abs(fd.u.back()[i] - std::erfc(0.5 * x)));
    }
    CHECK(maxd < 2e-3);
}

TEST_CASE("solver matches the analytic transform route") {
    AlphaParam a(1.5);
    const double T = 1.0;
    auto g = BoundarySignal::constant(T, 1.0);
    const double xmax = pd::choose_x_max(a, T);
    CHECK(profile_w(a, xmax, T) < 1e-8);
    auto grid = pd::FDGrid::graded(1e-3, xmax, 200, T, 200);
    auto fd = pd::solve_fd(a, T, g, grid);
    auto rep = pd::compare_fields(
        fd, [&](double x) { return profile_w(a, x, T); }, {0.05, 0.5 * xmax}, 1e-2);
    CHECK(rep.all_pass());
}

TEST_CASE("causality and warnings") {
    AlphaParam a(1.0);
    auto grid = pd::FDGrid::graded(1e-3, 8.0, 64, 0.25, 32);
    auto g1 = BoundarySignal::constant(1.0, 1.0);
    auto g2 = BoundarySignal::from_function(
        1.0,
        [](double tau) { return tau <= 0.25 ? cplx(1.0) : cplx(5.0); },
        BoundarySignal::Smoothness::l2_only);
    auto u1 = pd::solve_fd(a, 0.25, g1, grid);
    auto u2 = pd::solve_fd(a, 0.25, g2, grid);
    for (std::size_t i = 0; i < u1.u.back().size(); ++i)
        CHECK(u1.u.back()[i] == doctest::Approx(u2.u.back()[i]).epsilon(1e-14));

    // singular-coefficient warning for alpha < 1 with a tiny left boundary
    AlphaParam a7(0.7);
    std::vector<std::string> warn;
    auto gridw = pd::FDGrid::graded(1e-6, 8.0, 64, 0.25, 8);
    pd::solve_fd(a7, 0.25, g1, gridw, &warn);
    CHECK(!warn.empty());
}

TEST_CASE("field interpolation") {
    AlphaParam a(1.0);
    auto grid = pd::FDGrid::graded(1e-3, 8.0, 64, 1.0, 32);
    auto fd = pd::solve_fd(a, 1.0, BoundarySignal::constant(1.0, 1.0), grid);
    // interpolated value agrees with the nodal value at a node
    const double x = fd.x[30];
    CHECK(fd.at(x, 1.0) == doctest::Approx(fd.u.back()[30]).epsilon(1e-12));
}
