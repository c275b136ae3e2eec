#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sector_rkhs/bergman.hpp"
#include "sector_rkhs/inversion.hpp"
#include "sector_rkhs/transform.hpp"

using namespace sector_rkhs;
namespace iv = inversion;
namespace bg = bergman;
using transform::BoundarySignal;

TEST_CASE("exhaustion meshes") {
    AlphaParam a(1.0);
    CHECK_THROWS_AS(iv::build_exhaustion(a, 1), std::invalid_argument);
    auto e2 = iv::build_exhaustion(a, 2);
    CHECK(e2.size() > 0);
    for (std::size_t i = 0; i < e2.size(); ++i) {
        CHECK(e2.r[i] >= 0.5);
        CHECK(e2.r[i] <= 2.0);
        CHECK(std::abs(e2.theta[i]) < a.half_angle() - 0.5);
        CHECK(e2.weight[i] > 0.0);
        // nested inside the E_3 region
        CHECK(e2.r[i] >= 1.0 / 3.0);
        CHECK(e2.r[i] <= 3.0);
        CHECK(std::abs(e2.theta[i]) < a.half_angle() - 1.0 / 3.0);
    }
    // deterministic for fixed inputs
    auto e2b = iv::build_exhaustion(a, 2);
    REQUIRE(e2.size() == e2b.size());
    for (std::size_t i = 0; i < e2.size(); ++i) CHECK(e2.z[i] == e2b.z[i]);
    // angular width empty -> rejected
    CHECK_THROWS_AS(iv::build_exhaustion(AlphaParam(0.5), 2), std::invalid_argument);
    // refinement produces a strictly finer mesh
    auto fine = e2.refined();
    CHECK(fine.size() > e2.size());
}

TEST_CASE("mesh integrates a known area") {
    // integral of 1 dA over the truncated sector = (r_max^2 - r_min^2) * width/2...
    AlphaParam a(2.0);
    iv::MeshParams p;
    p.r_min = 0.5;
    p.r_max = 2.0;
    p.delta = 0.3;
    p.order = 8;
    auto mesh = iv::build_sector_mesh(a, p);
    double area = 0.0;
    for (double w : mesh.weight) area += w;
    const double width = 2.0 * (a.half_angle() - 0.3);
    CHECK(area == doctest::Approx(0.5 * (4.0 - 0.25) * width).epsilon(1e-12));
}

TEST_CASE("invert: linearity, zero and tau guards") {
    AlphaParam a(1.5);
    const double t = 1.0;
    auto zero = bg::GSpaceElement::from_bergman_factor(a, t, [](cplx) { return cplx(0); });
    CHECK(std::abs(iv::invert(a, t, zero, 0.5, 4)) == 0.0);

    auto F1 = bg::GSpaceElement::kernel_section(a, t, cplx(1.0, 0.2));
    auto F2 = bg::GSpaceElement::kernel_section(a, t, cplx(0.6, -0.1));
    auto combo = bg::GSpaceElement::from_raw(
        a, t, [&](cplx z) { return 2.0 * F1.eval(z) - 3.0 * F2.eval(z); });
    iv::InverseOptions opt;
    opt.tau_max_hint = 0.5;
    iv::InverseOperator o1(a, t, F1, 6, opt), o2(a, t, F2, 6, opt),
        oc(a, t, combo, 6, opt);
    const cplx lhs = oc.reconstruct(0.5);
    const cplx rhs = 2.0 * o1.reconstruct(0.5) - 3.0 * o2.reconstruct(0.5);
    CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-10);

    CHECK_THROWS_AS(o1.reconstruct(0.0), std::domain_error);
    CHECK_THROWS_AS(o1.reconstruct(t), std::domain_error);
    CHECK_THROWS_AS(o1.reconstruct(t * (1.0 - 1e-9)), std::domain_error);
}

TEST_CASE("roundtrip error decreases (small budget)") {
    AlphaParam a(2.0);
    const double t = 1.0;
    auto g = BoundarySignal::constant(t, 1.0);
    auto grid = iv::interior_tau_grid(t, 11);
    auto rep = iv::roundtrip_error(a, t, g, {4, 8}, grid);
    REQUIRE(rep.tables.size() == 1);
    const auto& rows = rep.tables[0].rows;
    REQUIRE(rows.size() == 2);
    CHECK(rows[1][3] < rows[0][3]);  // error decreasing in N
    // zero signal reconstructs to zero at every N
    auto zrep = iv::roundtrip_error(a, t, BoundarySignal::constant(t, 0.0), {4}, grid);
    CHECK(zrep.tables[0].rows[0][2] == 0.0);
    // grid touching the endpoints is rejected
    CHECK_THROWS_AS(iv::roundtrip_error(a, t, g, {4}, {0.0, 0.5}), std::domain_error);
    CHECK_THROWS_AS(iv::roundtrip_error(a, t, g, {4}, {0.5, t}), std::domain_error);
}

TEST_CASE("truncation stabilizes in N at fixed tau") {
    AlphaParam a(2.0);
    const double t = 1.0;
    auto g = BoundarySignal::constant(t, 1.0);
    auto F = bg::GSpaceElement::from_signal(a, t, g);
    iv::InverseOptions opt;
    opt.tau_max_hint = 0.5;
    double prev_gap = 1e300;
    cplx prev{};
    bool first = true;
    for (int N : {4, 8, 16}) {
        iv::InverseOperator op(a, t, F, N, opt);
        const cplx v = op.reconstruct(0.5);
        if (!first) {
            const double gap = std::abs(v - prev);
            CHECK(gap < prev_gap);
            prev_gap = gap;
        }
        prev = v;
        first = false;
    }
    // and the stabilized value is the boundary datum
    CHECK(prev.real() == doctest::Approx(1.0).epsilon(2e-2));
}
