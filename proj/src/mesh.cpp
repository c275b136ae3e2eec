#include "sector_rkhs/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include "sector_rkhs/quadrature.hpp"
#include "sector_rkhs/specfun.hpp"

namespace sector_rkhs::inversion {

namespace {

struct RawTile {
    double r0, r1, th0, th1;
};

cplx zeta_of(const AlphaParam& a, double r, double th) {
    return specfun::cpow_principal(std::polar(r, th), a.two_over_alpha());
}

// Worst still-alive exponent for this tile: exponents above it only see
// contributions below exp(-alive_exponent).
double binding_beta(const AlphaParam& a, const RawTile& t, const MeshParams& p) {
    if (p.beta_max <= 0.0) return 0.0;
    double re_min = std::numeric_limits<double>::max();
    const double rs[2] = {t.r0, t.r1};
    const double ths[3] = {t.th0, 0.5 * (t.th0 + t.th1), t.th1};
    for (double r : rs)
        for (double th : ths) re_min = std::min(re_min, zeta_of(a, r, th).real());
    re_min = std::max(re_min, 0.0);
    const double beta_star = (re_min > 0.0) ? p.alive_exponent / re_min
                                            : std::numeric_limits<double>::max();
    if (beta_star < p.beta_min) return -1.0;  // dead for every exponent in range
    return std::min(p.beta_max, beta_star);
}

// Variation of beta*zeta across the tile in each direction.
void zeta_variation(const AlphaParam& a, const RawTile& t, double& var_r,
                    double& var_th) {
    const double thm = 0.5 * (t.th0 + t.th1);
    const double rm = 0.5 * (t.r0 + t.r1);
    var_r = std::abs(zeta_of(a, t.r1, thm) - zeta_of(a, t.r0, thm));
    var_th = std::max(std::abs(zeta_of(a, rm, t.th1) - zeta_of(a, rm, t.th0)),
                      std::abs(zeta_of(a, t.r1, t.th1) - zeta_of(a, t.r1, t.th0)));
}

std::vector<double> radial_breaks(double r_min, double r_max, double ratio) {
    std::vector<double> b{r_min};
    double r = r_min;
    while (r * ratio < r_max) {
        r *= ratio;
        b.push_back(r);
    }
    b.push_back(r_max);
    return b;
}

// Angular panels on [-half, half]: graded geometrically off both ends (the
// density and the oscillatory factors vary fastest near the rays), uniform
// panels of width <= max_center in the middle.
std::vector<double> angular_breaks(double half, double grade, double edge0,
                                   double max_center) {
    std::vector<double> off{0.0};
    double w = edge0;
    double d = 0.0;
    while (d + w < 0.5 * half) {
        d += w;
        off.push_back(d);
        w *= grade;
    }
    std::vector<double> b;
    for (double o : off) b.push_back(-half + o);
    const double lo = b.back();
    const double hi = half - (off.empty() ? 0.0 : off.back());
    const int mid = std::max(1, static_cast<int>(std::ceil((hi - lo) / max_center)));
    for (int i = 1; i < mid; ++i) b.push_back(lo + (hi - lo) * i / mid);
    for (auto it = off.rbegin(); it != off.rend(); ++it) b.push_back(half - *it);
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end(),
                        [](double x, double y) { return std::abs(x - y) < 1e-15; }),
            b.end());
    return b;
}

}  // namespace

SectorMesh build_sector_mesh(const AlphaParam& a, const MeshParams& p) {
    a.require_sector("build_sector_mesh");
    if (!(p.r_min > 0.0) || !(p.r_max > p.r_min))
        throw std::invalid_argument("build_sector_mesh: need 0 < r_min < r_max");
    const double half = a.half_angle() - p.delta;
    if (!(half > 0.0))
        throw std::invalid_argument(
            "build_sector_mesh: angular width empty (delta >= pi*alpha/4)");
    if (p.order < 2 || p.order > 64)
        throw std::invalid_argument("build_sector_mesh: order out of range");

    SectorMesh mesh;
    mesh.alpha = a.alpha();
    mesh.params = p;

    const auto rb = radial_breaks(p.r_min, p.r_max, p.radial_ratio);
    const double edge0 = std::max(std::min(p.delta, half * 0.25), 1e-6);
    const auto tb = angular_breaks(half, p.angular_grade, edge0, 0.35);

    std::deque<RawTile> work;
    for (std::size_t i = 0; i + 1 < rb.size(); ++i)
        for (std::size_t j = 0; j + 1 < tb.size(); ++j)
            work.push_back({rb[i], rb[i + 1], tb[j], tb[j + 1]});

    std::vector<RawTile> done;
    const std::size_t nodes_per_tile =
        static_cast<std::size_t>(p.order) * static_cast<std::size_t>(p.order);
    const std::size_t tile_budget = std::max<std::size_t>(p.max_nodes / nodes_per_tile, 64);
    while (!work.empty()) {
        RawTile t = work.front();
        work.pop_front();
        bool split_r = false, split_th = false;
        if (done.size() + work.size() < tile_budget) {
            const double beta = binding_beta(a, t, p);
            if (beta > 0.0) {
                double vr, vth;
                zeta_variation(a, t, vr, vth);
                split_r = beta * vr > p.split_threshold;
                split_th = beta * vth > p.split_threshold;
            }
        } else {
            mesh.budget_exhausted = true;
        }
        if (!split_r && !split_th) {
            done.push_back(t);
            continue;
        }
        const double rm = std::sqrt(t.r0 * t.r1);  // geometric midpoint
        const double thm = 0.5 * (t.th0 + t.th1);
        if (split_r && split_th) {
            work.push_back({t.r0, rm, t.th0, thm});
            work.push_back({t.r0, rm, thm, t.th1});
            work.push_back({rm, t.r1, t.th0, thm});
            work.push_back({rm, t.r1, thm, t.th1});
        } else if (split_r) {
            work.push_back({t.r0, rm, t.th0, t.th1});
            work.push_back({rm, t.r1, t.th0, t.th1});
        } else {
            work.push_back({t.r0, t.r1, t.th0, thm});
            work.push_back({t.r0, t.r1, thm, t.th1});
        }
    }

    // deterministic node order: sort tiles by (r0, th0)
    std::sort(done.begin(), done.end(), [](const RawTile& x, const RawTile& y) {
        if (x.r0 != y.r0) return x.r0 < y.r0;
        return x.th0 < y.th0;
    });

    const auto& gl = quad::gauss_legendre(p.order);
    mesh.tiles.reserve(done.size());
    mesh.r.reserve(done.size() * nodes_per_tile);
    for (const RawTile& t : done) {
        SectorMesh::Tile tile{t.r0, t.r1, t.th0, t.th1, mesh.r.size(), 0};
        const double rc = 0.5 * (t.r0 + t.r1), rh = 0.5 * (t.r1 - t.r0);
        const double tc = 0.5 * (t.th0 + t.th1), th = 0.5 * (t.th1 - t.th0);
        for (int i = 0; i < p.order; ++i) {
            const double rr = rc + rh * gl.x[i];
            const double wr = rh * gl.w[i];
            for (int j = 0; j < p.order; ++j) {
                const double tt = tc + th * gl.x[j];
                const double wt = th * gl.w[j];
                mesh.r.push_back(rr);
                mesh.theta.push_back(tt);
                mesh.weight.push_back(wr * wt * rr);
                const cplx zz = std::polar(rr, tt);
                mesh.z.push_back(zz);
                mesh.zeta.push_back(specfun::cpow_principal(zz, a.two_over_alpha()));
            }
        }
        tile.count = nodes_per_tile;
        mesh.tiles.push_back(tile);
    }
    return mesh;
}

SectorMesh SectorMesh::refined() const {
    AlphaParam a(alpha);
    MeshParams p = params;
    p.order = std::min(p.order + 2, 48);
    p.radial_ratio = std::sqrt(p.radial_ratio);
    p.split_threshold *= 0.5;
    p.max_nodes *= 4;
    SectorMesh m = build_sector_mesh(a, p);
    m.exhaustion_index = exhaustion_index;
    return m;
}

SectorMesh build_exhaustion(const AlphaParam& a, int N, int order,
                            std::optional<double> delta, double beta_min,
                            double beta_max) {
    if (N < 2)
        throw std::invalid_argument(
            "build_exhaustion: N >= 2 required (N = 1 has empty interior)");
    MeshParams p;
    p.r_min = 1.0 / N;
    p.r_max = static_cast<double>(N);
    p.delta = delta.value_or(1.0 / N);
    p.order = order;
    p.beta_min = beta_min;
    p.beta_max = beta_max;
    SectorMesh m = build_sector_mesh(a, p);
    m.exhaustion_index = N;
    return m;
}

}  // namespace sector_rkhs::inversion
