#ifndef SECTOR_RKHS_MESH_HPP
#define SECTOR_RKHS_MESH_HPP

#include <optional>
#include <vector>

#include "sector_rkhs/heat_kernel.hpp"

namespace sector_rkhs::inversion {

/// Generation parameters for a truncated-sector quadrature mesh.
/// beta_min/beta_max describe the range of exponents b in integrand factors
/// exp(-b * conj(z^(2/alpha))) the mesh must resolve: tiles are split until
/// the phase/decay variation of the worst still-alive exponent is small
/// enough for the per-tile Gauss rule.
struct MeshParams {
    double r_min = 1e-3;
    double r_max = 32.0;
    double delta = 1e-4;  // angular margin off the boundary rays
    int order = 12;       // Gauss-Legendre points per tile direction
    double beta_min = 0.0;
    double beta_max = 0.0;
    double radial_ratio = 1.4142135623730951;
    double angular_grade = 2.0;       // growth of graded panels off the rays
    double split_threshold = 18.0;    // max |beta * delta zeta| per tile
    double alive_exponent = 45.0;     // exp(-x) considered dead past this
    std::size_t max_nodes = 3'000'000;
};

/// Tensor Gauss-Legendre quadrature over an annular sector truncation of
/// Delta_alpha, organized as polar tiles [r0,r1] x [th0,th1] with area
/// weights r dr dtheta. Nodes are strictly inside the open sector.
struct SectorMesh {
    double alpha = 0.0;
    MeshParams params;
    /// index N of the exhaustion member this mesh realizes (0 = custom)
    int exhaustion_index = 0;
    bool budget_exhausted = false;

    struct Tile {
        double r0, r1, th0, th1;
        std::size_t first;  // index of the tile's first node
        std::size_t count;
    };
    std::vector<Tile> tiles;
    std::vector<double> r, theta, weight;  // per node; weight = wr*wth*r
    std::vector<cplx> z, zeta;             // node and node^(2/alpha)

    std::size_t size() const { return z.size(); }
    /// Same region, strictly finer family (lower split threshold, higher
    /// order, tighter radial ratio) for convergence diagnostics.
    SectorMesh refined() const;
};

/// Builds a mesh for the given parameters.
SectorMesh build_sector_mesh(const AlphaParam& a, const MeshParams& p);

/// The compact exhaustion member E_N: r in [1/N, N], angular margin
/// delta = 1/N unless overridden. N = 1 is rejected (empty interior).
SectorMesh build_exhaustion(const AlphaParam& a, int N, int order = 12,
                            std::optional<double> delta = {},
                            double beta_min = 0.0, double beta_max = 0.0);

}  // namespace sector_rkhs::inversion

#endif  // SECTOR_RKHS_MESH_HPP
