#pragma once

#include <optional>
#include <string>
#include <vector>

#include "constangle/analysis.hpp"

namespace constangle {

struct GridNode {
    double s = 0.0;
    double v = 0.0;
    Vec3 position;
    bool has_position = false;
    Vec3 normal;
    bool has_normal = false;
    double gauss = 0.0;
    bool has_gauss = false;
    double angle = 0.0;
    bool has_angle = false;
};

struct FieldFlags {
    bool normals = false;
    bool gauss = false;
    bool angle = false;
};

// Row-major node grid, s varying fastest.
struct SurfaceGrid {
    int ns = 0;
    int nv = 0;
    std::vector<GridNode> nodes;

    const GridNode& at(int i, int j) const { return nodes[static_cast<size_t>(j) * ns + i]; }
};

// Equispaced nodes over the parameter rectangle (optionally inset by a
// fraction of each range). Field evaluation failures on singular nodes are
// recorded as absent flags rather than raised.
SurfaceGrid sample_grid(const Surface& S, int ns, int nv, FieldFlags fields,
                        std::optional<Vec3> direction, const Tolerances& tol,
                        double inset = 0.0);

// Wavefront OBJ: one "v x y z" line per node in row-major order, then two
// triangular faces per grid cell with 1-based indices. Byte-deterministic.
// Throws IncompleteGrid when any node position is absent.
std::string export_obj(const SurfaceGrid& grid);

// CSV with header "s,v,x,y,z,nx,ny,nz,K,angle"; absent fields are empty cells.
std::string export_csv(const SurfaceGrid& grid);

// Shortest decimal representation that round-trips, capped at 12 significant
// digits.
std::string format_double(double x);

}  // namespace constangle
