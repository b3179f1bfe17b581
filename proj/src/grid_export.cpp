#include "constangle/grid_export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace constangle {

std::string format_double(double x) {
    char buf[64];
    for (int prec = 1; prec <= 12; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) return buf;
    }
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

SurfaceGrid sample_grid(const Surface& S, int ns, int nv, FieldFlags fields,
                        std::optional<Vec3> direction, const Tolerances& tol,
                        double inset) {
    if (ns < 2 || nv < 2)
        throw std::invalid_argument("sample_grid: ns and nv must be >= 2");
    if (fields.angle && !direction)
        throw std::invalid_argument("sample_grid: angle field requires a direction");
    if (inset < 0.0 || inset >= 0.5)
        throw std::invalid_argument("sample_grid: inset must lie in [0, 0.5)");

    const Vec3 dir =
        direction ? canonical_sign(direction->normalized()) : Vec3{0.0, 0.0, 1.0};
    const double s_lo = S.s_range.lo + inset * S.s_range.width();
    const double s_hi = S.s_range.hi - inset * S.s_range.width();
    const double v_lo = S.v_range.lo + inset * S.v_range.width();
    const double v_hi = S.v_range.hi - inset * S.v_range.width();

    SurfaceGrid grid;
    grid.ns = ns;
    grid.nv = nv;
    grid.nodes.resize(static_cast<size_t>(ns) * nv);

    bool any_position = false;
    for (int j = 0; j < nv; ++j) {
        const double v = v_lo + (v_hi - v_lo) * j / (nv - 1);
        for (int i = 0; i < ns; ++i) {
            const double s = s_lo + (s_hi - s_lo) * i / (ns - 1);
            GridNode& node = grid.nodes[static_cast<size_t>(j) * ns + i];
            node.s = s;
            node.v = v;
            try {
                node.position = S.position(s, v);
                node.has_position = std::isfinite(node.position.x) &&
                                    std::isfinite(node.position.y) &&
                                    std::isfinite(node.position.z);
            } catch (const Error&) {
                node.has_position = false;
            }
            any_position = any_position || node.has_position;
            if (fields.normals || fields.angle) {
                try {
                    node.normal = surface_normal(S, s, v, tol);
                    node.has_normal = fields.normals;
                    if (fields.angle) {
                        node.angle =
                            std::acos(std::clamp(std::abs(dot(node.normal, dir)), 0.0, 1.0));
                        node.has_angle = true;
                    }
                    node.has_normal = true;
                } catch (const Error&) {
                    node.has_normal = false;
                    node.has_angle = false;
                }
                if (!fields.normals) node.has_normal = false;
            }
            if (fields.gauss) {
                try {
                    node.gauss = gaussian_curvature(S, s, v, tol);
                    node.has_gauss = true;
                } catch (const Error&) {
                    node.has_gauss = false;
                }
            }
        }
    }
    if (!any_position) throw AllSingular("sample_grid: no node could be evaluated");
    return grid;
}

std::string export_obj(const SurfaceGrid& grid) {
    for (const GridNode& node : grid.nodes)
        if (!node.has_position)
            throw IncompleteGrid("export_obj: grid has absent positions");

    std::string out;
    out.reserve(grid.nodes.size() * 40);
    for (const GridNode& node : grid.nodes) {
        out += "v ";
        out += format_double(node.position.x);
        out += ' ';
        out += format_double(node.position.y);
        out += ' ';
        out += format_double(node.position.z);
        out += '\n';
    }
    // Each cell is split along its (i,j) -> (i+1,j+1) diagonal.
    const int ns = grid.ns;
    for (int j = 0; j + 1 < grid.nv; ++j) {
        for (int i = 0; i + 1 < ns; ++i) {
            const int a = j * ns + i + 1;  // 1-based
            const int b = j * ns + i + 2;
            const int c = (j + 1) * ns + i + 1;
            const int d = (j + 1) * ns + i + 2;
            out += "f " + std::to_string(a) + ' ' + std::to_string(b) + ' ' +
                   std::to_string(d) + '\n';
            out += "f " + std::to_string(a) + ' ' + std::to_string(d) + ' ' +
                   std::to_string(c) + '\n';
        }
    }
    return out;
}

std::string export_csv(const SurfaceGrid& grid) {
    std::string out = "s,v,x,y,z,nx,ny,nz,K,angle\n";
    for (const GridNode& node : grid.nodes) {
        out += format_double(node.s);
        out += ',';
        out += format_double(node.v);
        out += ',';
        if (node.has_position) {
            out += format_double(node.position.x);
            out += ',';
            out += format_double(node.position.y);
            out += ',';
            out += format_double(node.position.z);
            out += ',';
        } else {
            out += ",,,";
        }
        if (node.has_normal) {
            out += format_double(node.normal.x);
            out += ',';
            out += format_double(node.normal.y);
            out += ',';
            out += format_double(node.normal.z);
            out += ',';
        } else {
            out += ",,,";
        }
        if (node.has_gauss) out += format_double(node.gauss);
        out += ',';
        if (node.has_angle) out += format_double(node.angle);
        out += '\n';
    }
    return out;
}

}  // namespace constangle
