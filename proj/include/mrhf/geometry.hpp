#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mrhf {

using Vec2 = Eigen::Vector2d;

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Uniform quadrilateral grid. Cells and nodes are indexed row-major:
/// cell(i,j) = j*nx + i, node(i,j) = j*(nx+1) + i.
struct StructuredQuadMesh {
    Vec2 origin{0.0, 0.0};
    int nx = 1;
    int ny = 1;
    double hx = 1.0;
    double hy = 1.0;

    StructuredQuadMesh() = default;
    StructuredQuadMesh(Vec2 org, int nx_, int ny_, double hx_, double hy_)
        : origin(org), nx(nx_), ny(ny_), hx(hx_), hy(hy_) {
        if (nx < 1 || ny < 1 || hx <= 0.0 || hy <= 0.0)
            throw ConfigError("StructuredQuadMesh: invalid dimensions");
    }

    int numCells() const { return nx * ny; }
    int numNodes() const { return (nx + 1) * (ny + 1); }

    int cellIndex(int i, int j) const { return j * nx + i; }
    int nodeIndex(int i, int j) const { return j * (nx + 1) + i; }
    std::pair<int, int> cellIJ(int c) const { return {c % nx, c / nx}; }
    std::pair<int, int> nodeIJ(int n) const { return {n % (nx + 1), n / (nx + 1)}; }

    double nodeX(int i) const { return origin.x() + i * hx; }
    double nodeY(int j) const { return origin.y() + j * hy; }
    Vec2 nodeCoord(int i, int j) const { return {nodeX(i), nodeY(j)}; }
    Vec2 cellCenter(int c) const {
        auto [i, j] = cellIJ(c);
        return {origin.x() + (i + 0.5) * hx, origin.y() + (j + 0.5) * hy};
    }
    /// [xmin, ymin, xmax, ymax] of a cell.
    Eigen::Vector4d cellBounds(int c) const {
        auto [i, j] = cellIJ(c);
        return {nodeX(i), nodeY(j), nodeX(i + 1), nodeY(j + 1)};
    }
    double width() const { return nx * hx; }
    double height() const { return ny * hy; }
    double tol() const { return 1e-12 * std::max(hx, hy); }

    /// Node ids of cell c, counter-clockwise from lower-left.
    std::array<int, 4> cellNodes(int c) const {
        auto [i, j] = cellIJ(c);
        return {nodeIndex(i, j), nodeIndex(i + 1, j),
                nodeIndex(i + 1, j + 1), nodeIndex(i, j + 1)};
    }

    bool contains(const Vec2& p) const {
        const double t = tol();
        return p.x() >= origin.x() - t && p.x() <= origin.x() + width() + t &&
               p.y() >= origin.y() - t && p.y() <= origin.y() + height() + t;
    }
};

/// Cell containing p. Points on shared edges or corners resolve to the
/// lowest-index adjacent cell.
inline int locate_cell(const StructuredQuadMesh& mesh, const Vec2& p) {
    if (!mesh.contains(p))
        throw GeometryError("locate_cell: point outside domain");
    const double t = mesh.tol();
    auto axis = [t](double x, double o, double h, int n) {
        int i = static_cast<int>(std::floor((x - o) / h));
        i = std::clamp(i, 0, n - 1);
        // on the left edge of cell i: tie-break to the lower cell
        if (i > 0 && x - (o + i * h) <= t) --i;
        // floating point may land us one short
        if (i + 1 < n && x - (o + (i + 1) * h) > t) ++i;
        return i;
    };
    int i = axis(p.x(), mesh.origin.x(), mesh.hx, mesh.nx);
    int j = axis(p.y(), mesh.origin.y(), mesh.hy, mesh.ny);
    return mesh.cellIndex(i, j);
}

/// Ordered vertex chain describing a sharp crack.
struct CrackPolyline {
    std::vector<Vec2> vertices;

    double arcLength() const {
        double s = 0.0;
        for (std::size_t k = 1; k < vertices.size(); ++k)
            s += (vertices[k] - vertices[k - 1]).norm();
        return s;
    }
};

namespace detail {

inline bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c,
                               const Vec2& d) {
    auto cross = [](const Vec2& u, const Vec2& v) {
        return u.x() * v.y() - u.y() * v.x();
    };
    const double d1 = cross(b - a, c - a);
    const double d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c);
    const double d4 = cross(d - c, b - c);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

}  // namespace detail

inline void validate_polyline(const CrackPolyline& poly, double tol) {
    const auto& v = poly.vertices;
    if (v.size() < 2) throw GeometryError("polyline needs at least 2 vertices");
    for (std::size_t k = 1; k < v.size(); ++k)
        if ((v[k] - v[k - 1]).norm() <= tol)
            throw GeometryError("polyline has coincident consecutive vertices");
    for (std::size_t a = 0; a + 1 < v.size(); ++a)
        for (std::size_t b = a + 2; b + 1 < v.size(); ++b)
            if (detail::segments_intersect(v[a], v[a + 1], v[b], v[b + 1]))
                throw GeometryError("polyline self-intersects");
}

/// Imprint of the crack on one mesh cell: the chord from where the chain
/// enters the cell to where it leaves.
struct FractureCell {
    int cell = -1;
    Vec2 entry{0.0, 0.0};
    Vec2 exit{0.0, 0.0};
    double length = 0.0;
    Vec2 normal{0.0, 0.0};  ///< left of the chain direction
    double w_n = 0.0;       ///< mechanical aperture
    double w_h = 0.0;       ///< hydraulic aperture (w_n + w0)

    Vec2 midpoint() const { return 0.5 * (entry + exit); }
    Vec2 tangent() const { return (exit - entry).normalized(); }
};

using FractureCellList = std::vector<FractureCell>;

/// Cuts the crack chain against the mesh. One entry per fully cut cell, in
/// chain order. A trailing piece that ends inside a cell is dropped (that
/// cell stays uncut).
inline FractureCellList intersect_crack_with_mesh(const StructuredQuadMesh& mesh,
                                                  const CrackPolyline& poly) {
    const double tol = mesh.tol();
    validate_polyline(poly, tol);

    auto on_grid_x = [&](double x) {
        double s = (x - mesh.origin.x()) / mesh.hx;
        return std::abs(s - std::round(s)) * mesh.hx <= tol;
    };
    auto on_grid_y = [&](double y) {
        double s = (y - mesh.origin.y()) / mesh.hy;
        return std::abs(s - std::round(s)) * mesh.hy <= tol;
    };

    // split the chain at every grid-line crossing
    std::vector<Vec2> pts;
    pts.push_back(poly.vertices.front());
    for (std::size_t k = 1; k < poly.vertices.size(); ++k) {
        const Vec2 a = poly.vertices[k - 1];
        const Vec2 b = poly.vertices[k];
        const Vec2 d = b - a;
        // reject chain segments lying along a grid line
        if (std::abs(d.y()) <= tol && on_grid_y(a.y()))
            throw GeometryError(
                "crack segment collinear with a horizontal mesh edge; offset the crack");
        if (std::abs(d.x()) <= tol && on_grid_x(a.x()))
            throw GeometryError(
                "crack segment collinear with a vertical mesh edge; offset the crack");

        std::vector<double> ts;
        auto add_crossings = [&](double a0, double d0, double o, double h, int n) {
            if (std::abs(d0) <= tol) return;
            for (int i = 0; i <= n; ++i) {
                const double g = o + i * h;
                const double t = (g - a0) / d0;
                if (t > tol && t < 1.0 - tol) ts.push_back(t);
            }
        };
        add_crossings(a.x(), d.x(), mesh.origin.x(), mesh.hx, mesh.nx);
        add_crossings(a.y(), d.y(), mesh.origin.y(), mesh.hy, mesh.ny);
        std::sort(ts.begin(), ts.end());
        for (double t : ts) {
            Vec2 p = a + t * d;
            if ((p - pts.back()).norm() > tol) pts.push_back(p);
        }
        if ((b - pts.back()).norm() > tol) pts.push_back(b);
    }

    auto on_cell_boundary = [&](const Vec2& p, const Eigen::Vector4d& bb) {
        return std::abs(p.x() - bb[0]) <= tol || std::abs(p.x() - bb[2]) <= tol ||
               std::abs(p.y() - bb[1]) <= tol || std::abs(p.y() - bb[3]) <= tol;
    };

    // group consecutive chords by containing cell
    FractureCellList out;
    int runCell = -1;
    Vec2 runEntry{0, 0};
    Vec2 runExit{0, 0};
    auto flush = [&]() {
        if (runCell < 0) return;
        const auto bb = mesh.cellBounds(runCell);
        if (on_cell_boundary(runEntry, bb) && on_cell_boundary(runExit, bb) &&
            (runExit - runEntry).norm() > tol) {
            FractureCell fc;
            fc.cell = runCell;
            fc.entry = runEntry;
            fc.exit = runExit;
            fc.length = (runExit - runEntry).norm();
            const Vec2 t = (runExit - runEntry) / fc.length;
            fc.normal = Vec2(-t.y(), t.x());
            out.push_back(fc);
        }
        runCell = -1;
    };
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        const Vec2 mid = 0.5 * (pts[k] + pts[k + 1]);
        const int c = locate_cell(mesh, mid);
        if (c == runCell) {
            runExit = pts[k + 1];
        } else {
            flush();
            runCell = c;
            runEntry = pts[k];
            runExit = pts[k + 1];
        }
    }
    flush();
    return out;
}

/// Containing cell plus all existing cells of the surrounding 3x3 stencil,
/// row-major order.
inline std::vector<int> neighbors_patch(const StructuredQuadMesh& mesh, int cell) {
    auto [i, j] = mesh.cellIJ(cell);
    std::vector<int> out;
    for (int dj = -1; dj <= 1; ++dj)
        for (int di = -1; di <= 1; ++di) {
            const int ii = i + di;
            const int jj = j + dj;
            if (ii >= 0 && ii < mesh.nx && jj >= 0 && jj < mesh.ny)
                out.push_back(mesh.cellIndex(ii, jj));
        }
    return out;
}

/// Square refinement window around a crack tip, conforming to the global grid.
struct SubdomainMap {
    int i0 = 0;       ///< window origin in global cell indices
    int j0 = 0;
    int mcells = 0;   ///< window side in global cells (even)
    int ratio = 1;    ///< refinement ratio h_global / h_local
    const StructuredQuadMesh* global = nullptr;
    StructuredQuadMesh local;

    /// Local node coordinate; exactly reproduces the global node coordinate
    /// whenever the node sits on the coarse grid.
    Vec2 localNodeCoord(int i, int j) const {
        auto comp = [&](int idx, bool xdir) {
            const int base = xdir ? i0 : j0;
            if (idx % ratio == 0) {
                return xdir ? global->nodeX(base + idx / ratio)
                            : global->nodeY(base + idx / ratio);
            }
            return xdir ? global->nodeX(base) + idx * local.hx
                        : global->nodeY(base) + idx * local.hy;
        };
        return {comp(i, true), comp(j, false)};
    }
};

/// Builds the L x L refinement window centered on `tip`, translated minimally
/// to stay inside the global domain.
inline SubdomainMap build_subdomain(const StructuredQuadMesh& mesh, const Vec2& tip,
                                    double L, int ratio) {
    const double tol = mesh.tol();
    if (std::abs(mesh.hx - mesh.hy) > tol)
        throw ConfigError("build_subdomain requires square cells");
    if (ratio < 1) throw ConfigError("build_subdomain: ratio must be >= 1");
    const double m_real = L / mesh.hx;
    const int m = static_cast<int>(std::llround(m_real));
    if (m < 2 || m % 2 != 0 || std::abs(m_real - m) * mesh.hx > tol)
        throw ConfigError("build_subdomain: L must be an even multiple of h_global");
    if (m > mesh.nx || m > mesh.ny)
        throw ConfigError("build_subdomain: subdomain larger than global domain");

    auto place = [&](double tipc, double o, double h, int n) {
        int lo = static_cast<int>(std::llround((tipc - o) / h - m / 2.0));
        return std::clamp(lo, 0, n - m);
    };
    SubdomainMap sd;
    sd.i0 = place(tip.x(), mesh.origin.x(), mesh.hx, mesh.nx);
    sd.j0 = place(tip.y(), mesh.origin.y(), mesh.hy, mesh.ny);
    sd.mcells = m;
    sd.ratio = ratio;
    sd.global = &mesh;
    sd.local = StructuredQuadMesh({mesh.nodeX(sd.i0), mesh.nodeY(sd.j0)},
                                  m * ratio, m * ratio, mesh.hx / ratio,
                                  mesh.hy / ratio);
    return sd;
}

enum class CellEdge { Left = 0, Right = 1, Bottom = 2, Top = 3 };

struct ExitPoint {
    Vec2 point;
    CellEdge edge;
};

/// Unique intersection of the segment (tip -> target) with the perimeter of
/// the axis-aligned box `bb` = [xmin, ymin, xmax, ymax]. `tip` must lie on the
/// perimeter. Returns nullopt when the target is inside the box (or on its
/// boundary), which signals no propagation.
inline std::optional<ExitPoint> segment_exit_point(const Eigen::Vector4d& bb,
                                                   const Vec2& tip,
                                                   const Vec2& target,
                                                   double tol) {
    const bool inside = target.x() >= bb[0] - tol && target.x() <= bb[2] + tol &&
                        target.y() >= bb[1] - tol && target.y() <= bb[3] + tol;
    if (inside) return std::nullopt;

    const Vec2 d = target - tip;
    // Liang-Barsky: exit parameter is the smallest t where an outgoing face is hit
    double t_exit = std::numeric_limits<double>::infinity();
    CellEdge edge = CellEdge::Left;
    auto consider = [&](double denom, double num, CellEdge e) {
        if (denom > 0.0) {
            const double t = num / denom;
            if (t >= -tol && t < t_exit) {
                t_exit = t;
                edge = e;
            }
        }
    };
    consider(-d.x(), tip.x() - bb[0], CellEdge::Left);
    consider(d.x(), bb[2] - tip.x(), CellEdge::Right);
    consider(-d.y(), tip.y() - bb[1], CellEdge::Bottom);
    consider(d.y(), bb[3] - tip.y(), CellEdge::Top);
    if (!std::isfinite(t_exit))
        throw GeometryError("segment_exit_point: degenerate segment");
    t_exit = std::max(t_exit, 0.0);
    Vec2 p = tip + t_exit * d;
    p.x() = std::clamp(p.x(), bb[0], bb[2]);
    p.y() = std::clamp(p.y(), bb[1], bb[3]);

    // corner snap: pick the edge toward which the segment continues
    const bool on_vx = std::abs(p.x() - bb[0]) <= tol || std::abs(p.x() - bb[2]) <= tol;
    const bool on_hy = std::abs(p.y() - bb[1]) <= tol || std::abs(p.y() - bb[3]) <= tol;
    if (on_vx && on_hy) {
        p.x() = std::abs(p.x() - bb[0]) <= tol ? bb[0] : bb[2];
        p.y() = std::abs(p.y() - bb[1]) <= tol ? bb[1] : bb[3];
        if (std::abs(d.x()) >= std::abs(d.y()))
            edge = d.x() > 0 ? CellEdge::Right : CellEdge::Left;
        else
            edge = d.y() > 0 ? CellEdge::Top : CellEdge::Bottom;
    }
    return ExitPoint{p, edge};
}

}  // namespace mrhf
