#pragma once

#include <Eigen/Core>

#include <array>

namespace mrhf {

/// Bilinear quadrilateral shape machinery on an axis-aligned rectangle
/// of size hx x hy. Node order: counter-clockwise from lower-left.
namespace quad4 {

/// Shape values at reference coordinates (s, t) in [-1, 1]^2.
inline Eigen::Vector4d shape(double s, double t) {
    return 0.25 * Eigen::Vector4d{(1 - s) * (1 - t), (1 + s) * (1 - t),
                                  (1 + s) * (1 + t), (1 - s) * (1 + t)};
}

/// Physical-space shape gradients for an axis-aligned rectangle.
/// Column k = (dN_k/dx, dN_k/dy).
inline Eigen::Matrix<double, 2, 4> shapeGrad(double s, double t, double hx,
                                             double hy) {
    Eigen::Matrix<double, 2, 4> g;
    g.row(0) << -(1 - t), (1 - t), (1 + t), -(1 + t);
    g.row(1) << -(1 - s), -(1 + s), (1 + s), (1 - s);
    g.row(0) *= 0.5 / hx;
    g.row(1) *= 0.5 / hy;
    return g;
}

struct GaussPoint {
    double s, t, w;  ///< reference coords and weight (reference measure 4)
};

/// 2x2 Gauss rule.
inline const std::array<GaussPoint, 4>& gauss2x2() {
    static const double g = 1.0 / std::sqrt(3.0);
    static const std::array<GaussPoint, 4> pts = {
        GaussPoint{-g, -g, 1.0}, GaussPoint{g, -g, 1.0},
        GaussPoint{g, g, 1.0}, GaussPoint{-g, g, 1.0}};
    return pts;
}

/// Strain-displacement matrix (Voigt xx, yy, xy with engineering shear)
/// for the 8 element displacement dofs [u0x u0y u1x ... u3y].
inline Eigen::Matrix<double, 3, 8> bMatrix(const Eigen::Matrix<double, 2, 4>& g) {
    Eigen::Matrix<double, 3, 8> B = Eigen::Matrix<double, 3, 8>::Zero();
    for (int k = 0; k < 4; ++k) {
        B(0, 2 * k) = g(0, k);
        B(1, 2 * k + 1) = g(1, k);
        B(2, 2 * k) = g(1, k);
        B(2, 2 * k + 1) = g(0, k);
    }
    return B;
}

}  // namespace quad4
}  // namespace mrhf
