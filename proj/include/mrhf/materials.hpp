#pragma once

#include <Eigen/Core>

#include <cmath>
#include <optional>
#include <stdexcept>

#include "mrhf/geometry.hpp"

namespace mrhf {

using Mat3 = Eigen::Matrix3d;

/// Plane-strain stiffness in Voigt order (xx, yy, xy) with engineering shear.
inline Mat3 plane_strain_moduli(double E, double nu) {
    if (E <= 0.0 || nu <= -1.0 || nu >= 0.5)
        throw ConfigError("plane_strain_moduli: invalid E or nu");
    const double lam = E * nu / ((1.0 + nu) * (1.0 - 2.0 * nu));
    const double mu = E / (2.0 * (1.0 + nu));
    Mat3 C = Mat3::Zero();
    C(0, 0) = C(1, 1) = lam + 2.0 * mu;
    C(0, 1) = C(1, 0) = lam;
    C(2, 2) = mu;
    return C;
}

/// Circular region with a Young's modulus multiplier.
struct StiffInclusion {
    Vec2 center{0.0, 0.0};
    double radius = 0.0;
    double stiffness_mult = 1.0;

    bool contains(const Vec2& p) const {
        return (p - center).squaredNorm() <= radius * radius;
    }
};

struct MaterialParams {
    double E = 1.0;          ///< Young's modulus [Pa]
    double nu = 0.0;         ///< Poisson ratio
    double alpha = 0.0;      ///< Biot coefficient
    double N = 1e30;         ///< Biot modulus [Pa]
    double kappa = 0.0;      ///< intrinsic permeability [m^2]
    double mu = 1e-3;        ///< fluid viscosity [Pa s]
    double Gc = 1.0;         ///< critical energy release rate [N/m]
    double rho_ref = 1000.0; ///< reference fluid density [kg/m^3]
    double K_F = 2.2e9;      ///< fluid bulk modulus [Pa]
    double p_ref = 0.0;      ///< reference pressure [Pa]
    double phi0 = 0.2;       ///< initial porosity
    std::optional<StiffInclusion> inclusion;

    void validate() const {
        if (E <= 0 || nu <= -1 || nu >= 0.5 || alpha < 0 || alpha > 1 || N <= 0 ||
            kappa < 0 || mu <= 0 || Gc <= 0 || K_F <= 0 || phi0 <= 0 || phi0 >= 1)
            throw ConfigError("MaterialParams: invariant violated");
    }

    double youngsAt(const Vec2& p) const {
        if (inclusion && inclusion->contains(p)) return E * inclusion->stiffness_mult;
        return E;
    }
    Mat3 stiffnessAt(const Vec2& p) const { return plane_strain_moduli(youngsAt(p), nu); }

    double Eprime() const { return E / (1.0 - nu * nu); }
    double lambda() const { return E * nu / ((1.0 + nu) * (1.0 - 2.0 * nu)); }
    double shearModulus() const { return E / (2.0 * (1.0 + nu)); }

    /// Linearly compressible fluid density.
    double density(double p) const {
        return rho_ref * (1.0 + (p - p_ref) / K_F);
    }
    double ddensity_dp() const { return rho_ref / K_F; }
};

}  // namespace mrhf
