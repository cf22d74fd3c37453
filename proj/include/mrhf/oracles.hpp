#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "mrhf/geometry.hpp"
#include "mrhf/viscosity_profile.hpp"

namespace mrhf {

/// Parameters of the plane-strain (KGD) hydraulic fracture benchmarks.
struct KgdParams {
    double E;     ///< Young's modulus [Pa]
    double nu;    ///< Poisson ratio
    double Gc;    ///< critical energy release rate [N/m]
    double Q;     ///< injection rate [m^2/s]
    double mu;    ///< fluid viscosity [Pa s]
    double a0;    ///< initial crack half length [m]

    double Eprime() const { return E / (1.0 - nu * nu); }

    void validate() const {
        if (E <= 0 || nu <= -1 || nu >= 0.5 || Gc <= 0 || Q <= 0 || mu <= 0 ||
            a0 <= 0)
            throw ConfigError("KgdParams: all parameters must be positive, nu < 0.5");
    }
};

enum class Regime { Toughness, Viscosity, Transition };

inline const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Toughness: return "toughness";
        case Regime::Viscosity: return "viscosity";
        default: return "transition";
    }
}

struct DimensionlessK {
    double value;
    Regime regime;
};

/// Dimensionless toughness 4 G_c^{1/2} / (6 pi^2 E' Q mu)^{1/4}.
/// Toughness-dominated for K > 4, viscosity-dominated for K < 1.
inline DimensionlessK dimensionless_K(const KgdParams& p) {
    p.validate();
    const double K =
        4.0 * std::sqrt(p.Gc) /
        std::pow(6.0 * M_PI * M_PI * p.Eprime() * p.Q * p.mu, 0.25);
    Regime r = K > 4.0 ? Regime::Toughness
                       : (K < 1.0 ? Regime::Viscosity : Regime::Transition);
    return {K, r};
}

/// Diagnostic variant with the 3 pi^2 prefactor found in part of the
/// literature; same regime thresholds.
inline DimensionlessK dimensionless_K_3pi2(const KgdParams& p) {
    p.validate();
    const double K =
        4.0 * std::sqrt(p.Gc) /
        std::pow(3.0 * M_PI * M_PI * p.Eprime() * p.Q * p.mu, 0.25);
    Regime r = K > 4.0 ? Regime::Toughness
                       : (K < 1.0 ? Regime::Viscosity : Regime::Transition);
    return {K, r};
}

/// Time at which a toughness-dominated crack of initial half length a0
/// starts to propagate.
inline double kgd_toughness_tcr(const KgdParams& p) {
    return std::sqrt(M_PI * p.Gc * p.a0 * p.a0 * p.a0 / (p.Q * p.Q * p.Eprime()));
}

/// Critical pressure reached at t_cr.
inline double kgd_toughness_pcr(const KgdParams& p) {
    return std::sqrt(p.Gc * p.Eprime() / (M_PI * p.a0));
}

/// Crack half length in the toughness-dominated regime; constant a0 until
/// t_cr, then (E'(Qt)^2 / (pi G_c))^{1/3}.
inline double kgd_toughness_length(double t, const KgdParams& p) {
    p.validate();
    if (t < 0) throw ConfigError("kgd_toughness_length: t < 0");
    const double tcr = kgd_toughness_tcr(p);
    if (t <= tcr) return p.a0;
    return std::cbrt(p.Eprime() * p.Q * p.Q * t * t / (M_PI * p.Gc));
}

/// Inlet pressure in the toughness-dominated regime; linear ramp to p_cr,
/// then (E' G_c^2 / (pi Q t))^{1/3} decay.
inline double kgd_toughness_pressure(double t, const KgdParams& p) {
    p.validate();
    if (t < 0) throw ConfigError("kgd_toughness_pressure: t < 0");
    const double tcr = kgd_toughness_tcr(p);
    if (t <= tcr) return kgd_toughness_pcr(p) * t / tcr;
    return std::cbrt(p.Eprime() * p.Gc * p.Gc / (M_PI * p.Q * t));
}

struct KgdViscosityState {
    double a;        ///< crack half length [m]
    double p_inlet;  ///< inlet net pressure [Pa]
};

/// Zero-toughness (M-vertex) self-similar solution,
/// a(t) = gamma (E' Q^3 / mu')^{1/6} t^{2/3} with mu' = 12 mu and
/// gamma ~= 0.6152; inlet pressure Pi(0) (mu' E'^2)^{1/3} t^{-1/3}.
inline KgdViscosityState kgd_viscosity_solution(double t, const KgdParams& p) {
    p.validate();
    if (t <= 0) throw ConfigError("kgd_viscosity_solution: t must be positive");
    const double mup = 12.0 * p.mu;
    const double Ep = p.Eprime();
    const double gamma = mvertex::kGammaHalf / std::sqrt(2.0);
    const double a = gamma * std::pow(Ep * p.Q * p.Q * p.Q / mup, 1.0 / 6.0) *
                     std::pow(t, 2.0 / 3.0);
    const double pin =
        mvertex::kPi0 * std::cbrt(mup * Ep * Ep) / std::cbrt(t);
    return {a, pin};
}

/// Opening profile of the zero-toughness solution at position x (distance
/// from the inlet along the crack).
inline double kgd_viscosity_opening(double x, double t, const KgdParams& p) {
    const KgdViscosityState s = kgd_viscosity_solution(t, p);
    const double xi = std::abs(x) / s.a;
    if (xi >= 1.0) return 0.0;
    const double mup = 12.0 * p.mu;
    return std::cbrt(mup / p.Eprime()) * s.a / std::cbrt(t) * mvertex::omega(xi);
}

/// Net-pressure profile of the zero-toughness solution (singular at the tip).
inline double kgd_viscosity_pressure(double x, double t, const KgdParams& p) {
    const KgdViscosityState s = kgd_viscosity_solution(t, p);
    const double mup = 12.0 * p.mu;
    return std::cbrt(mup * p.Eprime() * p.Eprime()) / std::cbrt(t) *
           mvertex::pi(std::abs(x) / s.a);
}

/// Uniformly pressurized static plane-strain crack opening,
/// w(x) = (4p/E') sqrt(a^2 - x^2).
inline double sneddon_opening(double p, double a, double Eprime, double x) {
    if (a <= 0 || Eprime <= 0) throw ConfigError("sneddon_opening: a, E' > 0 required");
    if (std::abs(x) >= a) return 0.0;
    return 4.0 * p / Eprime * std::sqrt(a * a - x * x);
}

/// 1D consolidation column, drained at z = 0, impermeable at z = height.
struct TerzaghiParams {
    double height;  ///< drainage path length [m]
    double cv;      ///< consolidation coefficient [m^2/s]
    double p0;      ///< initial uniform excess pressure [Pa]

    void validate() const {
        if (height <= 0 || cv <= 0)
            throw ConfigError("TerzaghiParams: height and cv must be positive");
    }
};

/// Excess pore pressure p(z, t) from the classical Fourier series; the
/// series is truncated once a term drops below 1e-12 of the leading one.
inline double terzaghi_pressure(double z, double t, const TerzaghiParams& tp) {
    tp.validate();
    if (z < 0 || z > tp.height)
        throw ConfigError("terzaghi_pressure: z outside the column");
    if (t <= 0.0) return z == 0.0 ? 0.0 : tp.p0;
    const double T = tp.cv * t / (tp.height * tp.height);
    double sum = 0.0;
    double lead = 0.0;
    for (int m = 0; m < 200000; ++m) {
        const double M = M_PI * (2 * m + 1) / 2.0;
        const double amp = 2.0 / M * std::exp(-M * M * T);
        if (m == 0) lead = amp;
        if (amp < 1e-12 * lead) break;
        sum += amp * std::sin(M * z / tp.height);
    }
    return tp.p0 * sum;
}

}  // namespace mrhf
