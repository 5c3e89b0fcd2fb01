#pragma once

#include <numbers>

namespace cpnano {

/**
 * Static polarizabilities of one uniaxial nanoparticle, stored component-wise:
 * alpha = diag(alpha_perp, alpha_perp, alpha_z) (electric) and
 * beta = diag(beta_perp, beta_perp, beta_z) (magnetic), with the symmetry
 * axis along z.  Units are volume (Gaussian convention, natural units).
 *
 * Components may be zero or negative; a conducting sphere has beta = -alpha/2.
 * The anisotropies gamma = perp/z are derived quantities and are only defined
 * when the z component is nonzero, which is why the storage is component-wise.
 */
struct Polarizability {
    double alpha_perp = 0.0;
    double alpha_z = 0.0;
    double beta_perp = 0.0;
    double beta_z = 0.0;

    /// Isotropic, purely electric particle.
    static Polarizability electric(double alpha) {
        return {alpha, alpha, 0.0, 0.0};
    }

    /// Uniaxial, purely electric particle.
    static Polarizability electric(double perp, double z) {
        return {perp, z, 0.0, 0.0};
    }

    /// Dipole limit of a perfectly conducting sphere of radius a:
    /// alpha = a^3, beta = -a^3 / 2.
    static Polarizability conducting_sphere(double a) {
        const double a3 = a * a * a;
        return {a3, a3, -0.5 * a3, -0.5 * a3};
    }

    /// Electromagnetic dual: swap alpha <-> beta.
    [[nodiscard]] Polarizability dual() const {
        return {beta_perp, beta_z, alpha_perp, alpha_z};
    }

    [[nodiscard]] bool has_gamma_alpha() const { return alpha_z != 0.0; }
    [[nodiscard]] bool has_gamma_beta() const { return beta_z != 0.0; }
    [[nodiscard]] double gamma_alpha() const { return alpha_perp / alpha_z; }
    [[nodiscard]] double gamma_beta() const { return beta_perp / beta_z; }

    /// Scale every component by a common factor.
    [[nodiscard]] Polarizability scaled(double factor) const {
        return {alpha_perp * factor, alpha_z * factor, beta_perp * factor,
                beta_z * factor};
    }
};

/**
 * Separation and temperature of a configuration, plus the reduced variable
 * y = 4 pi Z T that controls all thermal behavior.  Natural units
 * (hbar = c = k_B = 1): T has dimensions of inverse length.
 *
 * A particle scale `a` may be attached as a dipole-regime marker; it never
 * blocks evaluation, it only feeds dipole_regime_ok().
 */
struct ThermalGeometry {
    double Z = 1.0;              ///< separation, > 0
    double T = 0.0;              ///< temperature, >= 0
    double particle_scale = 0.0; ///< advisory size a; 0 means unspecified

    ThermalGeometry(double separation, double temperature,
                    double scale = 0.0);

    /// Construct from the reduced variable: T = y / (4 pi Z).
    static ThermalGeometry from_y(double separation, double y,
                                  double scale = 0.0);

    [[nodiscard]] double y() const { return 4.0 * std::numbers::pi * Z * T; }

    /// Dipole approximation marker: a/Z < 0.1 (true when no scale attached).
    [[nodiscard]] bool dipole_regime_ok() const {
        return particle_scale <= 0.0 || particle_scale < 0.1 * Z;
    }
};

/// Two nanoparticles with aligned principal axes, separated by geom.Z along
/// the common symmetry axis.
struct ParticlePair {
    Polarizability p1;
    Polarizability p2;
    ThermalGeometry geom;
};

namespace detail {
/// Throws std::domain_error if any component is non-finite.
void validate(const Polarizability& p);
}  // namespace detail

}  // namespace cpnano
