#pragma once

#include "cpnano/types.hpp"

namespace cpnano {

// Scaled free energy and entropy of an anisotropic nanoparticle above a
// perfectly conducting plate.  The electric free energy is
//   F = -(3 alpha_z / 8 pi Z^4) f(gamma, y),   y = 4 pi Z T,
// with f normalized so f(1, 0) = 1; the entropy is
//   S = (3 alpha_z / 2 Z^3) s(gamma, y),       s = df/dy.
// The magnetic contribution follows from the replacement alpha -> -beta.

/// f(gamma, y) = (y/6) [(1+gamma)(1 - y d_y) + gamma y^2 d_y^2] C(y).
/// At y = 0 returns the analytic limit (1 + 2 gamma) / 3.
double f_plate(double gamma, double y);

/// s(gamma, y) = df/dy, assembled from the kernel derivatives (no numerical
/// differentiation).  s -> (1+gamma)/12 for large y and
/// s ~ (1-2 gamma) y^3 / 540 for small y; s(gamma, 0) = 0.
double s_plate(double gamma, double y);

/// s~(gamma, y) = s / y^3; finite as y -> 0 with limit (1-2 gamma)/540.
double s_tilde(double gamma, double y);

/// TE (E-polarization) part, s_E = d_y [gamma (y^3/12) d_y^2 C].
/// Always <= 0; identically zero at gamma = 0.
double s_plate_te(double gamma, double y);

/// TM (H-polarization) part, s_H = s - s_E.  Changes sign for gamma > 2.
double s_plate_tm(double gamma, double y);

/// Leading small-y coefficients: s ~ coeff * y^3.
constexpr double s_plate_leading_coeff(double gamma) {
    return (1.0 - 2.0 * gamma) / 540.0;
}
constexpr double s_plate_te_leading_coeff(double gamma) {
    return -gamma / 360.0;
}
constexpr double s_plate_tm_leading_coeff(double gamma) {
    return (1.0 - 0.5 * gamma) / 540.0;
}

/// Free energy of the particle-plate system (energy, natural units).
/// Component-wise in the polarizabilities, so degenerate particles
/// (alpha_z = 0 or beta_z = 0) are handled without forming gamma.
double plate_free_energy(const Polarizability& p, const ThermalGeometry& geom);

/// Entropy S = -dF/dT.  Exactly zero at T = 0.
double plate_entropy(const Polarizability& p, const ThermalGeometry& geom);

}  // namespace cpnano
