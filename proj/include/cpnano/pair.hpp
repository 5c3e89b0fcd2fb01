#pragma once

#include "cpnano/types.hpp"

namespace cpnano {

// Interaction of two uniaxial nanoparticles with aligned axes, separation Z.
// Sector decomposition:
//   EE: F = -(23 / 4 pi Z^7) alpha_z^1 alpha_z^2 f(gamma, y),
//       gamma = gamma_1 gamma_2, normalized so f(1, 0) = 1;
//   MM: same with alpha -> beta;
//   EM: F = +(7 / 4 pi Z^7) (alpha_perp^1 beta_perp^2 +
//       beta_perp^1 alpha_perp^2) g(y), g(0) = 1 (repulsive cross term).

/// f(gamma, y) for the EE sector; f(gamma, 0) = (10 + 13 gamma) / 23.
double f_pair_ee(double gamma, double y);

/// s^EE = df/dy; -> (2+gamma)/23 for large y, ~ (1-gamma) y^3 / 2070 small y.
double s_pair_ee(double gamma, double y);

/// g(y) for the EM cross sector; g(0) = 1, decays exponentially.
double g_pair_em(double y);

/// s^EM = dg/dy; always <= 0, ~ -y^5/7056 for small y.
double s_pair_em(double y);

/// Leading small-y coefficient: s^EE ~ coeff * y^3.
constexpr double s_pair_ee_leading_coeff(double gamma) {
    return (1.0 - gamma) / 2070.0;
}

/// Total free energy: EE + MM + EM, component-wise in the polarizabilities.
double pair_free_energy(const ParticlePair& pair);

/// Total entropy S = -dF/dT; exactly zero at T = 0.
double pair_entropy(const ParticlePair& pair);

/// Z^6 * S as a function of y alone; the quantity figure curves plot
/// (divided by (alpha_z^1)^2 when that is the chosen normalization).
double pair_scaled_entropy(const Polarizability& p1, const Polarizability& p2,
                           double y);

/// Coefficients of the small-y expansion S = (c3 y^3 + c5 y^5) / Z^6 + O(y^7).
struct PairSmallY {
    double c3 = 0.0;
    double c5 = 0.0;
};
PairSmallY pair_small_y_coefficients(const Polarizability& p1,
                                     const Polarizability& p2);

/// Two-term small-y expansion of the entropy.  Valid inside the series'
/// radius of convergence; throws std::domain_error for y >= 2 pi.
double pair_entropy_small_y(const ParticlePair& pair);

}  // namespace cpnano
