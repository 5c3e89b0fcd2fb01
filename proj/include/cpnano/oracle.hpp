#pragma once

#include "cpnano/types.hpp"

namespace cpnano::oracle {

// Validation engine: free energies by direct truncated Matsubara summation
// of the per-mode summands that follow from the image/dyadic construction.
// This path never touches the coth-derivative closed forms; agreement with
// them is the library's paper-independent correctness anchor.

/// One truncated mode sum.  Modes run over m = -m_max..m_max, summed as the
/// m = 0 term once plus twice the m >= 1 tail (the summand is even in m).
struct MatsubaraSum {
    double value = 0.0;       ///< accumulated sum including prefactor
    double y = 0.0;           ///< reduced temperature of the evaluation
    long m_max = 0;           ///< last mode index included
    double tail_bound = 0.0;  ///< bound on the dropped tail (same units as value)
};

/// Per-mode electric summand for the plate system at x = |m| y:
///   e^{-x} [alpha_perp u(x) + alpha_z (1 + x)],  u(x) = 1 + x + x^2,
/// minus the same with alpha -> beta.  Exposed for tests.
double plate_mode_term(const Polarizability& p, double x);

/// TE-sector part of the plate summand: (alpha_perp - beta_perp) x^2 e^{-x} / 2.
/// The x^2 is the zeta^2 of the E polarization tensor.
double plate_te_mode_term(const Polarizability& p, double x);

/// TM-sector remainder: plate_mode_term - plate_te_mode_term.
double plate_tm_mode_term(const Polarizability& p, double x);

/// Per-mode pair summand at x = |m| y / 2: EE + MM + EM sectors,
///   e^{-2x} [a_p^1 a_p^2 u(x)^2 + 2 a_z^1 a_z^2 (1+x)^2] + (alpha -> beta)
///   - (a_p^1 b_p^2 + b_p^1 a_p^2) x^2 (1+x)^2 e^{-2x}.
double pair_mode_term(const Polarizability& p1, const Polarizability& p2,
                      double x);

/// Plate free energy F = -(T / 8 Z^3) sum_m plate_mode_term(p, |m| y),
/// truncated so the summand envelope drops below tol * |partial sum|.
/// Requires T > 0; throws std::domain_error at T = 0 and std::runtime_error
/// if the tolerance is unreachable before m = 10^7.
MatsubaraSum plate_free_energy_sum(const Polarizability& p,
                                   const ThermalGeometry& geom, double tol);
double plate_free_energy_oracle(const Polarizability& p,
                                const ThermalGeometry& geom, double tol);

/// Pair free energy F = -(T / Z^6) sum_m pair_mode_term(p1, p2, |m| y / 2).
MatsubaraSum pair_free_energy_sum(const ParticlePair& pair, double tol);
double pair_free_energy_oracle(const ParticlePair& pair, double tol);

/// True iff the TE-sector summand vanishes identically at the m = 0 mode
/// (it carries a zeta^2 factor), which is why a perfectly conducting plate
/// and an ideal Drude plate give identical results here.
bool te_mode_zero_check(const ThermalGeometry& geom);

}  // namespace cpnano::oracle
