#include "cpnano/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace cpnano::oracle {

namespace {

constexpr long kMinModes = 8;
constexpr long kMaxModes = 10'000'000;

double upoly(double x) { return 1.0 + x * (1.0 + x); }

// Sum term(0) + 2 sum_{m>=1} term(m) where |term(m)| <= envelope(m) and the
// envelope decays geometrically.  Stops once the envelope falls below
// tol * |partial| (never before kMinModes); the reported tail bound is the
// geometric majorant of the dropped modes.
template <typename Term, typename Envelope>
MatsubaraSum sum_modes(Term term, Envelope envelope, double y, double tol) {
    MatsubaraSum out;
    out.y = y;
    double sum = term(0L);
    for (long m = 1; m <= kMaxModes; ++m) {
        sum += 2.0 * term(m);
        out.m_max = m;
        if (m < kMinModes) continue;
        const double env_next = envelope(m + 1);
        double tail = 0.0;
        if (env_next > 0.0) {
            // envelope ratio bound for the remaining modes
            const double rho = envelope(m + 2) / env_next;
            if (!(rho < 1.0)) continue;
            tail = 2.0 * env_next / (1.0 - rho);
        }
        const double scale = std::fmax(std::fabs(sum), 1e-300);
        if (tail <= tol * scale) {
            out.value = sum;
            out.tail_bound = tail;
            return out;
        }
    }
    throw std::runtime_error(
        "oracle: tolerance unreachable before 1e7 Matsubara modes");
}

void check_positive_temperature(const ThermalGeometry& geom) {
    if (geom.T <= 0.0) {
        throw std::domain_error(
            "oracle: T must be positive (use the closed form for the T -> 0 "
            "limit)");
    }
}

}  // namespace

double plate_mode_term(const Polarizability& p, double x) {
    const double e = std::exp(-x);
    return e * ((p.alpha_perp - p.beta_perp) * upoly(x) +
                (p.alpha_z - p.beta_z) * (1.0 + x));
}

double plate_te_mode_term(const Polarizability& p, double x) {
    return 0.5 * (p.alpha_perp - p.beta_perp) * x * x * std::exp(-x);
}

double plate_tm_mode_term(const Polarizability& p, double x) {
    return plate_mode_term(p, x) - plate_te_mode_term(p, x);
}

double pair_mode_term(const Polarizability& p1, const Polarizability& p2,
                      double x) {
    const double e2 = std::exp(-2.0 * x);
    const double u = upoly(x);
    const double opx = 1.0 + x;
    const double ee = p1.alpha_perp * p2.alpha_perp * u * u +
                      2.0 * p1.alpha_z * p2.alpha_z * opx * opx;
    const double mm = p1.beta_perp * p2.beta_perp * u * u +
                      2.0 * p1.beta_z * p2.beta_z * opx * opx;
    const double w = p1.alpha_perp * p2.beta_perp + p1.beta_perp * p2.alpha_perp;
    return e2 * (ee + mm - w * x * x * opx * opx);
}

MatsubaraSum plate_free_energy_sum(const Polarizability& p,
                                   const ThermalGeometry& geom, double tol) {
    detail::validate(p);
    check_positive_temperature(geom);
    if (!(tol > 0.0)) throw std::domain_error("oracle: tol must be positive");
    const double y = geom.y();
    const double coeff = std::fabs(p.alpha_perp) + std::fabs(p.beta_perp) +
                         std::fabs(p.alpha_z) + std::fabs(p.beta_z);
    MatsubaraSum s = sum_modes(
        [&](long m) { return plate_mode_term(p, static_cast<double>(m) * y); },
        [&](long m) {
            const double x = static_cast<double>(m) * y;
            return coeff * std::exp(-x) * upoly(x);
        },
        y, tol);
    const double z3 = geom.Z * geom.Z * geom.Z;
    const double pref = -geom.T / (8.0 * z3);
    s.value *= pref;
    s.tail_bound *= std::fabs(pref);
    return s;
}

double plate_free_energy_oracle(const Polarizability& p,
                                const ThermalGeometry& geom, double tol) {
    return plate_free_energy_sum(p, geom, tol).value;
}

MatsubaraSum pair_free_energy_sum(const ParticlePair& pair, double tol) {
    detail::validate(pair.p1);
    detail::validate(pair.p2);
    check_positive_temperature(pair.geom);
    if (!(tol > 0.0)) throw std::domain_error("oracle: tol must be positive");
    const Polarizability& a = pair.p1;
    const Polarizability& b = pair.p2;
    const double y = pair.geom.y();
    const double coeff =
        std::fabs(a.alpha_perp * b.alpha_perp) +
        std::fabs(a.beta_perp * b.beta_perp) +
        2.0 * (std::fabs(a.alpha_z * b.alpha_z) + std::fabs(a.beta_z * b.beta_z)) +
        std::fabs(a.alpha_perp * b.beta_perp) + std::fabs(a.beta_perp * b.alpha_perp);
    MatsubaraSum s = sum_modes(
        [&](long m) {
            return pair_mode_term(a, b, 0.5 * static_cast<double>(m) * y);
        },
        [&](long m) {
            // (1+x)^2 and x^2 (1+x)^2 are both <= 2 u(x)^2
            const double x = 0.5 * static_cast<double>(m) * y;
            const double u = upoly(x);
            return 2.0 * coeff * std::exp(-2.0 * x) * u * u;
        },
        y, tol);
    const double z6 = std::pow(pair.geom.Z, 6);
    const double pref = -pair.geom.T / z6;
    s.value *= pref;
    s.tail_bound *= std::fabs(pref);
    return s;
}

double pair_free_energy_oracle(const ParticlePair& pair, double tol) {
    return pair_free_energy_sum(pair, tol).value;
}

bool te_mode_zero_check(const ThermalGeometry&) {
    // The TE tensor carries zeta^2, so the m = 0 summand is identically zero
    // for any polarizability; evaluate it rather than assert it.
    const Polarizability probe{3.7, 1.9, -0.4, 0.8};
    return plate_te_mode_term(probe, 0.0) == 0.0;
}

}  // namespace cpnano::oracle
