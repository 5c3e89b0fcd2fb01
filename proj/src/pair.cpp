#include "cpnano/pair.hpp"

#include <cmath>
#include <stdexcept>

#include "cpnano/coth_kernel.hpp"

namespace cpnano {

namespace {

void check_args(double gamma, double y) {
    if (!std::isfinite(gamma) || !std::isfinite(y) || y < 0.0) {
        throw std::domain_error("pair: gamma must be finite, y >= 0");
    }
}

// Free-energy brackets: y * K_z and y * K_perp with
//   K_z    = C - yC' + (1/4)  y^2 C'',
//   K_perp = C - yC' + (3/4) y^2 C'' - (1/4) y^3 C''' + (1/16) y^4 C''''.
// Limits 5/2 and 13/2 at y = 0.  The EE energy is
//   F^EE = -(1/4 pi Z^7) [4 a_z^1 a_z^2 (yK_z) + 2 a_p^1 a_p^2 (yK_perp)].
double fe_bracket_z(const CothKernel& k) {
    const double y = k.y;
    return y * (k.c[0] - y * k.c[1] + 0.25 * y * y * k.c[2]);
}

double fe_bracket_perp(const CothKernel& k) {
    const double y = k.y;
    const double y2 = y * y;
    return y * (k.c[0] - y * k.c[1] + 0.75 * y2 * k.c[2] -
                0.25 * y2 * y * k.c[3] + y2 * y2 * k.c[4] / 16.0);
}

// EM bracket: 14 g(y) = y (y^2 C'' - y^3 C''' + (1/4) y^4 C'''').
double em_bracket(const CothKernel& k) {
    const double y = k.y;
    const double y2 = y * y;
    return y * y2 * (k.c[2] - y * k.c[3] + 0.25 * y2 * k.c[4]);
}

// y-derivatives of the brackets above, as pole-cancelling kernel
// combinations (see EntropyBracket):
//   d/dy [y K_z]    = C - yC' - (1/4) y^2 C'' + (1/4) y^3 C'''
//   d/dy [y K_perp] = C - yC' + (5/4) y^2 C'' - (1/4) y^3 C'''
//                     + (1/16) y^4 C'''' + (1/16) y^5 C'''''
//   14 s^EM = 3 y^2 C'' - 3 y^3 C''' + (1/4) y^4 C'''' + (1/4) y^5 C'''''
constexpr detail::EntropyBracket kSeBracketZ(
    {1.0, -1.0, -0.25, 0.25, 0.0, 0.0});
constexpr detail::EntropyBracket kSeBracketPerp(
    {1.0, -1.0, 1.25, -0.25, 1.0 / 16.0, 1.0 / 16.0});
constexpr detail::EntropyBracket kSemBracket(
    {0.0, 0.0, 3.0, -3.0, 0.25, 0.25});

double em_weight(const Polarizability& p1, const Polarizability& p2) {
    return p1.alpha_perp * p2.beta_perp + p1.beta_perp * p2.alpha_perp;
}

}  // namespace

double f_pair_ee(double gamma, double y) {
    check_args(gamma, y);
    if (y == 0.0) return (10.0 + 13.0 * gamma) / 23.0;
    const CothKernel k = coth_kernel(y);
    return (4.0 * fe_bracket_z(k) + 2.0 * gamma * fe_bracket_perp(k)) / 23.0;
}

double s_pair_ee(double gamma, double y) {
    check_args(gamma, y);
    if (y == 0.0) return 0.0;
    const CothKernel k = coth_kernel(y);
    return (4.0 * kSeBracketZ(k) + 2.0 * gamma * kSeBracketPerp(k)) / 23.0;
}

double g_pair_em(double y) {
    check_args(0.0, y);
    if (y == 0.0) return 1.0;
    const CothKernel k = coth_kernel(y);
    return em_bracket(k) / 14.0;
}

double s_pair_em(double y) {
    check_args(0.0, y);
    if (y == 0.0) return 0.0;
    const CothKernel k = coth_kernel(y);
    return kSemBracket(k) / 14.0;
}

double pair_free_energy(const ParticlePair& pair) {
    detail::validate(pair.p1);
    detail::validate(pair.p2);
    const Polarizability& a = pair.p1;
    const Polarizability& b = pair.p2;
    const double y = pair.geom.y();

    double fz = 2.5;   // y K_z     -> 5/2  at y = 0
    double fp = 6.5;   // y K_perp  -> 13/2 at y = 0
    double gem = 14.0; // 14 g(y)   -> 14   at y = 0
    if (y > 0.0) {
        const CothKernel k = coth_kernel(y);
        fz = fe_bracket_z(k);
        fp = fe_bracket_perp(k);
        gem = em_bracket(k);
    }
    const double zz = a.alpha_z * b.alpha_z + a.beta_z * b.beta_z;
    const double pp = a.alpha_perp * b.alpha_perp + a.beta_perp * b.beta_perp;
    const double z7 = std::pow(pair.geom.Z, 7);
    return -(4.0 * zz * fz + 2.0 * pp * fp - 0.5 * em_weight(a, b) * gem) /
           (4.0 * std::numbers::pi * z7);
}

double pair_scaled_entropy(const Polarizability& p1, const Polarizability& p2,
                           double y) {
    detail::validate(p1);
    detail::validate(p2);
    check_args(0.0, y);
    if (y == 0.0) return 0.0;
    const CothKernel k = coth_kernel(y);
    const double zz = p1.alpha_z * p2.alpha_z + p1.beta_z * p2.beta_z;
    const double pp = p1.alpha_perp * p2.alpha_perp + p1.beta_perp * p2.beta_perp;
    return 4.0 * zz * kSeBracketZ(k) + 2.0 * pp * kSeBracketPerp(k) -
           0.5 * em_weight(p1, p2) * kSemBracket(k);
}

double pair_entropy(const ParticlePair& pair) {
    const double z6 = std::pow(pair.geom.Z, 6);
    return pair_scaled_entropy(pair.p1, pair.p2, pair.geom.y()) / z6;
}

PairSmallY pair_small_y_coefficients(const Polarizability& p1,
                                     const Polarizability& p2) {
    detail::validate(p1);
    detail::validate(p2);
    const double zz_a = p1.alpha_z * p2.alpha_z;
    const double pp_a = p1.alpha_perp * p2.alpha_perp;
    const double zz_b = p1.beta_z * p2.beta_z;
    const double pp_b = p1.beta_perp * p2.beta_perp;
    PairSmallY out;
    out.c3 = (zz_a - pp_a + zz_b - pp_b) / 90.0;
    out.c5 = (4.0 * zz_a + 7.0 * pp_a + 4.0 * zz_b + 7.0 * pp_b +
              5.0 * em_weight(p1, p2)) /
             5040.0;
    return out;
}

double pair_entropy_small_y(const ParticlePair& pair) {
    const double y = pair.geom.y();
    if (y >= 2.0 * std::numbers::pi) {
        throw std::domain_error(
            "pair_entropy_small_y: y outside the series' radius of "
            "convergence (2 pi)");
    }
    const PairSmallY c = pair_small_y_coefficients(pair.p1, pair.p2);
    const double y3 = y * y * y;
    const double z6 = std::pow(pair.geom.Z, 6);
    return (c.c3 * y3 + c.c5 * y3 * y * y) / z6;
}

}  // namespace cpnano
