#include "cpnano/plate.hpp"

#include <cmath>
#include <stdexcept>

#include "cpnano/coth_kernel.hpp"

namespace cpnano {

namespace {

void check_args(double gamma, double y) {
    if (!std::isfinite(gamma) || !std::isfinite(y) || y < 0.0) {
        throw std::domain_error("plate: gamma must be finite, y >= 0");
    }
}

// Entropy brackets, as pole-cancelling kernel combinations:
//   d/dy [y (C - yC')]       = C - yC' - y^2 C''            (z sector)
//   d/dy [y (C - yC' + y^2 C'')] per the perp weights below  (perp sector)
//   d/dy [y^3 C''] = 3 y^2 C'' + y^3 C'''                    (TE)
constexpr detail::EntropyBracket kBracketZ({1.0, -1.0, -1.0, 0.0, 0.0, 0.0});
constexpr detail::EntropyBracket kBracketPerp({1.0, -1.0, 2.0, 1.0, 0.0, 0.0});
constexpr detail::EntropyBracket kBracketTe({0.0, 0.0, 3.0, 1.0, 0.0, 0.0});

}  // namespace

double f_plate(double gamma, double y) {
    check_args(gamma, y);
    if (y == 0.0) return (1.0 + 2.0 * gamma) / 3.0;
    const CothKernel k = coth_kernel(y);
    const double one_minus = k.c[0] - y * k.c[1];
    return (y / 6.0) * ((1.0 + gamma) * one_minus + gamma * y * y * k.c[2]);
}

double s_plate(double gamma, double y) {
    check_args(gamma, y);
    if (y == 0.0) return 0.0;
    const CothKernel k = coth_kernel(y);
    return (kBracketZ(k) + gamma * kBracketPerp(k)) / 6.0;
}

double s_tilde(double gamma, double y) {
    check_args(gamma, y);
    if (y == 0.0) return s_plate_leading_coeff(gamma);
    return s_plate(gamma, y) / (y * y * y);
}

double s_plate_te(double gamma, double y) {
    check_args(gamma, y);
    if (y == 0.0) return 0.0;
    const CothKernel k = coth_kernel(y);
    return gamma / 12.0 * kBracketTe(k);
}

double s_plate_tm(double gamma, double y) {
    return s_plate(gamma, y) - s_plate_te(gamma, y);
}

double plate_free_energy(const Polarizability& p, const ThermalGeometry& geom) {
    detail::validate(p);
    const double y = geom.y();
    const double z4 = geom.Z * geom.Z * geom.Z * geom.Z;

    // y * (C - yC') -> 2 and y * (C - yC' + y^2 C'') -> 4 as y -> 0.
    double bz = 2.0;
    double bp = 4.0;
    if (y > 0.0) {
        const CothKernel k = coth_kernel(y);
        const double one_minus = k.c[0] - y * k.c[1];
        bz = y * one_minus;
        bp = y * (one_minus + y * y * k.c[2]);
    }
    return -((p.alpha_perp - p.beta_perp) * bp +
             (p.alpha_z - p.beta_z) * bz) /
           (16.0 * std::numbers::pi * z4);
}

double plate_entropy(const Polarizability& p, const ThermalGeometry& geom) {
    detail::validate(p);
    const double y = geom.y();
    if (y == 0.0) return 0.0;
    const CothKernel k = coth_kernel(y);
    const double z3 = geom.Z * geom.Z * geom.Z;
    return ((p.alpha_perp - p.beta_perp) * kBracketPerp(k) +
            (p.alpha_z - p.beta_z) * kBracketZ(k)) /
           (4.0 * z3);
}

}  // namespace cpnano
