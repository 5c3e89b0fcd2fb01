#include "cpnano/types.hpp"

#include <cmath>
#include <stdexcept>

namespace cpnano {

ThermalGeometry::ThermalGeometry(double separation, double temperature,
                                 double scale)
    : Z(separation), T(temperature), particle_scale(scale) {
    if (!std::isfinite(Z) || Z <= 0.0) {
        throw std::domain_error("ThermalGeometry: separation must be positive");
    }
    if (!std::isfinite(T) || T < 0.0) {
        throw std::domain_error(
            "ThermalGeometry: temperature must be non-negative");
    }
}

ThermalGeometry ThermalGeometry::from_y(double separation, double y,
                                        double scale) {
    if (!std::isfinite(separation) || separation <= 0.0) {
        throw std::domain_error("ThermalGeometry: separation must be positive");
    }
    return {separation, y / (4.0 * std::numbers::pi * separation), scale};
}

void detail::validate(const Polarizability& p) {
    if (!std::isfinite(p.alpha_perp) || !std::isfinite(p.alpha_z) ||
        !std::isfinite(p.beta_perp) || !std::isfinite(p.beta_z)) {
        throw std::domain_error("Polarizability: components must be finite");
    }
}

}  // namespace cpnano
