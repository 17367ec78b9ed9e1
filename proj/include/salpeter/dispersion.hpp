#pragma once

#include <cmath>
#include <stdexcept>

#include "salpeter/units.hpp"

namespace salpeter {

/// Relativistic energy E(p) = sqrt(c^2 p^2 + m^2 c^4).
inline double dispersion_energy(double p, const UnitSystem& units) {
    const double cp = units.c * p;
    const double mc2 = units.rest_energy();
    return std::sqrt(cp * cp + mc2 * mc2);
}

/// Group velocity u(p) = p c^2 / E(p). |u| < c for m > 0.
inline double mode_velocity(double p, const UnitSystem& units) {
    return p * units.c * units.c / dispersion_energy(p, units);
}

/// Velocity attached to a pair of modes: U = (p1 + p2) c^2 / (E1 + E2).
/// Diagonal case reduces to mode_velocity.
inline double pair_velocity(double p1, double p2, const UnitSystem& units) {
    return (p1 + p2) * units.c * units.c /
           (dispersion_energy(p1, units) + dispersion_energy(p2, units));
}

}  // namespace salpeter
