#pragma once

#include <stdexcept>

namespace salpeter {

/// Physical constants of a run: rest mass m, light speed c, action quantum
/// hbar. Defaults to natural units m = c = hbar = 1. A massless system
/// (m = 0) is accepted so the free dispersion E = c|p| can be exercised,
/// but the Compton length is undefined there.
struct UnitSystem {
    double m = 1.0;
    double c = 1.0;
    double hbar = 1.0;

    UnitSystem() = default;
    UnitSystem(double m_, double c_, double hbar_) : m(m_), c(c_), hbar(hbar_) {
        if (!(m >= 0.0)) throw std::invalid_argument("UnitSystem: m must be >= 0");
        if (!(c > 0.0)) throw std::invalid_argument("UnitSystem: c must be > 0");
        if (!(hbar > 0.0)) throw std::invalid_argument("UnitSystem: hbar must be > 0");
    }

    /// Compton length hbar/(m c).
    double compton_length() const {
        if (m <= 0.0) throw std::domain_error("compton_length: undefined for m = 0");
        return hbar / (m * c);
    }

    double rest_energy() const { return m * c * c; }
};

inline UnitSystem natural_units() { return UnitSystem{}; }

}  // namespace salpeter
