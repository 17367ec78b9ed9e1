#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "salpeter/dispersion.hpp"
#include "salpeter/grid.hpp"
#include "salpeter/units.hpp"

namespace salpeter {

/// One plane-wave component A * exp(i (p x - E(p) t) / hbar).
struct PlaneWaveMode {
    cplx amplitude;
    double p;
};

/// Finite superposition of plane-wave modes with distinct momenta.
/// Modes sharing a momentum (exact double equality) are merged on construction.
struct SuperpositionState {
    UnitSystem units;
    std::vector<PlaneWaveMode> modes;

    SuperpositionState(UnitSystem u, std::vector<PlaneWaveMode> raw) : units(u) {
        for (const auto& m : raw) {
            if (!std::isfinite(m.p) || !std::isfinite(m.amplitude.real()) ||
                !std::isfinite(m.amplitude.imag()))
                throw std::invalid_argument("SuperpositionState: non-finite mode");
            bool merged = false;
            for (auto& existing : modes) {
                if (existing.p == m.p) {
                    existing.amplitude += m.amplitude;
                    merged = true;
                    break;
                }
            }
            if (!merged) modes.push_back(m);
        }
    }
};

/// psi(x,t) = sum_i A_i exp(i (p_i x - E_i t) / hbar).
inline cplx sample_superposition(const SuperpositionState& state, const Event& ev) {
    cplx acc{0.0, 0.0};
    for (const auto& m : state.modes) {
        const double e = dispersion_energy(m.p, state.units);
        const double phase = (m.p * ev.x - e * ev.t) / state.units.hbar;
        acc += m.amplitude * std::polar(1.0, phase);
    }
    return acc;
}

/// Replace each momentum by the nearest grid momentum; merges collisions.
inline SuperpositionState snap_to_grid(const SuperpositionState& state, const GridSpec& grid) {
    const double dp = grid.dp(state.units);
    std::vector<PlaneWaveMode> snapped;
    snapped.reserve(state.modes.size());
    const int half = grid.n / 2;
    for (const auto& m : state.modes) {
        long kt = std::lround(m.p / dp);
        if (kt > half - 1) kt = half - 1;
        if (kt < -half) kt = -half;
        snapped.push_back({m.amplitude, static_cast<double>(kt) * dp});
    }
    return SuperpositionState(state.units, std::move(snapped));
}

/// Sample the superposition on grid points at fixed time t.
/// Momenta need not be commensurate with the grid; callers that later apply
/// grid operators should snap first.
inline GridState sample_on_grid(const SuperpositionState& state, const GridSpec& grid, double t) {
    GridState out(grid, state.units);
    for (int i = 0; i < grid.n; ++i)
        out.psi[static_cast<size_t>(i)] = sample_superposition(state, {grid.position(i), t});
    return out;
}

}  // namespace salpeter
