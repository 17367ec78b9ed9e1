#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "salpeter/densities.hpp"
#include "salpeter/dispersion.hpp"
#include "salpeter/grid.hpp"
#include "salpeter/superposition.hpp"
#include "salpeter/units.hpp"

namespace salpeter {

/// A boost along the single spatial axis. Knows the light speed it was
/// built with so event transforms need no extra argument.
struct Boost {
    double v;
    double gamma;
    double rapidity;
    double c;

    Boost(double v_, const UnitSystem& units) : v(v_), c(units.c) {
        if (!(std::abs(v_) < units.c))
            throw std::invalid_argument("boost speed must satisfy |v| < c");
        const double b = v_ / units.c;
        gamma = 1.0 / std::sqrt(1.0 - b * b);
        rapidity = std::atanh(b);
    }
};

/// Relativistic velocity addition, (v1 + v2) / (1 + v1 v2 / c^2).
inline double compose_velocities(double v1, double v2, const UnitSystem& units) {
    const double c2 = units.c * units.c;
    return (v1 + v2) / (1.0 + v1 * v2 / c2);
}

/// Momentum and energy of one mode after a boost.
struct BoostedMomentum {
    double p;
    double energy;
};

/// p' = gamma (p - v E / c^2), E' = gamma (E - v p).
inline BoostedMomentum boost_momentum(double p, const Boost& boost, const UnitSystem& units) {
    const double e = dispersion_energy(p, units);
    const double c2 = units.c * units.c;
    return {boost.gamma * (p - boost.v * e / c2), boost.gamma * (e - boost.v * p)};
}

/// x' = gamma (x - v t), t' = gamma (t - v x / c^2).
inline Event boost_event(const Event& ev, const Boost& boost) {
    const double c2 = boost.c * boost.c;
    return {boost.gamma * (ev.x - boost.v * ev.t), boost.gamma * (ev.t - boost.v * ev.x / c2)};
}

/// Momentum of a massive mode moving at speed u: p = m u / sqrt(1 - u^2/c^2).
inline double momentum_from_velocity(double u, const UnitSystem& units) {
    if (!(std::abs(u) < units.c))
        throw std::domain_error("mode speed must satisfy |u| < c");
    const double b = u / units.c;
    return units.m * u / std::sqrt(1.0 - b * b);
}

/// alpha_ij = gamma (1 - v U_ij / c^2): the factor a density component picks
/// up when both density and measure transform between frames.
inline double alpha_coefficient(double p_i, double p_j, const Boost& boost,
                                const UnitSystem& units) {
    const double c2 = units.c * units.c;
    return boost.gamma * (1.0 - boost.v * pair_velocity(p_i, p_j, units) / c2);
}

/// beta_12 = gamma (U_12 - v) / U'_12 with U'_12 the pair velocity in the
/// boosted frame. Equals alpha_12 identically; computing both and comparing
/// is the cross-check. Degenerate when U_12 = v (boosted pair velocity zero).
inline double beta_coefficient(double p_1, double p_2, const Boost& boost,
                               const UnitSystem& units) {
    const auto b1 = boost_momentum(p_1, boost, units);
    const auto b2 = boost_momentum(p_2, boost, units);
    const double u_pair_boosted =
        (b1.p + b2.p) * units.c * units.c / (b1.energy + b2.energy);
    if (u_pair_boosted == 0.0)
        throw std::domain_error("pair velocity equals boost speed, beta undefined");
    return boost.gamma * (pair_velocity(p_1, p_2, units) - boost.v) / u_pair_boosted;
}

/// (1 - v u_1/c^2)(1 - v u_2/c^2) / (1 - v U_12/c^2)^2. Equals 1 exactly when
/// the two momenta coincide; any other pair breaks it for v != 0.
inline double consistency_ratio(double p_1, double p_2, const Boost& boost,
                                const UnitSystem& units) {
    const double a11 = alpha_coefficient(p_1, p_1, boost, units);
    const double a22 = alpha_coefficient(p_2, p_2, boost, units);
    const double a12 = alpha_coefficient(p_1, p_2, boost, units);
    return (a11 * a22) / (a12 * a12);
}

/// Square table of consistency ratios over a velocity range.
struct RatioSurface {
    std::vector<double> velocities;  ///< sampled mode speeds, size steps
    std::vector<double> ratio;       ///< row-major, ratio[i * steps + j] for (u_i, u_j)
};

inline RatioSurface ratio_surface(double u_min, double u_max, int steps, const Boost& boost,
                                  const UnitSystem& units) {
    if (steps < 2) throw std::invalid_argument("ratio surface needs at least 2 steps");
    if (!(std::abs(u_min) < units.c) || !(std::abs(u_max) < units.c))
        throw std::invalid_argument("velocity bounds must satisfy |u| < c");
    if (!(u_min < u_max)) throw std::invalid_argument("velocity bounds must be increasing");

    RatioSurface table;
    table.velocities.resize(static_cast<size_t>(steps));
    const double du = (u_max - u_min) / (steps - 1);
    for (int i = 0; i < steps; ++i) table.velocities[static_cast<size_t>(i)] = u_min + i * du;

    std::vector<double> momenta(static_cast<size_t>(steps));
    for (int i = 0; i < steps; ++i)
        momenta[static_cast<size_t>(i)] = momentum_from_velocity(table.velocities[static_cast<size_t>(i)], units);

    table.ratio.resize(static_cast<size_t>(steps) * static_cast<size_t>(steps));
    for (int i = 0; i < steps; ++i)
        for (int j = 0; j < steps; ++j)
            table.ratio[static_cast<size_t>(i) * static_cast<size_t>(steps) + static_cast<size_t>(j)] =
                consistency_ratio(momenta[static_cast<size_t>(i)], momenta[static_cast<size_t>(j)], boost, units);
    return table;
}

/// 2x2 real matrix, row major.
struct Mat2 {
    double m00, m01, m10, m11;

    std::pair<double, double> apply(double x0, double x1) const {
        return {m00 * x0 + m01 * x1, m10 * x0 + m11 * x1};
    }
    Mat2 operator*(const Mat2& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
    double det() const { return m00 * m11 - m01 * m10; }
};

/// Half-rapidity spinor boost in the representation where the velocity
/// operator is the first Pauli matrix:
/// S = cosh(eta/2) I - sinh(eta/2) sigma_x.
inline Mat2 spinor_boost_matrix(const Boost& boost) {
    const double ch = std::cosh(0.5 * boost.rapidity);
    const double sh = std::sinh(0.5 * boost.rapidity);
    return {ch, -sh, -sh, ch};
}

/// Positive-energy spinor (f_A, f_B) at momentum p.
inline std::pair<double, double> dirac_mode_spinor(double p, const UnitSystem& units) {
    return {symbol_A(p, units), symbol_B(p, units)};
}

/// Boost every mode of a superposition through the spinor map: the new
/// amplitude is fixed by S A u(p) = A' u(p'), read off the upper component.
inline SuperpositionState boost_superposition(const SuperpositionState& state,
                                              const Boost& boost) {
    const Mat2 s = spinor_boost_matrix(boost);
    std::vector<PlaneWaveMode> out;
    out.reserve(state.modes.size());
    for (const auto& m : state.modes) {
        const auto [fa, fb] = dirac_mode_spinor(m.p, state.units);
        const auto boosted = s.apply(fa, fb);
        const auto bp = boost_momentum(m.p, boost, state.units);
        // The upper spinor component never vanishes for m > 0, so it fixes
        // the amplitude even when the boosted momentum is zero.
        const double fa_boosted = symbol_A(bp.p, state.units);
        out.push_back({m.amplitude * (boosted.first / fa_boosted), bp.p});
    }
    return SuperpositionState(state.units, out);
}

/// What a two-mode interference experiment reports after a boost.
struct BornTransformReport {
    double alpha_11;
    double alpha_22;
    double alpha_12;
    double beta_12;
    double ratio;             ///< alpha_11 alpha_22 / alpha_12^2
    double r;                 ///< sqrt(alpha_11 alpha_22) / alpha_12 - 1
    double boosted_amp1_sq;   ///< |A'_1|^2 when the frame normalization uses alpha_11
    double boosted_amp2_sq;
    bool inconsistent;        ///< |r| above tolerance: no frame-independent Born rule
};

/// Transform a two-mode state and measure how far the per-mode density
/// scalings are from a single common factor.
inline BornTransformReport born_transform_residual(const SuperpositionState& state,
                                                   const Boost& boost,
                                                   double tolerance = 1e-12) {
    if (state.modes.size() != 2)
        throw std::invalid_argument("transform residual is defined for exactly two modes");
    const UnitSystem& units = state.units;
    const double p1 = state.modes[0].p;
    const double p2 = state.modes[1].p;

    BornTransformReport rep{};
    rep.alpha_11 = alpha_coefficient(p1, p1, boost, units);
    rep.alpha_22 = alpha_coefficient(p2, p2, boost, units);
    rep.alpha_12 = alpha_coefficient(p1, p2, boost, units);
    rep.beta_12 = beta_coefficient(p1, p2, boost, units);
    rep.ratio = (rep.alpha_11 * rep.alpha_22) / (rep.alpha_12 * rep.alpha_12);
    rep.r = std::sqrt(rep.alpha_11 * rep.alpha_22) / rep.alpha_12 - 1.0;
    rep.boosted_amp1_sq = rep.alpha_11 * std::norm(state.modes[0].amplitude);
    rep.boosted_amp2_sq = rep.alpha_22 * std::norm(state.modes[1].amplitude);
    rep.inconsistent = std::abs(rep.r) > tolerance;
    return rep;
}

/// Max over events of the four-vector law violation for the spinor pair:
/// rho'(x') should equal gamma (rho - v J / c^2) and J'(x') gamma (J - v rho),
/// normalized by the largest density seen. Vanishes to roundoff.
inline double dirac_fourvector_residual(const SuperpositionState& state, const Boost& boost,
                                        std::span<const Event> events,
                                        const UnitSystem& units) {
    if (events.empty()) throw std::invalid_argument("need at least one event");
    const SuperpositionState boosted = boost_superposition(state, boost);
    const double c2 = units.c * units.c;

    double worst = 0.0;
    double rho_max = 0.0;
    for (const Event& ev : events) {
        const RhoJ lab = dirac_density_current(state, ev);
        const RhoJ moving = dirac_density_current(boosted, boost_event(ev, boost));
        const double rho_expect = boost.gamma * (lab.rho - boost.v * lab.current / c2);
        const double j_expect = boost.gamma * (lab.current - boost.v * lab.rho);
        worst = std::max(worst, std::abs(moving.rho - rho_expect));
        worst = std::max(worst, std::abs(moving.current - j_expect));
        rho_max = std::max(rho_max, std::abs(lab.rho));
    }
    if (worst == 0.0) return 0.0;
    return worst / rho_max;
}

}  // namespace salpeter
