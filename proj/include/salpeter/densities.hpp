#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "salpeter/dispersion.hpp"
#include "salpeter/grid.hpp"
#include "salpeter/operators.hpp"
#include "salpeter/superposition.hpp"
#include "salpeter/units.hpp"

namespace salpeter {

/// Probability density and current sampled on a grid.
struct DensityCurrentPair {
    GridSpec grid;
    std::vector<double> rho;
    std::vector<double> current;
};

/// rho = |psi|^2 on grid samples.
inline std::vector<double> born_density(const GridState& state) {
    std::vector<double> rho(state.psi.size());
    for (size_t i = 0; i < rho.size(); ++i) rho[i] = std::norm(state.psi[i]);
    return rho;
}

/// Closed-form |psi|^2 for a mode superposition: the double sum over modes
/// with cosine interference terms. Phase differences are formed from exact
/// momentum/energy differences, so equal modes contribute exactly their
/// squared modulus at every event.
inline std::vector<double> born_density(const SuperpositionState& state,
                                        std::span<const Event> events) {
    const size_t m = state.modes.size();
    std::vector<double> e(m);
    for (size_t i = 0; i < m; ++i) e[i] = dispersion_energy(state.modes[i].p, state.units);

    std::vector<double> rho(events.size(), 0.0);
    for (size_t n = 0; n < events.size(); ++n) {
        double acc = 0.0;
        for (size_t i = 0; i < m; ++i) acc += std::norm(state.modes[i].amplitude);
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = i + 1; j < m; ++j) {
                const double phase = ((state.modes[i].p - state.modes[j].p) * events[n].x -
                                      (e[i] - e[j]) * events[n].t) /
                                     state.units.hbar;
                const cplx cross = state.modes[i].amplitude *
                                   std::conj(state.modes[j].amplitude) *
                                   std::polar(1.0, phase);
                acc += 2.0 * cross.real();
            }
        }
        rho[n] = acc;
    }
    return rho;
}

/// Closed-form current for a mode superposition:
/// J = sum_ij U_ij Re[A_i A_j* exp(i((p_i-p_j)x - (E_i-E_j)t)/hbar)].
inline std::vector<double> born_current_bilinear(const SuperpositionState& state,
                                                 std::span<const Event> events) {
    const size_t m = state.modes.size();
    std::vector<double> e(m);
    for (size_t i = 0; i < m; ++i) e[i] = dispersion_energy(state.modes[i].p, state.units);

    std::vector<double> j(events.size(), 0.0);
    for (size_t n = 0; n < events.size(); ++n) {
        double acc = 0.0;
        for (size_t i = 0; i < m; ++i)
            acc += std::norm(state.modes[i].amplitude) *
                   mode_velocity(state.modes[i].p, state.units);
        for (size_t i = 0; i < m; ++i) {
            for (size_t k = i + 1; k < m; ++k) {
                const double u_ik = pair_velocity(state.modes[i].p, state.modes[k].p, state.units);
                const double phase = ((state.modes[i].p - state.modes[k].p) * events[n].x -
                                      (e[i] - e[k]) * events[n].t) /
                                     state.units.hbar;
                const cplx cross = state.modes[i].amplitude *
                                   std::conj(state.modes[k].amplitude) *
                                   std::polar(1.0, phase);
                acc += 2.0 * u_ik * cross.real();
            }
        }
        j[n] = acc;
    }
    return j;
}

/// Momentum-bilinear current on a grid:
/// J(x_n) = (dp^2 / 2 pi hbar) sum_{k,k'} phi_k phi*_{k'} U(p_k, p_{k'})
///          exp(i (p_k - p_{k'}) x_n / hbar).
/// The O(N^2) pair sum is folded into difference bins, then one transform
/// produces all samples. Always real up to roundoff; checked and discarded.
inline std::vector<double> born_current_bilinear(const GridState& state) {
    const GridSpec& g = state.grid;
    const UnitSystem& u = state.units;
    auto phi = to_momentum(state);

    std::vector<cplx> diff_bins(static_cast<size_t>(g.n), cplx{0.0, 0.0});
    for (int k = 0; k < g.n; ++k) {
        if (phi[static_cast<size_t>(k)] == cplx{0.0, 0.0}) continue;
        for (int kp = 0; kp < g.n; ++kp) {
            const cplx w = phi[static_cast<size_t>(k)] * std::conj(phi[static_cast<size_t>(kp)]);
            if (w == cplx{0.0, 0.0}) continue;
            const int d = ((k - kp) % g.n + g.n) % g.n;
            diff_bins[static_cast<size_t>(d)] +=
                w * pair_velocity(g.momentum(k, u), g.momentum(kp, u), u);
        }
    }

    std::vector<cplx> jx(diff_bins.size());
    detail::dft(diff_bins, jx, +1);
    const double scale =
        g.dp(u) * g.dp(u) / (2.0 * std::numbers::pi * u.hbar);

    double max_mod = 0.0, max_imag = 0.0;
    for (const auto& v : jx) {
        max_mod = std::max(max_mod, std::abs(v));
        max_imag = std::max(max_imag, std::abs(v.imag()));
    }
    if (max_imag > 1e-12 * max_mod)
        throw std::runtime_error("born_current_bilinear: current has an imaginary residue");

    std::vector<double> j(jx.size());
    for (size_t n = 0; n < jx.size(); ++n) j[n] = jx[n].real() * scale;
    return j;
}

inline DensityCurrentPair born_pair(const GridState& state) {
    return {state.grid, born_density(state), born_current_bilinear(state)};
}

/// Current from the printed derivative series, truncated at k_max:
/// J = -(i m c^2 / hbar) sum_k ((2k-3)!!/(2k)!!) (hbar/mc)^{2k}
///     sum_{l=0}^{2k-1} (-1)^l (d^l psi*) (d^{2k-1-l} psi),
/// with (-1)!! = 1 and derivatives applied spectrally. Valid only for states
/// supported inside |p| <= 0.9 mc; the series has convergence radius mc.
inline std::vector<double> born_current_series(const GridState& state,
                                               const SeriesTruncation& trunc) {
    const GridSpec& g = state.grid;
    const UnitSystem& u = state.units;
    if (!(u.m > 0.0))
        throw std::invalid_argument("born_current_series: requires a massive unit system");
    auto phi = to_momentum(state);

    double max_mod = 0.0;
    for (const auto& v : phi) max_mod = std::max(max_mod, std::abs(v));
    const double p_limit = 0.9 * u.m * u.c;
    for (int k = 0; k < g.n; ++k) {
        if (std::abs(phi[static_cast<size_t>(k)]) > 1e-10 * max_mod &&
            std::abs(g.momentum(k, u)) > p_limit)
            throw std::invalid_argument(
                "born_current_series: state has support beyond 0.9 mc, series diverges");
    }

    // Spatial derivatives d^l psi for l = 0 .. 2 k_max - 1.
    const int l_max = std::max(0, 2 * trunc.k_max - 1);
    std::vector<std::vector<cplx>> deriv(static_cast<size_t>(l_max) + 1);
    std::vector<cplx> work(phi);
    const double inv_scale = g.dp(u) / std::sqrt(2.0 * std::numbers::pi * u.hbar);
    for (int l = 0; l <= l_max; ++l) {
        deriv[static_cast<size_t>(l)].resize(static_cast<size_t>(g.n));
        detail::dft(work, deriv[static_cast<size_t>(l)], +1);
        for (auto& v : deriv[static_cast<size_t>(l)]) v *= inv_scale;
        for (int k = 0; k < g.n; ++k)
            work[static_cast<size_t>(k)] *= cplx{0.0, g.momentum(k, u) / u.hbar};
    }

    std::vector<double> j(static_cast<size_t>(g.n), 0.0);
    double cf = 1.0;                                    // (2k-3)!!/(2k)!!
    const double ratio2 = (u.hbar / (u.m * u.c)) * (u.hbar / (u.m * u.c));
    double scale_k = 1.0;                               // (hbar/mc)^{2k}
    for (int k = 1; k <= trunc.k_max; ++k) {
        cf = (k == 1) ? 0.5 : cf * (2.0 * k - 3.0) / (2.0 * k);
        scale_k *= ratio2;
        for (int n = 0; n < g.n; ++n) {
            cplx inner{0.0, 0.0};
            double sign = 1.0;
            for (int l = 0; l <= 2 * k - 1; ++l) {
                inner += sign * std::conj(deriv[static_cast<size_t>(l)][static_cast<size_t>(n)]) *
                         deriv[static_cast<size_t>(2 * k - 1 - l)][static_cast<size_t>(n)];
                sign = -sign;
            }
            // Re[-i * z] = Im(z); prefactor m c^2 / hbar.
            j[static_cast<size_t>(n)] +=
                cf * scale_k * u.rest_energy() / u.hbar * inner.imag();
        }
    }
    return j;
}

/// Two-component field (A psi, B psi); only buildable through
/// dirac_spinor_from_scalar so the components always share one construction.
class SpinorField {
  public:
    const GridSpec& grid() const { return grid_; }
    const std::vector<cplx>& upper() const { return upper_; }
    const std::vector<cplx>& lower() const { return lower_; }

    friend SpinorField dirac_spinor_from_scalar(const GridState& state, bool normalize);

  private:
    SpinorField(GridSpec g, std::vector<cplx> up, std::vector<cplx> low)
        : grid_(g), upper_(std::move(up)), lower_(std::move(low)) {}

    GridSpec grid_;
    std::vector<cplx> upper_;
    std::vector<cplx> lower_;
};

/// Upper = A psi, lower = B psi. With normalize set, momentum amplitudes are
/// rescaled by 1/sqrt(2E(p)) first, so the spinor density integrates to the
/// scalar norm.
inline SpinorField dirac_spinor_from_scalar(const GridState& state, bool normalize = false) {
    if (normalize) {
        auto phi = to_momentum(state);
        for (int k = 0; k < state.grid.n; ++k)
            phi[static_cast<size_t>(k)] /=
                std::sqrt(2.0 * dispersion_energy(state.grid.momentum(k, state.units), state.units));
        GridState scaled = from_momentum(state.grid, state.units, phi);
        return dirac_spinor_from_scalar(scaled, false);
    }
    GridState up = apply_A(state);
    GridState low = apply_B(state);
    return SpinorField(state.grid, std::move(up.psi), std::move(low.psi));
}

/// rho = |upper|^2 + |lower|^2, J = c (upper* lower + c.c.).
/// rho is nonnegative by construction and bounds |J|/c pointwise.
inline DensityCurrentPair dirac_density_current(const SpinorField& spinor,
                                                const UnitSystem& units) {
    const size_t n = spinor.upper().size();
    std::vector<double> rho(n), j(n);
    for (size_t i = 0; i < n; ++i) {
        rho[i] = std::norm(spinor.upper()[i]) + std::norm(spinor.lower()[i]);
        j[i] = 2.0 * units.c * (std::conj(spinor.upper()[i]) * spinor.lower()[i]).real();
    }
    return {spinor.grid(), std::move(rho), std::move(j)};
}

/// Density and current at one sample point.
struct RhoJ {
    double rho;
    double current;
};

/// Spinor density and current of a mode superposition at one event:
/// upper = sum_i A_i f_A(p_i) exp(i theta_i), lower likewise with f_B.
inline RhoJ dirac_density_current(const SuperpositionState& state, const Event& ev) {
    const UnitSystem& u = state.units;
    cplx up{0.0, 0.0}, low{0.0, 0.0};
    for (const auto& m : state.modes) {
        const double e = dispersion_energy(m.p, u);
        const cplx ph = m.amplitude * std::polar(1.0, (m.p * ev.x - e * ev.t) / u.hbar);
        up += symbol_A(m.p, u) * ph;
        low += symbol_B(m.p, u) * ph;
    }
    return {std::norm(up) + std::norm(low), 2.0 * u.c * (std::conj(up) * low).real()};
}

/// Residual of d rho / dt + d J / dx = 0 from three equally spaced snapshots:
/// centered difference in time, spectral derivative in space, normalized by
/// the peak time derivative (with a roundoff floor so static data divides
/// cleanly).
inline double continuity_residual(const DensityCurrentPair& prev, const DensityCurrentPair& mid,
                                  const DensityCurrentPair& next, double dt) {
    if (!(prev.grid == mid.grid) || !(mid.grid == next.grid))
        throw std::invalid_argument("continuity_residual: snapshots on different grids");
    if (!(dt > 0.0)) throw std::invalid_argument("continuity_residual: dt must be positive");
    const GridSpec& g = mid.grid;

    std::vector<cplx> jc(static_cast<size_t>(g.n));
    for (int n = 0; n < g.n; ++n) jc[static_cast<size_t>(n)] = mid.current[static_cast<size_t>(n)];
    std::vector<cplx> jk(jc.size());
    detail::dft(jc, jk, -1);
    for (int k = 0; k < g.n; ++k) {
        const double wavenumber = 2.0 * std::numbers::pi * g.signed_index(k) / g.length;
        jk[static_cast<size_t>(k)] *= cplx{0.0, wavenumber} / static_cast<double>(g.n);
    }
    std::vector<cplx> djdx(jk.size());
    detail::dft(jk, djdx, +1);

    double num = 0.0, drho_max = 0.0, rho_max = 0.0;
    for (int n = 0; n < g.n; ++n) {
        const double drho = (next.rho[static_cast<size_t>(n)] - prev.rho[static_cast<size_t>(n)]) /
                            (2.0 * dt);
        num = std::max(num, std::abs(drho + djdx[static_cast<size_t>(n)].real()));
        drho_max = std::max(drho_max, std::abs(drho));
        rho_max = std::max(rho_max, std::abs(mid.rho[static_cast<size_t>(n)]));
    }
    if (num == 0.0) return 0.0;
    const double floor = std::numeric_limits<double>::epsilon() * rho_max / dt;
    return num / std::max(drho_max, floor);
}

}  // namespace salpeter
