#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "salpeter/dispersion.hpp"
#include "salpeter/grid.hpp"
#include "salpeter/units.hpp"

namespace salpeter {

/// Scalar momentum-space multiplier f(p) with a name for diagnostics.
struct SymbolFunction {
    std::function<cplx(double)> f;
    std::string name;
};

/// Partial-sum order for the square-root power series.
struct SeriesTruncation {
    int k_max;

    explicit SeriesTruncation(int k) : k_max(k) {
        if (k < 0) throw std::invalid_argument("SeriesTruncation: k_max must be >= 0");
    }
};

/// What to do when a state carries weight in the top momentum bins.
/// Spectral application of non-polynomial symbols is only trustworthy for
/// band-limited data.
enum class BandLimitPolicy { warn, fail };

inline BandLimitPolicy default_band_limit_policy() {
    const char* s = std::getenv("SALPETER_STRICT");
    if (s && std::string(s) == "1") return BandLimitPolicy::fail;
    return BandLimitPolicy::warn;
}

namespace detail {

/// Evaluate f on every grid momentum; rejects non-finite values.
inline std::vector<cplx> symbol_values(const GridSpec& grid, const UnitSystem& units,
                                       const SymbolFunction& symbol) {
    std::vector<cplx> vals(static_cast<size_t>(grid.n));
    for (int k = 0; k < grid.n; ++k) {
        const cplx v = symbol.f(grid.momentum(k, units));
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("apply_symbol: symbol '" + symbol.name +
                                        "' is not finite on the grid momentum range");
        vals[static_cast<size_t>(k)] = v;
    }
    return vals;
}

/// Core spectral application, no band-limit inspection.
inline GridState apply_symbol_unchecked(const GridState& state, const SymbolFunction& symbol) {
    auto vals = symbol_values(state.grid, state.units, symbol);
    auto phi = to_momentum(state);
    for (size_t k = 0; k < phi.size(); ++k) phi[k] *= vals[k];
    return from_momentum(state.grid, state.units, phi);
}

/// True if the top 5% of |p_k| bins hold more than 1e-10 of the peak modulus.
inline bool violates_band_limit(const GridSpec& grid, const UnitSystem& units,
                                const std::vector<cplx>& phi) {
    double p_max = 0.0;
    for (int k = 0; k < grid.n; ++k) p_max = std::max(p_max, std::abs(grid.momentum(k, units)));
    double global = 0.0, tail = 0.0;
    for (int k = 0; k < grid.n; ++k) {
        const double a = std::abs(phi[static_cast<size_t>(k)]);
        global = std::max(global, a);
        if (std::abs(grid.momentum(k, units)) >= 0.95 * p_max) tail = std::max(tail, a);
    }
    return global > 0.0 && tail > 1e-10 * global;
}

}  // namespace detail

/// Transform, multiply by f(p_k), transform back. Checks the band-limit
/// policy first: warn on stderr (default) or throw (fail / SALPETER_STRICT=1).
inline GridState apply_symbol(const GridState& state, const SymbolFunction& symbol,
                              BandLimitPolicy policy = default_band_limit_policy()) {
    auto vals = detail::symbol_values(state.grid, state.units, symbol);
    auto phi = to_momentum(state);
    if (detail::violates_band_limit(state.grid, state.units, phi)) {
        if (policy == BandLimitPolicy::fail)
            throw std::runtime_error("apply_symbol: state is not band-limited (symbol '" +
                                     symbol.name + "')");
        std::cerr << "warning: apply_symbol('" << symbol.name
                  << "'): state carries weight in the top momentum bins\n";
    }
    for (size_t k = 0; k < phi.size(); ++k) phi[k] *= vals[k];
    return from_momentum(state.grid, state.units, phi);
}

/// sqrt(m^2 c^4 + c^2 p^2) as a spectral multiplier.
inline GridState apply_sqrt_hamiltonian(const GridState& state,
                                        BandLimitPolicy policy = default_band_limit_policy()) {
    const UnitSystem u = state.units;
    return apply_symbol(state, {[u](double p) { return cplx{dispersion_energy(p, u), 0.0}; },
                                "sqrt_hamiltonian"},
                        policy);
}

/// Generalized binomial coefficient C(1/2, k) = prod_{j<k} (1/2 - j) / (j + 1).
inline double series_coefficient(int k) {
    if (k < 0) throw std::invalid_argument("series_coefficient: k must be >= 0");
    double c = 1.0;
    for (int j = 0; j < k; ++j) c *= (0.5 - j) / (j + 1);
    return c;
}

/// Partial sum mc^2 sum_{k<=k_max} C(1/2,k) (p/(mc))^{2k}. Converges to E(p)
/// for |p| < mc and diverges beyond; no attempt is made to regularize.
inline double truncated_series_symbol(double p, const UnitSystem& units,
                                      const SeriesTruncation& trunc) {
    const double q = (p / (units.m * units.c)) * (p / (units.m * units.c));
    double sum = 0.0, qk = 1.0;
    for (int k = 0; k <= trunc.k_max; ++k) {
        sum += series_coefficient(k) * qk;
        qk *= q;
    }
    return units.rest_energy() * sum;
}

inline GridState apply_truncated_series(const GridState& state, const SeriesTruncation& trunc) {
    const UnitSystem u = state.units;
    return detail::apply_symbol_unchecked(
        state, {[u, trunc](double p) { return cplx{truncated_series_symbol(p, u, trunc), 0.0}; },
                "truncated_series"});
}

/// f_A(p) = sqrt(E(p) + mc^2). Together with f_B below these factor the
/// dispersion: f_A^2 - f_B^2 = 2 mc^2 and f_A f_B = c p.
inline double symbol_A(double p, const UnitSystem& units) {
    return std::sqrt(dispersion_energy(p, units) + units.rest_energy());
}

/// f_B(p) = c p / sqrt(E(p) + mc^2).
inline double symbol_B(double p, const UnitSystem& units) {
    return units.c * p / std::sqrt(dispersion_energy(p, units) + units.rest_energy());
}

inline GridState apply_A(const GridState& state) {
    const UnitSystem u = state.units;
    return detail::apply_symbol_unchecked(
        state, {[u](double p) { return cplx{symbol_A(p, u), 0.0}; }, "A"});
}

inline GridState apply_B(const GridState& state) {
    const UnitSystem u = state.units;
    return detail::apply_symbol_unchecked(
        state, {[u](double p) { return cplx{symbol_B(p, u), 0.0}; }, "B"});
}

/// Exact free evolution by phase exp(-i E(p) t / hbar). Unitary for real t.
inline GridState propagate(const GridState& state, double t) {
    const UnitSystem u = state.units;
    return detail::apply_symbol_unchecked(
        state,
        {[u, t](double p) { return std::polar(1.0, -dispersion_energy(p, u) * t / u.hbar); },
         "propagate"});
}

/// Nonrelativistic reference evolution exp(-i (mc^2 + p^2/2m) t / hbar),
/// with the rest-energy phase optional.
inline GridState schrodinger_propagate(const GridState& state, double t,
                                       bool include_rest_phase) {
    const UnitSystem u = state.units;
    const double rest = include_rest_phase ? u.rest_energy() : 0.0;
    return detail::apply_symbol_unchecked(
        state, {[u, t, rest](double p) {
                    return std::polar(1.0, -(rest + p * p / (2.0 * u.m)) * t / u.hbar);
                },
                "schrodinger_propagate"});
}

}  // namespace salpeter
