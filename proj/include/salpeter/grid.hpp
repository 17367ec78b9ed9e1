#pragma once

#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "salpeter/fft.hpp"
#include "salpeter/units.hpp"

namespace salpeter {

using cplx = std::complex<double>;

/// Spacetime sample point.
struct Event {
    double x = 0.0;
    double t = 0.0;
};

/// Uniform periodic grid of n points on [0, length).
///
/// Momentum bins follow DFT order: bin k carries p_k = 2*pi*hbar*kt/length
/// where kt = k for k <= n/2-1 and kt = k-n otherwise.
struct GridSpec {
    int n;
    double length;

    GridSpec(int n_, double length_) : n(n_), length(length_) {
        if (n <= 0 || n % 2 != 0) throw std::invalid_argument("GridSpec: n must be positive and even");
        if (!(length > 0.0)) throw std::invalid_argument("GridSpec: length must be positive");
    }

    double dx() const { return length / n; }
    double dp(const UnitSystem& units) const { return 2.0 * std::numbers::pi * units.hbar / length; }

    double position(int i) const { return i * dx(); }

    /// Signed bin index kt in [-n/2, n/2-1].
    int signed_index(int k) const {
        if (k < 0 || k >= n) throw std::out_of_range("GridSpec: bin index");
        return k <= n / 2 - 1 ? k : k - n;
    }

    double momentum(int k, const UnitSystem& units) const { return signed_index(k) * dp(units); }

    std::vector<double> momenta(const UnitSystem& units) const {
        std::vector<double> p(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) p[static_cast<size_t>(k)] = momentum(k, units);
        return p;
    }

    bool operator==(const GridSpec& o) const { return n == o.n && length == o.length; }
};

/// Complex field sampled on a GridSpec, position representation.
struct GridState {
    GridSpec grid;
    UnitSystem units;
    std::vector<cplx> psi;

    GridState(GridSpec g, UnitSystem u)
        : grid(g), units(u), psi(static_cast<size_t>(g.n), cplx{0.0, 0.0}) {}

    GridState(GridSpec g, UnitSystem u, std::vector<cplx> values)
        : grid(g), units(u), psi(std::move(values)) {
        if (psi.size() != static_cast<size_t>(grid.n))
            throw std::invalid_argument("GridState: value count does not match grid");
    }
};

namespace detail {
inline double two_pi_hbar(const UnitSystem& units) { return 2.0 * std::numbers::pi * units.hbar; }
}  // namespace detail

/// phi_k = dx/sqrt(2*pi*hbar) * sum_n psi_n exp(-i p_k x_n / hbar), DFT bin order.
/// With this measure the map is unitary: sum |psi|^2 dx == sum |phi|^2 dp.
inline std::vector<cplx> to_momentum(const GridState& state) {
    std::vector<cplx> phi(state.psi.size());
    detail::dft(state.psi, phi, -1);
    const double scale = state.grid.dx() / std::sqrt(detail::two_pi_hbar(state.units));
    for (auto& v : phi) v *= scale;
    return phi;
}

/// Inverse of to_momentum: psi_n = dp/sqrt(2*pi*hbar) * sum_k phi_k exp(+i p_k x_n / hbar).
inline GridState from_momentum(const GridSpec& grid, const UnitSystem& units,
                               std::span<const cplx> phi) {
    if (phi.size() != static_cast<size_t>(grid.n))
        throw std::invalid_argument("from_momentum: coefficient count does not match grid");
    GridState state(grid, units);
    detail::dft(phi, state.psi, +1);
    const double scale = grid.dp(units) / std::sqrt(detail::two_pi_hbar(units));
    for (auto& v : state.psi) v *= scale;
    return state;
}

/// sum |psi_n|^2 dx.
inline double norm_squared(const GridState& state) {
    double s = 0.0;
    for (const auto& v : state.psi) s += std::norm(v);
    return s * state.grid.dx();
}

/// sum |phi_k|^2 dp for momentum coefficients on the given grid.
inline double momentum_norm_squared(const GridSpec& grid, const UnitSystem& units,
                                    std::span<const cplx> phi) {
    double s = 0.0;
    for (const auto& v : phi) s += std::norm(v);
    return s * grid.dp(units);
}

/// sum f_n dx for a real-valued sampled function.
inline double integrate(const GridSpec& grid, std::span<const double> f) {
    if (f.size() != static_cast<size_t>(grid.n))
        throw std::invalid_argument("integrate: sample count does not match grid");
    double s = 0.0;
    for (double v : f) s += v;
    return s * grid.dx();
}

}  // namespace salpeter
