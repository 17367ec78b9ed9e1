#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "salpeter/dispersion.hpp"
#include "salpeter/grid.hpp"
#include "salpeter/macdonald.hpp"
#include "salpeter/units.hpp"

namespace salpeter {

/// Radial 3-space kernel K(z) = -(m c^2 / 2 pi^2) K2(z/l_c) / (z/l_c).
/// Pointwise evaluation only; evolution in this library is one dimensional.
inline double kernel_3d(double z, const UnitSystem& units) {
    if (!(z > 0.0)) throw std::domain_error("kernel_3d: separation must be positive");
    const double w = z / units.compton_length();
    return -units.rest_energy() / (2.0 * std::numbers::pi * std::numbers::pi) *
           macdonald(2, w) / w;
}

/// Discrete 1D kernel: inverse transform of the sampled dispersion,
/// K_d(x_j) = (1/L) sum_k E(p_k) exp(i p_k x_j / hbar).
/// Real and even under periodic indexing; circular convolution with it
/// reproduces spectral application of E(p).
struct KernelTable {
    GridSpec grid;
    UnitSystem units;
    std::vector<double> values;

    KernelTable(GridSpec g, UnitSystem u, std::vector<double> v)
        : grid(g), units(u), values(std::move(v)) {
        if (values.size() != static_cast<size_t>(grid.n))
            throw std::invalid_argument("KernelTable: value count does not match grid");
    }
};

inline KernelTable discrete_kernel_1d(const GridSpec& grid, const UnitSystem& units) {
    std::vector<cplx> ek(static_cast<size_t>(grid.n));
    for (int k = 0; k < grid.n; ++k)
        ek[static_cast<size_t>(k)] = dispersion_energy(grid.momentum(k, units), units);
    std::vector<cplx> kx(ek.size());
    detail::dft(ek, kx, +1);

    double max_mod = 0.0, max_imag = 0.0;
    for (const auto& v : kx) {
        max_mod = std::max(max_mod, std::abs(v));
        max_imag = std::max(max_imag, std::abs(v.imag()));
    }
    if (max_imag > 1e-12 * max_mod)
        throw std::runtime_error("discrete_kernel_1d: kernel is not real");

    std::vector<double> vals(kx.size());
    for (size_t j = 0; j < kx.size(); ++j) vals[j] = kx[j].real() / grid.length;
    return KernelTable(grid, units, std::move(vals));
}

/// Periodic convolution (H psi)(x_n) = dx sum_m K_d(x_{n-m mod N}) psi(x_m).
/// Direct O(N^2) sum; deliberately avoids the transform pathway so the two
/// routes can be compared as independent implementations.
inline GridState convolve_hamiltonian(const GridState& state, const KernelTable& kernel) {
    if (!(state.grid == kernel.grid))
        throw std::invalid_argument("convolve_hamiltonian: kernel built on a different grid");
    const int n = state.grid.n;
    GridState out(state.grid, state.units);
    for (int i = 0; i < n; ++i) {
        cplx acc{0.0, 0.0};
        for (int m = 0; m < n; ++m) {
            const int j = (i - m + n) % n;
            acc += kernel.values[static_cast<size_t>(j)] * state.psi[static_cast<size_t>(m)];
        }
        out.psi[static_cast<size_t>(i)] = acc * state.grid.dx();
    }
    return out;
}

}  // namespace salpeter
